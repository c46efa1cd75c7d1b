"""Command-line interface for the exact binomial concentration toolkit.

Subcommands:

* ``f``           one concentration probability f(n, k), decimal or exact
* ``table``       a table of f over ranges of n (csv, json, markdown, latex)
* ``verify``      a verification suite; JSON-lines certificates on stdout
* ``chvatal``     exact minimizer set of q_m = P(B(n, m/n) <= m)
* ``rademacher``  sign-sum probabilities, exhaustive or sampled property run

Conventions: stdout carries data, stderr carries logs and summaries; all
output is deterministic given the flags (including --seed). Exit codes:
0 success / everything verified, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import IO

from .berry_esseen import (
    F_FLOOR,
    PHI_WIDTH_HIGH,
    PHI_WIDTH_LOW,
    sup_discrepancy,
    verify_chain,
    verify_f40_threshold,
)
from .cases import verify_all_cases
from .concentration import (
    argmin_chvatal,
    argmin_f,
    f,
    min_value_closed_form,
    nearest_two_thirds,
)
from .exactprob import ExactProb
from .exceptions import CapacityError, DomainError
from .normal import normal_cdf
from .rademacher import BOUNDARY_TOL, SignVector, prob_within, random_unit_vector
from .tables import FORMATS, K_FULL, K_HALF, TableSpec, render_table

_COEFF_NORM_GATE = 1e-6  # acceptance gate on sum of squares for --coeffs input
_RADEMACHER_PROPERTY_COUNT = 10_000


def _json_value(value: object) -> object:
    if isinstance(value, ExactProb):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (set, frozenset)):
        return "{" + ", ".join(str(v) for v in sorted(value)) + "}"
    return value


class _Reporter:
    """Collects JSON-lines certificates and tracks the first failure."""

    def __init__(self, stream: IO[str]) -> None:
        self.stream = stream
        self.checks = 0
        self.failures = 0
        self.first_failure: str | None = None

    def emit(
        self,
        suite: str,
        case: str,
        n: int | None,
        k: int | None,
        lhs: object,
        rhs: object,
        ok: bool,
    ) -> None:
        line = json.dumps(
            {
                "suite": suite,
                "case": case,
                "n": n,
                "k": k,
                "lhs": _json_value(lhs),
                "rhs": _json_value(rhs),
                "ok": bool(ok),
            }
        )
        print(line, file=self.stream)
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = line


def _suite_theorem(rep: _Reporter, n_max: int) -> None:
    for n in range(2, n_max + 1):
        report = argmin_f(n)
        expected = frozenset({1, n - 1})
        rep.emit(
            "theorem", "argmin_set", n, None,
            report.minimizers, expected, report.minimizers == expected,
        )
        closed = min_value_closed_form(n)
        rep.emit(
            "theorem", "min_value", n, None,
            report.min_value, closed, report.min_value == closed,
        )


def _suite_chvatal(rep: _Reporter, n_max: int) -> None:
    for n in range(2, n_max + 1):
        minimizers = argmin_chvatal(n)
        nearest = nearest_two_thirds(n)
        rep.emit(
            "chvatal", "nearest_two_thirds", n, None,
            minimizers, nearest, minimizers <= nearest,
        )


def _suite_be(rep: _Reporter, n_max: int) -> float:
    width = normal_cdf(1.0) - normal_cdf(-1.0)
    rep.emit(
        "be", "phi_width", None, None,
        width, f"({PHI_WIDTH_LOW}, {PHI_WIDTH_HIGH})",
        PHI_WIDTH_LOW < width < PHI_WIDTH_HIGH,
    )
    rep.emit("be", "f40_threshold", 40, 1, float(f(40, 1)), F_FLOOR, verify_f40_threshold())
    for n in range(40, n_max + 1):
        for k in range(10, n // 2 + 1):
            report = verify_chain(n, k)
            rep.emit("be", "chain", n, k, float(f(n, k)), F_FLOOR, report.holds)
            observed = sup_discrepancy(n, k)
            rep.emit("be", "sup_vs_bound", n, k, observed, report.bound, observed <= report.bound)
    return width


def _suite_cases(rep: _Reporter, n_max: int) -> None:
    for cert in verify_all_cases(n_max):
        rep.emit(
            "cases", f"{cert.case_id.value}:{cert.check}",
            cert.n_lo, cert.case_id.k, cert.lhs, cert.rhs, cert.verdict,
        )


def _suite_rademacher(rep: _Reporter) -> None:
    extremal = SignVector.normalized((1.0, 1.0))
    p_extremal = prob_within(extremal, 1.0)
    rep.emit("rademacher", "extremal_half", None, 2, p_extremal, 0.5, p_extremal == 0.5)
    basis = SignVector((1.0,))
    p_basis = prob_within(basis, 1.0)
    rep.emit("rademacher", "basis_full", None, 1, p_basis, 1.0, p_basis == 1.0)

    # seeded property run: every sampled unit vector keeps at least half the mass
    import numpy as np

    rng = np.random.default_rng(0)
    min_p = 1.0
    for _ in range(_RADEMACHER_PROPERTY_COUNT):
        vector = random_unit_vector(rng, 15)
        min_p = min(min_p, prob_within(vector, 1.0))
    rep.emit(
        "rademacher", "lower_bound_half", None, None,
        min_p, 0.5, min_p >= 0.5 - BOUNDARY_TOL,
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    n_max = args.n_max
    suites = [args.suite] if args.suite != "all" else [
        "theorem", "chvatal", "be", "cases", "rademacher",
    ]
    if ("theorem" in suites or "chvatal" in suites) and n_max < 2:
        print("error: --n-max must be >= 2 for the theorem/chvatal suites", file=sys.stderr)
        return 2
    if args.suite == "cases" and n_max < 40:
        print("error: --n-max must be >= 40 for the cases suite", file=sys.stderr)
        return 2

    rep = _Reporter(sys.stdout)
    for suite in suites:
        before_checks, before_failures = rep.checks, rep.failures
        extra = ""
        if suite == "theorem":
            _suite_theorem(rep, n_max)
        elif suite == "chvatal":
            _suite_chvatal(rep, n_max)
        elif suite == "be":
            width = _suite_be(rep, n_max)
            extra = f" phi_width={width:.8f}"
        elif suite == "cases":
            if n_max < 40:
                print("note: skipping cases suite (needs --n-max >= 40)", file=sys.stderr)
                continue
            _suite_cases(rep, n_max)
        elif suite == "rademacher":
            _suite_rademacher(rep)
        print(
            f"suite={suite} checks={rep.checks - before_checks} "
            f"failures={rep.failures - before_failures}{extra}",
            file=sys.stderr,
        )
    if rep.failures:
        print(f"first failure: {rep.first_failure}", file=sys.stderr)
        return 1
    return 0


def _cmd_f(args: argparse.Namespace) -> int:
    value = f(args.n, args.k)
    if args.exact:
        print(str(value))
    else:
        print(value.to_decimal(args.digits))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    spec = TableSpec(
        n_min=args.n_min,
        n_max=args.n_max,
        k_policy=args.k_policy,
        digits=args.digits,
        format=args.format,
    )
    sys.stdout.write(render_table(spec))
    return 0


def _cmd_chvatal(args: argparse.Namespace) -> int:
    minimizers = argmin_chvatal(args.n)
    target = str(2 * args.n // 3) if args.n % 3 == 0 else f"{2 * args.n}/3"
    body = ", ".join(str(m) for m in sorted(minimizers))
    print(f"minimizers: {{{body}}} (2n/3 = {target})")
    return 0


def _cmd_rademacher(args: argparse.Namespace) -> int:
    if args.coeffs is not None:
        try:
            raw = [float(part) for part in args.coeffs.split(",") if part.strip()]
        except ValueError:
            print(f"error: could not parse --coeffs {args.coeffs!r}", file=sys.stderr)
            return 2
        if not raw:
            print("error: --coeffs needs at least one coefficient", file=sys.stderr)
            return 2
        norm_sq = sum(c * c for c in raw)
        if abs(norm_sq - 1.0) > _COEFF_NORM_GATE:
            print(
                f"error: coefficients are off unit norm (sum of squares {norm_sq!r}); "
                "pass a unit vector", file=sys.stderr,
            )
            return 2
        p = prob_within(SignVector.normalized(raw), 1.0)
        print(f"P(|X|<=1) = {p}")
        return 0

    import numpy as np

    rng = np.random.default_rng(args.seed)
    min_p = 1.0
    for _ in range(args.random):
        vector = random_unit_vector(rng, args.max_n)
        min_p = min(min_p, prob_within(vector, 1.0))
    ok = min_p >= 0.5 - BOUNDARY_TOL
    print(f"all >= 0.5: {'true' if ok else 'false'}")
    print(f"sampled {args.random} vectors (seed {args.seed}), min P = {min_p}", file=sys.stderr)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binconc",
        description="Exact binomial concentration probabilities, verification "
        "suites, and table reproduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_f = sub.add_parser("f", help="print f(n, k)")
    p_f.add_argument("--n", type=int, required=True)
    p_f.add_argument("--k", type=int, required=True)
    p_f.add_argument("--digits", type=int, default=6)
    p_f.add_argument("--exact", action="store_true", help="print the exact fraction num/den")
    p_f.set_defaults(func=_cmd_f)

    p_table = sub.add_parser("table", help="print a table of f over ranges of n")
    p_table.add_argument("--n-min", type=int, required=True)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--k-policy", choices=(K_HALF, K_FULL), default=K_HALF)
    p_table.add_argument("--digits", type=int, default=2)
    p_table.add_argument("--format", choices=FORMATS, default="markdown")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite",
        choices=("theorem", "chvatal", "be", "cases", "rademacher", "all"),
        required=True,
    )
    p_verify.add_argument("--n-max", type=int, default=100)
    p_verify.set_defaults(func=_cmd_verify)

    p_chv = sub.add_parser("chvatal", help="exact minimizer set of q_m")
    p_chv.add_argument("--n", type=int, required=True)
    p_chv.set_defaults(func=_cmd_chvatal)

    p_rad = sub.add_parser("rademacher", help="sign-sum probabilities")
    group = p_rad.add_mutually_exclusive_group(required=True)
    group.add_argument("--coeffs", type=str, help="comma-separated unit-norm coefficients")
    group.add_argument("--random", type=int, metavar="COUNT", help="sampled property run")
    p_rad.add_argument("--seed", type=int, default=0)
    p_rad.add_argument("--max-n", type=int, default=15, help="dimension cap for --random")
    p_rad.set_defaults(func=_cmd_rademacher)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
