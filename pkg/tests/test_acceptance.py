"""Acceptance suite: package-level exit criteria, one pass/fail line each.

Run `pytest -s tests/test_acceptance.py` to see the lines. Every criterion
is asserted at its stated tolerance; nothing is deferred to calibration.

Known red: test_criterion_3a_published_f40_constant keeps the published
eight-digit reference for f(40, 1) and therefore fails; its docstring and
assertion message identify the published value as an erratum (it matches
(39/40)**40 instead of (39/40)**39). Every other criterion passes.
"""

import math
import time
from fractions import Fraction

from binconc import (
    BinomialParams,
    SignVector,
    argmin_chvatal,
    argmin_f,
    be_bound,
    cdf,
    ck_constant,
    closed_form_f,
    f,
    in_window,
    min_value_closed_form,
    nearest_two_thirds,
    normal_cdf,
    pmf,
    prob_within,
    sufficient_sum,
    sup_discrepancy,
    symmetry_check,
    tomaszewski_property,
    window,
)
from binconc.cases import falling_product_vs_power
from golden_values import N39_SIX_DIGIT, TWO_DIGIT_TABLE

N_FULL = 500


def _report(cid: str, ok: bool, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"acceptance {cid}: {'PASS' if ok else 'FAIL'}{suffix}")
    assert ok, f"acceptance {cid} failed{suffix}"


def test_criterion_1_exact_argmin():
    """For every n in [2, 500] the exact argmin is {1, n-1} with the exact
    closed-form minimum (n-1)^(n-1)/n^(n-1); single-threaded under 5 minutes."""
    start = time.perf_counter()
    failures = []
    for n in range(2, N_FULL + 1):
        report = argmin_f(n)
        if report.minimizers != {1, n - 1} or report.min_value != min_value_closed_form(n):
            failures.append(n)
    elapsed = time.perf_counter() - start
    _report(
        "1 exact argmin, n=2..500",
        not failures and elapsed < 300.0,
        f"elapsed={elapsed:.1f}s failures={failures[:5]}",
    )


def test_criterion_2_exact_symmetry():
    """f(n, k) = f(n, n-k) exactly for all n <= 500 and all k."""
    start = time.perf_counter()
    failures = [n for n in range(1, N_FULL + 1) if not symmetry_check(n)]
    elapsed = time.perf_counter() - start
    _report(
        "2 exact symmetry, n=1..500",
        not failures,
        f"elapsed={elapsed:.1f}s failures={failures[:5]}",
    )


def test_criterion_3a_published_f40_constant():
    """Published constant: f(40, 1) = 0.36323244, tolerance 5e-9.

    The window definition forces f(40, 1) = (39/40)**39 = 0.37254609...,
    which criterion 1 pins exactly via the closed-form minimum. The
    published eight digits instead match (39/40)**40 = 0.3632324398...
    to 1.2e-10, i.e. the reference was evaluated with exponent n instead
    of n - 1. This check keeps the published constant and so fails,
    documenting the erratum; the downstream comparison that matters
    (f(40, 1) < 0.38239958) holds for the true value as well.
    """
    value = float(f(40, 1))
    published = 0.36323244
    _report(
        "3a published f40(1) constant",
        abs(value - published) <= 5e-9,
        f"f(40,1)={value!r} published={published!r} "
        f"(39/40)**40={float(Fraction(39, 40) ** 40)!r}",
    )


def test_criterion_3b_phi_width():
    width = normal_cdf(1.0) - normal_cdf(-1.0)
    _report(
        "3b normal window width",
        0.68268948 < width < 0.68268950,
        f"width={width!r}",
    )


def test_criterion_3c_floor_constants():
    published = {5: 1.80299, 6: 1.52806, 7: 1.26193, 8: 1.01213}
    errs = {k: abs(ck_constant(k) - v) for k, v in published.items()}
    _report(
        "3c floor constants C5..C8",
        all(e <= 5e-6 for e in errs.values()),
        "max err = {:.2e}".format(max(errs.values())),
    )


def test_criterion_3d_case_anchors():
    k4 = (32 / 3 + 96 / 5) * (36 / 39) ** 38
    k9 = sufficient_sum(100, 9)
    ok = abs(k4 - 1.42635) <= 5e-6 and abs(k9 - 1.25277) <= 5e-6
    _report("3d case anchors", ok, f"k4={k4!r} k9={k9!r}")


def test_criterion_4_published_tables():
    """Every published two-digit cell matches within 0.01; the six-digit
    n = 39 list matches within 5e-7; regeneration under 60 s."""
    start = time.perf_counter()
    bad_cells = [
        (n, k)
        for (n, k), printed in TWO_DIGIT_TABLE.items()
        if abs(float(f(n, k)) - float(printed)) > 0.01
    ]
    bad_list = [
        k
        for k in range(1, 20)
        if abs(float(f(39, k)) - float(N39_SIX_DIGIT[k - 1])) > 5e-7
    ]
    elapsed = time.perf_counter() - start
    _report(
        "4 published tables and n=39 list",
        not bad_cells and not bad_list and elapsed < 60.0,
        f"elapsed={elapsed:.1f}s cells={len(TWO_DIGIT_TABLE)} "
        f"bad_cells={bad_cells[:5]} bad_list={bad_list[:5]}",
    )


def test_criterion_5_berry_esseen_chain():
    """For all n in [40, 200], k in [10, n/2]: the bound chain holds, the
    exact probability clears the floor, and the observed Kolmogorov
    distance respects the bound."""
    start = time.perf_counter()
    floor = Fraction(38239958, 10**8)
    cap = 0.15014495
    failures = []
    for n in range(40, 201):
        for k in range(10, n // 2 + 1):
            bound = be_bound(n, k)
            per_side = 0.4748 / math.sqrt(k)
            if not (bound <= per_side < cap):
                failures.append((n, k, "cap"))
            if not f(n, k).as_fraction() > floor:
                failures.append((n, k, "floor"))
            if not sup_discrepancy(n, k) <= bound:
                failures.append((n, k, "sup"))
    elapsed = time.perf_counter() - start
    _report(
        "5 normal-approximation chain, n=40..200",
        not failures,
        f"elapsed={elapsed:.1f}s failures={failures[:5]}",
    )


def test_criterion_6_case_certificates():
    """Closed forms equal the definition exactly for k in {2,3,4} up to 500;
    the falling-product inequality holds in exact integers for i = 7..11;
    f(n, 9) > 0.61 exactly for n in [40, 99]."""
    start = time.perf_counter()
    failures = []
    for n in range(40, N_FULL + 1):
        for k in (2, 3, 4):
            if closed_form_f(n, k) != f(n, k):
                failures.append((n, k, "closed_form"))
        for i in range(7, 12):
            prod, power = falling_product_vs_power(n, i)
            if prod < power:
                failures.append((n, i, "product"))
    sixty_one = Fraction(61, 100)
    for n in range(40, 100):
        if not f(n, 9).as_fraction() > sixty_one:
            failures.append((n, 9, "sixty_one"))
    elapsed = time.perf_counter() - start
    _report(
        "6 case certificates, n=40..500",
        not failures,
        f"elapsed={elapsed:.1f}s failures={failures[:5]}",
    )


def test_criterion_7_tomaszewski_desk_scale():
    """The extremal pair sits exactly at 1/2; ten thousand random unit
    vectors (n <= 15) all keep at least half the mass; under 2 minutes."""
    start = time.perf_counter()
    extremal = prob_within(SignVector.normalized((1.0, 1.0)), 1.0)
    sampled_ok = tomaszewski_property(10_000, seed=2024, max_n=15)
    elapsed = time.perf_counter() - start
    _report(
        "7 sign-sum lower bound",
        extremal == 0.5 and sampled_ok and elapsed < 120.0,
        f"elapsed={elapsed:.1f}s extremal={extremal}",
    )


def test_criterion_8_property_suite():
    """PMF normalization, CDF monotonicity, boundary-inclusive windows, and
    minimizers of q_m inside the nearest-to-2n/3 set for n in [2, 200]."""
    start = time.perf_counter()
    failures = []

    for n, k in [(1, 0), (7, 3), (19, 19), (40, 9), (83, 41)]:
        params = BinomialParams(n, k)
        if sum(pmf(params, i).as_fraction() for i in range(n + 1)) != 1:
            failures.append((n, k, "normalization"))
        values = [cdf(params, m) for m in range(-1, n + 1)]
        if not all(a <= b for a, b in zip(values, values[1:])) or values[-1] != 1:
            failures.append((n, k, "cdf_monotone"))

    if window(4, 2) != (1, 3) or not (in_window(4, 2, 1) and in_window(4, 2, 3)):
        failures.append((4, 2, "boundary_window"))

    for n in range(2, 201):
        if not argmin_chvatal(n) <= nearest_two_thirds(n):
            failures.append((n, None, "chvatal"))

    elapsed = time.perf_counter() - start
    _report(
        "8 property suite",
        not failures,
        f"elapsed={elapsed:.1f}s failures={failures[:5]}",
    )
