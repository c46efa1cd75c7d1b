"""Deterministic rendering of f(n, k) tables.

Grid formats (markdown, latex) put k on rows and n on columns; record
formats (csv, json) emit one row per (n, k) carrying both the exact
fraction and its rounded decimal, so exact values survive round-trips.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .concentration import f
from .exactprob import ExactProb
from .exceptions import DomainError

K_HALF = "half"
K_FULL = "full"
FORMATS = ("csv", "markdown", "latex", "json")

CSV_HEADER = "n,k,f_exact_num,f_exact_den,f_decimal"


@dataclass(frozen=True)
class TableSpec:
    """Ranges, k selection policy, decimal digits, and output format."""

    n_min: int
    n_max: int
    k_policy: str = K_HALF
    digits: int = 2
    format: str = "markdown"

    def __post_init__(self) -> None:
        if self.n_min < 1:
            raise DomainError(f"n_min must be >= 1, got {self.n_min}")
        if self.n_min > self.n_max:
            raise DomainError(f"need n_min <= n_max, got [{self.n_min}, {self.n_max}]")
        if not 1 <= self.digits <= 50:
            raise DomainError(f"digits must lie in [1, 50], got {self.digits}")
        if self.k_policy not in (K_HALF, K_FULL):
            raise DomainError(f"k_policy must be 'half' or 'full', got {self.k_policy!r}")
        if self.format not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.format!r}")

    def k_max(self, n: int) -> int:
        # the half policy keeps k <= floor(n/2); the mirror half is implied by symmetry
        return n // 2 if self.k_policy == K_HALF else n


def table_records(spec: TableSpec) -> list[tuple[int, int, ExactProb]]:
    """All (n, k, f(n, k)) triples selected by the spec, ordered by (n, k)."""
    return [
        (n, k, f(n, k))
        for n in range(spec.n_min, spec.n_max + 1)
        for k in range(0, spec.k_max(n) + 1)
    ]


def _render_csv(spec: TableSpec) -> str:
    lines = [CSV_HEADER]
    for n, k, prob in table_records(spec):
        lines.append(f"{n},{k},{prob.num},{prob.den},{prob.to_decimal(spec.digits)}")
    return "\n".join(lines) + "\n"


def _render_json(spec: TableSpec) -> str:
    records = [
        {
            "n": n,
            "k": k,
            "f_exact_num": prob.num,
            "f_exact_den": prob.den,
            "f_decimal": prob.to_decimal(spec.digits),
        }
        for n, k, prob in table_records(spec)
    ]
    return json.dumps(records, indent=1) + "\n"


def _grid(spec: TableSpec) -> tuple[list[int], list[int], dict[tuple[int, int], str]]:
    ns = list(range(spec.n_min, spec.n_max + 1))
    ks = list(range(0, max(spec.k_max(n) for n in ns) + 1))
    cells = {
        (n, k): prob.to_decimal(spec.digits) for n, k, prob in table_records(spec)
    }
    return ns, ks, cells


def _render_markdown(spec: TableSpec) -> str:
    ns, ks, cells = _grid(spec)
    header = "| k \\ n | " + " | ".join(str(n) for n in ns) + " |"
    rule = "| --- |" + " --- |" * len(ns)
    lines = [header, rule]
    for k in ks:
        row = [cells.get((n, k), "") for n in ns]
        lines.append(f"| {k} | " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def _render_latex(spec: TableSpec) -> str:
    ns, ks, cells = _grid(spec)
    lines = ["\\begin{tabular}{l|" + "r" * len(ns) + "}"]
    lines.append("$k \\backslash n$ & " + " & ".join(str(n) for n in ns) + " \\\\")
    lines.append("\\hline")
    for k in ks:
        row = [cells.get((n, k), "") for n in ns]
        lines.append(f"{k} & " + " & ".join(row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def render_table(spec: TableSpec) -> str:
    """Render the spec to its chosen format; output is byte-deterministic."""
    renderer = {
        "csv": _render_csv,
        "json": _render_json,
        "markdown": _render_markdown,
        "latex": _render_latex,
    }[spec.format]
    return renderer(spec)
