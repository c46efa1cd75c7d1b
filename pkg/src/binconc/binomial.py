"""Exact binomial mass and tail arithmetic at rational success rate k/n.

With p = k/n every point mass is an integer over the common denominator
n**n, so window and tail sums reduce to big-integer addition. Successive
masses are produced by the multiplicative recurrence

    t(i+1) = t(i) * (n - i) * k // ((i + 1) * (n - k))

which is exact: C(n,i)*(n-i) = C(n,i+1)*(i+1), and n-i >= 1 keeps at least
one factor n-k inside t(i). Degenerate rates k = 0 and k = n are point
masses, not errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactprob import ONE, ZERO, ExactProb
from .exceptions import DomainError


@dataclass(frozen=True)
class BinomialParams:
    """Trial count n >= 1 and success count k in [0, n], giving p = k/n."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise DomainError(f"k must lie in [0, {self.n}], got {self.k}")

    @property
    def p(self) -> Fraction:
        return Fraction(self.k, self.n)


def _mass_numerator(n: int, k: int, lo: int, hi: int) -> int:
    """Numerator over n**n of P(lo <= X <= hi) for X ~ B(n, k/n).

    Bounds must already be clamped to [0, n]; an empty range returns 0.
    """
    if lo > hi:
        return 0
    if k == 0:
        return n**n if lo <= 0 else 0
    if k == n:
        return n**n if hi >= n else 0
    q = n - k
    t = comb(n, lo) * pow(k, lo) * pow(q, n - lo)
    total = t
    for i in range(lo, hi):
        t = t * ((n - i) * k) // ((i + 1) * q)
        total += t
    return total


def pmf(params: BinomialParams, i: int) -> ExactProb:
    """Exact point mass P(X = i) = C(n,i) * k^i * (n-k)^(n-i) / n^n."""
    n, k = params.n, params.k
    if not 0 <= i <= n:
        raise DomainError(f"i must lie in [0, {n}], got {i}")
    return ExactProb(comb(n, i) * pow(k, i) * pow(n - k, n - i), n**n)


def cdf(params: BinomialParams, m: int) -> ExactProb:
    """Exact P(X <= m) with clamp semantics: m < 0 gives 0, m >= n gives 1."""
    n, k = params.n, params.k
    if m < 0:
        return ZERO
    if m >= n:
        return ONE
    return ExactProb(_mass_numerator(n, k, 0, m), n**n)


def interval_prob(params: BinomialParams, lo: int, hi: int) -> ExactProb:
    """Exact P(lo <= X <= hi); empty after clamping to [0, n] gives 0."""
    n, k = params.n, params.k
    lo = max(lo, 0)
    hi = min(hi, n)
    if lo > hi:
        return ZERO
    return ExactProb(_mass_numerator(n, k, lo, hi), n**n)
