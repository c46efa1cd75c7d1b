"""One-standard-deviation concentration probabilities and exact argmin scans.

For X ~ B(n, k/n) define f(n, k) as the probability that X lands within one
standard deviation of its mean k. The variance is k(n-k)/n, so the event is
the integer window {i : n*(i-k)^2 <= k*(n-k)}. Membership is decided by that
integer predicate alone; no floating square root ever touches a boundary
atom (the event is inclusive, so an atom sitting exactly at distance sigma
counts, e.g. n = 4, k = 2 where sigma = 1).

The module also provides the cumulative probabilities q_m = P(B(n, m/n) <= m)
whose minimum over m sits nearest 2n/3 (Chvatal's theorem), and scan helpers
that report exact minimizer sets over the discrete parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .binomial import BinomialParams, _mass_numerator, cdf
from .exactprob import ExactProb
from .exceptions import DomainError


def in_window(n: int, k: int, i: int) -> bool:
    """The defining predicate |i - k| <= sigma, as exact integers."""
    return n * (i - k) ** 2 <= k * (n - k)


def window(n: int, k: int) -> tuple[int, int]:
    """Inclusive integer bounds of {i in [0, n] : n*(i-k)^2 <= k*(n-k)}.

    The half-width is the largest d with n*d^2 <= k*(n-k), i.e.
    d = isqrt(n*k*(n-k)) // n, so perfect-square boundaries are included.
    """
    BinomialParams(n, k)
    d = isqrt(n * k * (n - k)) // n
    return max(0, k - d), min(n, k + d)


@dataclass(frozen=True)
class ConcentrationQuery:
    """A validated (n, k) pair with its variance ratio and integer window."""

    params: BinomialParams
    var_num: int
    var_den: int
    window_lo: int
    window_hi: int

    @classmethod
    def from_params(cls, n: int, k: int) -> "ConcentrationQuery":
        lo, hi = window(n, k)
        return cls(BinomialParams(n, k), k * (n - k), n, lo, hi)


def _f_numerator(n: int, k: int) -> int:
    """Numerator of f(n, k) over the common denominator n**n."""
    lo, hi = window(n, k)
    return _mass_numerator(n, k, lo, hi)


def f(n: int, k: int) -> ExactProb:
    """Exact probability that B(n, k/n) deviates from k by at most sigma."""
    query = ConcentrationQuery.from_params(n, k)
    num = _mass_numerator(n, k, query.window_lo, query.window_hi)
    return ExactProb(num, n**n)


def chvatal_q(n: int, m: int) -> ExactProb:
    """Exact q_m = P(B(n, m/n) <= m) for 0 <= m <= n, n >= 2."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return cdf(BinomialParams(n, m), m)


@dataclass(frozen=True)
class ArgminReport:
    """Exact scan of f(n, .) over k = 0..n with its minimizer set."""

    n: int
    values: tuple[ExactProb, ...]
    minimizers: frozenset[int]
    min_value: ExactProb


def argmin_f(n: int) -> ArgminReport:
    """Exact argmin of f(n, k) over k in {0, ..., n}.

    Ties are reported as a set: n = 1 yields {0, 1} (both windows carry the
    full mass), n >= 2 is expected to yield {1, n-1}.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    den = n**n
    nums = [_f_numerator(n, k) for k in range(n + 1)]
    best = min(nums)
    minimizers = frozenset(k for k, v in enumerate(nums) if v == best)
    values = tuple(ExactProb(v, den) for v in nums)
    return ArgminReport(n, values, minimizers, ExactProb(best, den))


def min_value_closed_form(n: int) -> ExactProb:
    """The closed form (n-1)^(n-1) / n^(n-1) taken by the minimum for n >= 1."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return ExactProb((n - 1) ** (n - 1), n ** (n - 1))


def argmin_chvatal(n: int) -> set[int]:
    """Exact minimizer set of q_m = P(B(n, m/n) <= m) over m in {0, ..., n}."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    den = n**n
    best: int | None = None
    mins: set[int] = set()
    for m in range(n + 1):
        num = den if m in (0, n) else _mass_numerator(n, m, 0, m)
        if best is None or num < best:
            best = num
            mins = {m}
        elif num == best:
            mins.add(m)
    return mins


def nearest_two_thirds(n: int) -> set[int]:
    """The one or two integers in [0, n] closest to 2n/3 (by |3m - 2n|)."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    dmin = min(abs(3 * m - 2 * n) for m in range(n + 1))
    return {m for m in range(n + 1) if abs(3 * m - 2 * n) == dmin}


def symmetry_check(n: int) -> bool:
    """True iff f(n, k) = f(n, n-k) exactly for every k in [0, n]."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    nums = [_f_numerator(n, k) for k in range(n + 1)]
    return all(nums[k] == nums[n - k] for k in range(n + 1))
