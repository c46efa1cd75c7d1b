"""Sign-sum concentration probabilities P(|sum a_i e_i| <= t), e_i = +-1 fair.

prob_within counts all 2^n sign patterns exactly. The sums are materialized
by a doubling pass (one addition per enumerated pattern overall); above 20
coefficients the low 20 are materialized once, sorted, and each of the
2^(n-20) prefix sums is resolved with two binary searches, keeping memory
flat while still enumerating every pattern. iter_signed_sums walks the same
2^n sums in reflected-Gray-code order (one coefficient update per step) and
serves as an independent cross-check of the vectorized count.

The boundary test is |s| <= t + 1e-12, tolerant in the inclusive direction:
the underlying events are closed, and extremal vectors place atoms exactly
on the boundary (e.g. coefficients (0.6, 0.8) with sums +-1.4 and +-0.2, or
the single coefficient 1 with atoms at +-1, which must count).
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass

import numpy as np

from .exceptions import CapacityError, DomainError

BOUNDARY_TOL = 1e-12
NORM_TOL = 1e-12
MAX_EXHAUSTIVE = 30
_SPLIT = 20


@dataclass(frozen=True)
class SignVector:
    """Unit-norm coefficients a_1..a_n for a random +-1 signed sum."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise DomainError("a sign vector needs at least one coefficient")
        norm_sq = math.fsum(c * c for c in self.coeffs)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise DomainError(f"coefficients must have unit norm, got sum of squares {norm_sq!r}")

    @classmethod
    def normalized(cls, values: "list[float] | tuple[float, ...] | np.ndarray") -> "SignVector":
        """Rescale arbitrary nonzero coefficients to unit norm."""
        arr = [float(v) for v in values]
        norm = math.sqrt(math.fsum(v * v for v in arr))
        if norm == 0.0:
            raise DomainError("cannot normalize the zero vector")
        return cls(tuple(v / norm for v in arr))

    def __len__(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Seeded sampling estimate with its binomial standard error."""

    estimate: float
    std_error: float
    trials: int


def _doubling_sums(coeffs: np.ndarray) -> np.ndarray:
    sums = np.zeros(1)
    for c in coeffs:
        sums = np.concatenate([sums + c, sums - c])
    return sums


def iter_signed_sums(coeffs: tuple[float, ...]) -> Iterator[float]:
    """Yield all 2^n signed sums in reflected-Gray-code order.

    Each step flips exactly one sign (the lowest set bit of the step index),
    so the walk costs one update per pattern. Reference implementation used
    to cross-check the vectorized count.
    """
    n = len(coeffs)
    signs = [1.0] * n
    total = math.fsum(coeffs)
    yield total
    for step in range(1, 1 << n):
        j = (step & -step).bit_length() - 1
        total -= 2.0 * signs[j] * coeffs[j]
        signs[j] = -signs[j]
        yield total


def prob_within(a: SignVector, t: float) -> float:
    """Exhaustive P(|sum a_i e_i| <= t), boundary inclusive to 1e-12.

    Counts all 2^n sign patterns; n is capped at 30.
    """
    n = len(a)
    if n > MAX_EXHAUSTIVE:
        raise CapacityError(
            f"exhaustive enumeration is capped at n = {MAX_EXHAUSTIVE} (got {n}); "
            "use sample_prob_within for larger vectors"
        )
    coeffs = np.asarray(a.coeffs, dtype=np.float64)
    hi = t + BOUNDARY_TOL
    if n <= _SPLIT:
        sums = _doubling_sums(coeffs)
        count = int(np.count_nonzero(np.abs(sums) <= hi))
    else:
        tail = np.sort(_doubling_sums(coeffs[_SPLIT:]))
        count = 0
        for prefix in _doubling_sums(coeffs[:_SPLIT]):
            upper = np.searchsorted(tail, hi - prefix, side="right")
            lower = np.searchsorted(tail, -hi - prefix, side="left")
            count += int(upper - lower)
    return count / (1 << n)


def sample_prob_within(a: SignVector, t: float, trials: int, seed: int) -> MonteCarloEstimate:
    """Seeded Monte Carlo estimate of P(|sum a_i e_i| <= t)."""
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    coeffs = np.asarray(a.coeffs, dtype=np.float64)
    rng = np.random.default_rng(seed)
    hi = t + BOUNDARY_TOL
    hits = 0
    remaining = trials
    while remaining > 0:
        chunk = min(remaining, 1 << 16)
        signs = rng.integers(0, 2, size=(chunk, coeffs.size)).astype(np.float64) * 2.0 - 1.0
        sums = signs @ coeffs
        hits += int(np.count_nonzero(np.abs(sums) <= hi))
        remaining -= chunk
    estimate = hits / trials
    std_error = math.sqrt(estimate * (1.0 - estimate) / trials)
    return MonteCarloEstimate(estimate, std_error, trials)


def random_unit_vector(rng: np.random.Generator, max_n: int) -> SignVector:
    """A uniformly random direction of uniformly random dimension in [1, max_n]."""
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    n = int(rng.integers(1, max_n + 1))
    while True:
        direction = rng.standard_normal(n)
        if float(np.dot(direction, direction)) > 1e-16:
            return SignVector.normalized(direction)


def tomaszewski_property(
    count: int,
    seed: int,
    max_n: int = 15,
    sampler: Callable[[np.random.Generator], SignVector] | None = None,
) -> bool:
    """True iff every sampled unit vector has P(|sum a_i e_i| <= 1) >= 1/2.

    The lower bound 1/2 holds for all unit vectors (Tomaszewski's theorem,
    proved by Keller and Klein); here it is verified on `count` sampled
    vectors, never assumed. Sampled dimensions are capped at 20 so every
    check is exhaustive.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if sampler is None and not 1 <= max_n <= 20:
        raise DomainError(f"max_n must lie in [1, 20], got {max_n}")
    rng = np.random.default_rng(seed)
    for _ in range(count):
        vector = sampler(rng) if sampler is not None else random_unit_vector(rng, max_n)
        if len(vector) > 20:
            raise DomainError(f"sampled dimension {len(vector)} exceeds the cap of 20")
        if prob_within(vector, 1.0) < 0.5 - BOUNDARY_TOL:
            return False
    return True
