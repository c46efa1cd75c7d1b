"""Quantitative normal-approximation certificates for the standardized binomial.

X ~ B(n, k/n) is a sum of n i.i.d. Bernoulli(k/n) summands Y with

    sigma  = sqrt(k*(n-k)) / n,
    E|Y - EY|^3 = k*(n-k)*(n^2 + 2k^2 - 2nk) / n^4,
    rho    = E|Y - EY|^3 / sigma^3 = (n^2 + 2k^2 - 2nk) / (n*sqrt(k*(n-k))),

so the Berry-Esseen inequality bounds the Kolmogorov distance between the
standardized X and Phi by C0*rho/sqrt(n), with C0 = 0.4748 admissible for
i.i.d. summands (Shevtsova 2011). For k <= n/2 the numerator simplifies,
giving the chain

    C0*rho/sqrt(n) <= C0*sqrt((n-k)/(n*k)) <= C0/sqrt(k) < 0.15014495   (k >= 10),

hence each one-sided discrepancy stays below 0.15014495, the closed window
[-1, 1] is approximated within 0.3002899, and

    f(n, k) > 0.68268948 - 0.3002899 = 0.38239958    for n >= 40, k >= 10,

while f(n, 1) = ((n-1)/n)^(n-1) is strictly decreasing and already sits
below that floor at n = 40. verify_chain certifies every link for one
(n, k), with exact integer or rational comparisons wherever both sides are
rational and a 1e-9 guard band on every float-vs-threshold comparison.
sup_discrepancy computes the actual Kolmogorov distance from the exact CDF,
which is a strictly stronger check than the chain needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .concentration import f
from .exactprob import ExactProb
from .exceptions import DomainError
from .normal import normal_cdf

DEFAULT_C0 = 0.4748  # Berry-Esseen constant for i.i.d. summands (Shevtsova 2011)
PER_SIDE_CAP = 0.15014495  # decimal ceiling of C0/sqrt(10)
TWO_SIDED_CAP = 0.3002899  # = 2 * PER_SIDE_CAP
PHI_WIDTH_LOW = 0.68268948  # published decimal guards around Phi(1) - Phi(-1)
PHI_WIDTH_HIGH = 0.68268950
F_FLOOR = 0.38239958  # = PHI_WIDTH_LOW - TWO_SIDED_CAP
_F_FLOOR_EXACT = Fraction(38239958, 10**8)
GUARD = 1e-9  # margin required of every float-vs-threshold comparison

# Frozen decimal anchor of the exact rational f(40, 1) = (39/40)**39.
F40_ANCHOR = 0.37254609219269813


def _validate(n: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise DomainError(f"k must lie in [1, n-1] (sigma > 0), got n={n}, k={k}")


def third_abs_moment(n: int, k: int) -> float:
    """E|Y - EY|^3 = k*(n-k)*(n^2 + 2k^2 - 2nk) / n^4 for Y ~ B(1, k/n)."""
    _validate(n, k)
    return k * (n - k) * (n * n + 2 * k * k - 2 * n * k) / n**4


def third_abs_moment_exact(n: int, k: int) -> ExactProb:
    """The same third absolute moment as an exact rational, for cross-checks."""
    _validate(n, k)
    return ExactProb(k * (n - k) * (n * n + 2 * k * k - 2 * n * k), n**4)


def rho(n: int, k: int) -> float:
    """Standardized third absolute moment of one summand."""
    _validate(n, k)
    return (n * n + 2 * k * k - 2 * n * k) / (n * math.sqrt(k * (n - k)))


@dataclass(frozen=True)
class SummandMoments:
    """Per-summand standard deviation and third-moment ratio."""

    n: int
    k: int
    sigma: float
    rho: float


def summand_moments(n: int, k: int) -> SummandMoments:
    _validate(n, k)
    return SummandMoments(n, k, math.sqrt(k * (n - k)) / n, rho(n, k))


def be_bound(n: int, k: int, c0: float = DEFAULT_C0) -> float:
    """Berry-Esseen bound C0*rho/sqrt(n) on the Kolmogorov distance."""
    _validate(n, k)
    if c0 <= 0:
        raise DomainError(f"c0 must be positive, got {c0}")
    return c0 * (n * n + 2 * k * k - 2 * n * k) / (n * math.sqrt(n * k * (n - k)))


@dataclass(frozen=True)
class BerryEsseenReport:
    """Verdict of the certificate chain for a single (n, k)."""

    n: int
    k: int
    bound: float
    simplified_bound: float
    phi_width: float
    lower_bound: float
    holds: bool


def verify_chain(n: int, k: int, c0: float = DEFAULT_C0) -> BerryEsseenReport:
    """Certify the full lower-bound chain for one (n, k), n >= 40, 10 <= k <= n/2.

    Checks, in order: the integer simplification n^2+2k^2-2nk <= n^2-nk
    (uses k <= n/2); the cap C0/sqrt(k) < 0.15014495; the two-sided window
    discrepancy |f(n,k) - (Phi(1)-Phi(-1))| <= 0.3002899, evaluated directly
    on the closed window (atoms make the open/closed distinction exact); and
    finally the exact rational comparison f(n, k) > 0.38239958.
    """
    if n < 40 or k < 10 or 2 * k > n:
        raise DomainError(f"chain needs n >= 40 and 10 <= k <= n/2, got n={n}, k={k}")
    if c0 <= 0:
        raise DomainError(f"c0 must be positive, got {c0}")

    numer_full = n * n + 2 * k * k - 2 * n * k
    numer_simple = n * n - n * k
    simplification_ok = numer_full <= numer_simple  # exact integers

    shared = c0 / (n * math.sqrt(n * k * (n - k)))
    bound = shared * numer_full
    simplified = shared * numer_simple  # = c0*sqrt((n-k)/(n*k))
    cap = c0 / math.sqrt(k)
    cap_ok = simplified <= cap and cap < PER_SIDE_CAP - GUARD

    width = normal_cdf(1.0) - normal_cdf(-1.0)
    width_ok = PHI_WIDTH_LOW < width < PHI_WIDTH_HIGH

    exact_f = f(n, k)
    two_sided_ok = abs(float(exact_f) - width) <= TWO_SIDED_CAP - GUARD
    floor_ok = exact_f.as_fraction() > _F_FLOOR_EXACT  # exact rational comparison

    holds = simplification_ok and cap_ok and width_ok and two_sided_ok and floor_ok
    return BerryEsseenReport(n, k, bound, simplified, width, width - TWO_SIDED_CAP, holds)


def sup_discrepancy(n: int, k: int) -> float:
    """Exact Kolmogorov distance sup_x |P((X-k)/sigma_X < x) - Phi(x)|.

    The supremum over a lattice distribution is attained next to an atom, so
    it equals max_i max(|F(i-1) - Phi(z_i)|, |F(i) - Phi(z_i)|) with F the
    exact CDF (converted to float at 70 fractional bits) and z_i = (i-k)/sigma_X.
    """
    _validate(n, k)
    den = n**n
    q = n - k
    sigma_x = math.sqrt(k * q / n)
    t = q**n
    cum = 0
    prev = 0.0
    worst = 0.0
    for i in range(n + 1):
        cum += t
        cdf_i = ((cum << 70) // den) / 2**70
        phi_i = normal_cdf((i - k) / sigma_x)
        worst = max(worst, abs(prev - phi_i), abs(cdf_i - phi_i))
        if i < n:
            t = t * ((n - i) * k) // ((i + 1) * q)
        prev = cdf_i
    return worst


def _k1_exact(n: int) -> Fraction:
    # f(n, 1) = ((n-1)/n)^(n-1): the k = 1 window is the single atom {1}
    return Fraction((n - 1) ** (n - 1), n ** (n - 1))


def _k1_float(n: int) -> float:
    return math.exp((n - 1) * math.log1p(-1.0 / n))


# Strict-decrease grid for f(n, 1): dense through 200, then geometric. Exact
# rational comparisons are used up to 65536; beyond that the float gaps on the
# grid (>= 5e-7) dwarf evaluation error by nine orders of magnitude.
_EXACT_GRID = list(range(40, 201)) + [256, 512, 1024, 2048, 4096, 8192, 16384, 32768, 65536]
_FLOAT_GRID = [65536, 131072, 262144, 524288, 1048576]


def verify_f40_threshold() -> bool:
    """Certify that f(n, 1) stays below the 0.38239958 floor for all n >= 40.

    Confirms: strict decrease of ((n-1)/n)^(n-1) on a grid from 40 to 10^6
    (exact rational comparisons through 65536, guarded floats beyond); the
    frozen anchor f(40, 1) = 0.37254609... to 5e-9; the exact comparison
    f(40, 1) < 0.38239958; and the limit sanity |f(10^6, 1) - 1/e| < 1e-5.
    """
    for a, b in zip(_EXACT_GRID, _EXACT_GRID[1:]):
        # (a-1)^(a-1) * b^(b-1) > a^(a-1) * (b-1)^(b-1), all integers
        if (a - 1) ** (a - 1) * b ** (b - 1) <= a ** (a - 1) * (b - 1) ** (b - 1):
            return False
    for a, b in zip(_FLOAT_GRID, _FLOAT_GRID[1:]):
        if _k1_float(a) - _k1_float(b) <= 1e-12:
            return False

    f40 = f(40, 1)
    if abs(float(f40) - F40_ANCHOR) > 5e-9:
        return False
    if not f40.as_fraction() < _F_FLOOR_EXACT:
        return False
    if f40.as_fraction() != _k1_exact(40):
        return False
    return abs(_k1_float(10**6) - 1.0 / math.e) < 1e-5
