"""Exact rational probabilities backed by Python big integers.

Every probability this package cares about is a lattice-event probability
under a rational success rate, so it is an exact rational number. ExactProb
stores one such value as a reduced fraction constrained to [0, 1]. Keeping
the core exact is what turns a numerical experiment into a certificate:
comparisons between two ExactProb values are integer cross-multiplications,
never float comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exceptions import DomainError

ROUND_HALF_EVEN = "round-half-even"
TRUNCATE = "truncate"


@dataclass(frozen=True, eq=False)
class ExactProb:
    """A probability num/den in lowest terms, 0 <= num <= den."""

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den <= 0:
            raise DomainError(f"denominator must be positive, got {den}")
        if not 0 <= num <= den:
            raise DomainError(f"{num}/{den} is outside [0, 1]")
        g = gcd(num, den)
        if g > 1:
            object.__setattr__(self, "num", num // g)
            object.__setattr__(self, "den", den // g)

    # -- conversions ---------------------------------------------------

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __float__(self) -> float:
        return self.num / self.den if self.den.bit_length() < 50 else float(self.as_fraction())

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExactProb({self.num}, {self.den})"

    # -- comparisons (exact; accept anything Fraction can absorb) ------

    def _coerce(self, other: object) -> Fraction | None:
        if isinstance(other, ExactProb):
            return Fraction(other.num, other.den)
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactProb):
            return self.num == other.num and self.den == other.den
        o = self._coerce(other)
        return NotImplemented if o is None else self.as_fraction() == o

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __lt__(self, other: object) -> bool:
        if isinstance(other, ExactProb):
            return self.num * other.den < other.num * self.den
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.as_fraction() < o

    def __le__(self, other: object) -> bool:
        if isinstance(other, ExactProb):
            return self.num * other.den <= other.num * self.den
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.as_fraction() <= o

    def __gt__(self, other: object) -> bool:
        lt = self.__le__(other)
        return NotImplemented if lt is NotImplemented else not lt

    def __ge__(self, other: object) -> bool:
        lt = self.__lt__(other)
        return NotImplemented if lt is NotImplemented else not lt

    # -- probability algebra (results must stay inside [0, 1]) ---------

    def _wrap(self, value: Fraction) -> "ExactProb":
        if not 0 <= value <= 1:
            raise DomainError(f"result {value} is outside [0, 1]")
        return ExactProb(value.numerator, value.denominator)

    def __add__(self, other: object) -> "ExactProb":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.as_fraction() + o)

    __radd__ = __add__

    def __sub__(self, other: object) -> "ExactProb":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.as_fraction() - o)

    def __rsub__(self, other: object) -> "ExactProb":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(o - self.as_fraction())

    def __mul__(self, other: object) -> "ExactProb":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.as_fraction() * o)

    __rmul__ = __mul__

    def complement(self) -> "ExactProb":
        return ExactProb(self.den - self.num, self.den)

    # -- decimal rendering ---------------------------------------------

    def to_decimal(self, digits: int, mode: str = ROUND_HALF_EVEN) -> str:
        """Decimal expansion with exactly `digits` fractional digits.

        Two modes are supported: ``round-half-even`` (default, banker's
        rounding on the exact rational) and ``truncate`` (drop everything
        past the requested digit). Both are computed in integer arithmetic,
        so the printed digits are exact properties of the stored fraction.
        """
        if digits < 1:
            raise DomainError(f"digits must be >= 1, got {digits}")
        scaled = self.num * 10**digits
        q, r = divmod(scaled, self.den)
        if mode == ROUND_HALF_EVEN:
            twice = 2 * r
            if twice > self.den or (twice == self.den and q % 2 == 1):
                q += 1
        elif mode != TRUNCATE:
            raise DomainError(f"unknown decimal mode {mode!r}")
        d = 10**digits
        return f"{q // d}.{q % d:0{digits}d}"


ZERO = ExactProb(0, 1)
ONE = ExactProb(1, 1)


def to_decimal(p: ExactProb, digits: int, mode: str = ROUND_HALF_EVEN) -> str:
    """Module-level alias for :meth:`ExactProb.to_decimal`."""
    return p.to_decimal(digits, mode)
