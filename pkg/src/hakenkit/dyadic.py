"""Exact rationals whose denominator is a power of two."""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational


class Dyadic:
    """An exact value ``numerator / 2**exponent`` kept in canonical form.

    Canonical form means the numerator is odd, or zero with exponent zero.
    ``str`` renders as ``"a/2^k"`` so outputs can be compared byte for byte.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if exponent < 0:
            numerator *= 1 << -exponent
            exponent = 0
        numerator = int(numerator)
        if numerator == 0:
            exponent = 0
        else:
            while exponent and not numerator & 1:
                numerator >>= 1
                exponent -= 1
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def coerce(cls, value) -> Dyadic:
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, Integral):
            return cls(int(value), 0)
        if isinstance(value, Rational):
            frac = Fraction(value)
            den = frac.denominator
            if den & (den - 1):
                raise ValueError(f"{value!r} is not dyadic")
            return cls(frac.numerator, den.bit_length() - 1)
        raise TypeError(f"cannot convert {type(value).__name__} to Dyadic")

    @classmethod
    def parse(cls, text: str) -> Dyadic:
        """Inverse of ``str``; also accepts bare integers."""
        text = text.strip()
        if "/" not in text:
            return cls(int(text))
        num, den = text.split("/", 1)
        if not den.startswith("2^"):
            raise ValueError(f"malformed dyadic {text!r}")
        return cls(int(num), int(den[2:]))

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __float__(self) -> float:
        return self.numerator / (1 << self.exponent)

    def _align(self, other: Dyadic) -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return self.numerator << (e - self.exponent), other.numerator << (e - other.exponent), e

    def __add__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __sub__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def shift(self, k: int) -> Dyadic:
        """Multiply by ``2**k`` (``k`` may be negative)."""
        return Dyadic(self.numerator, self.exponent - k)

    def __eq__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __hash__(self):
        if self.exponent == 0:
            return hash(self.numerator)
        return hash(self.to_fraction())

    def _cmp(self, other) -> int:
        other = Dyadic.coerce(other)
        a, b, _ = self._align(other)
        return (a > b) - (a < b)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self.numerator != 0

    def __str__(self):
        return f"{self.numerator}/2^{self.exponent}"

    def __repr__(self):
        return f"Dyadic({self.numerator}, {self.exponent})"


def neg_half_power(k: int) -> Dyadic:
    """``(-1/2) ** k`` for ``k >= 0``."""
    return Dyadic(-1 if k % 2 else 1, k)


def half_power(k: int) -> Dyadic:
    return Dyadic(1, k)
