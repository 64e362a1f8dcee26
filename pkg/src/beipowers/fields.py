"""Exact coefficient fields: the rationals and prime fields.

Coefficients are stored as plain values (``Fraction`` for the rationals,
``int`` in ``[0, p)`` for a prime field); the field object carries the
metadata and the few operations that differ between the two.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """The field of rational numbers; coefficients are ``Fraction``."""

    char = 0

    def coerce(self, value) -> Fraction:
        return Fraction(value)

    def inv(self, value: Fraction) -> Fraction:
        return 1 / value

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(("field", 0))


class PrimeField:
    """The field with ``p`` elements; coefficients are ints in ``[0, p)``."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.char = p

    def coerce(self, value) -> int:
        p = self.char
        if isinstance(value, Fraction):
            num, den = value.numerator % p, value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
            return num * pow(den, p - 2, p) % p
        return int(value) % p

    def inv(self, value: int) -> int:
        p = self.char
        value %= p
        if value == 0:
            raise ZeroDivisionError(f"no inverse of 0 mod {p}")
        return pow(value, p - 2, p)

    def __repr__(self):
        return f"GF({self.char})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("field", self.char))


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


#: Default prime for fast exact runs; a second prime backs agreement checks.
DEFAULT_PRIME = 32003
SECOND_PRIME = 46337
