"""Coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

import gmpy2

from .errors import UnsupportedParameterError

Coefficient = Union[int, Fraction]


class RationalField:
    """Exact rationals, stored as :class:`fractions.Fraction` in lowest terms."""

    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return Fraction(value)
        return Fraction(value)

    def inv(self, a) -> Fraction:
        a = self(a)
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / a

    def fmt(self, c) -> str:
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(("QQ",))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field F_p with residues kept in ``[0, p)``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise UnsupportedParameterError(f"p must be prime (got {p})")
        self.p = int(p)
        self.characteristic = self.p

    def __call__(self, value) -> int:
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, a) -> int:
        a = self(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def fmt(self, c) -> str:
        return str(int(c))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def is_prime(p) -> bool:
    return isinstance(p, int) and not isinstance(p, bool) and p > 1 and bool(gmpy2.is_prime(p))


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_for(p: int | None):
    """``QQ`` for ``p`` None or 0, else ``GF(p)``."""
    if p is None or p == 0:
        return QQ
    return GF(p)
