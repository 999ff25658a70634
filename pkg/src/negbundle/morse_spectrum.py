"""Spectrum of the energy Hessian at q-fold great circles of P^n(alpha).

The eigenvalues on the horizontal, vertical and tangential eigenfields are

    horizontal  lambda_p = 4 pi^2 (p^2 - q^2) / (1 + 4 pi^2 p^2)
    vertical    mu_r     =   pi^2 (r^2 - q^2) / (1 +   pi^2 r^2),  r = q mod 2
    tangential  nu_s     = 4 pi^2 s^2        / (1 + 4 pi^2 s^2)

They are stored exactly as ``(a pi^2 + b) / (c pi^2 + d)`` with integers, so
signs never depend on floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParityError, UnsupportedParameterError

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
TANGENTIAL = "tangential"
FAMILIES = (HORIZONTAL, VERTICAL, TANGENTIAL)
ALPHAS = (2, 4, 8)


@dataclass(frozen=True)
class ExactEigenvalue:
    """``(pi2_num * pi^2 + const_num) / (pi2_den * pi^2 + const_den)``."""

    pi2_num: int
    const_num: int
    pi2_den: int
    const_den: int

    @property
    def sign(self) -> int:
        # denominators are 1 + c pi^2 with c >= 0, numerators have const_num == 0
        assert self.const_den > 0 and self.pi2_den >= 0 and self.const_num == 0
        return (self.pi2_num > 0) - (self.pi2_num < 0)

    @property
    def value(self) -> float:
        pi2 = math.pi**2
        return (self.pi2_num * pi2 + self.const_num) / (self.pi2_den * pi2 + self.const_den)

    def __float__(self):
        return self.value

    def __str__(self):
        if self.pi2_num == 0 and self.const_num == 0:
            return "0"
        num = f"{self.pi2_num}pi^2"
        den = f"1+{self.pi2_den}pi^2" if self.pi2_den else "1"
        return f"{num}/({den})"


@dataclass(frozen=True)
class SpectrumEntry:
    family: str
    k: int
    eigenvalue: ExactEigenvalue
    real_dimension: int

    @property
    def sign(self) -> str:
        return {-1: "neg", 0: "zero", 1: "pos"}[self.eigenvalue.sign]

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "eigenvalue_exact": str(self.eigenvalue),
            "eigenvalue": self.eigenvalue.value,
            "dim": self.real_dimension,
            "sign": self.sign,
        }


@dataclass(frozen=True)
class IndexData:
    index: int
    nullity: int
    alpha: int
    n: int
    q: int


def validate_space(alpha: int, n: int) -> None:
    if alpha not in ALPHAS:
        raise UnsupportedParameterError(f"alpha must be one of {ALPHAS} (got {alpha})")
    if n < 1:
        raise UnsupportedParameterError(f"n must be >= 1 (got {n})")
    if alpha == 8 and n > 2:
        raise UnsupportedParameterError("the octonionic projective space P^n(8) exists only for n <= 2")


def _check_family(family: str, k: int, q: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if q < 1:
        raise UnsupportedParameterError(f"q must be >= 1 (got {q})")
    if k < 0:
        raise ValueError("k must be non-negative")
    if family == VERTICAL and (k - q) % 2:
        raise ParityError(f"vertical eigenfields need r = q mod 2 (got r={k}, q={q})")


def eigenvalue(family: str, k: int, q: int) -> ExactEigenvalue:
    _check_family(family, k, q)
    if family == HORIZONTAL:
        return ExactEigenvalue(4 * (k * k - q * q), 0, 4 * k * k, 1)
    if family == VERTICAL:
        return ExactEigenvalue(k * k - q * q, 0, k * k, 1)
    return ExactEigenvalue(4 * k * k, 0, 4 * k * k, 1)


def eigenspace_dim(family: str, k: int, alpha: int, n: int) -> int:
    validate_space(alpha, n)
    if family == HORIZONTAL:
        return alpha - 1 if k == 0 else 2 * (alpha - 1)
    if family == VERTICAL:
        return alpha * (n - 1) if k == 0 else 2 * alpha * (n - 1)
    if family == TANGENTIAL:
        return 1 if k == 0 else 2
    raise ValueError(f"unknown family {family!r}")


def index_and_nullity(alpha: int, n: int, q: int) -> IndexData:
    validate_space(alpha, n)
    if q < 1:
        raise UnsupportedParameterError(f"q must be >= 1 (got {q})")
    index = (2 * q - 1) * (alpha - 1) + (q - 1) * alpha * (n - 1)
    return IndexData(index, 2 * alpha * n - 1, alpha, n, q)


def enumerate_spectrum(alpha: int, n: int, q: int, cutoff: int) -> list[SpectrumEntry]:
    """All eigenspaces with parameter ``<= cutoff``, sorted by (family, k).

    Eigenspaces of dimension zero (vertical ones when n = 1) are omitted.
    """
    validate_space(alpha, n)
    if cutoff < q:
        raise UnsupportedParameterError(f"cutoff {cutoff} must be >= q={q} to include all non-positive entries")
    out = []
    for family in FAMILIES:
        for k in range(cutoff + 1):
            if family == VERTICAL and (k - q) % 2:
                continue
            dim = eigenspace_dim(family, k, alpha, n)
            if dim:
                out.append(SpectrumEntry(family, k, eigenvalue(family, k, q), dim))
    return out


def critical_energy(q: int) -> Fraction:
    """Energy ``2 q^2`` of the critical manifold B_q."""
    if q < 0:
        raise UnsupportedParameterError("q must be >= 0")
    return Fraction(2 * q * q)
