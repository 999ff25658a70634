"""Floating point checks on closed geodesics of CP^n and their parallel fields.

Points of CP^n and tangent vectors are handled through lifts to the unit
sphere S^{2n+1} in C^{n+1}: a tangent vector at ``rho(c)`` is represented by
``xi`` with ``h(c, xi) = 0``, and the Fubini-Study metric is
``g(d rho xi, d rho eta) = Re h(xi, eta)``. Two lifts ``(c, xi)`` and
``(z c, z xi)`` (``|z| = 1``) describe the same tangent vector.

The Hessian test works in the metric ``kappa * g``. The default
``kappa = 2 / pi^2`` puts sectional curvature in ``[pi^2/2, 2 pi^2]`` and
gives ``|f'|^2 = 2 q^2`` along a q-fold great circle, which is the
normalization under which the eigenvalue formulas hold. Covariant
derivatives are never differentiated numerically: every test field is a
trigonometric combination of fields that are parallel along the geodesic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NumericError, ParityError, UnsupportedParameterError
from .morse_spectrum import FAMILIES, HORIZONTAL, TANGENTIAL, VERTICAL

FRAME_TOL = 1e-12
ORTH_TOL = 1e-10

CURVATURE = "curvature"  # kappa = 2/pi^2
LITERAL = "literal"  # kappa = pi^2/2
HALF_INTEGRAL = "half_integral"
FULL_INTEGRAL = "full_integral"


def h(a: np.ndarray, b: np.ndarray) -> complex:
    """Standard Hermitian product, linear in the first argument."""
    return complex(np.sum(a * np.conj(b)))


@dataclass(frozen=True)
class MetricConvention:
    kappa: float = 2 / math.pi**2
    energy_convention: str = HALF_INTEGRAL

    def __post_init__(self):
        if not self.kappa > 0:
            raise UnsupportedParameterError("kappa must be positive")
        if self.energy_convention not in (HALF_INTEGRAL, FULL_INTEGRAL):
            raise UnsupportedParameterError(f"unknown energy convention {self.energy_convention!r}")

    @classmethod
    def named(cls, name: str, energy_convention: str = HALF_INTEGRAL) -> MetricConvention:
        if name == CURVATURE:
            return cls(2 / math.pi**2, energy_convention)
        if name == LITERAL:
            return cls(math.pi**2 / 2, energy_convention)
        raise UnsupportedParameterError(f"unknown metric convention {name!r}")


DEFAULT_CONVENTION = MetricConvention()


@dataclass(frozen=True)
class Frame:
    """Orthonormal 2-frame ``(u, v)`` in C^{n+1}."""

    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=complex)
        v = np.asarray(self.v, dtype=complex)
        if u.shape != v.shape or u.ndim != 1:
            raise UnsupportedParameterError("frame vectors must be 1-d of equal length")
        if abs(h(u, u) - 1) > FRAME_TOL or abs(h(v, v) - 1) > FRAME_TOL or abs(h(u, v)) > FRAME_TOL:
            raise UnsupportedParameterError("frame is not h-orthonormal")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def n(self) -> int:
        return self.u.shape[0] - 1

    def rotate(self, lam: complex) -> Frame:
        return Frame(lam * self.u, lam * self.v)


def random_frame(n: int, rng: np.random.Generator) -> Frame:
    """Orthonormalize two columns of a complex Gaussian matrix."""
    z = rng.standard_normal((n + 1, 2)) + 1j * rng.standard_normal((n + 1, 2))
    qmat, _ = np.linalg.qr(z)
    return Frame(qmat[:, 0].copy(), qmat[:, 1].copy())


def random_normal_vector(frame: Frame, rng: np.random.Generator, unit: bool = True) -> np.ndarray:
    """Random ``w`` with ``h(u, w) = h(v, w) = 0``."""
    if frame.n < 2:
        raise UnsupportedParameterError("need n >= 2 for vectors orthogonal to the frame")
    w = rng.standard_normal(frame.n + 1) + 1j * rng.standard_normal(frame.n + 1)
    w = w - h(w, frame.u) * frame.u - h(w, frame.v) * frame.v
    return w / np.linalg.norm(w) if unit else w


class GeodesicPoint(NamedTuple):
    c: np.ndarray
    velocity: np.ndarray


def geodesic_point(frame: Frame, q: int, t: float) -> GeodesicPoint:
    """Lift ``c(t) = (e^{-q pi i t} u + e^{q pi i t} v)/sqrt 2`` and ``c'(t)``."""
    if q < 1:
        raise UnsupportedParameterError("q must be >= 1")
    a, b = np.exp(-1j * q * math.pi * t), np.exp(1j * q * math.pi * t)
    c = (a * frame.u + b * frame.v) / math.sqrt(2)
    dc = -1j * q * math.pi * (a * frame.u - b * frame.v) / math.sqrt(2)
    return GeodesicPoint(c, dc)


def _check_normal(frame: Frame, w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=complex)
    if abs(h(frame.u, w)) > ORTH_TOL or abs(h(frame.v, w)) > ORTH_TOL:
        raise UnsupportedParameterError("w must be h-orthogonal to u and v")
    return w


class FieldValues(NamedTuple):
    c: np.ndarray
    H: np.ndarray
    V: np.ndarray


def field_values(frame: Frame, q: int, t: float, w: np.ndarray) -> FieldValues:
    """Lifts of the parallel fields ``H(t)`` and ``V(w)(t)`` at ``c(t)``."""
    w = _check_normal(frame, w)
    c, _ = geodesic_point(frame, q, t)
    a, b = np.exp(-1j * q * math.pi * t), np.exp(1j * q * math.pi * t)
    return FieldValues(c, a * frame.u - b * frame.v, w)


def same_tangent_distance(c1, xi1, c2, xi2) -> float:
    """Distance between tangent vectors given by lifts over the same point of CP^n.

    ``c2 = z c1`` for a unit ``z``; the lift ``xi2`` is moved to ``c1`` by
    multiplying with ``conj(z)``. Also includes the basepoint mismatch.
    """
    z = h(c2, c1)
    z = z / abs(z)
    return float(np.linalg.norm(c2 - z * c1) + np.linalg.norm(np.conj(z) * xi2 - xi1))


class HolonomyDefect(NamedTuple):
    vertical: float
    horizontal: float

    @property
    def max(self) -> float:
        return max(self.vertical, self.horizontal)


def holonomy_defect(frame: Frame, q: int, w: np.ndarray) -> HolonomyDefect:
    """Compare ``V(w)(0)`` with ``(-1)^q V(w)(1)`` and ``H(0)`` with ``H(1)``."""
    f0 = field_values(frame, q, 0.0, w)
    f1 = field_values(frame, q, 1.0, w)
    sign = (-1) ** q
    vertical = same_tangent_distance(f0.c, f0.V, f1.c, sign * f1.V)
    horizontal = same_tangent_distance(f0.c, f0.H, f1.c, f1.H)
    return HolonomyDefect(vertical, horizontal)


# closed-geodesic parametrization by the circle group ------------------------

def closed_geodesic(u, v, z: complex) -> np.ndarray:
    """``c(u, v)(z) = (z^{-1} u + z v)/sqrt 2``."""
    return (np.asarray(u) / z + z * np.asarray(v)) / math.sqrt(2)


def H_field(u, v, z: complex) -> tuple[np.ndarray, np.ndarray]:
    """``H(u, v)(z)`` as (basepoint lift, vector lift)."""
    return closed_geodesic(u, v, z), closed_geodesic(u, -np.asarray(v), z)


def V_field(u, v, w, z: complex) -> tuple[np.ndarray, np.ndarray]:
    """``V(u, v, w)(z)`` as (basepoint lift, vector lift)."""
    return closed_geodesic(u, v, z), np.asarray(w, dtype=complex)


# Hessian and energy -----------------------------------------------------------

class _Field(NamedTuple):
    X: np.ndarray  # (steps, n+1) lifts
    DX: np.ndarray


def _samples(steps: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, steps + 1)


def _integrate(values: np.ndarray, steps: int) -> float:
    out = float(np.trapezoid(values, dx=1.0 / steps))
    if not math.isfinite(out):
        raise NumericError("quadrature produced a non-finite value")
    return out


def _model_field(family: str, k: int, q: int, frame: Frame, rng: np.random.Generator, steps: int) -> _Field:
    t = _samples(steps)[:, None]
    a, b = rng.standard_normal(2)
    phase_m = np.exp(-1j * q * math.pi * t)
    phase_p = np.exp(1j * q * math.pi * t)
    if family == HORIZONTAL:
        omega = 2 * math.pi * k
        A = phase_m * frame.u - phase_p * frame.v  # parallel, horizontal, orthogonal to f'
        f = a * np.cos(omega * t) + b * np.sin(omega * t)
        df = omega * (-a * np.sin(omega * t) + b * np.cos(omega * t))
        return _Field(f * A, df * A)
    if family == TANGENTIAL:
        omega = 2 * math.pi * k
        A = -1j * q * math.pi * (phase_m * frame.u - phase_p * frame.v) / math.sqrt(2)  # f'
        f = a * np.cos(omega * t) + b * np.sin(omega * t)
        df = omega * (-a * np.sin(omega * t) + b * np.cos(omega * t))
        return _Field(f * A, df * A)
    omega = math.pi * k
    w1 = random_normal_vector(frame, rng)
    w2 = random_normal_vector(frame, rng)
    cos, sin = np.cos(omega * t), np.sin(omega * t)
    X = cos * w1 + sin * w2
    DX = omega * (-sin * w1 + cos * w2)
    return _Field(X, DX)


def _split(Z: np.ndarray, c: np.ndarray, dc: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Horizontal (along C c') and vertical ({u, v}-orthogonal) parts of lifts ``Z``."""
    unit = dc / np.linalg.norm(dc, axis=1, keepdims=True)
    Z = Z - np.sum(Z * np.conj(c), axis=1, keepdims=True) * c
    Zh = np.sum(Z * np.conj(unit), axis=1, keepdims=True) * unit
    return Zh, Z - Zh


def _re_h(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.real(np.sum(a * np.conj(b), axis=1))


def hessian_and_norm(field: _Field, frame: Frame, q: int, conv: MetricConvention, steps: int) -> tuple[float, float]:
    """``H_f(X, X)`` from the horizontal/vertical forms and ``<<X, X>>``."""
    t = _samples(steps)
    c, dc = geodesic_point(frame, q, t[:, None])
    kappa = conv.kappa
    Xh, Xv = _split(field.X, c, dc)
    DXh, DXv = _split(field.DX, c, dc)
    fprime_x = kappa * _re_h(dc, Xh)
    pi2 = math.pi**2
    horizontal = kappa * _re_h(DXh, DXh) - 2 * pi2 * (2 * q * q * kappa * _re_h(Xh, Xh) - fprime_x**2)
    vertical = kappa * _re_h(DXv, DXv) - pi2 * q * q * kappa * _re_h(Xv, Xv)
    hess = _integrate(horizontal + vertical, steps)
    norm = _integrate(kappa * (_re_h(field.DX, field.DX) + _re_h(field.X, field.X)), steps)
    return hess, norm


def rayleigh(
    family: str,
    k: int,
    q: int,
    n: int,
    conv: MetricConvention = DEFAULT_CONVENTION,
    steps: int = 4096,
    seed: int = 0,
    frame: Frame | None = None,
) -> float:
    """Numeric Rayleigh quotient of the model eigenfield of the given family.

    The frame is drawn from ``seed`` unless one is passed; the field
    coefficients always come from ``seed``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if steps < 256:
        raise UnsupportedParameterError("steps must be >= 256")
    if q < 1 or k < 0:
        raise UnsupportedParameterError("need q >= 1 and k >= 0")
    if family == VERTICAL and (k - q) % 2:
        raise ParityError(f"vertical eigenfields need r = q mod 2 (got r={k}, q={q})")
    rng = np.random.default_rng(seed)
    drawn = random_frame(n, rng)
    if frame is None:
        frame = drawn
    elif frame.n != n:
        raise UnsupportedParameterError(f"frame lives in C^{frame.n + 1}, expected n={n}")
    field = _model_field(family, k, q, frame, rng, steps)
    hess, norm = hessian_and_norm(field, frame, q, conv, steps)
    return hess / norm


class EnergyResult(NamedTuple):
    integral: float  # int |f'|^2 dt
    half: float  # (1/2) int |f'|^2 dt
    convention: str

    @property
    def value(self) -> float:
        return self.integral if self.convention == FULL_INTEGRAL else self.half


def energy(frame: Frame, q: int, conv: MetricConvention = DEFAULT_CONVENTION, steps: int = 1024) -> EnergyResult:
    t = _samples(steps)
    _, dc = geodesic_point(frame, q, t[:, None])
    integral = _integrate(conv.kappa * _re_h(dc, dc), steps)
    return EnergyResult(integral, integral / 2, conv.energy_convention)
