"""Negative-bundle decompositions over B_q and over projective Stiefel manifolds."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InconsistencyError, ParityError, UnsupportedParameterError
from .morse_spectrum import index_and_nullity, validate_space

# Klingenberg's summands over B_q(P^n(alpha))
ETA_H0 = "eta_h0"
SIGMA_H = "sigma_h"
ETA_V0 = "eta_v0"
SIGMA_V = "sigma_v"
# T-equivariant summands over PW_{2,q}(C^{n+1})
EPS_R = "eps_R"
EPS_C = "eps_C"
NU = "nu"
NU_BAR = "nu_bar"

NU_KINDS = (NU, NU_BAR)


@dataclass(frozen=True)
class SummandDescriptor:
    kind: str
    params: tuple
    real_rank: int
    complex_rank: int | None = None
    weights: tuple | int | None = None

    def label(self) -> str:
        return f"{self.kind}{self.params}" if self.params else self.kind

    def as_dict(self) -> dict:
        w = list(self.weights) if isinstance(self.weights, tuple) else self.weights
        return {"kind": self.kind, "params": list(self.params), "rank": self.real_rank, "weights": w}


@dataclass(frozen=True)
class Decomposition:
    base: str
    alpha: int
    n: int
    q: int
    summands: tuple[SummandDescriptor, ...] = field(default_factory=tuple)

    @property
    def real_rank(self) -> int:
        return sum(s.real_rank for s in self.summands)

    @property
    def complex_rank(self) -> int:
        return sum(s.complex_rank or 0 for s in self.summands)

    def kinds(self) -> list[str]:
        return [s.kind for s in self.summands]

    def as_dict(self) -> dict:
        return {
            "base": self.base,
            "alpha": self.alpha,
            "n": self.n,
            "q": self.q,
            "summands": [s.as_dict() for s in self.summands],
        }


def nu_summand(r: int, q: int, n: int, conjugate: bool = False) -> SummandDescriptor:
    if (r - q) % 2:
        raise ParityError(f"nu bundles need r = q mod 2 (got r={r}, q={q})")
    if conjugate:
        return SummandDescriptor(NU_BAR, (r, q), 2 * (n - 1), n - 1, ((r - q) // 2, -1))
    return SummandDescriptor(NU, (r, q), 2 * (n - 1), n - 1, ((r + q) // 2, 1))


def klingenberg_decomposition(alpha: int, n: int, q: int) -> Decomposition:
    validate_space(alpha, n)
    if q < 1:
        raise UnsupportedParameterError(f"q must be >= 1 (got {q})")
    h = alpha - 1
    v = alpha * (n - 1)
    out = [SummandDescriptor(ETA_H0, (), h)]
    out += [SummandDescriptor(SIGMA_H, (p,), 2 * h) for p in range(1, q)]
    if q % 2:
        out += [SummandDescriptor(SIGMA_V, (2 * p - 1,), 2 * v) for p in range(1, (q - 1) // 2 + 1)]
    else:
        out.append(SummandDescriptor(ETA_V0, (), v))
        out += [SummandDescriptor(SIGMA_V, (2 * p,), 2 * v) for p in range(1, (q - 2) // 2 + 1)]
    return Decomposition(f"B_{q}(P^{n}({alpha}))", alpha, n, q, tuple(out))


def equivariant_decomposition(n: int, q: int) -> Decomposition:
    """The complex case (alpha = 2) as T-vector bundles over PW_{2,q}(C^{n+1})."""
    if n < 2:
        raise UnsupportedParameterError(f"n must be >= 2 (got n={n})")
    if q < 1:
        raise UnsupportedParameterError(f"q must be >= 1 (got {q})")
    out = [SummandDescriptor(EPS_R, (), 1)]
    out += [SummandDescriptor(EPS_C, (s,), 2, 1, s) for s in range(1, q)]
    if q % 2 == 0:
        out.append(nu_summand(0, q, n))
    for r in range(2 - q % 2, q, 2):
        out += [nu_summand(r, q, n), nu_summand(r, q, n, conjugate=True)]
    return Decomposition(f"PW_{{2,{q}}}(C^{n + 1})", 2, n, q, tuple(out))


@dataclass(frozen=True)
class RankReport:
    total: int
    expected: int
    alternative: int | None

    @property
    def ok(self) -> bool:
        return self.total == self.expected and self.alternative in (None, self.expected)


def rank_audit(d: Decomposition) -> RankReport:
    """Check the total real rank against the Morse index; raise on mismatch."""
    expected = index_and_nullity(d.alpha, d.n, d.q).index
    alternative = None
    if any(s.kind in (EPS_R, EPS_C, NU, NU_BAR) for s in d.summands):
        n_nu = sum(s.kind in NU_KINDS for s in d.summands)
        alternative = 1 + 2 * (d.q - 1) + 2 * (d.n - 1) * n_nu
    report = RankReport(d.real_rank, expected, alternative)
    if not report.ok:
        raise InconsistencyError(
            f"rank {d.real_rank} (alt {alternative}) != index {expected} for summands "
            f"{[s.label() for s in d.summands]}"
        )
    return report
