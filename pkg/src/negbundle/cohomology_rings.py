"""Equivariant cohomology rings of projective Stiefel manifolds.

Three cases for ``H*_T(PW_{2,q}(C^{n+1}); F_p)`` plus the coefficient ring
``H*(BT x CP^n) = k[u, x]/(x^{n+1})``:

* ``flag``               p does not divide q: ``F_p[x1, x2]/(Q_n, Q_{n+1})``
* ``borel_divides``      p | q and p | n+1:   ``F_p[u, x, sigma]/(x^{n+1}, sigma^2)``, ``|sigma| = 2n-1``
* ``borel_coprime_np1``  p | q, p not | n+1:  ``F_p[u, x, sigmabar]/(x^n, sigmabar^2)``, ``|sigmabar| = 2n+1``

``Q_k = sum_{i=0}^{k} x1^i x2^{k-i}``. The flag ring is reduced with the
rules ``x2^n -> -sum_{i=1}^{n} x1^i x2^{n-i}`` (from ``Q_n``) and
``x1^{n+1} -> 0`` (``Q_{n+1} = x1^{n+1} + x2 Q_n``). Every rewrite lowers the
x2-exponent or annihilates, and the leading monomials ``x2^n`` and
``x1^{n+1}`` are coprime, so the two rules form a Groebner basis for the
lex order with x2 > x1. The monomial basis is
``{x1^a x2^b : a <= n, b <= n-1}`` of size ``n(n+1)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import BranchMismatchError, PresentationMismatchError, UnsupportedParameterError
from .fields import QQ, field_for, is_prime
from .graded_algebra import GradedElement, RingPresentation, nf

FLAG = "flag"
BOREL_DIVIDES = "borel_divides"
BOREL_COPRIME = "borel_coprime_np1"
BASE = "base"

_LATEX = {
    "x1": "x_{1}",
    "x2": "x_{2}",
    "u": "u",
    "x": "x",
    "sigma": r"\sigma",
    "sigmabar": r"\bar{\sigma}",
}


def default_cap(n: int) -> int:
    """Default total-degree cap for the infinite Borel rings (``4n + 6``).

    ``NEGBUNDLE_DEGREE_CAP`` overrides it.
    """
    env = os.environ.get("NEGBUNDLE_DEGREE_CAP")
    if env:
        return int(env)
    return 4 * n + 6


@dataclass(frozen=True)
class RingCase:
    """Which presentation applies; ``p = None`` means rational coefficients."""

    tag: str
    n: int
    p: int | None
    q: int | None = None

    @property
    def field(self):
        return field_for(self.p)

    @property
    def is_flag(self) -> bool:
        return self.tag == FLAG


def _check_np(n: int, p: int | None) -> None:
    if p is not None and not is_prime(p):
        raise UnsupportedParameterError(f"p must be prime (got {p})")
    if n <= 1:
        raise UnsupportedParameterError(f"n must be > 1 (got n={n})")


def ring_case(n: int, p: int | None, q: int) -> RingCase:
    """Select the case from ``(n, p, q)``; ``p=None`` gives the rational flag ring."""
    _check_np(n, p)
    if q <= 0:
        raise UnsupportedParameterError(f"q must be positive (got q={q})")
    if p is None or q % p:
        return RingCase(FLAG, n, p, q)
    if (n + 1) % p == 0:
        return RingCase(BOREL_DIVIDES, n, p, q)
    return RingCase(BOREL_COPRIME, n, p, q)


def validate_case(case: RingCase) -> None:
    """Raise if ``case.tag`` is inconsistent with its parameters."""
    if case.tag == BASE:
        return
    expected = ring_case(case.n, case.p, case.q).tag
    if expected != case.tag:
        raise BranchMismatchError(f"case {case.tag} does not apply to n={case.n}, p={case.p}, q={case.q}")


@lru_cache(maxsize=None)
def flag_ring(n: int, field=QQ) -> RingPresentation:
    """``k[x1, x2]/(Q_n, Q_{n+1})``: cohomology of the flag manifold P(gamma_2)."""
    if n < 1:
        raise UnsupportedParameterError("n must be >= 1")
    relations = [
        ({"x2": n}, [(-1, {"x1": i, "x2": n - i}) for i in range(1, n + 1)]),
        ({"x1": n + 1}, []),
    ]
    return RingPresentation(
        [("x1", 2), ("x2", 2)],
        relations,
        field=field,
        name=f"{field!r}[x1,x2]/(Q_{n},Q_{n + 1})",
        latex_names=_LATEX,
        relation_labels=(f"Q_{n}", f"Q_{n + 1}"),
    )


@lru_cache(maxsize=None)
def borel_ring(n: int, p: int, divides: bool, cap: int) -> RingPresentation:
    field = field_for(p)
    if divides:
        odd, odd_deg, xpow = "sigma", 2 * n - 1, n + 1
    else:
        odd, odd_deg, xpow = "sigmabar", 2 * n + 1, n
    return RingPresentation(
        [("u", 2), ("x", 2), (odd, odd_deg)],
        [({"x": xpow}, [])],
        field=field,
        degree_cap=cap,
        name=f"{field!r}[u,x,{odd}]/(x^{xpow},{odd}^2)",
        latex_names=_LATEX,
        relation_labels=(f"x^{xpow}", f"{odd}^2"),
    )


@lru_cache(maxsize=None)
def _base_ring(n: int, field, cap: int) -> RingPresentation:
    return RingPresentation(
        [("u", 2), ("x", 2)],
        [({"x": n + 1}, [])],
        field=field,
        degree_cap=cap,
        name=f"{field!r}[u]x{field!r}[x]/(x^{n + 1})",
        latex_names=_LATEX,
        relation_labels=(f"x^{n + 1}",),
    )


def presentation_base(n: int, field=QQ, cap: int | None = None) -> RingPresentation:
    """``H*(BT x CP^n) = k[u] (x) k[x]/(x^{n+1})`` truncated at ``cap``."""
    if n < 1:
        raise UnsupportedParameterError("n must be >= 1")
    if isinstance(field, int):
        field = field_for(field)
    return _base_ring(n, field, default_cap(n) if cap is None else cap)


def presentation_for(case: RingCase, cap: int | None = None) -> RingPresentation:
    """The ring presentation of ``case``; ``cap`` only affects Borel/base rings."""
    _check_np(case.n, case.p)
    if case.tag == BASE:
        return presentation_base(case.n, case.field, cap)
    validate_case(case)
    if case.tag == FLAG:
        return flag_ring(case.n, case.field)
    cap = default_cap(case.n) if cap is None else cap
    return borel_ring(case.n, case.p, case.tag == BOREL_DIVIDES, cap)


def _is_base_ring(R: RingPresentation) -> bool:
    return R.names == ("u", "x")


def pullback_pr(i: int, case: RingCase, e: GradedElement, target: RingPresentation | None = None) -> GradedElement:
    """Image of ``e`` under ``(ET x_T pr_i)^*``.

    Flag case: ``u -> q^{-1}(x1 - x2)``, ``x -> x_i``. Borel cases:
    ``u -> u``, ``x -> x``.
    """
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    validate_case(case)
    if not _is_base_ring(e.ring):
        raise PresentationMismatchError("pullback_pr expects an element of H*(BT x CP^n)")
    if e.ring.field != case.field or e.ring.rules[0][0][1] != case.n + 1:
        raise BranchMismatchError("base ring does not match the case's n or coefficient field")
    R = target or presentation_for(case, cap=e.ring.degree_cap)
    if case.tag == FLAG:
        q_inv = R.field.inv(case.q)
        x1, x2 = R.gen("x1"), R.gen("x2")
        u_img = (x1 - x2) * q_inv
        x_img = x1 if i == 1 else x2
    else:
        u_img, x_img = R.gen("u"), R.gen("x")
    out = R.zero()
    u_pows = [R.one()]
    x_pows = [R.one()]
    for (a, b), c in e.terms.items():
        while len(u_pows) <= a:
            u_pows.append(u_pows[-1] * u_img)
        while len(x_pows) <= b:
            x_pows.append(x_pows[-1] * x_img)
        out = out + (u_pows[a] * x_pows[b]) * c
    return out


def Q(k: int, R: RingPresentation) -> GradedElement:
    """``Q_k(x1, x2) = sum_{i=0}^{k} x1^i x2^{k-i}`` reduced in ``R``."""
    return nf([(1, {"x1": i, "x2": k - i}) for i in range(k + 1)], R)
