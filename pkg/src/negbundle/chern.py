"""Chern classes of the homotopy orbit bundles ``(mu_q^-)_{hT}`` and their summands.

Two routes compute ``c(nu_{r,q})``:

* the closed formula ``(1 + A - x1)^{n+1} / ((1 + A)(1 + B))`` (flag case,
  ``A = (r+q)/(2q) (x1-x2)``, ``B = (r-q)/(2q) (x1-x2)``) or its Borel
  analogue in ``u`` and ``x``;
* the line route ``c(L0)^{n+1} / (c(L1) c(L2))`` coming from
  ``nu + L1 + L2 = (n+1) L0``, where each line bundle is pulled back along
  ``pr_i`` from ``gamma_1``, its conjugate or a trivial bundle with a twisted
  circle action.

Fractions ``(r +- q)/(2q)`` are always formed as the integer ``(r +- q)/2``
times ``q^{-1}``; 2 is never inverted, so p = 2 stays valid when 2 does
not divide q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .bundles import EPS_C, EPS_R, NU, NU_BAR, SummandDescriptor, equivariant_decomposition
from .cohomology_rings import (
    FLAG,
    RingCase,
    default_cap,
    presentation_base,
    presentation_for,
    pullback_pr,
    validate_case,
)
from .errors import (
    BranchMismatchError,
    CapExceededError,
    ParityError,
    UnsupportedClassError,
    UnsupportedParameterError,
)
from .graded_algebra import GradedElement, RingPresentation, inv_unit, poincare
from .morse_spectrum import index_and_nullity

GAMMA1 = "gamma1"
GAMMA1_BAR = "gamma1_bar"
EPS = "eps"
EPS_BAR = "eps_bar"
LINE_KINDS = (GAMMA1, GAMMA1_BAR, EPS, EPS_BAR)

CLOSED = "closed_formula"
LINES = "line_route"


@dataclass(frozen=True)
class LineBundleSpec:
    kind: str
    twist: int


def c1_line(spec: LineBundleSpec, base: RingPresentation) -> GradedElement:
    """First Chern class of ``ET x_T spec`` in ``H*(BT x CP^n)``.

    ``gamma1(m) -> m u + x``, ``gamma1_bar(m) -> m u - x``, trivial bundles
    (plain or conjugate) ``-> m u``.
    """
    u, x = base.gen("u"), base.gen("x")
    m = spec.twist
    if spec.kind == GAMMA1:
        return u * m + x
    if spec.kind == GAMMA1_BAR:
        return u * m - x
    if spec.kind in (EPS, EPS_BAR):
        return u * m
    raise ValueError(f"unknown line bundle kind {spec.kind!r}")


@dataclass(frozen=True)
class ChernResult:
    total: GradedElement
    case: RingCase
    provenance: str
    label: str = ""

    @property
    def per_degree(self) -> dict[int, GradedElement]:
        return self.total.components()

    def component(self, degree: int) -> GradedElement:
        return self.total.homogeneous(degree)

    def as_dict(self) -> dict:
        return {
            "bundle": self.label,
            "case": self.case.tag,
            "n": self.case.n,
            "p": self.case.p,
            "q": self.case.q,
            "ring": self.total.ring.name,
            "provenance": self.provenance,
            "total": self.total.to_json(),
            "per_degree": [{"degree": d, "class": e.to_json()} for d, e in self.per_degree.items()],
        }

    def latex_lines(self) -> list[str]:
        return [f"c_{{{d // 2}}} = {e.latex()}" for d, e in self.per_degree.items()]


def _check_case(n: int, q: int, case: RingCase) -> None:
    if n < 2:
        raise UnsupportedParameterError(f"n must be > 1 (got n={n})")
    if case.n != n or case.q != q:
        raise BranchMismatchError(f"case {case} does not match n={n}, q={q}")
    validate_case(case)


def _check_nu(r: int, q: int, n: int, case: RingCase, strict: bool) -> None:
    _check_case(n, q, case)
    if (r - q) % 2:
        raise ParityError(f"r must be congruent to q mod 2 (got r={r}, q={q})")
    if r < 0 or (strict and r >= q):
        raise UnsupportedParameterError(f"need 0 <= r < q (got r={r}, q={q})")


def _weight_class(k: int, case: RingCase, R: RingPresentation) -> GradedElement:
    """Image of ``k u`` in the active ring: ``k q^{-1}(x1 - x2)`` or ``k u``."""
    if case.tag == FLAG:
        return (R.gen("x1") - R.gen("x2")) * (R.field(k) * R.field.inv(case.q))
    return R.gen("u") * k


def chern_nu_closed(
    r: int, q: int, n: int, case: RingCase, *, conjugate: bool = False, cap: int | None = None, strict: bool = True
) -> ChernResult:
    """Total Chern class of ``(nu_{r,q})_{hT}`` (or its conjugate) from the closed formula."""
    _check_nu(r, q, n, case, strict)
    R = presentation_for(case, cap)
    A = _weight_class((r + q) // 2, case, R)
    B = _weight_class((r - q) // 2, case, R)
    if case.tag == FLAG:
        shift = R.gen("x2") if conjugate else -R.gen("x1")
    else:
        shift = R.gen("x") if conjugate else -R.gen("x")
    numerator = (1 + A + shift) ** (n + 1)
    denominator = (1 + A) * (1 + B)
    label = f"{'nu_bar' if conjugate else 'nu'}_{{{r},{q}}}"
    return ChernResult(numerator * inv_unit(denominator), case, CLOSED, label)


def line_bundle_c1(
    r: int, q: int, n: int, case: RingCase, *, conjugate: bool = False, cap: int | None = None
) -> dict[str, GradedElement]:
    """First Chern classes of L0 (via pr_1 and via pr_2), L1 and L2."""
    R = presentation_for(case, cap)
    base = presentation_base(n, case.field, R.degree_cap)
    sign = -1 if conjugate else 1
    s = {i: (r + sign * (-1) ** (i + 1) * q) // 2 for i in (1, 2)}
    l0_kind, li_kind = (GAMMA1, EPS_BAR) if conjugate else (GAMMA1_BAR, EPS)
    out = {}
    for i in (1, 2):
        out[f"L0_via_{i}"] = pullback_pr(i, case, c1_line(LineBundleSpec(l0_kind, s[i]), base), R)
        out[f"L{i}"] = pullback_pr(i, case, c1_line(LineBundleSpec(li_kind, s[i]), base), R)
    return out


def chern_nu_lines(
    r: int, q: int, n: int, case: RingCase, *, conjugate: bool = False, cap: int | None = None, strict: bool = True
) -> ChernResult:
    """Total Chern class of ``(nu_{r,q})_{hT}`` through the line-bundle splitting."""
    _check_nu(r, q, n, case, strict)
    c1 = line_bundle_c1(r, q, n, case, conjugate=conjugate, cap=cap)
    total = (1 + c1["L0_via_1"]) ** (n + 1) * inv_unit(1 + c1["L1"]) * inv_unit(1 + c1["L2"])
    label = f"{'nu_bar' if conjugate else 'nu'}_{{{r},{q}}}"
    return ChernResult(total, case, LINES, label)


def negative_bundle_cap(n: int, q: int) -> int:
    """Cap large enough to hold every component of ``c((mu_q^-)_{hT})``."""
    d = equivariant_decomposition(n, q)
    return max(default_cap(n), 2 * d.complex_rank)


def chern_summand(summand: SummandDescriptor, case: RingCase, cap: int | None = None) -> GradedElement:
    R = presentation_for(case, cap)
    if summand.kind == EPS_R:
        return R.one()
    if summand.kind == EPS_C:
        return 1 + _weight_class(summand.weights, case, R)
    if summand.kind in (NU, NU_BAR):
        r, q = summand.params
        res = chern_nu_closed(r, q, case.n, case, conjugate=summand.kind == NU_BAR, cap=cap)
        return res.total
    raise ValueError(f"no Chern class rule for summand kind {summand.kind!r}")


def total_chern_negative(
    n: int, q: int, case: RingCase, *, literal: bool = False, cap: int | None = None, reverse: bool = False
) -> ChernResult:
    """Total Chern class of ``(mu_q^-)_{hT}`` as the product over the summands.

    By default the unpaired ``nu_{0,q}`` summand present for even q is
    included. ``literal=True`` drops it, reproducing the displayed product
    whose r-range is ``0 < r < q``.
    """
    _check_case(n, q, case)
    if case.tag != FLAG and cap is None:
        cap = negative_bundle_cap(n, q)
    R = presentation_for(case, cap)
    summands = [
        s for s in equivariant_decomposition(n, q).summands
        if not (literal and s.kind == NU and s.params[0] == 0)
    ]
    if reverse:
        summands = summands[::-1]
    factors = [chern_summand(s, case, cap) for s in summands]
    total = reduce(lambda a, b: a * b, factors, R.one())
    label = f"mu^-_{q}" + (" (literal product)" if literal else "")
    return ChernResult(total, case, CLOSED, label)


def euler_class_rho(case: RingCase) -> GradedElement:
    """Euler class ``x1 - x2`` of the circle bundle PW_{2,1} -> P(gamma_2)."""
    if case.tag != FLAG:
        raise BranchMismatchError("the Euler class e(rho) lives in the flag ring (p not dividing q)")
    R = presentation_for(case)
    return R.gen("x1") - R.gen("x2")


def total_power(e: GradedElement) -> GradedElement:
    """Total Steenrod power: ``g -> g + g^p`` on degree-2 generators, multiplicative."""
    R = e.ring
    p = R.field.characteristic
    if not p:
        raise UnsupportedParameterError("Steenrod powers need a prime field")
    for i, (g, d) in enumerate(R.generators):
        if d != 2 and any(m[i] for m in e.terms):
            raise UnsupportedClassError(f"Steenrod action on {g} (degree {d}) is not defined here")
    images = [R.gen(g) + R.gen(g) ** p if d == 2 else None for g, d in R.generators]
    out = R.zero()
    for m, c in e.terms.items():
        term = R.scalar(c)
        for img, k in zip(images, m):
            if k:
                term = term * img**k
        out = out + term
    return out


def steenrod_power(e: GradedElement, k: int, R: RingPresentation | None = None) -> GradedElement:
    """``P^k(e)`` (``Sq^{2k}`` when p = 2) on the even subring."""
    R = R or e.ring
    if e.ring != R:
        raise BranchMismatchError("element does not belong to the given presentation")
    p = R.field.characteristic
    if not p:
        raise UnsupportedParameterError("Steenrod powers need a prime field")
    shift = 2 * k * (p - 1)
    out = R.zero()
    for d, comp in e.components().items():
        if R.degree_cap is not None and d + shift > R.degree_cap:
            raise CapExceededError(f"P^{k} of a degree-{d} class exceeds cap {R.degree_cap}")
        out = out + total_power(comp).homogeneous(d + shift)
    return out


def filtration_quotient_poincare(n: int, q: int, case: RingCase, cap: int | None = None) -> list[int]:
    """Poincare series of the Thom space of ``(mu_q^-)_{hT}`` (list indexed by degree).

    The base series is shifted by the real rank of the negative bundle;
    the bundle is orientable, so no twisting enters.
    """
    if q < 1:
        raise UnsupportedParameterError("q must be >= 1; constant loops have no negative bundle")
    _check_case(n, q, case)
    if cap is not None and cap < 0:
        raise CapExceededError("cap must be non-negative")
    R = presentation_for(case, cap)
    base = poincare(R, R.degree_cap if R.degree_cap is not None else None)
    if cap is not None and case.tag == FLAG:
        base = base[: cap + 1]
    shift = index_and_nullity(2, n, q).index
    return [0] * shift + base
