"""Graded-commutative polynomial rings over Q or F_p modulo a presentation.

A :class:`RingPresentation` lists generators with their degrees, homogeneous
rewrite rules ``leading monomial -> replacement`` and an optional total
degree cap. The normal form of a polynomial is obtained by rewriting until
no rule applies; terms of degree above the cap are rejected on input and
dropped from products, so a capped presentation models the truncation
``R / R_{> cap}``, which is again a ring.

Monomials are exponent tuples in the declared generator order. Odd-degree
generators automatically receive the rule ``g^2 -> 0``; with at most one odd
generator in every presentation used here no further sign bookkeeping is
needed.

Term order (used for display and serialization): increasing total degree,
then lexicographically decreasing exponent vector.

Once a presentation is finite dimensional (every generator is bounded by a
pure power rule, parity or the cap) products of normal forms are computed
from a table of structure constants by :mod:`negbundle.kernels`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import CapExceededError, NonUnitError, PresentationMismatchError
from .fields import QQ, Coefficient
from .kernels import StructureTable, structure_mul

Exps = tuple  # tuple[int, ...]

__all__ = [
    "GradedElement",
    "RingPresentation",
    "inv_unit",
    "mul",
    "nf",
    "poincare",
]


class RingPresentation:
    """Generators, rewrite rules, coefficient field and degree cap.

    ``relations`` is a sequence of ``(lead, replacement)`` pairs where
    ``lead`` maps generator names to exponents and ``replacement`` is an
    iterable of ``(integer coefficient, {name: exponent})`` terms of the
    same degree as ``lead``.
    """

    def __init__(
        self,
        generators: Sequence[tuple[str, int]],
        relations: Sequence[tuple[Mapping[str, int], Iterable[tuple[int, Mapping[str, int]]]]] = (),
        field=QQ,
        degree_cap: int | None = None,
        name: str = "",
        latex_names: Mapping[str, str] | None = None,
        relation_labels: Sequence[str] = (),
    ):
        names = [g for g, _ in generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for g, d in generators:
            if d <= 0:
                raise ValueError(f"generator {g} must have positive degree, got {d}")
        if degree_cap is not None and degree_cap < 0:
            raise ValueError("degree cap must be non-negative")
        self.generators = tuple((str(g), int(d)) for g, d in generators)
        self.names = tuple(names)
        self.degrees = tuple(d for _, d in self.generators)
        self.field = field
        self.degree_cap = degree_cap
        self.name = name
        self.latex_names = dict(latex_names or {})
        self.relation_labels = tuple(relation_labels)
        self._index = {g: i for i, g in enumerate(self.names)}

        rules = []
        for lead, replacement in relations:
            lead_exps = self._exps(lead)
            repl = []
            for c, m in replacement:
                if int(c) != c:
                    raise ValueError("rewrite rule coefficients must be integers")
                e = self._exps(m)
                if self.monomial_degree(e) != self.monomial_degree(lead_exps):
                    raise ValueError(f"rule for {lead} is not homogeneous")
                repl.append((e, int(c)))
            rules.append((lead_exps, tuple(repl)))
        for i, d in enumerate(self.degrees):
            if d % 2:
                square = tuple(2 if j == i else 0 for j in range(len(self.names)))
                rules.append((square, ()))
        self.rules = tuple(rules)
        self._mono_cache: dict[Exps, dict[Exps, int]] = {}

    # -- identity --------------------------------------------------------
    def _key(self):
        return (self.generators, self.rules, self.field, self.degree_cap)

    def __eq__(self, other):
        return isinstance(other, RingPresentation) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        label = self.name or "R"
        cap = "" if self.degree_cap is None else f", cap={self.degree_cap}"
        return f"<RingPresentation {label} over {self.field!r}{cap}>"

    # -- monomials -------------------------------------------------------
    def _exps(self, m) -> Exps:
        if isinstance(m, tuple) and all(isinstance(v, int) for v in m):
            if len(m) != len(self.names):
                raise PresentationMismatchError(f"monomial {m} has wrong arity for {self.names}")
            return m
        exps = [0] * len(self.names)
        for g, e in dict(m).items():
            if g not in self._index:
                raise PresentationMismatchError(f"unknown generator {g!r}; ring has {self.names}")
            if e < 0:
                raise ValueError(f"negative exponent for {g}")
            exps[self._index[g]] = int(e)
        return tuple(exps)

    def monomial_degree(self, exps: Exps) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    def order_key(self, exps: Exps):
        return (self.monomial_degree(exps), tuple(-e for e in exps))

    def _reducer(self, exps: Exps):
        for lead, repl in self.rules:
            if all(e >= l for e, l in zip(exps, lead)):
                return lead, repl
        return None

    def nf_monomial(self, exps: Exps) -> dict[Exps, int]:
        """Normal form of a single monomial with integer coefficients."""
        cached = self._mono_cache.get(exps)
        if cached is not None:
            return cached
        rule = self._reducer(exps)
        if rule is None:
            out = {exps: 1}
        else:
            lead, repl = rule
            rest = tuple(e - l for e, l in zip(exps, lead))
            out: dict[Exps, int] = {}
            for r_exps, rc in repl:
                target = tuple(a + b for a, b in zip(rest, r_exps))
                for m, c in self.nf_monomial(target).items():
                    out[m] = out.get(m, 0) + rc * c
            out = {m: c for m, c in out.items() if c}
        self._mono_cache[exps] = out
        return out

    # -- basis and structure constants ----------------------------------
    @cached_property
    def basis(self) -> tuple[Exps, ...]:
        """Normal-form monomials, sorted by the term order."""
        bounds = []
        for i, (g, d) in enumerate(self.generators):
            candidates = []
            if d % 2:
                candidates.append(1)
            for lead, _ in self.rules:
                if lead[i] > 0 and all(e == 0 for j, e in enumerate(lead) if j != i):
                    candidates.append(lead[i] - 1)
            if self.degree_cap is not None:
                candidates.append(self.degree_cap // d)
            if not candidates:
                raise CapExceededError(
                    f"generator {g} is unbounded; set a degree cap to make {self.name or 'the ring'} finite"
                )
            bounds.append(min(candidates))
        out = []
        for exps in itertools.product(*(range(b + 1) for b in bounds)):
            if self.degree_cap is not None and self.monomial_degree(exps) > self.degree_cap:
                continue
            if self._reducer(exps) is None:
                out.append(exps)
        out.sort(key=self.order_key)
        return tuple(out)

    @cached_property
    def basis_index(self) -> dict[Exps, int]:
        return {m: i for i, m in enumerate(self.basis)}

    @cached_property
    def top_degree(self) -> int:
        return max((self.monomial_degree(m) for m in self.basis), default=0)

    @cached_property
    def table(self) -> StructureTable:
        basis, index, cap = self.basis, self.basis_index, self.degree_cap
        ptr, idx, coef = [0], [], []
        for mi in basis:
            for mj in basis:
                prod = tuple(a + b for a, b in zip(mi, mj))
                if cap is None or self.monomial_degree(prod) <= cap:
                    for m, c in sorted(self.nf_monomial(prod).items(), key=lambda kv: index[kv[0]]):
                        idx.append(index[m])
                        coef.append(c)
                ptr.append(len(idx))
        return StructureTable(ptr, idx, coef)

    # -- elements ----------------------------------------------------------
    def _wrap(self, terms: Mapping[Exps, Coefficient]) -> GradedElement:
        f = self.field
        clean = {}
        for m, c in terms.items():
            c = f(c)
            if c:
                clean[m] = c
        return GradedElement(self, clean)

    def element(self, data) -> GradedElement:
        """Normal form of ``data``.

        ``data`` may be a scalar, a mapping ``monomial -> coefficient`` (monomials
        as exponent tuples or ``{name: exponent}`` dicts), a list of
        ``(coefficient, monomial)`` pairs, or a JSON term list.
        """
        return nf(data, self)

    def zero(self) -> GradedElement:
        return GradedElement(self, {})

    def one(self) -> GradedElement:
        return self.scalar(1)

    def scalar(self, c) -> GradedElement:
        return self._wrap({(0,) * len(self.names): c})

    def gen(self, name: str) -> GradedElement:
        if name not in self._index:
            raise PresentationMismatchError(f"unknown generator {name!r}; ring has {self.names}")
        return nf([(1, {name: 1})], self)

    def gens(self) -> tuple[GradedElement, ...]:
        return tuple(self.gen(g) for g in self.names)

    def from_json(self, data) -> GradedElement:
        return nf([(t["coeff"], t["exps"]) for t in data], self)

    def is_finite(self) -> bool:
        try:
            self.basis
        except CapExceededError:
            return False
        return True


class GradedElement:
    """An element of a ring presentation, always kept in normal form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingPresentation, terms: dict[Exps, Coefficient]):
        self.ring = ring
        self.terms = terms

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> GradedElement:
        if isinstance(other, GradedElement):
            if other.ring != self.ring:
                raise PresentationMismatchError(f"{other.ring!r} does not match {self.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self.ring._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self.ring._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field(other)
            return self.ring._wrap({m: c * v for m, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers: use inv_unit")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure -------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exps, Coefficient]]:
        return sorted(self.terms.items(), key=lambda kv: self.ring.order_key(kv[0]))

    def degrees(self) -> list[int]:
        return sorted({self.ring.monomial_degree(m) for m in self.terms})

    @property
    def degree(self) -> int:
        """Maximal degree of a term, ``-1`` for zero."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous(self, d: int) -> GradedElement:
        deg = self.ring.monomial_degree
        return GradedElement(self.ring, {m: c for m, c in self.terms.items() if deg(m) == d})

    def components(self) -> dict[int, GradedElement]:
        return {d: self.homogeneous(d) for d in self.degrees()}

    def truncate(self, cap: int) -> GradedElement:
        deg = self.ring.monomial_degree
        return GradedElement(self.ring, {m: c for m, c in self.terms.items() if deg(m) <= cap})

    def constant_term(self) -> Coefficient:
        return self.terms.get((0,) * len(self.ring.names), self.ring.field(0))

    def coeff(self, monomial) -> Coefficient:
        return self.terms.get(self.ring._exps(monomial), self.ring.field(0))

    def uses(self, name: str) -> bool:
        i = self.ring._index[name]
        return any(m[i] for m in self.terms)

    # -- output ------------------------------------------------------------
    def to_json(self) -> list[dict]:
        fmt, names = self.ring.field.fmt, self.ring.names
        return [
            {"coeff": fmt(c), "exps": {g: e for g, e in zip(names, m) if e}}
            for m, c in self.sorted_terms()
        ]

    def _render(self, names, mul_sym, power) -> str:
        if not self.terms:
            return "0"
        fmt = self.ring.field.fmt
        pieces = []
        for m, c in self.sorted_terms():
            factors = [power(names[i], e) for i, e in enumerate(m) if e]
            s = fmt(c)
            negative = s.startswith("-")
            if negative:
                s = s[1:]
            if factors:
                body = mul_sym.join(factors)
                text = body if s == "1" else f"{s}{mul_sym}{body}" if mul_sym.strip() else f"{s} {body}"
            else:
                text = s
            pieces.append(("-" if negative else "+", text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self):
        return self._render(self.ring.names, "*", lambda g, e: g if e == 1 else f"{g}^{e}")

    def latex(self) -> str:
        names = [self.ring.latex_names.get(g, g) for g in self.ring.names]
        return self._render(names, " ", lambda g, e: g if e == 1 else f"{g}^{{{e}}}")

    def __repr__(self):
        return f"GradedElement({self}, ring={self.ring.name or '?'})"


def _iter_terms(data, R: RingPresentation):
    if isinstance(data, GradedElement):
        if data.ring.names != R.names:
            raise PresentationMismatchError(f"element of {data.ring!r} used with {R!r}")
        yield from data.terms.items()
    elif isinstance(data, (int, Fraction, str)):
        yield (0,) * len(R.names), data
    elif isinstance(data, Mapping):
        for m, c in data.items():
            yield R._exps(m), c
    else:
        for item in data:
            if isinstance(item, Mapping):
                yield R._exps(item["exps"]), item["coeff"]
            else:
                c, m = item
                yield R._exps(m), c


def nf(e, R: RingPresentation) -> GradedElement:
    """Unique representative of ``e`` supported on the monomial basis of ``R``."""
    f = R.field
    acc: dict[Exps, Coefficient] = {}
    for m, c in _iter_terms(e, R):
        if R.degree_cap is not None and R.monomial_degree(m) > R.degree_cap:
            raise CapExceededError(
                f"term of degree {R.monomial_degree(m)} exceeds cap {R.degree_cap} of {R.name or 'ring'}"
            )
        c = f(c)
        if not c:
            continue
        for mm, cc in R.nf_monomial(m).items():
            acc[mm] = acc.get(mm, 0) + c * cc
    return R._wrap(acc)


def mul(a: GradedElement, b: GradedElement, R: RingPresentation, backend: str | None = None) -> GradedElement:
    """Normal form of ``a * b``; terms above the degree cap are dropped."""
    if a.ring != R or b.ring != R:
        raise PresentationMismatchError("both factors must belong to the given presentation")
    if not a.terms or not b.terms:
        return R.zero()
    index, basis = R.basis_index, R.basis
    n = len(basis)
    va, vb = [0] * n, [0] * n
    for m, c in a.terms.items():
        va[index[m]] = c
    for m, c in b.terms.items():
        vb[index[m]] = c
    out = structure_mul(va, vb, R.table, R.field.characteristic, backend=backend)
    return R._wrap({basis[i]: c for i, c in enumerate(out) if c})


def inv_unit(e: GradedElement, R: RingPresentation | None = None, cap: int | None = None) -> GradedElement:
    """Inverse of a unit as a finite geometric series.

    The constant term is inverted separately; the positive-degree part is
    nilpotent in every finite presentation, so ``sum (1 - e')^k`` terminates.
    With ``cap`` the result is truncated to degree ``<= cap``.
    """
    R = R or e.ring
    if e.ring != R:
        raise PresentationMismatchError("element does not belong to the given presentation")
    c0 = e.constant_term()
    if not c0:
        raise NonUnitError(f"{e} has zero constant term")
    c0_inv = R.field.inv(c0)
    t = R.one() - e * c0_inv
    if cap is not None:
        t = t.truncate(cap)
    acc, power = R.one(), R.one()
    while True:
        power = power * t
        if cap is not None:
            power = power.truncate(cap)
        if not power:
            break
        acc = acc + power
    return acc * c0_inv


def poincare(R: RingPresentation, max_degree: int | None = None) -> list[int]:
    """Ranks of the graded pieces of ``R``, as a list indexed by degree."""
    if max_degree is None:
        max_degree = R.top_degree
    if R.degree_cap is not None and max_degree > R.degree_cap:
        raise CapExceededError(f"degree {max_degree} exceeds cap {R.degree_cap}")
    ranks = [0] * (max_degree + 1)
    for m in R.basis:
        d = R.monomial_degree(m)
        if d <= max_degree:
            ranks[d] += 1
    return ranks
