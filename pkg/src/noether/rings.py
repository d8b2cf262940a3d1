"""Presented rings and ideal handles.

A ``PresentedRing`` is k[vars]/quotient with a finite multiplicative set
inverted (localization).  Ideals are finite generator lists; the canonical
form of an ideal is its saturation with respect to the product of the
inverted generators, together with the quotient generators, as a reduced
Groebner basis.  Two handles over the same ring are equal iff their
canonical forms coincide, which makes equality decidable in R_f.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple

from .config import Budgets, DEFAULT_BUDGETS
from .errors import DomainError, ResourceBudgetError
from .fields import FieldSpec
from .groebner import groebner_basis, normal_form
from .parse import parse_polynomial
from .poly import BlockElim, DEGREVLEX, Polynomial, mono_div, mono_divides, order_by_name


@dataclass(frozen=True)
class PresentedRing:
    field: FieldSpec
    vars: Tuple[str, ...]
    quotient: Tuple[Polynomial, ...] = ()
    inverted: Tuple[Polynomial, ...] = ()
    order_name: str = "degrevlex"

    def __post_init__(self):
        for p in self.quotient + self.inverted:
            if p.nvars != self.nvars or p.field != self.field:
                raise DomainError("presentation polynomial from a different ring")
        for p in self.inverted:
            if p.is_zero():
                raise DomainError("cannot invert zero")
        order_by_name(self.order_name)
        # No inverted element may reduce to 0 modulo the quotient.
        if self.quotient:
            qb = groebner_basis(list(self.quotient), self.order)
            for p in self.inverted:
                if normal_form(p, qb, self.order).is_zero():
                    raise DomainError("inverted element is zero modulo the quotient")

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def order(self):
        return order_by_name(self.order_name)

    # -- element helpers ---------------------------------------------------

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.field, self.vars)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.field, self.nvars)

    def one(self) -> Polynomial:
        return Polynomial.const(self.field, self.nvars, 1)

    def var(self, name: str) -> Polynomial:
        return Polynomial.var(self.field, self.nvars, self.vars.index(name))

    def inverted_product(self) -> Polynomial:
        s = self.one()
        for p in self.inverted:
            s = s * p
        return s

    def with_inverted(self, f: Polynomial) -> "PresentedRing":
        """The localization at ``f`` (coordinate ring of D(f))."""
        return PresentedRing(self.field, self.vars, self.quotient, self.inverted + (f,), self.order_name)

    def ideal(self, *gens, parse=False) -> "IdealHandle":
        if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
            gens = gens[0]
        gens = [self.parse(g) if isinstance(g, str) else g for g in gens]
        return IdealHandle(self, tuple(gens))

    def render(self, p: Polynomial) -> str:
        return p.render(self.vars)

    def describe(self) -> str:
        parts = [f"{self.field.describe()}[{','.join(self.vars)}]"]
        if self.quotient:
            parts.append("/(" + ", ".join(self.render(q) for q in self.quotient) + ")")
        if self.inverted:
            parts.append("[1/(" + ", ".join(self.render(s) for s in self.inverted) + ")]")
        return "".join(parts)


def _check_degrees(gens: Sequence[Polynomial], budgets: Budgets):
    """The same degree budget Buchberger applies to its input generators."""
    for g in gens:
        if g.total_degree() > budgets.max_degree:
            raise ResourceBudgetError("max_degree", budgets.max_degree)


def _gcd_univar(polys: Sequence[Polynomial], field: FieldSpec) -> Polynomial:
    """Monic gcd in k[x]; zero for an empty or all-zero family."""
    acc = None
    for p in polys:
        if p.is_zero():
            continue
        acc = p if acc is None else _euclid_univar(acc, p)
    if acc is None:
        return Polynomial.zero(field, 1)
    return acc.monic(DEGREVLEX)


def _euclid_univar(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        _, r = _exact_divmod(a, b)
        a, b = b, r
    return a


def _saturate_univar(gens: Sequence[Polynomial], f: Polynomial,
                     field: FieldSpec) -> List[Polynomial]:
    """(g) : f^infinity in k[x] strips from g every factor it shares with f."""
    g = _gcd_univar(gens, field)
    if g.is_zero():
        return []
    while True:
        d = _euclid_univar(g, f).monic(DEGREVLEX)
        if d.is_one():
            return [g]
        g, _ = _exact_divmod(g, d)
        g = g.monic(DEGREVLEX)


def _saturate_gens(
    gens: Sequence[Polynomial],
    f: Polynomial,
    field: FieldSpec,
    nvars: int,
    budgets: Budgets,
) -> List[Polynomial]:
    """Generators of (gens) : f^infinity in k[vars], by Rabinowitsch elimination."""
    if f.is_zero():
        raise DomainError("cannot saturate with respect to zero")
    if nvars == 1:
        return _saturate_univar(gens, f, field)
    lifted = [g.lift(1) for g in gens]
    t = Polynomial.var(field, nvars + 1, 0)
    one = Polynomial.const(field, nvars + 1, 1)
    lifted.append(one - t * f.lift(1))
    basis = groebner_basis(lifted, BlockElim(1), budgets)
    return [g.drop_aux(1) for g in basis if not g.uses_aux(1)]


class IdealHandle:
    """Finite generator list in a presented ring, with cached canonical form."""

    def __init__(self, ring: PresentedRing, generators: Tuple[Polynomial, ...]):
        for g in generators:
            if g.nvars != ring.nvars or g.field != ring.field:
                raise DomainError("generator from a different ring")
        self.ring = ring
        self.generators = tuple(generators)
        self._plain_basis: Optional[Tuple[Polynomial, ...]] = None
        self._canonical: Optional[Tuple[Polynomial, ...]] = None

    # -- bases -------------------------------------------------------------

    def plain_basis(self, budgets: Budgets = DEFAULT_BUDGETS) -> Tuple[Polynomial, ...]:
        """Reduced Groebner basis of (generators + quotient), no saturation."""
        if self._plain_basis is None:
            gens = list(self.generators) + list(self.ring.quotient)
            if self.ring.nvars == 1:
                _check_degrees(gens, budgets)
                g = _gcd_univar(gens, self.ring.field)
                self._plain_basis = () if g.is_zero() else (g,)
            else:
                self._plain_basis = tuple(groebner_basis(gens, self.ring.order, budgets))
        return self._plain_basis

    def canonical_basis(self, budgets: Budgets = DEFAULT_BUDGETS) -> Tuple[Polynomial, ...]:
        """Reduced Groebner basis of the ideal's canonical form.

        The canonical form is the contraction to k[vars] of the ideal this
        handle generates in the presented ring: generators plus quotient,
        saturated with respect to the product of the inverted elements.
        """
        if self._canonical is None:
            gens = list(self.generators) + list(self.ring.quotient)
            if self.ring.inverted:
                s = self.ring.inverted_product()
                gens = _saturate_gens(gens, s, self.ring.field, self.ring.nvars, budgets)
            if self.ring.nvars == 1:
                _check_degrees(gens, budgets)
                g = _gcd_univar(gens, self.ring.field)
                self._canonical = () if g.is_zero() else (g,)
            else:
                self._canonical = tuple(groebner_basis(gens, self.ring.order, budgets))
        return self._canonical

    # -- predicates ----------------------------------------------------------

    def contains(self, p: Polynomial, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
        return normal_form(p, list(self.canonical_basis(budgets)), self.ring.order, budgets).is_zero()

    def is_unit_ideal(self, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
        basis = self.canonical_basis(budgets)
        return len(basis) == 1 and basis[0].is_one()

    def is_zero_ideal(self, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
        return not self.canonical_basis(budgets)

    def __eq__(self, other):
        if not isinstance(other, IdealHandle):
            return NotImplemented
        if self.ring != other.ring:
            raise DomainError("ideal handles from different rings")
        return self.canonical_basis() == other.canonical_basis()

    def __hash__(self):
        return hash((self.ring, self.canonical_basis()))

    def render(self) -> str:
        return "(" + ", ".join(self.ring.render(g) for g in self.generators) + ")"


# -- module operations ---------------------------------------------------


def op_groebner_basis(I: IdealHandle, canonical: bool = False,
                      budgets: Budgets = DEFAULT_BUDGETS) -> List[Polynomial]:
    """Reduced Groebner basis for the ideal.

    When the ring inverts elements the plain basis is not canonical, so the
    caller must opt into the saturated (canonical) basis explicitly.
    """
    if I.ring.inverted and not canonical:
        raise DomainError("localized ring: request the canonical (saturated) basis")
    return list(I.canonical_basis(budgets) if canonical else I.plain_basis(budgets))


def ideal_membership(p: Polynomial, I: IdealHandle, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    return I.contains(p, budgets)


def ideal_equal(I: IdealHandle, J: IdealHandle, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    if I.ring != J.ring:
        raise DomainError("ideal handles from different rings")
    return I.canonical_basis(budgets) == J.canonical_basis(budgets)


def ideal_contains(I: IdealHandle, J: IdealHandle, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """True iff J is a subset of I (every generator of J lies in I)."""
    return all(I.contains(g, budgets) for g in J.canonical_basis(budgets))


def ideal_combine(op: str, I: IdealHandle, J: IdealHandle,
                  budgets: Budgets = DEFAULT_BUDGETS) -> IdealHandle:
    if I.ring != J.ring:
        raise DomainError("ideal handles from different rings")
    ring = I.ring
    if op == "sum":
        return IdealHandle(ring, I.generators + J.generators)
    if op == "product":
        gens = tuple(a * b for a in I.generators for b in J.generators)
        return IdealHandle(ring, gens)
    if op == "intersection":
        # t*I + (1-t)*J, eliminate t.
        nv = ring.nvars
        gi = list(I.canonical_basis(budgets)) or []
        gj = list(J.canonical_basis(budgets)) or []
        t = Polynomial.var(ring.field, nv + 1, 0)
        one = Polynomial.const(ring.field, nv + 1, 1)
        lifted = [t * g.lift(1) for g in gi] + [(one - t) * g.lift(1) for g in gj]
        basis = groebner_basis(lifted, BlockElim(1), budgets)
        gens = tuple(g.drop_aux(1) for g in basis if not g.uses_aux(1))
        return IdealHandle(ring, gens)
    raise DomainError(f"unknown ideal operation {op!r}")


def saturate(I: IdealHandle, f: Polynomial, budgets: Budgets = DEFAULT_BUDGETS) -> IdealHandle:
    """The saturation I : f^infinity as a new handle over the same ring."""
    if f.is_zero():
        raise DomainError("cannot saturate with respect to zero")
    gens = _saturate_gens(list(I.generators) + list(I.ring.quotient), f,
                          I.ring.field, I.ring.nvars, budgets)
    return IdealHandle(I.ring, tuple(gens))


def colon_ideal(I: IdealHandle, p: Polynomial, budgets: Budgets = DEFAULT_BUDGETS) -> IdealHandle:
    """The colon ideal (I : p) for a single element, via (I intersect (p))/p.

    Works with the plain (unsaturated) basis: the intersection is taken
    inside k[vars], where membership in (p) is exact divisibility by p.
    """
    ring = I.ring
    if p.is_zero():
        return IdealHandle(ring, (ring.one(),))
    gi = list(I.plain_basis(budgets))
    t = Polynomial.var(ring.field, ring.nvars + 1, 0)
    one = Polynomial.const(ring.field, ring.nvars + 1, 1)
    lifted = [t * g.lift(1) for g in gi] + [(one - t) * p.lift(1)]
    basis = groebner_basis(lifted, BlockElim(1), budgets)
    gens = []
    for g in basis:
        if g.uses_aux(1):
            continue
        q, r = _exact_divmod(g.drop_aux(1), p)
        if not r.is_zero():
            raise DomainError("intersection generator not divisible by the colon element")
        gens.append(q)
    return IdealHandle(ring, tuple(gens))


def _exact_divmod(g: Polynomial, p: Polynomial):
    """Single-divisor polynomial division; returns (quotient, remainder)."""
    order = DEGREVLEX
    F = g.field
    pm, pc = p.leading_monomial(order), p.leading_coeff(order)
    quotient = Polynomial.zero(F, g.nvars)
    work = g
    while not work.is_zero():
        lm = work.leading_monomial(order)
        if not mono_divides(pm, lm):
            return quotient, work
        piece = mono_div(lm, pm)
        coeff = F.div(work.terms[lm], pc)
        term = Polynomial(F, g.nvars, {piece: coeff})
        quotient = quotient + term
        work = work - term * p
    return quotient, Polynomial.zero(F, g.nvars)


def radical_membership(f: Polynomial, I: IdealHandle, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """True iff f lies in the radical of I in the presented ring.

    Rabinowitsch trick with one auxiliary for f, and (when the ring is a
    localization) a second auxiliary inverting the product of the inverted
    generators, so units of the presentation behave as units.
    """
    ring = I.ring
    if ring.nvars == 1 and not ring.quotient:
        # In k[x] (localized or not) the canonical basis is a single monic
        # generator with the inverted factors stripped; f lies in the
        # radical iff every irreducible factor of that generator divides f.
        basis = I.canonical_basis(budgets)
        if not basis:
            return f.is_zero()
        g = basis[0]
        while True:
            d = _euclid_univar(g, f).monic(DEGREVLEX)
            if d.is_one():
                return g.is_one()
            g, _ = _exact_divmod(g, d)
            g = g.monic(DEGREVLEX)
    naux = 2 if ring.inverted else 1
    nv = ring.nvars + naux
    gens = [g.lift(naux) for g in list(I.generators) + list(ring.quotient)]
    one = Polynomial.const(ring.field, nv, 1)
    t = Polynomial.var(ring.field, nv, 0)
    gens.append(one - t * f.lift(naux))
    if ring.inverted:
        u = Polynomial.var(ring.field, nv, 1)
        gens.append(one - u * ring.inverted_product().lift(naux))
    basis = groebner_basis(gens, DEGREVLEX, budgets)
    return len(basis) == 1 and basis[0].is_one()
