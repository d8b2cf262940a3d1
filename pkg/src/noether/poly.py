"""Sparse multivariate polynomials over an exact field.

A polynomial is a map from exponent vectors (tuples of non-negative ints,
one slot per ring variable) to nonzero field coefficients.  Monomial orders
are small objects exposing a sort key; ``degrevlex``, ``lex`` and block
elimination orders (auxiliary variables first and greatest) are provided.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .errors import DomainError
from .fields import FieldSpec

Mono = Tuple[int, ...]


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Mono) -> int:
    return sum(a)


class MonomialOrder:
    name = "?"

    def key(self, m: Mono):  # pragma: no cover - interface
        raise NotImplementedError


class DegRevLex(MonomialOrder):
    name = "degrevlex"

    def key(self, m: Mono):
        return (sum(m), tuple(-e for e in reversed(m)))


class Lex(MonomialOrder):
    name = "lex"

    def key(self, m: Mono):
        return m


@dataclass(frozen=True)
class BlockElim(MonomialOrder):
    """Product order eliminating the first ``naux`` variables.

    Any monomial involving an auxiliary variable beats any that does not,
    so basis elements free of auxiliaries generate the elimination ideal.
    """

    naux: int

    @property
    def name(self):
        return f"elim{self.naux}"

    def key(self, m: Mono):
        head, tail = m[: self.naux], m[self.naux :]
        return (
            sum(head),
            tuple(-e for e in reversed(head)),
            sum(tail),
            tuple(-e for e in reversed(tail)),
        )


DEGREVLEX = DegRevLex()
LEX = Lex()

_ORDERS = {"degrevlex": DEGREVLEX, "lex": LEX}


def order_by_name(name: str) -> MonomialOrder:
    try:
        return _ORDERS[name]
    except KeyError:
        raise DomainError(f"unknown monomial order {name!r}") from None


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuple -> coeff."""

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: FieldSpec, nvars: int, terms: Dict[Mono, object]):
        self.field = field
        self.nvars = nvars
        clean = {}
        for m, c in terms.items():
            if len(m) != nvars:
                raise DomainError("exponent vector length mismatch")
            if c:
                clean[m] = c
        self.terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(field: FieldSpec, nvars: int) -> "Polynomial":
        return Polynomial(field, nvars, {})

    @staticmethod
    def const(field: FieldSpec, nvars: int, n: int) -> "Polynomial":
        return Polynomial(field, nvars, {(0,) * nvars: field.from_int(n)})

    @staticmethod
    def var(field: FieldSpec, nvars: int, i: int) -> "Polynomial":
        m = tuple(1 if j == i else 0 for j in range(nvars))
        return Polynomial(field, nvars, {m: field.one()})

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: self.field.one()}

    def is_constant(self) -> bool:
        return all(mono_deg(m) == 0 for m in self.terms)

    def total_degree(self) -> int:
        return max((mono_deg(m) for m in self.terms), default=-1)

    # -- arithmetic ------------------------------------------------------

    def _binop(self, other: "Polynomial", op) -> "Polynomial":
        if other.nvars != self.nvars or other.field != self.field:
            raise DomainError("polynomials from different rings")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = op(terms.get(m, self.field.zero()), c)
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(self.field, self.nvars, terms)

    def __add__(self, other):
        return self._binop(other, self.field.add)

    def __sub__(self, other):
        return self._binop(other, self.field.sub)

    def __neg__(self):
        F = self.field
        return Polynomial(F, self.nvars, {m: F.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        if other.nvars != self.nvars or other.field != self.field:
            raise DomainError("polynomials from different rings")
        F = self.field
        terms: Dict[Mono, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = F.add(terms.get(m, F.zero()), F.mul(c1, c2))
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        return Polynomial(F, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power")
        result = Polynomial.const(self.field, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.field, self.nvars)
        F = self.field
        return Polynomial(F, self.nvars, {m: F.mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, m: Mono, c) -> "Polynomial":
        F = self.field
        return Polynomial(F, self.nvars, {mono_mul(m, t): F.mul(c, v) for t, v in self.terms.items()})

    # -- leading data ----------------------------------------------------

    def leading_monomial(self, order: MonomialOrder) -> Mono:
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading_coeff(order)))

    # -- equality / hashing ----------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- variable plumbing -------------------------------------------------

    def lift(self, naux: int) -> "Polynomial":
        """Reinterpret in a ring with ``naux`` new variables prepended."""
        pad = (0,) * naux
        return Polynomial(self.field, self.nvars + naux, {pad + m: c for m, c in self.terms.items()})

    def drop_aux(self, naux: int) -> "Polynomial":
        """Inverse of :meth:`lift`; requires the auxiliaries to be absent."""
        terms = {}
        for m, c in self.terms.items():
            if any(m[:naux]):
                raise DomainError("polynomial involves auxiliary variables")
            terms[m[naux:]] = c
        return Polynomial(self.field, self.nvars - naux, terms)

    def uses_aux(self, naux: int) -> bool:
        return any(any(m[:naux]) for m in self.terms)

    def substitute(self, values) -> object:
        """Evaluate at a point given as a list of field elements."""
        F = self.field
        acc = F.zero()
        for m, c in self.terms.items():
            v = c
            for e, x in zip(m, values):
                for _ in range(e):
                    v = F.mul(v, x)
            acc = F.add(acc, v)
        return acc

    # -- rendering -------------------------------------------------------

    def render(self, var_names) -> str:
        if self.is_zero():
            return "0"
        out = []
        for m in sorted(self.terms, key=LEX.key, reverse=True):
            c = self.terms[m]
            parts = []
            for name, e in zip(var_names, m):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append(f"{name}^{e}")
            body = "*".join(parts)
            if not body:
                frag = str(c)
            elif c == self.field.one():
                frag = body
            elif c == self.field.from_int(-1) and self.field.kind == "q":
                frag = f"-{body}"
            else:
                frag = f"{c}*{body}"
            out.append(frag)
        text = " + ".join(out).replace("+ -", "- ")
        return text

    def __repr__(self):
        return f"Polynomial({self.render([f'v{i}' for i in range(self.nvars)])})"
