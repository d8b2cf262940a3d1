"""Explicit finite commutative rings and finite modules.

Finite rings are Z/n, F_p[x]/(f) and finite direct products of these;
elements are plain hashable values with the zero element listed first.
Modules carry callable add / scalar-action maps; explicit table-backed
modules have the module axioms verified on construction.  Everything here
is sized for exhaustive, sub-minute brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .config import Budgets, DEFAULT_BUDGETS
from .errors import BoundExceededError, DomainError, ValidationError
from .fields import _is_prime


class FiniteRing:
    """Commutative ring with unit, given by element list and operations."""

    def __init__(self, name: str, elements: Sequence, add: Callable, mul: Callable,
                 neg: Callable, zero, one):
        self.name = name
        self.elements = tuple(elements)
        if self.elements[0] != zero:
            raise ValidationError("zero element must be listed first")
        self._add = add
        self._mul = mul
        self._neg = neg
        self.zero = zero
        self.one = one
        self._index = {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def add(self, a, b):
        return self._add(a, b)

    def mul(self, a, b):
        return self._mul(a, b)

    def neg(self, a):
        return self._neg(a)

    def sub(self, a, b):
        return self._add(a, self._neg(b))

    def index(self, a) -> int:
        return self._index[a]

    def __repr__(self):
        return f"FiniteRing({self.name}, size={self.size})"

    def __eq__(self, other):
        return isinstance(other, FiniteRing) and self.name == other.name and self.elements == other.elements

    def __hash__(self):
        return hash((self.name, self.elements))


def zmod(n: int) -> FiniteRing:
    if n < 2:
        raise DomainError("Z/n requires n >= 2")
    return FiniteRing(
        f"Z/{n}", range(n),
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        lambda a: (-a) % n,
        0, 1 % n,
    )


def gf_poly_quotient(p: int, modulus: Sequence[int]) -> FiniteRing:
    """F_p[x]/(f) with f given by its coefficient tuple (low degree first).

    f must be monic of degree >= 1; elements are coefficient tuples of
    length deg(f).
    """
    if not _is_prime(p):
        raise DomainError(f"{p} is not prime")
    f = tuple(c % p for c in modulus)
    while f and f[-1] == 0:
        f = f[:-1]
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        raise DomainError("modulus must be monic of degree >= 1")

    def reduce(coeffs: List[int]) -> Tuple[int, ...]:
        coeffs = [c % p for c in coeffs]
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if c:
                for j in range(d + 1):
                    coeffs[i - d + j] = (coeffs[i - d + j] - c * f[j]) % p
        coeffs = coeffs[:d] + [0] * (d - len(coeffs))
        return tuple(coeffs[:d])

    elements = [tuple(reversed(t)) for t in itertools.product(range(p), repeat=d)]
    elements.sort()

    def add(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(a, b):
        out = [0] * (2 * d)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return reduce(out)

    def neg(a):
        return tuple((-x) % p for x in a)

    zero = (0,) * d
    one = reduce([1])
    fname = f"F{p}[x]/(" + ",".join(str(c) for c in f) + ")"
    return FiniteRing(fname, elements, add, mul, neg, zero, one)


def product_ring(rings: Sequence[FiniteRing]) -> FiniteRing:
    if not rings:
        raise DomainError("empty ring product")
    elements = sorted(itertools.product(*[r.elements for r in rings]),
                      key=lambda t: tuple(r.index(x) for r, x in zip(rings, t)))
    zero = tuple(r.zero for r in rings)
    elements.remove(zero)
    elements.insert(0, zero)
    return FiniteRing(
        " x ".join(r.name for r in rings), elements,
        lambda a, b: tuple(r.add(x, y) for r, x, y in zip(rings, a, b)),
        lambda a, b: tuple(r.mul(x, y) for r, x, y in zip(rings, a, b)),
        lambda a: tuple(r.neg(x) for r, x in zip(rings, a)),
        zero, tuple(r.one for r in rings),
    )


# -- ideals ------------------------------------------------------------------


def ideal_closure(R: FiniteRing, seed: Iterable, base: FrozenSet = None) -> FrozenSet:
    """Smallest ideal of R containing ``seed`` (and ``base``, if given,
    which must already be an ideal).

    The ideal is the additive span of all ring multiples of the seed, so it
    is built by abelian-group closure: each new multiple m contributes the
    cosets m + G, 2m + G, ... of the group G built so far, stopping at the
    first multiple already absorbed.
    """
    grp = set(base) if base is not None else {R.zero}
    for x in seed:
        for r in R.elements:
            m = R.mul(r, x)
            if m in grp:
                continue
            old = list(grp)
            step = m
            while step not in grp:
                for g in old:
                    grp.add(R.add(step, g))
                step = R.add(step, m)
    return frozenset(grp)


def is_ideal(R: FiniteRing, subset: FrozenSet) -> bool:
    if R.zero not in subset:
        return False
    for x in subset:
        for y in subset:
            if R.add(x, y) not in subset:
                return False
        for r in R.elements:
            if R.mul(r, x) not in subset:
                return False
    return True


def enumerate_ideals(R: FiniteRing, budgets: Budgets = DEFAULT_BUDGETS) -> List[FrozenSet]:
    """All ideals of R, as element sets, smallest first; includes (0) and R."""
    if R.size > budgets.finite_ring_bound:
        raise BoundExceededError("finite_ring_bound", budgets.finite_ring_bound)
    ideals = {frozenset([R.zero])}
    frontier = [frozenset([R.zero])]
    while frontier:
        I = frontier.pop()
        for a in R.elements:
            if a in I:
                continue
            J = ideal_closure(R, (a,), base=I)
            if J not in ideals:
                ideals.add(J)
                frontier.append(J)
    return sorted(ideals, key=lambda I: (len(I), sorted(R.index(x) for x in I)))


def minimal_generators(R: FiniteRing, I: FrozenSet) -> List:
    """Greedy extraction of a finite generator list for an ideal."""
    gens: List = []
    span = frozenset([R.zero])
    for a in sorted(I, key=R.index):
        if a not in span:
            gens.append(a)
            span = ideal_closure(R, gens)
        if span == I:
            break
    return gens


def is_prime_ideal(R: FiniteRing, I: FrozenSet) -> bool:
    if len(I) == R.size:
        return False
    for a in R.elements:
        for b in R.elements:
            if R.mul(a, b) in I and a not in I and b not in I:
                return False
    return True


@dataclass
class NoetherianReport:
    generator_lists: List[List]
    max_strict_chain: int
    ideal_count_bound: int
    maximal_by_subset: Dict[Tuple[int, ...], List[int]]
    ok: bool


def noetherian_witness(R: FiniteRing, chain: Sequence[FrozenSet],
                       budgets: Budgets = DEFAULT_BUDGETS) -> NoetherianReport:
    """Verify the three equivalent Noetherian conditions on the given ideals.

    ``chain`` is a nonempty family of ideals of R.  Reports a generator list
    per ideal, the longest strictly increasing subchain, and the maximal
    elements of every nonempty subfamily (all subfamilies when there are at
    most 12 ideals, otherwise just the whole family).
    """
    chain = [frozenset(I) for I in chain]
    if not chain:
        raise ValidationError("nonempty family of ideals required")
    for I in chain:
        if not is_ideal(R, I):
            raise ValidationError("input set is not closed under the module operations",
                                  witness=sorted(R.index(x) for x in I))
    total = len(enumerate_ideals(R, budgets))
    gen_lists = [minimal_generators(R, I) for I in chain]

    # Longest strictly increasing subchain under inclusion.
    order = sorted(range(len(chain)), key=lambda i: len(chain[i]))
    best = [1] * len(chain)
    for pos, i in enumerate(order):
        for j in order[:pos]:
            if chain[j] < chain[i]:
                best[i] = max(best[i], best[j] + 1)
    longest = max(best)

    maximal: Dict[Tuple[int, ...], List[int]] = {}
    subsets: List[Tuple[int, ...]]
    if len(chain) <= 12:
        idx = range(len(chain))
        subsets = [tuple(c) for r in range(1, len(chain) + 1)
                   for c in itertools.combinations(idx, r)]
    else:
        subsets = [tuple(range(len(chain)))]
    for sub in subsets:
        maxima = [i for i in sub
                  if not any(j != i and chain[i] < chain[j] for j in sub)]
        maximal[sub] = maxima

    ok = longest <= total and all(maximal[s] for s in maximal)
    return NoetherianReport(gen_lists, longest, total, maximal, ok)


# -- modules -----------------------------------------------------------------


class FiniteModule:
    """Finite module over a FiniteRing, with callable operations."""

    def __init__(self, ring: FiniteRing, elements: Sequence, add: Callable,
                 smul: Callable, zero, name: str = "M", check: bool = False):
        self.ring = ring
        self.elements = tuple(elements)
        self._add = add
        self._smul = smul
        self.zero = zero
        self.name = name
        if check:
            self._check_axioms()

    @property
    def size(self) -> int:
        return len(self.elements)

    def add(self, a, b):
        return self._add(a, b)

    def smul(self, r, a):
        return self._smul(r, a)

    def neg(self, a):
        return self.smul(self.ring.neg(self.ring.one), a)

    def _check_axioms(self):
        R = self.ring
        els = self.elements
        for a in els:
            if self.add(a, self.zero) != a:
                raise ValidationError("additive identity fails", witness=a)
            for b in els:
                if self.add(a, b) != self.add(b, a):
                    raise ValidationError("commutativity fails", witness=(a, b))
            if self.add(a, self.neg(a)) != self.zero:
                raise ValidationError("additive inverse fails", witness=a)
        for r in R.elements:
            for s in R.elements:
                for a in els:
                    if self.smul(r, self.smul(s, a)) != self.smul(R.mul(r, s), a):
                        raise ValidationError("associativity of scaling fails", witness=(r, s, a))
                    if self.smul(R.add(r, s), a) != self.add(self.smul(r, a), self.smul(s, a)):
                        raise ValidationError("distributivity over ring addition fails", witness=(r, s, a))
            for a in els:
                for b in els:
                    if self.smul(r, self.add(a, b)) != self.add(self.smul(r, a), self.smul(r, b)):
                        raise ValidationError("distributivity over module addition fails", witness=(r, a, b))
        for a in els:
            if self.smul(R.one, a) != a:
                raise ValidationError("unit action fails", witness=a)

    def __repr__(self):
        return f"FiniteModule({self.name}, size={self.size})"


def module_from_tables(ring: FiniteRing, elements: Sequence, add_table: Dict,
                       smul_table: Dict, zero, name: str = "M") -> FiniteModule:
    """Explicit table-backed module; axioms checked on construction."""
    return FiniteModule(ring, elements,
                        lambda a, b: add_table[(a, b)],
                        lambda r, a: smul_table[(r, a)],
                        zero, name=name, check=True)


def ring_as_module(R: FiniteRing) -> FiniteModule:
    return FiniteModule(R, R.elements, R.add, R.mul, R.zero, name=R.name)


def zero_module(R: FiniteRing) -> FiniteModule:
    return FiniteModule(R, [0], lambda a, b: 0, lambda r, a: 0, 0, name="0")


def submodule(M: FiniteModule, subset: Iterable, name: str = "N") -> FiniteModule:
    els = frozenset(subset)
    for a in els:
        for b in els:
            if M.add(a, b) not in els:
                raise ValidationError("subset not closed under addition", witness=(a, b))
        for r in M.ring.elements:
            if M.smul(r, a) not in els:
                raise ValidationError("subset not closed under scaling", witness=(r, a))
    ordered = sorted(els, key=M.elements.index)
    if ordered[0] != M.zero:
        ordered.remove(M.zero)
        ordered.insert(0, M.zero)
    return FiniteModule(M.ring, ordered, M.add, M.smul, M.zero, name=name)


def span(M: FiniteModule, seed: Iterable) -> FrozenSet:
    """Smallest submodule of M containing ``seed``."""
    current = {M.zero}
    frontier = [M.smul(r, x) for x in seed for r in M.ring.elements]
    while frontier:
        x = frontier.pop()
        if x in current:
            continue
        additions = [M.add(x, y) for y in current]
        current.add(x)
        frontier.extend(a for a in additions if a not in current)
    return frozenset(current)


def enumerate_submodules(M: FiniteModule, budgets: Budgets = DEFAULT_BUDGETS) -> List[FrozenSet]:
    if M.size > budgets.finite_ring_bound:
        raise BoundExceededError("finite_ring_bound", budgets.finite_ring_bound)
    subs = {frozenset([M.zero])}
    frontier = [frozenset([M.zero])]
    while frontier:
        N = frontier.pop()
        for a in M.elements:
            if a in N:
                continue
            bigger = span(M, set(N) | {a})
            if bigger not in subs:
                subs.add(bigger)
                frontier.append(bigger)
    return sorted(subs, key=lambda N: (len(N), sorted(M.elements.index(x) for x in N)))


def quotient_module(M: FiniteModule, N: FrozenSet, name: str = "M/N") -> FiniteModule:
    """Quotient by a submodule; elements are canonical coset representatives."""
    if not N <= set(M.elements):
        raise ValidationError("submodule not contained in module")
    rep: Dict = {}
    cosets = []
    for a in M.elements:
        if a in rep:
            continue
        coset = sorted((M.add(a, n) for n in N), key=M.elements.index)
        r = coset[0]
        for c in coset:
            rep[c] = r
        cosets.append(r)
    cosets.sort(key=M.elements.index)
    zero = rep[M.zero]
    cosets.remove(zero)
    cosets.insert(0, zero)
    return FiniteModule(M.ring, cosets,
                        lambda a, b: rep[M.add(a, b)],
                        lambda r, a: rep[M.smul(r, a)],
                        zero, name=name)


def free_module(R: FiniteRing, rank: int) -> FiniteModule:
    els = sorted(itertools.product(R.elements, repeat=rank),
                 key=lambda t: tuple(R.index(x) for x in t))
    zero = (R.zero,) * rank
    return FiniteModule(R, els,
                        lambda a, b: tuple(R.add(x, y) for x, y in zip(a, b)),
                        lambda r, a: tuple(R.mul(r, x) for x in a),
                        zero, name=f"{R.name}^{rank}")


@dataclass
class DirectSum:
    module: FiniteModule
    injections: List[Callable]


def direct_sum(modules: Sequence[FiniteModule], budgets: Budgets = DEFAULT_BUDGETS) -> DirectSum:
    """Componentwise direct sum with canonical injections; empty sum is 0."""
    if not modules:
        ring = None
        raise DomainError("direct_sum of an empty list needs a ring; use zero_module")
    ring = modules[0].ring
    if any(m.ring != ring for m in modules):
        raise DomainError("modules over different rings")
    total = 1
    for m in modules:
        total *= m.size
        if total > budgets.finite_ring_bound:
            raise BoundExceededError("finite_ring_bound", budgets.finite_ring_bound)
    els = list(itertools.product(*[m.elements for m in modules]))
    zero = tuple(m.zero for m in modules)
    els.remove(zero)
    els.insert(0, zero)
    S = FiniteModule(
        ring, els,
        lambda a, b: tuple(m.add(x, y) for m, x, y in zip(modules, a, b)),
        lambda r, a: tuple(m.smul(r, x) for m, x in zip(modules, a)),
        zero, name=" + ".join(m.name for m in modules),
    )

    def make_injection(i):
        def inj(x):
            return tuple(x if j == i else modules[j].zero for j in range(len(modules)))
        return inj

    return DirectSum(S, [make_injection(i) for i in range(len(modules))])


# -- homomorphisms -----------------------------------------------------------


def module_generators(M: FiniteModule) -> List:
    gens = []
    covered = frozenset([M.zero])
    for a in M.elements:
        if a not in covered:
            gens.append(a)
            covered = span(M, gens)
        if len(covered) == M.size:
            break
    return gens


def all_homs(A: FiniteModule, B: FiniteModule, budgets: Budgets = DEFAULT_BUDGETS) -> List[Dict]:
    """All R-linear maps A -> B, each as a full element-graph dict.

    Enumerates assignments on a minimal generating set of A and propagates
    by linearity, rejecting inconsistent assignments.
    """
    if A.ring != B.ring:
        raise DomainError("modules over different rings")
    gens = module_generators(A)
    if B.size ** len(gens) > 10**6:
        raise BoundExceededError("finite_ring_bound", budgets.finite_ring_bound,
                                 "hom search space too large")
    R = A.ring
    # Precompute index-valued operation tables so the candidate loop works on
    # small integers instead of raw module elements.
    ai = {a: i for i, a in enumerate(A.elements)}
    bi = {b: i for i, b in enumerate(B.elements)}
    add_a = [[ai[A.add(x, y)] for y in A.elements] for x in A.elements]
    add_b = [[bi[B.add(x, y)] for y in B.elements] for x in B.elements]
    smul_a = [[ai[A.smul(r, x)] for x in A.elements] for r in R.elements]
    smul_b = [[bi[B.smul(r, x)] for x in B.elements] for r in R.elements]
    gen_idx = [ai[g] for g in gens]
    za, zb = ai[A.zero], bi[B.zero]
    n_r = len(R.elements)
    homs = []
    for images in itertools.product(range(len(B.elements)), repeat=len(gens)):
        graph = [-1] * len(A.elements)
        graph[za] = zb
        known = [za]
        frontier = list(zip(gen_idx, images))
        ok = True
        while frontier and ok:
            a, b = frontier.pop()
            if graph[a] != -1:
                if graph[a] != b:
                    ok = False
                continue
            graph[a] = b
            known.append(a)
            row_a, row_b = add_a[a], add_b[b]
            for r in range(n_r):
                frontier.append((smul_a[r][a], smul_b[r][b]))
            for a2 in known:
                frontier.append((row_a[a2], row_b[graph[a2]]))
        if not ok or -1 in graph:
            # Inconsistent, or generators failed to span (cannot happen).
            if ok and -1 in graph:
                raise ValidationError("generator propagation did not cover the module")
            continue
        homs.append({A.elements[i]: B.elements[graph[i]]
                     for i in range(len(A.elements))})
    return homs


def is_linear_map(A: FiniteModule, B: FiniteModule, graph: Dict) -> bool:
    for a in A.elements:
        for b in A.elements:
            if graph[A.add(a, b)] != B.add(graph[a], graph[b]):
                return False
        for r in A.ring.elements:
            if graph[A.smul(r, a)] != B.smul(r, graph[a]):
                return False
    return True


def hom_from_ideal(R: FiniteRing, I: FrozenSet, M: FiniteModule,
                   budgets: Budgets = DEFAULT_BUDGETS) -> List[Dict]:
    """All R-linear maps from the ideal I (as a module) to M."""
    if len(I) * M.size > budgets.finite_ring_bound ** 2:
        raise BoundExceededError("finite_ring_bound", budgets.finite_ring_bound)
    Imod = submodule(ring_as_module(R), I, name="I")
    homs = all_homs(Imod, M, budgets)
    for h in homs:
        if not is_linear_map(Imod, M, h):
            raise ValidationError("enumerated hom is not linear")
    return homs
