"""Baer's criterion and the one-step extension chain over finite rings.

``baer_test`` decides injectivity by exhausting ideal maps and extension
candidates.  ``baer_step`` builds the module

    M1 = (M ⊕ ⨁_{(I, i)} R) / ⟨(i(x), -x)⟩

with one free slot per pair of an ideal I and a linear map i : I -> M.
Elements are kept in a normal form (base component, one coset
representative per slot), so the quotient is never tabulated; this keeps
the second chain stage tractable even when its underlying set is huge.
``baer_chain`` iterates the step and certifies the finite-stage extension
property that the usual colimit argument rests on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .config import Budgets, DEFAULT_BUDGETS
from .errors import BoundExceededError, DomainError, ValidationError
from .finite import (FiniteModule, FiniteRing, all_homs, enumerate_ideals,
                     enumerate_submodules, free_module, hom_from_ideal,
                     quotient_module, ring_as_module, submodule, zero_module)


# ---------------------------------------------------------------------------
# Baer's criterion
# ---------------------------------------------------------------------------

@dataclass
class BaerReport:
    injective: bool
    witness: Optional[Tuple[FrozenSet, Dict]] = None

    def as_dict(self) -> Dict:
        out = {"injective": self.injective}
        if self.witness is not None:
            ideal, graph = self.witness
            out["witness"] = {
                "ideal": sorted(map(repr, ideal)),
                "map": {repr(k): repr(v) for k, v in graph.items()},
            }
        return out


def _extension_images(R: FiniteRing, M: FiniteModule, ideal: FrozenSet,
                      graph: Dict) -> List:
    """All module elements m with x*m = graph[x] for every x in the ideal."""
    return [m for m in M.elements
            if all(M.smul(x, m) == graph[x] for x in ideal)]


def baer_test(M: FiniteModule, budgets: Budgets = DEFAULT_BUDGETS) -> BaerReport:
    """Baer's criterion by exhaustive search.

    M is injective iff every linear map from an ideal extends to the whole
    ring, i.e. iff each such map is multiplication by some fixed element.
    """
    R = M.ring
    for ideal in enumerate_ideals(R, budgets):
        for graph in hom_from_ideal(R, ideal, M, budgets):
            if not _extension_images(R, M, ideal, graph):
                return BaerReport(False, witness=(ideal, graph))
    return BaerReport(True)


# ---------------------------------------------------------------------------
# The one-step extension M1 in lazy normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LedgerEntry:
    ideal: FrozenSet
    graph: Dict  # linear map ideal -> M, as an element graph

    def __hash__(self):
        return hash((self.ideal, tuple(sorted(self.graph.items(),
                                              key=repr))))


class BaerModule:
    """The quotient (M ⊕ ⨁_s R) / ⟨(i_s(x), -x at slot s)⟩ in normal form.

    An element is a pair (m, reps) where each slot coordinate is the chosen
    representative of its coset modulo the slot's ideal; shifting a slot
    coordinate into its representative moves i_s(difference) into m.  Normal
    forms biject with the quotient, so its size is |M| * prod |R / I_s|
    without ever listing the elements.
    """

    def __init__(self, base: FiniteModule, ledger: Sequence[LedgerEntry],
                 budgets: Budgets = DEFAULT_BUDGETS):
        self.ring = base.ring
        self.base = base
        self.ledger = tuple(ledger)
        R = self.ring
        self._reps: List[Dict] = []
        self._transversals: List[List] = []
        size = base.size
        for entry in self.ledger:
            rep_of: Dict = {}
            transversal: List = []
            for r in R.elements:  # zero first, so the zero coset rep is zero
                if r in rep_of:
                    continue
                transversal.append(r)
                for x in entry.ideal:
                    rep_of[R.add(r, x)] = r
            self._reps.append(rep_of)
            self._transversals.append(transversal)
            size *= len(transversal)
            if size > budgets.baer_bound:
                raise BoundExceededError(
                    "baer_bound", budgets.baer_bound,
                    f"one-step extension with {len(self.ledger)} slots")
        self.size = size
        self.zero = self._normalize(base.zero,
                                    [R.zero] * len(self.ledger))

    def _normalize(self, m, coords: Sequence) -> Tuple:
        R = self.ring
        out = []
        for s, r in enumerate(coords):
            rep = self._reps[s][r]
            if rep != r:
                x = R.sub(r, rep)  # lies in the slot ideal by construction
                m = self.base.add(m, self.ledger[s].graph[x])
            out.append(rep)
        return (m, tuple(out))

    def embed(self, m) -> Tuple:
        return (m, self.zero[1])

    def slot_unit(self, s: int, r) -> Tuple:
        """The class of r placed in slot s (the canonical extension of the
        slot's ideal map, evaluated at r)."""
        coords = list(self.zero[1])
        coords[s] = r
        return self._normalize(self.base.zero, coords)

    def add(self, a: Tuple, b: Tuple) -> Tuple:
        R = self.ring
        return self._normalize(self.base.add(a[0], b[0]),
                               [R.add(x, y) for x, y in zip(a[1], b[1])])

    def smul(self, r, a: Tuple) -> Tuple:
        R = self.ring
        return self._normalize(self.base.smul(r, a[0]),
                               [R.mul(r, x) for x in a[1]])

    def neg(self, a: Tuple) -> Tuple:
        return self.smul(self.ring.neg(self.ring.one), a)

    def materialize(self, name: str = "M1",
                    budgets: Budgets = DEFAULT_BUDGETS) -> FiniteModule:
        if self.size > budgets.baer_materialize_bound:
            raise BoundExceededError("baer_materialize_bound",
                                     budgets.baer_materialize_bound,
                                     f"module of size {self.size}")
        elements = [(m, tuple(coords)) for m in self.base.elements
                    for coords in itertools.product(*self._transversals)]
        return FiniteModule(self.ring, elements, self.add, self.smul,
                            self.zero, name=name)


@dataclass
class BaerStepResult:
    module: FiniteModule
    extension: BaerModule
    ledger: Tuple[LedgerEntry, ...]

    def embedding(self, m) -> Tuple:
        return self.extension.embed(m)

    @property
    def output_size(self) -> int:
        return self.extension.size


def baer_step(M: FiniteModule, budgets: Budgets = DEFAULT_BUDGETS) -> BaerStepResult:
    """One Baer extension step, with its postconditions verified.

    Checks that the embedding is injective and linear and that every ledger
    map from an ideal into M extends to a map from the whole ring into M1.
    """
    R = M.ring
    ledger = []
    for ideal in enumerate_ideals(R, budgets):
        for graph in hom_from_ideal(R, ideal, M, budgets):
            ledger.append(LedgerEntry(frozenset(ideal), graph))
    ext = BaerModule(M, ledger, budgets)

    images = {}
    for m in M.elements:
        img = ext.embed(m)
        if img in images:
            raise ValidationError("embedding is not injective",
                                  witness=(images[img], m))
        images[img] = m
    for a in M.elements:
        for b in M.elements:
            if ext.embed(M.add(a, b)) != ext.add(ext.embed(a), ext.embed(b)):
                raise ValidationError("embedding is not additive",
                                      witness=(a, b))
        for r in R.elements:
            if ext.embed(M.smul(r, a)) != ext.smul(r, ext.embed(a)):
                raise ValidationError("embedding is not linear",
                                      witness=(r, a))

    for s, entry in enumerate(ext.ledger):
        _verify_slot_extension(ext, s, entry)
    return BaerStepResult(M, ext, ext.ledger)


def _verify_slot_extension(ext: BaerModule, s: int, entry: LedgerEntry):
    """The slot map r -> class of (0, r e_s) must be linear and restrict,
    through the embedding, to the ledger's ideal map."""
    R = ext.ring
    for r in R.elements:
        for r2 in R.elements:
            lhs = ext.slot_unit(s, R.add(r, r2))
            rhs = ext.add(ext.slot_unit(s, r), ext.slot_unit(s, r2))
            if lhs != rhs:
                raise ValidationError("slot extension is not additive",
                                      witness=(s, r, r2))
            if ext.slot_unit(s, R.mul(r, r2)) != ext.smul(r, ext.slot_unit(s, r2)):
                raise ValidationError("slot extension is not linear",
                                      witness=(s, r, r2))
    for x in entry.ideal:
        if ext.slot_unit(s, x) != ext.embed(entry.graph[x]):
            raise ValidationError(
                "slot extension does not restrict to the ideal map",
                witness=(s, x))


# ---------------------------------------------------------------------------
# The chain
# ---------------------------------------------------------------------------

@dataclass
class BaerChain:
    stages: List  # FiniteModule entries, plus possibly a final BaerModule
    steps: List[BaerStepResult]
    verified: bool
    stalled_at: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.steps)


def baer_chain(M: FiniteModule, K: int,
               budgets: Budgets = DEFAULT_BUDGETS) -> BaerChain:
    """Chain M = M_0 ⊆ M_1 ⊆ ... ⊆ M_K of one-step extensions.

    At every stage k < K, every linear map from an ideal into M_k extends
    to the ring with values in M_{k+1}; baer_step certifies this through
    its ledger, so the chain verification is the accumulation of the per-
    step postconditions.  Stages that are too large to tabulate stop the
    chain early with a stage marker (the final stage may stay lazy).
    """
    if K < 0:
        raise DomainError("chain length must be nonnegative")
    stages: List = [M]
    steps: List[BaerStepResult] = []
    current = M
    for k in range(K):
        try:
            step = baer_step(current, budgets)
        except BoundExceededError:
            return BaerChain(stages, steps, verified=bool(steps),
                             stalled_at=k)
        steps.append(step)
        if k + 1 < K:
            try:
                current = step.extension.materialize(
                    name=f"{M.name}_{k + 1}", budgets=budgets)
            except BoundExceededError:
                return BaerChain(stages + [step.extension], steps,
                                 verified=True, stalled_at=k + 1)
            stages.append(current)
        else:
            stages.append(step.extension)
    return BaerChain(stages, steps, verified=True)


def chain_fixed_pointwise(chain: BaerChain) -> bool:
    """Composed embeddings act on the base module elements injectively and
    compatibly: embedding a stage element and then the next stage gives the
    same class as embedding through the normal forms directly."""
    if not chain.steps:
        return True
    base = chain.stages[0]
    images = [base.elements]
    current = list(base.elements)
    for step in chain.steps:
        current = [step.embedding(m) for m in current]
        if len(set(current)) != base.size:
            return False
    return True


# ---------------------------------------------------------------------------
# Brute-force envelopes
# ---------------------------------------------------------------------------

def _embeds(M: FiniteModule, E: FiniteModule,
            budgets: Budgets) -> bool:
    if E.size < M.size:
        return False
    for graph in all_homs(M, E, budgets):
        if len(set(graph.values())) == M.size:
            return True
    return False


def injective_envelope_bruteforce(M: FiniteModule, bound: int = 256,
                                  budgets: Budgets = DEFAULT_BUDGETS
                                  ) -> Optional[FiniteModule]:
    """Smallest injective module containing M among quotients of R^m, m <= 2.

    Returns None when no candidate within the size bound passes; the search
    is exhaustive over the candidate space, so a None is itself a fact.
    """
    R = M.ring
    candidates: List[FiniteModule] = []
    seen_sizes_shapes = set()
    for rank in (1, 2):
        if R.size ** rank > max(bound, R.size):
            break
        free = free_module(R, rank)
        for sub in enumerate_submodules(free, budgets):
            E = quotient_module(free, sub, name=f"F{rank}/N")
            if E.size <= bound:
                candidates.append(E)
    candidates.sort(key=lambda E: E.size)
    best: Optional[FiniteModule] = None
    for E in candidates:
        if best is not None and E.size >= best.size:
            continue
        if not _embeds(M, E, budgets):
            continue
        if baer_test(E, budgets).injective:
            best = E
    return best


def first_principles_injective(M: FiniteModule,
                               ambient_modules: Sequence[FiniteModule],
                               budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Definitional injectivity over a finite test universe: for every
    submodule A of every listed module B, every map A -> M extends to B."""
    for B in ambient_modules:
        homs_B = all_homs(B, M, budgets)
        for carrier in enumerate_submodules(B, budgets):
            A = submodule(B, carrier, name="A")
            restrictions = {tuple(big[a] for a in A.elements) for big in homs_B}
            for graph in all_homs(A, M, budgets):
                if tuple(graph[a] for a in A.elements) not in restrictions:
                    return False
    return True
