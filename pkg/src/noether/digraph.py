"""Finite digraphs of ideals / global generators, and the sheaves they generate.

The central data structure: a rooted DAG whose nodes pair a distinguished
open D(f) with an ideal of the localization R_f given by global generators
(polynomials of the base ring).  The four defining conditions (Global,
Functional, Decreasing on opens, Increasing on ideals) plus structural
rootedness are each independently validated.

The sheaf generated by a digraph is the smallest subsheaf of the structure
sheaf containing each node ideal over its open; membership is decided
stalkwise via the subset-stratum criterion (colon ideals plus radical
membership), and exact section ideals are computed for univariate base
rings, where primary decomposition reduces to polynomial factorization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .config import Budgets, DEFAULT_BUDGETS
from .errors import (
    BoundExceededError,
    CapabilityError,
    DomainError,
    OracleError,
    ResourceBudgetError,
    ValidationError,
)
from .finite import FiniteRing, enumerate_ideals, ideal_closure
from .poly import Polynomial
from .rings import (
    IdealHandle,
    PresentedRing,
    colon_ideal,
    ideal_contains,
    ideal_equal,
    radical_membership,
)
from .topology import (
    DistinguishedOpen,
    FiniteSpace,
    coordinate_ring,
    enumerate_spec,
    open_contains,
    open_equal,
    open_strictly_below,
)
from . import univar


@dataclass(frozen=True)
class DigraphNode:
    open: DistinguishedOpen
    gens: Tuple[Polynomial, ...]

    def ideal_in(self, ring: PresentedRing) -> IdealHandle:
        return IdealHandle(ring, self.gens)


@dataclass(frozen=True)
class IdealDigraph:
    ring: PresentedRing
    nodes: Tuple[DigraphNode, ...]
    edges: Tuple[Tuple[int, int], ...]
    root: int = 0

    def children(self, i: int) -> List[int]:
        return [c for (p, c) in self.edges if p == i]


@dataclass
class DigraphReport:
    global_ok: bool = True
    functional_ok: bool = True
    decreasing_ok: bool = True
    increasing_ok: bool = True
    structural_ok: bool = True
    witnesses: Dict[str, object] = dc_field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return (self.global_ok and self.functional_ok and self.decreasing_ok
                and self.increasing_ok and self.structural_ok)

    def as_dict(self) -> Dict:
        return {
            "global": self.global_ok,
            "functional": self.functional_ok,
            "decreasing_on_opens": self.decreasing_ok,
            "increasing_on_ideals": self.increasing_ok,
            "structural": self.structural_ok,
            "valid": self.valid,
            "witnesses": self.witnesses,
        }


def validate_digraph(d: IdealDigraph, budgets: Budgets = DEFAULT_BUDGETS) -> DigraphReport:
    """Check the four defining invariants plus structural rootedness."""
    rep = DigraphReport()
    n = len(d.nodes)
    if not (0 <= d.root < n):
        rep.structural_ok = False
        rep.witnesses["structural"] = "root index out of range"
        return rep

    if not d.nodes[d.root].open.is_whole(budgets):
        rep.global_ok = False
        rep.witnesses["global"] = d.nodes[d.root].open.render()

    for i in range(n):
        for j in range(i + 1, n):
            if open_equal(d.nodes[i].open, d.nodes[j].open, budgets):
                rep.functional_ok = False
                rep.witnesses["functional"] = (i, j)

    # Structural: edges in range, acyclic, all nodes reachable from the root.
    ok = all(0 <= p < n and 0 <= c < n for p, c in d.edges)
    if ok:
        reach = {d.root}
        frontier = [d.root]
        while frontier:
            x = frontier.pop()
            for (p, c) in d.edges:
                if p == x and c not in reach:
                    reach.add(c)
                    frontier.append(c)
        if reach != set(range(n)):
            ok = False
            rep.witnesses["structural"] = sorted(set(range(n)) - reach)
        # Cycle check by DFS colors.
        color = {}

        def dfs(v):
            color[v] = 1
            for (p, c) in d.edges:
                if p == v:
                    if color.get(c) == 1:
                        return False
                    if color.get(c, 0) == 0 and not dfs(c):
                        return False
            color[v] = 2
            return True

        if ok and not all(dfs(v) for v in range(n) if color.get(v, 0) == 0):
            ok = False
            rep.witnesses["structural"] = "cycle"
    else:
        rep.witnesses["structural"] = "edge index out of range"
    rep.structural_ok = ok

    for (p, c) in d.edges:
        if not (0 <= p < n and 0 <= c < n):
            continue
        parent, child = d.nodes[p], d.nodes[c]
        if not open_strictly_below(child.open, parent.open, budgets):
            rep.decreasing_ok = False
            rep.witnesses.setdefault("decreasing", []).append((p, c))
            continue
        rc = coordinate_ring(child.open, budgets)
        child_ideal = child.ideal_in(rc)
        parent_localized = parent.ideal_in(rc)
        if not (ideal_contains(child_ideal, parent_localized, budgets)
                and not ideal_equal(child_ideal, parent_localized, budgets)):
            rep.increasing_ok = False
            rep.witnesses.setdefault("increasing", []).append((p, c))
    return rep


# -- clearing denominators -----------------------------------------------------


def clear_denominators(
    ring: PresentedRing,
    raw_nodes: Sequence[Tuple[DistinguishedOpen, Sequence[Tuple[Polynomial, Polynomial]]]],
    edges: Sequence[Tuple[int, int]],
    root: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> IdealDigraph:
    """Turn nodes whose ideals are given by fractions into global generators.

    Each generator comes as (numerator, denominator) with the denominator a
    unit of the node's coordinate ring (a power of the node's f times
    inverted elements); the fraction then generates the same ideal of R_f as
    its numerator.  Node ideals are re-emitted in canonical (saturated) form.
    """
    nodes = []
    for u, fracs in raw_nodes:
        ru = coordinate_ring(u, budgets)
        nums = []
        for num, den in fracs:
            if den.is_zero():
                raise DomainError("zero denominator in node generator")
            if not IdealHandle(ru, (den,)).is_unit_ideal(budgets):
                raise DomainError(
                    f"denominator {ring.render(den)} is not a unit on {u.render()}")
            nums.append(num)
        canonical = IdealHandle(ru, tuple(nums)).canonical_basis(budgets)
        if not ideal_equal(IdealHandle(ru, tuple(nums)), IdealHandle(ru, canonical), budgets):
            raise ValidationError("canonicalization changed the ideal")
        nodes.append(DigraphNode(u, tuple(canonical)))
    return IdealDigraph(ring, tuple(nodes), tuple(edges), root)


# -- the generated sheaf -------------------------------------------------------


def section_membership(
    d: IdealDigraph,
    u: DistinguishedOpen,
    numerator: Polynomial,
    denominator: Optional[Polynomial] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
    skip_validation: bool = False,
) -> bool:
    """Decide whether numerator/denominator lies in the generated sheaf on u.

    Stalkwise criterion: for every subset S of nodes containing the root,
    with J_S the sum of the node ideals over S and F_S the defining elements
    of the omitted opens, require

        u.f * prod_{i in S} f_i    in    rad((J_S : numerator) + F_S).

    Denominators are discarded after a unit check: they are units on u, and
    multiplying by a unit does not change stalk membership.
    """
    if len(d.nodes) > budgets.digraph_node_cap:
        raise ResourceBudgetError("digraph_node_cap", budgets.digraph_node_cap)
    if not skip_validation:
        report = validate_digraph(d, budgets)
        if not report.valid:
            raise ValidationError("invalid digraph", witness=report.as_dict())
    if u.is_empty(budgets):
        raise DomainError("membership over the empty open")
    if denominator is not None:
        ru = coordinate_ring(u, budgets)
        if denominator.is_zero() or not IdealHandle(ru, (denominator,)).is_unit_ideal(budgets):
            raise DomainError("denominator is not a unit on the open")
    if numerator.is_zero():
        return True

    ring = d.ring
    others = [i for i in range(len(d.nodes)) if i != d.root]
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            S = (d.root,) + extra
            gens = tuple(g for i in S for g in d.nodes[i].gens)
            J = IdealHandle(ring, gens)
            C = colon_ideal(J, numerator, budgets)
            F = tuple(d.nodes[j].open.f for j in range(len(d.nodes)) if j not in S)
            probe = u.f
            for i in S:
                probe = probe * d.nodes[i].open.f
            if not radical_membership(probe, IdealHandle(ring, C.generators + F), budgets):
                return False
    return True


def _require_univariate_ring(ring: PresentedRing):
    if ring.nvars != 1 or ring.quotient:
        raise CapabilityError(
            "exact section ideals need a univariate base ring; use section_membership")


def evaluate_sheaf(d: IdealDigraph, u: DistinguishedOpen,
                   budgets: Budgets = DEFAULT_BUDGETS,
                   skip_validation: bool = False) -> IdealHandle:
    """Exact ideal of sections of the generated sheaf over u (univariate).

    Univariate primary decomposition is irreducible factorization: for each
    monic irreducible q alive on u, the stalk at (q) is generated by the
    node ideals whose opens contain (q); the section ideal is cut out by the
    resulting multiplicity of q.  The zero stalk forces the zero ideal.
    """
    ring = d.ring
    _require_univariate_ring(ring)
    if not skip_validation:
        report = validate_digraph(d, budgets)
        if not report.valid:
            raise ValidationError("invalid digraph", witness=report.as_dict())
    if u.is_empty(budgets):
        raise DomainError("evaluation over the empty open")
    ru = coordinate_ring(u, budgets)

    # The generic stalk: all (nonempty) node opens contain the zero prime.
    all_gens = [g for node in d.nodes for g in node.gens]
    generic = univar.gcd(all_gens, ring.field)
    if generic.is_zero():
        result = IdealHandle(ru, ())
        _verify_sections(d, u, result, budgets)
        return result

    # Candidate primes: factors of node generators and of node opens.
    candidates: List[Polynomial] = []
    seen = set()
    for p in all_gens + [node.open.f for node in d.nodes]:
        if p.is_zero() or p.is_constant():
            continue
        for q, _ in univar.irreducible_factors(p):
            if q not in seen:
                seen.add(q)
                candidates.append(q)

    s_u = u.f * ring.inverted_product()
    total = ring.one()
    for q in candidates:
        if univar.divides(q, s_u):
            continue  # q is a unit on u
        alive = [i for i in range(len(d.nodes)) if not univar.divides(q, d.nodes[i].open.f)]
        stalk_gens = [g for i in alive for g in d.nodes[i].gens]
        g_s = univar.gcd(stalk_gens, ring.field)
        if g_s.is_zero():
            result = IdealHandle(ru, ())
            _verify_sections(d, u, result, budgets)
            return result
        e = univar.multiplicity(q, g_s)
        if e:
            total = total * q ** e
    result = IdealHandle(ru, (total,))
    _verify_sections(d, u, result, budgets)
    return result


def _verify_sections(d: IdealDigraph, u: DistinguishedOpen, result: IdealHandle,
                     budgets: Budgets):
    for g in result.generators:
        if not section_membership(d, u, g, budgets=budgets, skip_validation=True):
            raise ValidationError(
                "computed section ideal fails its own membership check",
                witness=d.ring.render(g))


# -- sheaf oracles and extraction ----------------------------------------------


class SheafOracle:
    """Queryable sheaf of ideals, with a declared finite test basis.

    ``valuation`` maps a distinguished open to the global generators of the
    section ideal over it.  The presheaf law is checked lazily on every pair
    of queried opens; a violation raises OracleError with the witness pair.
    """

    def __init__(self, ring: PresentedRing,
                 valuation: Callable[[DistinguishedOpen], Sequence[Polynomial]],
                 basis: Sequence[DistinguishedOpen],
                 budgets: Budgets = DEFAULT_BUDGETS):
        self.ring = ring
        self._valuation = valuation
        self.basis = tuple(basis)
        self.budgets = budgets
        self._log: List[Tuple[DistinguishedOpen, Tuple[Polynomial, ...]]] = []

    def query(self, u: DistinguishedOpen) -> Tuple[Polynomial, ...]:
        value = tuple(self._valuation(u))
        for (v, vgens) in self._log:
            for small, sgens, big, bgens in (
                (u, value, v, vgens), (v, vgens, u, value)):
                if open_contains(big, small, self.budgets):
                    rs = coordinate_ring(small, self.budgets)
                    if not ideal_contains(IdealHandle(rs, sgens),
                                          IdealHandle(rs, bgens), self.budgets):
                        raise OracleError(
                            "presheaf law violated",
                            witness=(big.render(), small.render()))
        self._log.append((u, value))
        return value


def quasi_coherent_oracle(I: IdealHandle, basis: Sequence[DistinguishedOpen],
                          budgets: Budgets = DEFAULT_BUDGETS) -> SheafOracle:
    """The oracle of the quasi-coherent sheaf associated to an ideal."""
    return SheafOracle(I.ring, lambda u: I.generators, basis, budgets)


def digraph_oracle(d: IdealDigraph, basis: Sequence[DistinguishedOpen],
                   budgets: Budgets = DEFAULT_BUDGETS) -> SheafOracle:
    """Oracle answering with the exact sections of the sheaf a digraph generates."""
    def valuation(u: DistinguishedOpen):
        return evaluate_sheaf(d, u, budgets, skip_validation=True).generators

    return SheafOracle(d.ring, valuation, basis, budgets)


def extract_digraph(oracle: SheafOracle, budgets: Budgets = DEFAULT_BUDGETS) -> IdealDigraph:
    """Extract a finite digraph of global generators from a sheaf oracle.

    Children of a node are the inclusion-maximal basis opens strictly below
    it on which the oracle value strictly exceeds the localized node ideal
    (the expansive opens); recursion proceeds generation by generation.
    Termination is the ascending-chain argument on saturated ideals; a depth
    bound backstops buggy oracles.
    """
    ring = oracle.ring
    root_open = DistinguishedOpen(ring, ring.one())
    nodes: List[DigraphNode] = [DigraphNode(root_open, oracle.query(root_open))]
    edges: List[Tuple[int, int]] = []
    frontier = [0]
    for _ in range(budgets.extraction_depth):
        if not frontier:
            break
        next_frontier: List[int] = []
        for ni in frontier:
            node = nodes[ni]
            expansive: List[Tuple[DistinguishedOpen, Tuple[Polynomial, ...]]] = []
            for h in oracle.basis:
                if not open_strictly_below(h, node.open, budgets):
                    continue
                value = oracle.query(h)
                rh = coordinate_ring(h, budgets)
                sheaf_ideal = IdealHandle(rh, value)
                localized = IdealHandle(rh, node.gens)
                if (ideal_contains(sheaf_ideal, localized, budgets)
                        and not ideal_equal(sheaf_ideal, localized, budgets)):
                    if not any(open_equal(h, o, budgets) for o, _ in expansive):
                        expansive.append((h, value))
            # Keep only inclusion-maximal expansive opens: a canonical finite
            # subcover of the union of all expansive opens.
            maximal = [
                (o, v) for (o, v) in expansive
                if not any(o2 is not o and open_strictly_below(o, o2, budgets)
                           for o2, _ in expansive)
            ]
            for (o, v) in maximal:
                existing = next(
                    (k for k in range(len(nodes)) if open_equal(nodes[k].open, o, budgets)),
                    None)
                if existing is None:
                    nodes.append(DigraphNode(o, v))
                    existing = len(nodes) - 1
                    next_frontier.append(existing)
                if (ni, existing) not in edges:
                    edges.append((ni, existing))
        frontier = next_frontier
    else:
        if frontier:
            raise ResourceBudgetError("extraction_depth", budgets.extraction_depth)

    d = IdealDigraph(ring, tuple(nodes), tuple(edges), 0)
    report = validate_digraph(d, budgets)
    if not report.valid:
        raise ValidationError("extracted digraph failed validation",
                              witness=report.as_dict())
    return d


def is_quasi_coherent(d: IdealDigraph, basis: Sequence[DistinguishedOpen],
                      budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """True iff the generated sheaf equals the localization of its root ideal
    on every basis open."""
    _require_univariate_ring(d.ring)
    report = validate_digraph(d, budgets)
    if not report.valid:
        raise ValidationError("invalid digraph", witness=report.as_dict())
    root = d.nodes[d.root]
    for h in basis:
        if h.is_empty(budgets):
            continue
        value = evaluate_sheaf(d, h, budgets, skip_validation=True)
        rh = coordinate_ring(h, budgets)
        if not ideal_equal(value, IdealHandle(rh, root.gens), budgets):
            return False
    return True


# -- constant-sheaf-Z analog on finite spaces -----------------------------------


@dataclass(frozen=True)
class ZZSheafData:
    """Ideal sheaf n_U * Z of the constant sheaf Z on a finite space.

    ``assignment`` maps every nonempty connected open (frozenset of points)
    to a nonnegative integer n_U, subject to: U <= V implies n_U | n_V
    (smaller opens carry larger ideals)."""

    space: FiniteSpace
    assignment: Dict[FrozenSet, int]

    def validate(self):
        opens = self.space.connected_opens()
        for U in opens:
            if U not in self.assignment:
                raise ValidationError("missing assignment", witness=sorted(U))
            if self.assignment[U] < 0:
                raise ValidationError("negative ideal index", witness=sorted(U))
        for U in opens:
            for V in opens:
                if U < V and not _divides_int(self.assignment[U], self.assignment[V]):
                    raise ValidationError(
                        "restriction law violated",
                        witness=(sorted(U), sorted(V)))


def _divides_int(a: int, b: int) -> bool:
    if a == 0:
        return b == 0
    return b % a == 0


@dataclass(frozen=True)
class ZZDigraph:
    space: FiniteSpace
    nodes: Tuple[Tuple[FrozenSet, int], ...]
    edges: Tuple[Tuple[int, int], ...]
    root: int = 0


def extract_zz_digraph(z: ZZSheafData) -> ZZDigraph:
    """Digraph extraction for ideal sheaves of the constant sheaf Z.

    U is expansive from V iff n_V Z is strictly contained in n_U Z, i.e.
    n_U properly divides n_V; children are the inclusion-maximal expansive
    connected opens.  Finiteness is automatic on a finite space.
    """
    z.validate()
    whole = z.space.whole()
    if not z.space.connected(whole):
        raise ValidationError("space must be connected; run per component")
    opens = z.space.connected_opens()
    nodes: List[Tuple[FrozenSet, int]] = [(whole, z.assignment[whole])]
    edges: List[Tuple[int, int]] = []
    frontier = [0]
    while frontier:
        next_frontier = []
        for ni in frontier:
            V, nV = nodes[ni]
            expansive = [U for U in opens
                         if U < V and _divides_int(z.assignment[U], nV)
                         and z.assignment[U] != nV]
            maximal = [U for U in expansive
                       if not any(U < W for W in expansive)]
            for U in maximal:
                existing = next((k for k, (W, _) in enumerate(nodes) if W == U), None)
                if existing is None:
                    nodes.append((U, z.assignment[U]))
                    existing = len(nodes) - 1
                    next_frontier.append(existing)
                if (ni, existing) not in edges:
                    edges.append((ni, existing))
        frontier = next_frontier
    return ZZDigraph(z.space, tuple(nodes), tuple(edges), 0)


def zz_sheaf_value(d: ZZDigraph, W: FrozenSet) -> int:
    """Sections over a connected open of the sheaf a ZZ digraph generates.

    The value on W is the smallest ideal declared on any node whose open
    contains W, i.e. gcd{n_U : W <= U}.  Every containing node's value is a
    multiple of the true value (restriction law), and extraction descends
    through expansive opens until some containing node attains the true
    value exactly, so the gcd reproduces the source assignment.
    """
    import math

    value = 0
    for (U, nU) in d.nodes:
        if W <= U:
            value = math.gcd(value, nU)
    return value


# -- desk-scale enumeration of all digraphs --------------------------------------


def localize_finite(R: FiniteRing, a) -> Tuple[FiniteRing, Dict]:
    """Localization of a finite ring at one element, as a quotient ring.

    The kernel is {r : a^k r = 0 for some k}; a becomes invertible in the
    quotient.  Returns the quotient ring and the projection map r -> class.
    """
    powers = [R.one]
    for _ in range(2 * R.size):
        powers.append(R.mul(powers[-1], a))
    kernel = frozenset(r for r in R.elements
                       if any(R.mul(p, r) == R.zero for p in powers[1:]))
    rep: Dict = {}
    classes = []
    for r in R.elements:
        if r in rep:
            continue
        coset = sorted((R.add(r, k) for k in kernel), key=R.index)
        c = coset[0]
        for x in coset:
            rep[x] = c
        classes.append(c)
    classes.sort(key=R.index)
    zero = rep[R.zero]
    classes.remove(zero)
    classes.insert(0, zero)
    Q = FiniteRing(
        f"{R.name}_loc", classes,
        lambda x, y: rep[R.add(x, y)],
        lambda x, y: rep[R.mul(x, y)],
        lambda x: rep[R.neg(x)],
        zero, rep[R.one],
    )
    return Q, rep


def count_digraph_space(R: FiniteRing, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Count all valid digraphs of ideals over Spec of a finite ring.

    Node vocabulary: one class per nonempty distinguished open (opens are
    compared as prime-ideal sets), each paired with any ideal of the
    corresponding localization.  Counts every (node set, ideal assignment,
    edge set) passing the digraph invariants.
    """
    primes = enumerate_spec(R, budgets)
    if not primes:
        raise DomainError("ring has no prime ideals")
    # Distinguished opens up to equality, as sets of prime indices.
    open_classes: Dict[FrozenSet, object] = {}
    for a in R.elements:
        pts = frozenset(i for i, p in enumerate(primes) if a not in p)
        if pts and pts not in open_classes:
            open_classes[pts] = a
    whole = frozenset(range(len(primes)))
    items = sorted(open_classes.items(), key=lambda kv: (-len(kv[0]), sorted(kv[0])))
    opens = [pts for pts, _ in items]
    reps = [rep for _, rep in items]
    root_idx = opens.index(whole)

    localizations = []
    for a in reps:
        Q, proj = localize_finite(R, a)
        localizations.append((Q, proj, enumerate_ideals(Q, budgets)))

    def localized_ideal(i_from: int, ideal: FrozenSet, i_to: int) -> FrozenSet:
        Q_to, proj_to, _ = localizations[i_to]
        return ideal_closure(Q_to, {proj_to[x] for x in ideal})

    count = 0
    m = len(opens)
    non_root = [i for i in range(m) if i != root_idx]
    for k in range(len(non_root) + 1):
        for chosen in itertools.combinations(non_root, k):
            node_opens = [root_idx] + list(chosen)
            allowed_edges = [(p, c) for p in node_opens for c in node_opens
                             if p != c and opens[c] < opens[p]]
            ideal_choices = [localizations[i][2] for i in node_opens]
            total = 1
            for ch in ideal_choices:
                total *= len(ch)
            total *= 2 ** len(allowed_edges)
            if total > budgets.digraph_vocab_cap:
                raise BoundExceededError("digraph_vocab_cap", budgets.digraph_vocab_cap)
            for ideals in itertools.product(*ideal_choices):
                # Increasing-on-ideals per candidate edge.
                edge_ok = {}
                for (p, c) in allowed_edges:
                    pi, ci = node_opens.index(p), node_opens.index(c)
                    loc = localized_ideal(p, ideals[pi], c)
                    edge_ok[(p, c)] = loc < ideals[ci]
                usable = [e for e in allowed_edges if edge_ok[e]]
                targets = [i for i in node_opens if i != root_idx]
                for r in range(len(usable) + 1):
                    for es in itertools.combinations(usable, r):
                        # Reachability from the root.
                        reach = {root_idx}
                        changed = True
                        while changed:
                            changed = False
                            for (p, c) in es:
                                if p in reach and c not in reach:
                                    reach.add(c)
                                    changed = True
                        if all(t in reach for t in targets):
                            count += 1
    return count


def count_digraph_space_vocab(
    ring: PresentedRing,
    candidate_opens: Sequence[DistinguishedOpen],
    candidate_ideals: Sequence[Sequence[Polynomial]],
    budgets: Budgets = DEFAULT_BUDGETS,
) -> int:
    """Enumerate all valid digraphs over an explicit finite vocabulary."""
    if not candidate_opens or not candidate_ideals:
        raise DomainError("empty digraph vocabulary")
    opens = []
    for u in candidate_opens:
        if u.is_empty(budgets):
            continue
        if not any(open_equal(u, v, budgets) for v in opens):
            opens.append(u)
    root_open = DistinguishedOpen(ring, ring.one())
    if not any(open_equal(u, root_open, budgets) for u in opens):
        raise DomainError("vocabulary must contain the whole space D(1)")
    m = len(opens)
    count = 0
    total = (len(candidate_ideals) + 1) ** m
    if total > budgets.digraph_vocab_cap:
        raise BoundExceededError("digraph_vocab_cap", budgets.digraph_vocab_cap)
    root_idx = next(i for i in range(m) if open_equal(opens[i], root_open, budgets))
    non_root = [i for i in range(m) if i != root_idx]
    for k in range(len(non_root) + 1):
        for chosen in itertools.combinations(non_root, k):
            node_open_idx = [root_idx] + list(chosen)
            for gens in itertools.product(candidate_ideals, repeat=len(node_open_idx)):
                nodes = tuple(DigraphNode(opens[i], tuple(g))
                              for i, g in zip(node_open_idx, gens))
                allowed = [(a, b) for a in range(len(nodes)) for b in range(len(nodes))
                           if a != b and open_strictly_below(nodes[b].open, nodes[a].open, budgets)]
                for r in range(len(allowed) + 1):
                    for es in itertools.combinations(allowed, r):
                        d = IdealDigraph(ring, nodes, tuple(es), 0)
                        if validate_digraph(d, budgets).valid:
                            count += 1
    return count
