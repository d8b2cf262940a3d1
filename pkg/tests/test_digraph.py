"""Digraphs of ideals: validation, clearing denominators, the generated
sheaf, extraction, quasi-coherence, the constant-sheaf-Z analog, and the
desk-scale enumeration of all digraphs over a finite ring."""

import random

import pytest

from noether.config import DEFAULT_BUDGETS
from noether.errors import DomainError, OracleError, ValidationError
from noether.fields import QQ
from noether.finite import zmod
from noether.digraph import (
    DigraphNode,
    IdealDigraph,
    SheafOracle,
    ZZSheafData,
    clear_denominators,
    count_digraph_space,
    digraph_oracle,
    evaluate_sheaf,
    extract_digraph,
    extract_zz_digraph,
    is_quasi_coherent,
    quasi_coherent_oracle,
    section_membership,
    validate_digraph,
    zz_sheaf_value,
)
from noether.rings import IdealHandle, PresentedRing, ideal_equal, saturate
from noether.topology import (
    DistinguishedOpen,
    FiniteSpace,
    coordinate_ring,
    open_equal,
)


@pytest.fixture
def R():
    return PresentedRing(QQ, ("x",))


def D(R, text):
    return DistinguishedOpen(R, R.parse(text))


def node(R, open_text, *gen_texts):
    return DigraphNode(D(R, open_text), tuple(R.parse(g) for g in gen_texts))


def g0(R):
    """Root (D(1), (0)) with child (D(x), (1)): generated sheaf is the unit
    ideal exactly on the opens inside D(x)."""
    return IdealDigraph(R, (node(R, "1"), node(R, "x", "1")), ((0, 1),), 0)


# -- validation ----------------------------------------------------------------


def test_root_only_digraph_valid(R):
    d = IdealDigraph(R, (node(R, "1", "x"),), (), 0)
    assert validate_digraph(d).valid


def test_g0_valid_but_not_quasi_coherent(R):
    assert validate_digraph(g0(R)).valid
    basis = [D(R, "1"), D(R, "x"), D(R, "x - 1")]
    assert not is_quasi_coherent(g0(R), basis)


def test_increasing_violation_detected(R):
    # (x) localized at x is already the unit ideal; the child adds nothing.
    d = IdealDigraph(R, (node(R, "1", "x"), node(R, "x", "1")), ((0, 1),), 0)
    rep = validate_digraph(d)
    assert not rep.valid and not rep.increasing_ok
    assert rep.witnesses["increasing"] == [(0, 1)]


def test_decreasing_violation_detected(R):
    # Child open equal to the parent's is not strictly smaller.
    d = IdealDigraph(R, (node(R, "1"), node(R, "x^0", "1")), ((0, 1),), 0)
    rep = validate_digraph(d)
    assert not rep.functional_ok or not rep.decreasing_ok


def test_structural_cycle_detected(R):
    d = IdealDigraph(R, (node(R, "1"), node(R, "x", "1")),
                     ((0, 1), (1, 1)), 0)
    rep = validate_digraph(d)
    assert not rep.structural_ok


def test_global_requires_whole_root(R):
    d = IdealDigraph(R, (node(R, "x", "1"),), (), 0)
    rep = validate_digraph(d)
    assert not rep.global_ok


# -- clearing denominators -------------------------------------------------------


def test_clear_denominators_unit_factor(R):
    raw = [(D(R, "x"), [(R.parse("x - 1"), R.parse("x"))])]
    d = clear_denominators(R, raw, (), 0)
    ru = coordinate_ring(D(R, "x"))
    assert ideal_equal(IdealHandle(ru, d.nodes[0].gens), ru.ideal("x - 1"))


def test_clear_denominators_pure_unit(R):
    raw = [(D(R, "x"), [(R.parse("1"), R.parse("x^2"))])]
    d = clear_denominators(R, raw, (), 0)
    ru = coordinate_ring(D(R, "x"))
    assert IdealHandle(ru, d.nodes[0].gens).is_unit_ideal()


def test_clear_denominators_rejects_zero_denominator(R):
    raw = [(D(R, "x"), [(R.parse("1"), R.parse("0"))])]
    with pytest.raises(DomainError):
        clear_denominators(R, raw, (), 0)


def test_clear_denominators_rejects_non_unit_denominator(R):
    raw = [(D(R, "x"), [(R.parse("1"), R.parse("x - 1"))])]
    with pytest.raises(DomainError):
        clear_denominators(R, raw, (), 0)


# -- the generated sheaf ---------------------------------------------------------


def test_g0_membership(R):
    d = g0(R)
    one = R.one()
    assert section_membership(d, D(R, "x"), one)
    assert not section_membership(d, D(R, "1"), one)
    assert section_membership(d, D(R, "1"), R.zero())


def test_g0_evaluation(R):
    d = g0(R)
    assert evaluate_sheaf(d, D(R, "x")).is_unit_ideal()
    assert evaluate_sheaf(d, D(R, "1")).is_zero_ideal()


def test_quasi_coherent_evaluation_is_localization(R):
    d = IdealDigraph(R, (node(R, "1", "x - 1"),), (), 0)
    value = evaluate_sheaf(d, D(R, "x"))
    ru = coordinate_ring(D(R, "x"))
    assert ideal_equal(value, ru.ideal("x - 1"))


def test_membership_closure_under_ring_action(R):
    # The accepted sections over a fixed open form an ideal.
    d = IdealDigraph(R, (node(R, "1", "x - 1"), node(R, "x", "1")),
                     ((0, 1),), 0)
    u = D(R, "1")
    rng = random.Random(3)
    accepted = [R.parse("x - 1"), R.parse("x^2 - x")]
    for _ in range(10):
        coeffs = [rng.randint(-2, 2) for _ in range(3)]
        mult = R.parse(f"{coeffs[0]}*x^2 + {coeffs[1]}*x + {coeffs[2]}")
        s = accepted[rng.randrange(2)]
        t = accepted[rng.randrange(2)]
        assert section_membership(d, u, s + t)
        assert section_membership(d, u, mult * s)


def test_membership_monotone_under_extra_node(R):
    # Adding a node with a larger ideal over a sub-open never removes sections.
    base = IdealDigraph(R, (node(R, "1", "x - 1"),), (), 0)
    bigger = IdealDigraph(R, (node(R, "1", "x - 1"), node(R, "x", "1")),
                          ((0, 1),), 0)
    probes = [R.parse(t) for t in ("x - 1", "x^2 - x", "0")]
    for u_text in ("1", "x", "x - 1"):
        u = D(R, u_text)
        for p in probes:
            if section_membership(base, u, p):
                assert section_membership(bigger, u, p)


def test_evaluate_rejects_multivariate_base():
    R2 = PresentedRing(QQ, ("x", "y"))
    d = IdealDigraph(R2, (DigraphNode(DistinguishedOpen(R2, R2.one()),
                                      (R2.parse("x"),)),), (), 0)
    from noether.errors import CapabilityError
    with pytest.raises(CapabilityError):
        evaluate_sheaf(d, DistinguishedOpen(R2, R2.one()))


# -- extraction -------------------------------------------------------------------


def basis_of(R, *texts):
    return [D(R, t) for t in texts]


def test_quasi_coherent_extraction_collapses(R):
    basis = basis_of(R, "x", "x - 1", "x^2 - x")
    oracle = quasi_coherent_oracle(R.ideal("x - 1"), basis)
    d = extract_digraph(oracle)
    assert len(d.nodes) == 1 and not d.edges


def test_g0_oracle_round_trip(R):
    basis = basis_of(R, "x", "x - 1", "x^2 - x")
    oracle = digraph_oracle(g0(R), basis)
    d = extract_digraph(oracle)
    assert len(d.nodes) == 2
    assert open_equal(d.nodes[1].open, D(R, "x"))
    # The regenerated sheaf agrees with the source on every basis open.
    for u in basis + [D(R, "1")]:
        assert ideal_equal(evaluate_sheaf(d, u), evaluate_sheaf(g0(R), u))


def test_extraction_termination_certificate(R):
    # Along every root-to-leaf path the saturated global ideals strictly grow.
    basis = basis_of(R, "x", "x - 1", "x^2 - x")
    d = extract_digraph(digraph_oracle(g0(R), basis))

    def saturated(i):
        return saturate(IdealHandle(R, d.nodes[i].gens), d.nodes[i].open.f)

    for (p, c) in d.edges:
        big, small = saturated(c), saturated(p)
        from noether.rings import ideal_contains
        assert ideal_contains(big, small) and not ideal_equal(big, small)


def test_presheaf_violation_raises_oracle_error(R):
    # Sections shrink when restricted to a smaller open: not a presheaf.
    basis = basis_of(R, "x")

    def valuation(u):
        return () if open_equal(u, D(R, "x")) else (R.parse("x - 1"),)

    oracle = SheafOracle(R, valuation, basis)
    with pytest.raises(OracleError):
        extract_digraph(oracle)


# -- constant-sheaf-Z analog -----------------------------------------------------


def sierpinski():
    return FiniteSpace((0, 1), ((0, 1),))


def test_zz_sierpinski_example():
    X = sierpinski()
    data = ZZSheafData(X, {frozenset({0}): 2, frozenset({0, 1}): 4})
    d = extract_zz_digraph(data)
    assert [(sorted(u), n) for u, n in d.nodes] == [([0, 1], 4), ([0], 2)]
    assert d.edges == ((0, 1),)


def test_zz_constant_sheaf_is_root_only():
    X = sierpinski()
    data = ZZSheafData(X, {frozenset({0}): 6, frozenset({0, 1}): 6})
    d = extract_zz_digraph(data)
    assert len(d.nodes) == 1


def test_zz_zero_root_analog_of_g0():
    X = sierpinski()
    data = ZZSheafData(X, {frozenset({0}): 1, frozenset({0, 1}): 0})
    d = extract_zz_digraph(data)
    assert [(sorted(u), n) for u, n in d.nodes] == [([0, 1], 0), ([0], 1)]


def test_zz_restriction_law_enforced():
    X = sierpinski()
    data = ZZSheafData(X, {frozenset({0}): 3, frozenset({0, 1}): 4})
    with pytest.raises(ValidationError):
        extract_zz_digraph(data)


def test_zz_regeneration_on_three_point_fan():
    # 0 below 1 and 2; a non-sheaf presheaf still regenerates exactly.
    X = FiniteSpace((0, 1, 2), ((0, 1), (0, 2)))
    assign = {frozenset({0}): 1, frozenset({0, 1}): 1,
              frozenset({0, 2}): 1, frozenset({0, 1, 2}): 0}
    data = ZZSheafData(X, assign)
    d = extract_zz_digraph(data)
    for U in X.connected_opens():
        assert zz_sheaf_value(d, U) == assign[U]


# -- enumeration ------------------------------------------------------------------


def test_count_digraph_space_z4():
    # Spec(Z/4) is a point, so digraphs are root-only: one per ideal.
    assert count_digraph_space(zmod(4)) == 3


def test_count_digraph_space_z6():
    assert count_digraph_space(zmod(6)) == 9
