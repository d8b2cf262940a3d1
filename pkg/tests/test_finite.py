"""Finite rings and modules: ideal lattices, the noetherian witness report,
and module/hom machinery."""

import pytest
from hypothesis import given, settings, strategies as st

from noether.errors import DomainError, ValidationError
from noether.finite import (
    all_homs,
    direct_sum,
    enumerate_ideals,
    enumerate_submodules,
    free_module,
    gf_poly_quotient,
    hom_from_ideal,
    ideal_closure,
    is_ideal,
    is_linear_map,
    is_prime_ideal,
    minimal_generators,
    module_generators,
    noetherian_witness,
    product_ring,
    quotient_module,
    ring_as_module,
    span,
    submodule,
    zero_module,
    zmod,
)


def divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


@pytest.mark.parametrize("n", [2, 4, 6, 12, 30, 60])
def test_ideals_of_zmod_are_divisor_lattice(n):
    R = zmod(n)
    ideals = enumerate_ideals(R)
    assert len(ideals) == divisor_count(n)
    for I in ideals:
        assert is_ideal(R, I)


def test_ideal_closure_of_single_element():
    R = zmod(12)
    assert ideal_closure(R, (8,)) == frozenset({0, 4, 8})


def test_ideal_closure_with_base():
    R = zmod(12)
    base = ideal_closure(R, (6,))
    assert ideal_closure(R, (4,), base=base) == frozenset({0, 2, 4, 6, 8, 10})


def test_prime_ideals_of_z6():
    R = zmod(6)
    primes = [I for I in enumerate_ideals(R) if is_prime_ideal(R, I)]
    assert sorted(sorted(I) for I in primes) == [[0, 2, 4], [0, 3]]


def test_minimal_generators_regenerate():
    R = zmod(8)
    for I in enumerate_ideals(R):
        gens = minimal_generators(R, I)
        assert ideal_closure(R, gens) == I


def test_noetherian_witness_report():
    R = zmod(12)
    ideals = enumerate_ideals(R)
    rep = noetherian_witness(R, ideals)
    assert rep.ok
    assert rep.ideal_count_bound == divisor_count(12)
    assert rep.max_strict_chain <= divisor_count(12)
    assert len(rep.generator_lists) == len(ideals)


def test_gf_poly_quotient_dual_numbers():
    R = gf_poly_quotient(2, [0, 0, 1])  # F2[t]/(t^2)
    assert len(R.elements) == 4
    assert len(enumerate_ideals(R)) == 3


def test_product_ring_ideal_count_multiplies():
    R = product_ring([zmod(2), zmod(3)])
    assert len(enumerate_ideals(R)) == 4


def test_zmod_requires_n_at_least_two():
    with pytest.raises(DomainError):
        zmod(1)


def test_span_and_submodule():
    M = ring_as_module(zmod(8))
    N = span(M, [4])
    assert N == frozenset({0, 4})
    sub = submodule(M, N)
    assert sub.size == 2
    with pytest.raises(ValidationError):
        submodule(M, {1, 3})  # not closed


def test_quotient_module_sizes():
    M = ring_as_module(zmod(8))
    Q = quotient_module(M, span(M, [4]))
    assert Q.size == 4


def test_free_module_and_generators():
    M = free_module(zmod(4), 2)
    assert M.size == 16
    gens = module_generators(M)
    assert len(gens) == 2
    assert span(M, gens) == frozenset(M.elements)


def test_direct_sum_universal_property():
    R = zmod(4)
    A, B = ring_as_module(R), ring_as_module(R)
    out = direct_sum([A, B])
    S, (iA, iB) = out.module, out.injections
    assert S.size == 16
    # Injections are linear and glue: every s splits as iA(a) + iB(b).
    for a in A.elements:
        for b in B.elements:
            s = S.add(iA(a), iB(b))
            assert s == (a, b)


def test_enumerate_submodules_of_z4():
    M = ring_as_module(zmod(4))
    subs = enumerate_submodules(M)
    assert sorted(sorted(s) for s in subs) == [[0], [0, 1, 2, 3], [0, 2]]


def test_all_homs_z4_to_itself():
    M = ring_as_module(zmod(4))
    homs = all_homs(M, M)
    # Every endomorphism of R as an R-module is multiplication by r.
    assert len(homs) == 4
    for h in homs:
        assert is_linear_map(M, M, h)


def test_all_homs_count_is_generator_choice_invariant():
    R = zmod(4)
    M = ring_as_module(R)
    two = submodule(M, span(M, [2]), name="2Z/4Z")
    assert len(all_homs(two, M)) == 2
    assert len(all_homs(two, two)) == 2


def test_hom_from_ideal_counts():
    R = zmod(4)
    M = ring_as_module(R)
    I = span(M, [2])
    homs = hom_from_ideal(R, I, M)
    # A map from (2) to Z/4 sends 2 to an element killed by 2: 0 or 2.
    assert len(homs) == 2


def test_zero_module():
    Z = zero_module(zmod(4))
    assert Z.size == 1
    assert len(all_homs(Z, ring_as_module(zmod(4)))) == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 24), st.sets(st.integers(0, 23), min_size=1, max_size=3))
def test_ideal_closure_is_an_ideal(n, seed):
    R = zmod(n)
    I = ideal_closure(R, {s % n for s in seed})
    assert is_ideal(R, I)
