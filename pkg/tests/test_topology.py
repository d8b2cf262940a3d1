"""Distinguished opens of Spec R, covers, coordinate rings, and finite
topological spaces given by preorders."""

import pytest

from noether.errors import DomainError
from noether.fields import QQ
from noether.finite import zmod
from noether.rings import PresentedRing, ideal_equal
from noether.topology import (
    DistinguishedOpen,
    FiniteSpace,
    OpenCover,
    coordinate_ring,
    cover_check,
    enumerate_spec,
    open_contains,
    open_equal,
    open_intersect,
    open_strictly_below,
)


@pytest.fixture
def R():
    return PresentedRing(QQ, ("x", "y"))


def D(R, text):
    return DistinguishedOpen(R, R.parse(text))


def test_whole_and_empty(R):
    assert D(R, "1").is_whole()
    assert D(R, "0").is_empty()
    assert not D(R, "x").is_whole()
    assert not D(R, "x").is_empty()


def test_nilpotent_open_is_empty():
    base = PresentedRing(QQ, ("x",))
    Rq = PresentedRing(QQ, ("x",), quotient=(base.parse("x^2"),))
    assert DistinguishedOpen(Rq, Rq.parse("x")).is_empty()


def test_containment_is_radical_membership(R):
    assert open_contains(D(R, "x"), D(R, "x^2*y"))
    assert not open_contains(D(R, "x*y"), D(R, "x"))
    assert open_strictly_below(D(R, "x*y"), D(R, "x"))


def test_open_equality_up_to_radical(R):
    assert open_equal(D(R, "x"), D(R, "x^3"))
    assert open_equal(D(R, "2*x"), D(R, "x"))
    assert not open_equal(D(R, "x"), D(R, "y"))


def test_intersection(R):
    u = open_intersect(D(R, "x"), D(R, "y"))
    assert open_equal(u, D(R, "x*y"))


def test_cover_check_partition_of_unity():
    R1 = PresentedRing(QQ, ("x",))
    good = OpenCover(DistinguishedOpen(R1, R1.one()),
                     (D(R1, "x"), D(R1, "x - 1")))
    assert cover_check(good)
    bad = OpenCover(DistinguishedOpen(R1, R1.one()), (D(R1, "x"),))
    assert not cover_check(bad)


def test_coordinate_ring_inverts_f(R):
    ru = coordinate_ring(D(R, "x"))
    assert ru.inverted == (R.parse("x"),)
    # x becomes a unit: (x) is the unit ideal there.
    assert ru.ideal("x").is_unit_ideal()


def test_coordinate_ring_of_whole_is_identity(R):
    assert coordinate_ring(D(R, "1")) is R


def test_coordinate_ring_of_empty_rejected(R):
    with pytest.raises(DomainError):
        coordinate_ring(D(R, "0"))


def test_localization_consistency(R):
    # The same ideal through two chart presentations: (x*y) on D(x) is (y).
    ru = coordinate_ring(D(R, "x"))
    assert ideal_equal(ru.ideal("x*y"), ru.ideal("y"))


def test_enumerate_spec_z12():
    primes = enumerate_spec(zmod(12))
    assert sorted(sorted(p) for p in primes) == [[0, 2, 4, 6, 8, 10],
                                                 [0, 3, 6, 9]]


def test_opens_of_sierpinski_space():
    # 0 below 1: opens are the down-sets.
    X = FiniteSpace((0, 1), ((0, 1),))
    assert X.opens() == [frozenset(), frozenset({0}), frozenset({0, 1})]
    assert X.leq(0, 1) and not X.leq(1, 0)


def test_transitive_closure():
    X = FiniteSpace((0, 1, 2), ((0, 1), (1, 2)))
    assert X.leq(0, 2)
    assert frozenset({1}) not in X.opens()


def test_connectedness():
    X = FiniteSpace((0, 1, 2), ((0, 1),))
    assert not X.connected(X.whole())
    Y = FiniteSpace((0, 1, 2), ((0, 1), (0, 2)))
    assert Y.connected(Y.whole())
    assert frozenset({1, 2}) not in [s for s in Y.connected_opens()]
