"""Polynomial arithmetic, monomial orders, and the parser."""

import pytest
from hypothesis import given, strategies as st

from noether.errors import ParseError
from noether.fields import GF, QQ
from noether.parse import parse_polynomial
from noether.poly import (
    DEGREVLEX,
    LEX,
    BlockElim,
    Polynomial,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    order_by_name,
)

VARS = ("x", "y", "z")


def poly(text: str, field=QQ) -> Polynomial:
    return parse_polynomial(text, field, VARS)


def test_monomial_helpers():
    assert mono_mul((1, 2, 0), (0, 1, 3)) == (1, 3, 3)
    assert mono_divides((1, 0, 0), (2, 1, 0))
    assert not mono_divides((0, 2, 0), (1, 1, 0))
    assert mono_div((2, 3, 1), (1, 1, 0)) == (1, 2, 1)
    assert mono_lcm((2, 0, 1), (1, 3, 1)) == (2, 3, 1)
    assert mono_deg((2, 3, 1)) == 6


def test_degrevlex_vs_lex():
    # x*y^2 vs x^2: lex prefers the higher power of x, degrevlex the degree.
    a, b = (1, 2, 0), (2, 0, 0)
    assert DEGREVLEX.key(a) > DEGREVLEX.key(b)
    assert LEX.key(a) < LEX.key(b)


def test_degrevlex_ties_break_by_reverse_last_variable():
    # Same total degree: x*y^2 > y^3 because its last exponent is smaller.
    assert DEGREVLEX.key((1, 2, 0)) > DEGREVLEX.key((0, 3, 0))


def test_block_elimination_order_puts_aux_first():
    order = BlockElim(1)
    # Any positive power of the first (auxiliary) variable dominates.
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))


def test_order_by_name():
    assert order_by_name("degrevlex") is DEGREVLEX
    assert order_by_name("lex") is LEX
    with pytest.raises(Exception):
        order_by_name("mystery")


def test_parse_round_trip():
    p = poly("x^2*y - 3*x + 2")
    assert p.render(VARS) == "x^2*y - 3*x + 2"


def test_parse_caret_and_doublestar_agree():
    assert poly("x^3 + y**2") == poly("x**3 + y^2")


def test_parse_rejects_unknown_variable():
    with pytest.raises(ParseError):
        parse_polynomial("x + w", QQ, VARS)


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        poly("x + + *")


def test_arithmetic_in_characteristic_two():
    p = parse_polynomial("x + y", GF(2), VARS)
    assert (p + p).is_zero()
    sq = p * p
    assert sq == parse_polynomial("x^2 + y^2", GF(2), VARS)


def test_monic_and_leading_terms():
    p = poly("2*x^2 + 4*y")
    m = p.monic(DEGREVLEX)
    assert m.leading_coeff(DEGREVLEX) == QQ.one()
    assert p.leading_monomial(DEGREVLEX) == (2, 0, 0)
    assert p.total_degree() == 2


@st.composite
def polynomials(draw, field=QQ):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 1)),
        st.integers(-4, 4).filter(bool),
        max_size=5))
    return Polynomial(field, 3, dict(terms))


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r


@given(polynomials())
def test_render_reparses_to_same_polynomial(p):
    text = p.render(VARS)
    assert parse_polynomial(text, QQ, VARS) == p
