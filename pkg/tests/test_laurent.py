from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from torusrep import laurent
from torusrep.errors import NotAUnit, ParseError, RankMismatch
from torusrep.laurent import LaurentPoly, const, gen, monomial, one, parse, render, zero


def z(i, rank=2):
    return gen(rank, i)


# -- strategies -------------------------------------------------------------

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(
    lambda f: f != 0
)


def polys(rank=2, max_terms=4, max_exp=3):
    exps = st.tuples(*([st.integers(-max_exp, max_exp)] * rank))
    terms = st.lists(st.tuples(exps, coeffs), max_size=max_terms)
    return terms.map(
        lambda ts: sum((monomial(rank, e, c) for e, c in ts), zero(rank))
    )


units = st.tuples(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), coeffs
).map(lambda t: monomial(2, t[0], t[1]))


# -- arithmetic --------------------------------------------------------------

def test_difference_of_squares():
    p = (z(0) + z(1)) * (z(0) - z(1))
    assert p == monomial(2, (2, 0)) - monomial(2, (0, 2))


def test_additive_identity():
    p = monomial(2, (1, -1), Fraction(3, 2)) + z(1)
    assert p + zero(2) == p
    assert p + 0 == p


def test_unit_cancellation():
    p = monomial(2, (1, 0), Fraction(1, 2)) * monomial(2, (-1, 0), 2)
    assert p == one(2)


def test_rank_mismatch_rejected():
    with pytest.raises(RankMismatch):
        zero(2) + zero(3)
    with pytest.raises(RankMismatch):
        gen(2, 0) * gen(3, 0)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


# -- units and powers --------------------------------------------------------

def test_invert_monomial():
    p = monomial(2, (1, -2), 3)
    assert p.inverse() == monomial(2, (-1, 2), Fraction(1, 3))


def test_invert_nonunit():
    with pytest.raises(NotAUnit):
        (z(0) + 1).inverse()
    with pytest.raises(NotAUnit):
        zero(2).inverse()


def test_invert_one():
    assert one(2).inverse() == one(2)


def test_power_examples():
    assert (z(0) * z(1)) ** 3 == monomial(2, (3, 3))
    assert (2 * z(0)) ** -1 == monomial(2, (-1, 0), Fraction(1, 2))
    sq = (z(0) + 1) ** 2
    assert sq == monomial(2, (2, 0)) + 2 * z(0) + one(2)


def test_power_zero_is_one():
    assert (z(0) + 7) ** 0 == one(2)


def test_negative_power_of_nonunit():
    with pytest.raises(NotAUnit):
        (z(0) + 1) ** -2


@given(units, st.integers(-5, 5), st.integers(-5, 5))
def test_unit_power_addition(u, a, b):
    assert u ** a * u ** b == u ** (a + b)


@given(units)
def test_unit_times_inverse(u):
    assert u * u.inverse() == one(2)


# -- text and JSON forms -------------------------------------------------------

def test_render_examples():
    p = monomial(2, (2, -1), Fraction(3, 2)) + monomial(2, (0, 0), -2)
    assert render(p) == "3/2*z1^2*z2^-1 - 2"
    assert render(zero(2)) == "0"
    assert render(-z(0)) == "-z1"


def test_parse_examples():
    assert parse("3/2*z1^2*z2^-1 + z2", 2) == monomial(2, (2, -1), Fraction(3, 2)) + z(1)
    assert parse("0", 3) == zero(3)
    assert parse("-z1 - 1/2", 1) == -gen(1, 0) - const(1, Fraction(1, 2))
    assert parse("2*z1*z1", 1) == monomial(1, (2,), 2)


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse("z1 + $", 2)
    with pytest.raises(ParseError):
        parse("z9", 2)
    with pytest.raises(ParseError):
        parse("", 2)


@given(polys())
def test_text_roundtrip(p):
    assert parse(render(p), 2) == p


@given(polys(rank=3))
def test_json_roundtrip(p):
    assert laurent.from_json(laurent.to_json(p), 3) == p


def test_sorted_terms_are_descending_lex():
    p = z(1) + z(0) + monomial(2, (1, 1)) + one(2)
    keys = [e for e, _ in p.sorted_terms()]
    assert keys == sorted(keys, reverse=True)
