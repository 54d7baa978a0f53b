import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from torusrep import laurent, vectorfield as vf
from torusrep.errors import RankMismatch
from torusrep.laurent import gen, monomial, one, zero
from torusrep.vectorfield import (
    Derivation,
    ad_pow,
    basis_field,
    bracket,
    constant_field,
    monomial_field,
    monomial_field_ad_pow,
    monomial_field_bracket,
    root_on_constant,
    zero_field,
)

coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(
    lambda f: f != 0
)


def polys(rank=2, max_terms=3, max_exp=2):
    exps = st.tuples(*([st.integers(-max_exp, max_exp)] * rank))
    terms = st.lists(st.tuples(exps, coeffs), max_size=max_terms)
    return terms.map(
        lambda ts: sum((monomial(rank, e, c) for e, c in ts), zero(rank))
    )


def fields(rank=2):
    return st.tuples(*([polys(rank, max_terms=2)] * rank)).map(Derivation)


# -- application to functions -------------------------------------------------

def test_apply_monomial_rule():
    # z1*D1 applied to z1^2 z2^-1: the D1 action contributes the exponent 2
    d = Derivation([gen(2, 0), zero(2)])
    f = monomial(2, (2, -1))
    assert d.apply(f) == monomial(2, (3, -1), 2)


def test_derivations_kill_constants():
    d = Derivation([gen(2, 0) + 3 * gen(2, 1), monomial(2, (-1, 2), Fraction(1, 2))])
    assert d.apply(laurent.const(2, Fraction(7, 3))).is_zero()


def test_basis_fields_are_dual_to_variables():
    for i in range(2):
        for j in range(2):
            expected = gen(2, j) if i == j else zero(2)
            assert basis_field(2, i).apply(gen(2, j)) == expected


def test_apply_rank_mismatch():
    with pytest.raises(RankMismatch):
        basis_field(2, 0).apply(zero(3))


@given(fields(), polys(), polys())
@settings(max_examples=60)
def test_leibniz(d, f, g):
    assert d.apply(f * g) == d.apply(f) * g + f * d.apply(g)


# -- brackets ------------------------------------------------------------------

def test_bracket_examples():
    z1d1 = Derivation([gen(2, 0), zero(2)])
    z1d2 = Derivation([zero(2), gen(2, 0)])
    assert bracket(z1d1, z1d2) == Derivation([zero(2), monomial(2, (2, 0))])

    z1inv_d1 = Derivation([monomial(2, (-1, 0)), zero(2)])
    assert bracket(z1d1, z1inv_d1) == constant_field(2, [-2, 0])

    assert bracket(basis_field(2, 0), basis_field(2, 1)).is_zero()


@given(fields(), fields())
@settings(max_examples=40)
def test_antisymmetry(d, e):
    assert bracket(d, e) == -bracket(e, d)


@given(fields(), fields(), fields())
@settings(max_examples=25, deadline=None)
def test_jacobi(d, e, f):
    total = (bracket(d, bracket(e, f))
             + bracket(e, bracket(f, d))
             + bracket(f, bracket(d, e)))
    assert total.is_zero()


def test_ad_pow_base_case():
    d = Derivation([gen(2, 0), one(2)])
    e = Derivation([zero(2), gen(2, 1)])
    assert ad_pow(d, 1, e) == bracket(d, e)


def test_ad_pow_serre_instance():
    # the k=2 iterated bracket that encodes the simply-laced Serre relation
    d = monomial_field(2, (1, 0), [1, -1])
    e = monomial_field(2, (0, 1), [0, 1])
    assert ad_pow(d, 2, e).is_zero()
    assert not ad_pow(d, 1, e).is_zero()


def test_ad_pow_orthogonal_case():
    d = monomial_field(2, (1, 0), [1, 0])
    e = monomial_field(2, (0, 1), [0, 1])
    assert ad_pow(d, 2, e).is_zero()


def test_ad_pow_rejects_zero_power():
    d = basis_field(2, 0)
    with pytest.raises(ValueError):
        ad_pow(d, 0, d)


# -- closed forms ----------------------------------------------------------------

def test_closed_bracket_matches_direct():
    rng = random.Random(7)
    for _ in range(50):
        rank = rng.choice([1, 2, 3])
        alpha = [rng.randint(-2, 2) for _ in range(rank)]
        beta = [rng.randint(-2, 2) for _ in range(rank)]
        h = [Fraction(rng.randint(-3, 3)) for _ in range(rank)]
        hp = [Fraction(rng.randint(-3, 3)) for _ in range(rank)]
        direct = bracket(monomial_field(rank, alpha, h),
                         monomial_field(rank, beta, hp))
        assert direct == monomial_field_bracket(rank, alpha, h, beta, hp)


def test_closed_ad_pow_matches_iterated():
    rng = random.Random(11)
    for _ in range(50):
        rank = rng.choice([2, 3])
        k = rng.randint(2, 4)
        alpha = [rng.randint(-2, 2) for _ in range(rank)]
        beta = [rng.randint(-2, 2) for _ in range(rank)]
        h = [Fraction(rng.randint(-3, 3)) for _ in range(rank)]
        hp = [Fraction(rng.randint(-3, 3)) for _ in range(rank)]
        iterated = ad_pow(monomial_field(rank, alpha, h), k,
                          monomial_field(rank, beta, hp))
        assert iterated == monomial_field_ad_pow(rank, alpha, h, k, beta, hp)


def test_root_pairing_on_basis_fields():
    for i in range(3):
        for j in range(3):
            root = [1 if a == i else 0 for a in range(3)]
            assert root_on_constant(root, basis_field(3, j)) == (i == j)


# -- display ----------------------------------------------------------------------

def test_render_log_basis():
    d = Derivation([zero(2), monomial(2, (2, 0))])
    assert vf.render(d) == "z1^2*D2"


def test_render_ddz_basis():
    d = Derivation([zero(2), monomial(2, (3, -1))])
    assert vf.render(d, basis="ddz") == "z1^3*d/dz2"


def test_render_zero():
    assert vf.render(zero_field(2)) == "0"


def test_json_roundtrip():
    d = Derivation([gen(2, 1) - 2, monomial(2, (1, -2), Fraction(5, 3))])
    assert vf.from_json(vf.to_json(d), 2) == d
