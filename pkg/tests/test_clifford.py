import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msta_twistor.clifford import (
    AlgebraError,
    Multivector,
    NumericError,
    blade_mask,
    exp_series,
    format_multivector,
    geometric_product,
    grade_projection,
    parse_multivector,
    reverse,
)
from msta_twistor.msta import correlator
from msta_twistor.sta import gamma, i_sigma

from . import oracle

coef = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
sparse = st.dictionaries(st.integers(0, 255), coef, max_size=8).map(Multivector)
coef_any = st.floats(allow_nan=False, allow_infinity=False, width=64)
sparse_any = st.dictionaries(st.integers(0, 255), coef_any, max_size=8).map(Multivector)


def test_signature_entries():
    g0, g1 = Multivector.generator(0), Multivector.generator(1)
    assert g0 * g0 == Multivector.scalar(1.0)
    assert g1 * g1 == Multivector.scalar(-1.0)
    assert Multivector.generator(4) * Multivector.generator(4) == Multivector.scalar(1.0)
    assert Multivector.generator(7) * Multivector.generator(7) == Multivector.scalar(-1.0)


def test_cross_space_anticommute():
    a, b = gamma(0, 1), gamma(0, 2)
    assert a * b + b * a == Multivector()


@settings(max_examples=200, deadline=None)
@given(sparse, sparse)
def test_product_matches_word_oracle(a, b):
    assert geometric_product(a, b).isclose(oracle.product(a, b), 1e-9)


@settings(max_examples=100, deadline=None)
@given(sparse, sparse, sparse)
def test_associative(a, b, c):
    scale = max(1.0, a.max_abs() * b.max_abs() * c.max_abs())
    assert ((a * b) * c - a * (b * c)).max_abs() <= 1e-10 * scale


@settings(max_examples=100, deadline=None)
@given(sparse, sparse)
def test_distributive_and_reverse(a, b):
    c = Multivector({3: 1.5, 200: -2.0})
    assert (a * (b + c)).isclose(a * b + a * c, 1e-9)
    assert reverse(reverse(a)) == a
    assert reverse(a * b).isclose(reverse(b) * reverse(a), 1e-9)


def test_grade_projection():
    x = Multivector.scalar(1.0) + gamma(0, 1) * gamma(1, 1)
    assert grade_projection(x, 2) == gamma(0, 1) * gamma(1, 1)
    assert grade_projection(Multivector.scalar(3.0), 1) == Multivector()
    # E = 1/2 (1 - I sig3^1 I sig3^2) expanded with the word oracle
    isig1 = oracle.chain(*(oracle.gen(i) for i in (0, 1, 2, 3, 3, 0)))
    isig2 = oracle.chain(*(oracle.gen(i) for i in (4, 5, 6, 7, 7, 4)))
    e = (oracle.one() - oracle.product(isig1, isig2)).scale(0.5)
    assert e == correlator()
    assert grade_projection(correlator(), 0) == Multivector.scalar(0.5)
    assert correlator().grades() == {0, 4}
    with pytest.raises(AlgebraError):
        grade_projection(x, 9)
    with pytest.raises(AlgebraError):
        grade_projection(x, -1)


def test_reverse_examples():
    b = gamma(0, 1) * gamma(1, 1)
    assert reverse(b) == -b
    assert reverse(gamma(0, 1)) == gamma(0, 1)
    assert reverse(i_sigma(2, 1)) == -i_sigma(2, 1)


def test_exp_series():
    assert exp_series(Multivector()) == Multivector.scalar(1.0)
    nil = gamma(0, 1) + gamma(1, 1)  # squares to 1 - 1 = 0
    assert nil * nil == Multivector()
    assert exp_series(nil) == Multivector.scalar(1.0) + nil
    theta = math.pi / 3
    got = exp_series(i_sigma(3, 1).scale(theta), 1e-15)
    want = Multivector.scalar(math.cos(theta)) + i_sigma(3, 1).scale(math.sin(theta))
    assert got.isclose(want, 1e-15)
    big = exp_series(i_sigma(1, 1).scale(20.0), 1e-15)
    assert big.isclose(Multivector.scalar(math.cos(20.0)) + i_sigma(1, 1).scale(math.sin(20.0)), 1e-11)
    boost = gamma(1, 1) * gamma(0, 1)
    assert exp_series(boost.scale(0.7)).isclose(Multivector.scalar(math.cosh(0.7)) + boost.scale(math.sinh(0.7)), 1e-14)


def test_exp_series_caps_iterations():
    with pytest.raises(NumericError):
        exp_series(Multivector({1: 1.0, 3: 2.0}), tol=0.0, max_terms=3)


def test_blade_mask():
    assert blade_mask([1, 0]) == (0b11, -1)
    assert blade_mask([0, 1, 2]) == (0b111, 1)
    assert blade_mask([2, 2]) == (0, -1)
    assert blade_mask([4, 0]) == (0b10001, -1)


def test_format_examples():
    assert format_multivector(Multivector()) == "0"
    e = correlator()
    assert format_multivector(e) == "0.5 - 0.5*g1^g2^h1^h2"
    assert parse_multivector("0.5 - 0.5*g1^g2^h1^h2") == e


def test_parse_variants():
    assert parse_multivector("g0") == gamma(0, 1)
    assert parse_multivector("-h3") == -gamma(3, 2)
    assert parse_multivector("2*g1^g0") == (gamma(0, 1) * gamma(1, 1)).scale(-2.0)
    assert parse_multivector("1e-3*g0^h0 + 3") == Multivector({0b10001: 1e-3, 0: 3.0})
    for bad in ("g0^g0", "x1", "1 +", "g9"):
        with pytest.raises(AlgebraError):
            parse_multivector(bad)


@settings(max_examples=300, deadline=None)
@given(sparse_any)
def test_format_parse_round_trip_bit_exact(m):
    back = parse_multivector(format_multivector(m))
    assert back.terms == m.terms
