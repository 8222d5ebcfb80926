import random

import pytest
from hypothesis import given, settings, strategies as st

from randomgen import random_fraction, random_poly
from semigraded import corpus
from semigraded.errors import AlgebraError
from semigraded.localization import (
    central_denominator,
    divide_by_denominator,
    embed,
    frac_decompose,
    frac_reassemble,
    fraction,
    parse_fraction,
)
from semigraded.ncpoly import NcPolynomial

CASES = [("3dim", "z"), ("weyl_gf2", "x^2"), ("jordan_gf3", "y^3")]


def poly(p, text):
    return NcPolynomial.parse(p, text)


@pytest.fixture(scope="module")
def zden(three_dim):
    return central_denominator(three_dim, "z")


def test_sum_over_common_denominator(three_dim, zden):
    a = parse_fraction(zden, "(x)/z")
    b = parse_fraction(zden, "(x)/z^2")
    assert str(a + b) == "(x*z + x)/z^2"


def test_cancellation(three_dim, zden):
    assert str(parse_fraction(zden, "(z^3)/z^2")) == "z"
    assert str(parse_fraction(zden, "(x*z)/z")) == "x"
    assert parse_fraction(zden, "(x*z - x*z)/z^4").denom_exp == 0


def test_decomposition(three_dim, zden):
    f = parse_fraction(zden, "(x*z + x)/z^2")
    parts = frac_decompose(f)
    assert {d: str(c) for d, c in parts.items()} == {-1: "(x)/z^2", 0: "(x)/z"}
    assert frac_reassemble(parts, zden) == f


def test_degrees(three_dim, zden):
    assert parse_fraction(zden, "(x^2)/z^5").degree() == -3
    assert parse_fraction(zden, "x*y").degree() == 2


def test_denominator_validation(three_dim, weyl_q):
    with pytest.raises(AlgebraError) as err:
        central_denominator(three_dim, "x")
    assert err.value.code == "NOT_CENTRAL"
    with pytest.raises(AlgebraError) as err:
        central_denominator(three_dim, "z + 1")
    assert err.value.code == "BAD_DENOMINATOR"
    with pytest.raises(AlgebraError) as err:
        central_denominator(three_dim, "0")
    assert err.value.code == "BAD_DENOMINATOR"
    assert str(central_denominator(three_dim, "3*z^2")) == "z^2"
    with pytest.raises(AlgebraError):
        central_denominator(weyl_q, "x")


def test_denominator_mismatch(three_dim, zden):
    with pytest.raises(AlgebraError) as err:
        parse_fraction(zden, "(x)/y")
    assert err.value.code == "DENOMINATOR_MISMATCH"
    other = central_denominator(three_dim, "z^2")
    with pytest.raises(AlgebraError) as err:
        parse_fraction(zden, "x") + parse_fraction(other, "x")
    assert err.value.code == "DENOMINATOR_MISMATCH"


def test_division(three_dim, zden):
    assert divide_by_denominator(poly(three_dim, "x*z^2 + z"), zden) == poly(three_dim, "x*z + 1")
    assert divide_by_denominator(poly(three_dim, "x*z + y"), zden) is None


def test_central_powers_as_denominators(weyl_gf2):
    den = central_denominator(weyl_gf2, "x^2")
    f = fraction(poly(weyl_gf2, "y"), 1, den)
    g = embed(poly(weyl_gf2, "x^2"), den)
    assert f * g == embed(poly(weyl_gf2, "y"), den)


@pytest.mark.parametrize("name, c", CASES)
def test_ring_laws(name, c):
    p = corpus.load(name)
    den = central_denominator(p, c)
    rng = random.Random(5)
    one = embed(NcPolynomial.one(p), den)
    for _ in range(30):
        a, b, e = (random_fraction(den, rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) - b == a
        assert a * one == a == one * a
        assert a * (b + e) == a * b + a * e
        assert (a * b) * e == a * (b * e)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(CASES))
def test_embedding_is_a_ring_map(seed, case):
    name, c = case
    p = corpus.load(name)
    den = central_denominator(p, c)
    rng = random.Random(seed)
    r, s = random_poly(p, rng, 2, 2), random_poly(p, rng, 2, 2)
    assert embed(r, den) * embed(s, den) == embed(r * s, den)
    assert embed(r, den) + embed(s, den) == embed(r + s, den)
    # c^k times f/c^k gives back f
    f = random_fraction(den, rng)
    assert embed(den.power(f.denom_exp), den) * f == embed(f.numerator, den)
