import random

import pytest
from hypothesis import given, settings, strategies as st

from semigraded import corpus
from semigraded.errors import AlgebraError
from semigraded.exact import GF
from semigraded.ncpoly import (
    NcPolynomial,
    commutator,
    decompose,
    from_words,
    multiply,
    normal_form,
    power,
    reassemble,
    word_product,
)
from semigraded.presentation import make_presentation


def test_weyl_normal_forms(weyl_q):
    assert str(normal_form(weyl_q, "y*x^3")) == "x^3*y + 3*x^2"
    xy = NcPolynomial.parse(weyl_q, "x*y")
    assert str(xy * xy) == "x^2*y^2 + x*y"
    x, y = NcPolynomial.generator(weyl_q, "x"), NcPolynomial.generator(weyl_q, "y")
    assert commutator(y, x) == NcPolynomial.one(weyl_q)


def test_three_dim_normal_form(three_dim):
    assert str(normal_form(three_dim, "y*y*x")) == "x*y^2 - 2*y*z"
    assert str(normal_form(three_dim, "z*y*x")) == "x*y*z - z^2"


def test_strategies_agree(three_dim):
    for w in ["z*y*x*y*x", "y*y*z*x*x", "y^3*x^3"]:
        assert normal_form(three_dim, w, "leftmost") == normal_form(three_dim, w, "rightmost")
    with pytest.raises(ValueError):
        normal_form(three_dim, "x", "random")


def test_characteristic_reduces(load):
    p = load("weyl_gf2")
    assert str(normal_form(p, "y*x^2")) == "x^2*y"
    assert str(normal_form(p, "y*x^3")) == "x^3*y + x^2"


def test_scalars_and_arithmetic(weyl_q):
    a = NcPolynomial.parse(weyl_q, "x + 2")
    assert str(3 * a) == "3*x + 6"
    assert str(a - 2) == "x"
    assert str(2 - a) == "-x"
    assert (a**2) == power(a, 2) == a * a
    assert NcPolynomial.zero(weyl_q).degree() == -1
    assert a.degree() == 1 and not a.is_homogeneous()


def test_decompose_and_reassemble(three_dim):
    a = normal_form(three_dim, "y^2*x + x*y + z + 5")
    parts = decompose(a)
    assert list(parts) == [0, 1, 2, 3]
    assert all(c.is_homogeneous() and c.degree() == d for d, c in parts.items())
    assert reassemble(parts, three_dim) == a


def test_mismatch_rejected(weyl_q, three_dim):
    with pytest.raises(AlgebraError) as err:
        NcPolynomial.generator(weyl_q, 0) * NcPolynomial.generator(three_dim, 0)
    assert err.value.code == "PRESENTATION_MISMATCH"


def test_from_words(weyl_q):
    assert str(from_words(weyl_q, [(0, 1), (0,)])) == "x*y + x"
    with pytest.raises(ValueError):
        from_words(weyl_q, [(1, 0)])


def test_weighted_generators():
    p = make_presentation(GF(3), [("x", 1), ("w", 2)], {(1, 0): {(1, 1): 1, (3, 0): 2}})
    assert str(normal_form(p, "w*x")) == "2*x^3 + x*w"
    assert normal_form(p, "w*x").degree() == 3
    with pytest.raises(ValueError):
        normal_form(p, [(1, (0, 2))])


def _random_poly(p, rng, max_deg=3, terms=3):
    acc = NcPolynomial.zero(p)
    for _ in range(rng.randint(1, terms)):
        word = tuple(rng.randrange(p.ngens) for _ in range(rng.randint(0, max_deg)))
        acc = acc + word_product(p, word).scale(p.field.coerce(rng.randint(-3, 3)))
    return acc


@pytest.mark.parametrize("name", corpus.CORE)
def test_associativity_random_triples(name):
    p = corpus.load(name)
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (_random_poly(p, rng, max_deg=2, terms=2) for _ in range(3))
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("name", corpus.CORE)
def test_degree_law(name):
    p = corpus.load(name)
    rng = random.Random(11)
    for _ in range(100):
        a, b = _random_poly(p, rng), _random_poly(p, rng)
        prod = a * b
        if not prod.is_zero():
            assert prod.degree() <= a.degree() + b.degree()


@pytest.mark.parametrize("name", corpus.CORE)
def test_cache_transparency(name):
    p = corpus.load(name)
    rng = random.Random(3)
    for _ in range(40):
        a, b = _random_poly(p, rng), _random_poly(p, rng)
        assert multiply(a, b, cache=False) == multiply(a, b)


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from(corpus.CORE))
def test_word_product_matches_rewriting(data, name):
    p = corpus.load(name)
    word = tuple(data.draw(st.lists(st.integers(0, p.ngens - 1), max_size=7)))
    assert word_product(p, word) == normal_form(p, [(1, word)]) == normal_form(p, [(1, word)], "rightmost")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(corpus.CORE))
def test_decompose_identity(seed, name):
    p = corpus.load(name)
    a = _random_poly(p, random.Random(seed), max_deg=4, terms=4)
    parts = decompose(a)
    assert reassemble(parts, p) == a
    assert sorted(parts) == list(parts)
