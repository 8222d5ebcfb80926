from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from semigraded import corpus
from semigraded.errors import MixedFieldsError, PresentationError
from semigraded.exact import GF, QQ
from semigraded.presentation import (
    make_presentation,
    parse_expression,
    parse_presentation,
    presentation_digest,
    render_presentation,
    two_gen_presentation,
    validate,
)

WEYL = """\
# Weyl algebra
field Q
gen x 1
gen y 1
rel y*x = x*y + 1
"""


def test_parse_weyl():
    p = parse_presentation(WEYL)
    assert p.generators == ("x", "y")
    assert p.degrees == (1, 1)
    assert p.rule(1, 0) == {(1, 1): 1, (0, 0): 1}
    assert p.field == QQ


def test_semicolons_and_comments():
    p = parse_presentation("field GF(3); gen x 1; gen y 1  # two generators\nrel y*x = 2*x*y")
    assert p.field == GF(3)
    assert p.rule(1, 0) == {(1, 1): 2}


def test_coefficients_reduced_and_merged():
    p = parse_presentation("field GF(5)\ngen x 1\ngen y 1\nrel y*x = 3*x*y + 4*x*y + 7 - 2")
    assert p.rule(1, 0) == {(1, 1): 2}
    q = parse_presentation("field Q\ngen x 1\ngen y 1\nrel y*x = 1/2*x*y - x + x")
    assert q.rule(1, 0) == {(1, 1): Fraction(1, 2)}


@pytest.mark.parametrize(
    "text, code, line",
    [
        ("field Q\ngen x 1\ngen y 1\nrel y*x = x*y +\n", "SYNTAX_ERROR", 4),
        ("field Q\ngen x 1\ngen y 1\nrel y*x = x*w\n", "UNKNOWN_GENERATOR", 4),
        ("field Q\ngen x 1\ngen y 1\nrel y*x = x*y\nrel y*x = x*y\n", "DUPLICATE_RULE", 5),
        ("field Q\ngen x 1\ngen y 1\nrel x*y = y*x\n", "NON_PBW_LHS", 4),
        ("field Q\ngen x 1\ngen y 1\nrel y^2*x = x*y\n", "NON_PBW_LHS", 4),
        ("field Q\ngen x 1\ngen y 1\nrel y*x = x^3\n", "DEGREE_VIOLATION", 4),
        ("field Q\ngen x 1\ngen y 1\nrel y*x = y*x\n", "NON_STANDARD_RHS", 4),
        ("field Q\ngen x 1\ngen x 1\n", "DUPLICATE_GENERATOR", 3),
        ("field GF(4)\ngen x 1\n", "SYNTAX_ERROR", 1),
        ("field Q\ngen x 1\ngen y 1\n", "MISSING_RULE", None),
        ("field Q\ngen x 1\nbogus\n", "SYNTAX_ERROR", 3),
    ],
)
def test_parse_errors(text, code, line):
    with pytest.raises(PresentationError) as err:
        parse_presentation(text)
    assert err.value.code == code
    assert err.value.line == line
    if line is not None:
        assert f"line {line}" in str(err.value)


def test_weighted_degrees():
    p = corpus.load("homogenized_weyl")
    assert p.degrees == (1, 1, 1)
    q = parse_presentation("field Q\ngen x 1\ngen w 2\nrel w*x = x*w + x^3")
    assert q.monomial_degree((3, 0)) == 3
    with pytest.raises(PresentationError):
        parse_presentation("field Q\ngen x 1\ngen w 2\nrel w*x = x*w + x^2*w")


def test_two_gen_presentation():
    p = two_gen_presentation(2, 0, 1, 3, GF(5))
    assert p.rule(1, 0) == {(1, 1): 2, (0, 1): 1, (0, 0): 3}
    with pytest.raises(MixedFieldsError):
        two_gen_presentation(GF(5)(2), 0, 0, 1, GF(3))


def test_parse_expression():
    p = parse_presentation(WEYL)
    assert parse_expression(p, "y*x^2 - 3") == [(1, (1, 0, 0)), (-3, ())]
    with pytest.raises(PresentationError) as err:
        parse_expression(p, "x*q")
    assert err.value.code == "UNKNOWN_GENERATOR"


@pytest.mark.parametrize("name", corpus.names())
def test_corpus_round_trip(name):
    p = corpus.load(name)
    assert parse_presentation(render_presentation(p)) == p


def test_digest_ignores_layout():
    a = parse_presentation(WEYL)
    b = parse_presentation("  field   Q ;gen x 1;  gen y 1 # c\n\n rel  y * x=x*y+1  ")
    assert presentation_digest(a) == presentation_digest(b)
    c = parse_presentation(WEYL.replace("+ 1", "+ 2"))
    assert presentation_digest(a) != presentation_digest(c)


@pytest.mark.parametrize("name", corpus.CORE)
def test_core_corpus_validates(name):
    report = validate(corpus.load(name), 5, samples=100)
    assert report.ok
    assert report.confluent_to_degree == 5
    assert report.sg_axiom_verified_to_degree == 5


def test_non_confluent_detected(non_confluent):
    report = validate(non_confluent, 4, samples=50)
    assert not report.ok
    kinds = {k for _, _, k in report.violations}
    assert "overlap" in kinds
    assert any(w == "z*y*x" for w, _, _ in report.violations)


def test_validate_rejects_tiny_bound():
    with pytest.raises(ValueError):
        validate(parse_presentation(WEYL), 1)


scalars = st.integers(-4, 4)
field_st = st.sampled_from([QQ, GF(2), GF(3), GF(7)])


@settings(max_examples=50, deadline=None)
@given(scalars, scalars, scalars, scalars, field_st)
def test_render_parse_round_trip(d, e, f, g, field):
    p = two_gen_presentation(d, e, f, g, field)
    assert parse_presentation(render_presentation(p)) == p


@settings(max_examples=30, deadline=None)
@given(st.lists(scalars, min_size=9, max_size=9), field_st, st.sampled_from([" ", "  ", "\t"]))
def test_digest_whitespace_invariance(cs, field, pad):
    rules = {
        (1, 0): {(1, 1, 0): cs[0], (0, 0, 1): cs[1], (0, 0, 0): cs[2]},
        (2, 0): {(1, 0, 1): cs[3], (1, 0, 0): cs[4], (0, 0, 0): cs[5]},
        (2, 1): {(0, 1, 1): cs[6], (0, 2, 0): cs[7], (0, 0, 0): cs[8]},
    }
    p = make_presentation(field, [("x", 1), ("y", 1), ("z", 1)], rules)
    text = render_presentation(p)
    spaced = "\n".join(pad + line.replace(" ", pad) + pad + "# note" for line in text.splitlines())
    assert presentation_digest(parse_presentation(spaced)) == presentation_digest(p)
