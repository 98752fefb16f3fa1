from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetmetric.errors import PresentationSyntaxError, RangeError
from jetmetric.presentation import (
    FamilyTemplate,
    Presentation,
    instantiate_template,
    parse_presentation,
    print_presentation,
)

from conftest import random_presentation_text


def test_parse_minimal_graded():
    p = parse_presentation("ring Q[x, y]\ngraded\nideal: x^2 + y^2")
    assert p.vars == ("x", "y")
    assert p.mode == "graded"
    assert len(p.gens) == 1
    assert p.field.kind == "rationals"


def test_parse_local_with_comment_and_blank_lines():
    text = """
# a cuspidal curve germ
ring Q[x, y]
local

ideal: y^2 - x^3
"""
    p = parse_presentation(text)
    assert p.mode == "local"
    assert p.gens[0].order() == 2


def test_parse_prime_and_extension_fields():
    p = parse_presentation("ring F_5[x]\ngraded\nideal: x^3")
    assert p.field.kind == "prime-field" and p.field.p == 5
    q = parse_presentation(
        "ring F_2^2 minpoly a^2 + a + 1[x, y]\ngraded\nideal: x*y")
    assert q.field.kind == "extension-field"
    assert q.field.p == 2 and q.field.m == 2


def test_parse_empty_ideal_and_tuple():
    p = parse_presentation("ring Q[x]\ngraded\nideal: ;\ntuple: x")
    assert p.gens == []
    assert p.tuple is not None and len(p.tuple) == 1


def test_semicolon_terminates_statements():
    p = parse_presentation("ring Q[x, y]; graded; ideal: x^2, y^2")
    assert len(p.gens) == 2


def test_rational_coefficients_and_parenthesized_exponents():
    p = parse_presentation("ring Q[x]\nlocal\nideal: 1/2*x^2 - x^(2+1)")
    g = p.gens[0]
    assert g.terms[(2,)] == Fraction(1, 2)
    assert g.terms[(3,)] == Fraction(-1)


@pytest.mark.parametrize("bad", [
    "graded\nideal: x",                        # missing ring statement
    "ring Q[x]\nideal: x",                     # missing mode
    "ring Q[x]\ngraded\nideal: x^2; x*y",      # ';' ends the statement
    "ring Q[x]\ngraded\nideal: y",             # unknown variable
    "ring Q[x]\ngraded\nideal: x^-2",          # negative exponent
    "ring Q[x]\ngraded\nideal: 1/0*x",         # zero denominator
])
def test_syntax_errors(bad):
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(bad)


def test_nonprime_field_modulus_rejected():
    from jetmetric.errors import FieldError
    with pytest.raises(FieldError):
        parse_presentation("ring F_4[x]\ngraded\nideal: x")


def test_error_carries_line_and_column():
    try:
        parse_presentation("ring Q[x]\ngraded\nideal: x + %")
    except PresentationSyntaxError as e:
        assert e.line == 3
        assert e.column > 0
    else:
        pytest.fail("expected a syntax error")


def test_print_parse_roundtrip_fixed_cases():
    texts = [
        "ring Q[x, y]\nlocal\nideal: y^2 - x^3",
        "ring F_3[x, y, z]\ngraded\nideal: x^2 + 2*y*z, z^3",
        "ring Q[x]\ngraded\nideal: ;",
        "ring Q[u, v]\nlocal\nideal: u*v\ntuple: u + v, v^2",
        "ring F_2^2 minpoly a^2 + a + 1[x]\ngraded\nideal: x^2",
    ]
    for t in texts:
        p = parse_presentation(t)
        assert parse_presentation(print_presentation(p)) == p


@given(st.integers(0, 10**6), st.sampled_from(["Q", "F_2", "F_3"]),
       st.integers(1, 3), st.sampled_from(["graded", "local"]))
@settings(max_examples=80, deadline=None)
def test_print_parse_roundtrip_random(seed, field, nvars, mode):
    import random
    text = random_presentation_text(random.Random(seed), field, nvars, mode)
    p = parse_presentation(text)
    assert parse_presentation(print_presentation(p)) == p


def test_template_instantiation_substitutes_placeholder():
    tpl = FamilyTemplate("ring Q[x, y]\nlocal\nideal: y^2 - x^w", 1, 10)
    p3 = instantiate_template(tpl, 3)
    assert p3.gens[0].terms[(3, 0)] == Fraction(-1)
    with pytest.raises(RangeError):
        instantiate_template(tpl, 11)
    with pytest.raises(RangeError):
        FamilyTemplate("ring Q[x]\nlocal\nideal: x^w", 5, 2)


def test_template_placeholder_in_arithmetic():
    tpl = FamilyTemplate("ring Q[x]\nlocal\nideal: x^(w+1)", 1, 4)
    assert instantiate_template(tpl, 2).gens[0].degree() == 3


def test_variable_named_w_is_not_substituted_inside_names():
    # only the standalone token w is a placeholder; ww stays a variable
    tpl = FamilyTemplate("ring Q[ww]\nlocal\nideal: ww^w", 2, 5)
    p = instantiate_template(tpl, 2)
    assert p.vars == ("ww",)
    assert p.gens[0].degree() == 2


def test_presentation_equality_ignores_nothing():
    a = parse_presentation("ring Q[x]\ngraded\nideal: x^2")
    b = parse_presentation("ring Q[x]\ngraded\nideal: x^2")
    c = parse_presentation("ring Q[x]\nlocal\nideal: x^2")
    assert a == b
    assert a != c
    assert isinstance(a, Presentation)
