"""Validation of sextics and reduction to normal form."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sextic.errors import CubicVanishes, MissingX3Square, NotHomogeneous, WrongDegree
from sextic.families import TABLE_ROWS, disguise, normal_form_member, table_member
from sextic.io.parse import parse_polynomial as P
from sextic.normal_form import EQ1, EQ2, EQ3, classify_case, normalize
from sextic.wps import RING, WPSPoint, is_quasi_smooth, validate


def test_validate_accepts_sextic():
    X = validate(P("x3^2 + x2^3 + x1^6"))
    assert X.x3_square_coeff() == 1


@pytest.mark.parametrize(
    "text, error, offending",
    [
        ("x3^2 + x2^2", WrongDegree, ((0, 0, 2, 0, 0),)),
        ("x3^2 + x2^3 + x1", WrongDegree, ((1, 0, 0, 0, 0),)),
        ("x1 + x2", NotHomogeneous, ((0, 0, 1, 0, 0), (1, 0, 0, 0, 0))),
    ],
)
def test_validate_rejects(text, error, offending):
    with pytest.raises(error) as info:
        validate(P(text))
    assert info.value.offending == offending


def test_point_normalization():
    assert WPSPoint((2, 0, 0, 0, 0)) == WPSPoint((1, 0, 0, 0, 0))
    assert str(WPSPoint((0, 0, 2, 1, 0))) == "(0, 0, 1, 1/2, 0)"


def test_case_of_cubic():
    assert classify_case(P("x3^2 + x2*y2*(x2+y2) + x1^6")) == EQ3
    assert classify_case(P("x3^2 + x2^2*y2 + x1^6")) == EQ2
    assert classify_case(P("x3^2 + (x2+y2)^3 + x1^6")) == EQ1


def test_obstructions():
    with pytest.raises(CubicVanishes):
        normalize(validate(P("x3^2 + x1^6 + y1^6 + x1^2*x2^2")))
    with pytest.raises(MissingX3Square):
        normalize(validate(P("x2^3 + y2^3 + x1^6")))


def test_quadratic_field_normal_form():
    F = P("x3^2 + x2^3 - 2*x2*y2^2 + x1^6 + y1^6 + x1^2*y2^2")
    nf = normalize(validate(F))
    assert nf.case == EQ3 and nf.field.degree == 2
    assert nf.template() == F.substitute(nf.forward) * nf.scalar
    assert is_quasi_smooth(validate(F)).quasi_smooth


def _check_normal_form(F, row):
    nf = normalize(validate(F))
    assert nf.case == row.case
    assert nf.template() == F.substitute(nf.forward) * nf.scalar
    for v in RING.variables:
        assert nf.forward[v].substitute(nf.inverse) == RING.gen(v)
    return nf


@given(st.integers(0, 10**6), st.sampled_from(TABLE_ROWS))
def test_normal_form_round_trip(seed, row):
    _check_normal_form(table_member(random.Random(seed), row), row)


@given(st.integers(0, 10**6), st.sampled_from(TABLE_ROWS))
def test_normal_form_idempotent(seed, row):
    nf = normalize(validate(table_member(random.Random(seed), row)))
    again = normalize(validate(nf.template()))
    assert again.template() == nf.template()


@given(st.integers(0, 10**6), st.sampled_from(TABLE_ROWS))
def test_case_invariant_under_automorphisms(seed, row):
    rng = random.Random(seed)
    F = normal_form_member(rng, row)
    assert normalize(validate(disguise(rng, F))).case == normalize(validate(F)).case


@given(st.integers(0, 10**6))
def test_quasi_smooth_members_have_three_half_points(seed):
    from sextic.analysis import singularity_profile
    from sextic.families import random_cubic_member

    rng = random.Random(seed)
    X = validate(random_cubic_member(rng))
    qs = is_quasi_smooth(X)
    if not qs.quasi_smooth:
        return
    Y = validate(disguise(rng, X.F))
    assert is_quasi_smooth(Y).quasi_smooth
    try:
        nf = normalize(Y)
    except Exception:  # splitting field of degree 6: profile from the cubic
        nf = None
    profile = singularity_profile(Y, nf)
    assert profile.gorenstein == ()
    assert profile.multiset() == (("1/2(1,1,1)", 3),)


def test_points_over_a_field_with_rational_coordinates_are_rational():
    from sextic.algebra.numberfield import NumberField

    K = NumberField([1, 0, 1], "i")
    one = K(1)
    p = WPSPoint((0, 0, one, -one, 0), field=K)
    assert p.field is None
    assert str(p) == "(0, 0, 1, -1, 0)"
    q = WPSPoint((0, 0, one, K.gen(), 0), field=K)
    assert q.field is K
