"""Discriminant curves, genus and Prym data, the intersection ledger, the
Eckardt family and the lattice enumeration."""

import random
from fractions import Fraction as Q

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sextic.analysis import eckardt_profile
from sextic.conic import (
    BASE_RING,
    CONIC,
    ECKARDT_RING,
    LEDGER_RING,
    PAPER,
    STANDARD_IDENTITIES,
    SURFACE_CATALOG,
    IntersectionLedger,
    binomial_cube,
    cb_invariants,
    conic_coefficients,
    curve_genus_adjunction,
    curve_smoothness,
    discriminant,
    eckardt_dehomogenize,
    eckardt_homogenize,
    germ_tag,
    ledger_eval,
    ledger_eval_product,
    prym_dimension,
)
from sextic.errors import PreconditionViolation
from sextic.families import TABLE_ROWS, random_eckardt_cubic, table_member
from sextic.io.parse import parse_polynomial as P
from sextic.lattice import canonical_class, gram_matrix, lattice_check_surf
from sextic.normal_form import normalize
from sextic.wps import validate


def test_eq2_example_discriminant():
    nf = normalize(validate(P("x3^2 + x2^2*y2 + x1*y1*y2^2 + x1^6 + y1^6")))
    D = discriminant(nf, PAPER)
    assert D.degree == 8
    assert D.D == P("x1*y1*(x1^6 + y1^6) - 4*x2^4", BASE_RING)
    assert curve_smoothness(discriminant(nf, CONIC).D).smooth
    assert germ_tag(D.D) == "T2"


def test_eq3_all_zero_discriminant():
    nf = normalize(validate(P("x3^2 + x2*y2*(x2 + y2)")))
    assert discriminant(nf, PAPER).D == P("-4*x2^4", BASE_RING)
    assert discriminant(nf, CONIC).D == P("-x2^4", BASE_RING)
    assert not curve_smoothness(discriminant(nf, CONIC).D).smooth


def test_germ_tag_through_quotient_point():
    D = P("x1^8 + y1^8 + x1*y1*x2^3", BASE_RING)
    assert germ_tag(D) == "ID1v"
    assert curve_smoothness(D).through_singular_point


@given(st.integers(0, 10**6), st.sampled_from(TABLE_ROWS))
def test_discriminant_degree_and_conventions(seed, row):
    nf = normalize(validate(table_member(random.Random(seed), row)))
    A, B, C = conic_coefficients(nf)
    paper, conic = discriminant(nf, PAPER), discriminant(nf, CONIC)
    assert paper.degree == conic.degree == 8
    assert paper.D == A * C - B * B * 4 and conic.D == A * C * 4 - B * B


def test_genus_and_prym():
    assert curve_genus_adjunction(8, Q(1, 2), -4) == 9
    assert curve_genus_adjunction(3, 1, -3) == 1  # plane cubic
    assert curve_genus_adjunction(4, 1, -3) == 3  # plane quartic
    assert curve_genus_adjunction(4, Q(1, 2), -4) == 1
    assert curve_genus_adjunction(6, Q(1, 2), -4) == 4
    p = prym_dimension(9)
    assert (p.dimension, p.cover_genus) == (8, 17)
    with pytest.raises(PreconditionViolation):
        prym_dimension(0)


def test_surface_catalog_and_cb_invariants():
    names = {e.name: e for e in SURFACE_CATALOG}
    assert names["P(1,1,2)"].h2 == Q(1, 2) and names["P(1,1,2)"].minus_k == 4
    assert cb_invariants(Q(1, 2), -2, 8) == (-1, 0)
    assert cb_invariants(1, -3, 6) == (-2, 6)


# -- intersection ledger ------------------------------------------------------------


def test_standard_identities():
    L = IntersectionLedger()
    for name, factors, expected in STANDARD_IDENTITIES:
        assert ledger_eval_product(L, *factors) == expected
        assert ledger_eval(L, P(name, LEDGER_RING)) == expected


fr = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@given(fr, fr, fr, fr)
def test_ledger_trilinear_matches_binomial(alpha, beta, a3, e3):
    L = IntersectionLedger(a3=a3, e3=e3)
    assert ledger_eval_product(L, *((alpha, beta),) * 3) == binomial_cube(L, alpha, beta)


@given(fr, fr, fr, fr, fr, fr)
def test_ledger_is_symmetric(a1, b1, a2, b2, a3, b3):
    L = IntersectionLedger()
    x, y, z = (a1, b1), (a2, b2), (a3, b3)
    assert ledger_eval_product(L, x, y, z) == ledger_eval_product(L, z, x, y) == ledger_eval_product(L, y, z, x)


# -- Eckardt family -----------------------------------------------------------------


@given(st.integers(0, 10**6), st.booleans())
def test_eckardt_round_trip(seed, generic):
    cubic = random_eckardt_cubic(random.Random(seed), generic)
    X = eckardt_homogenize(cubic)
    assert X.F.is_homogeneous(6)
    assert eckardt_dehomogenize(X) == cubic


@pytest.mark.slow
def test_eckardt_generic_profile():
    X = eckardt_homogenize(random_eckardt_cubic(random.Random(5), True))
    check = eckardt_profile(X)
    assert check.ok, check.detail


def test_eckardt_rejects_bad_input():
    with pytest.raises(PreconditionViolation):
        eckardt_homogenize(P("x3^2 + x2^4", ECKARDT_RING))
    with pytest.raises(PreconditionViolation):
        eckardt_homogenize(P("x3^2 + x1*x3", ECKARDT_RING))


# -- lattice ------------------------------------------------------------------------


@pytest.mark.parametrize("l", range(5))
def test_lattice(l):
    rep = lattice_check_surf(l)
    assert rep.k_squared == 8 - l
    assert rep.ok and rep.candidates > 0
    K = canonical_class(l)
    assert K.dot(K) == 8 - l


def test_gram_matrix_shape():
    G = gram_matrix(2)
    assert G.shape == (4, 4)
    assert np.array_equal(G, G.T)
    with pytest.raises(PreconditionViolation):
        lattice_check_surf(5)
