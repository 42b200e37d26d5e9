"""Number fields, linear algebra, polynomials, Groebner bases, solving, jets."""

import random
from fractions import Fraction as Q

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from sextic.algebra import linalg
from sextic.algebra.binary import binary_quadratic_rank, quadratic_coeffs, squarefree_pattern
from sextic.algebra.groebner import QuotientAlgebra, groebner, is_unit_ideal, normal_form
from sextic.algebra.jet import Jet
from sextic.algebra.numberfield import NumberField, adjoin_root, common_field, simplify
from sextic.algebra.poly import PolyRing
from sextic.algebra.solve import zero_dim_solve
from sextic.wps import RING

K3 = NumberField((-2, 0, 0, 1))  # t^3 - 2
fracs = st.fractions(min_value=-4, max_value=4, max_denominator=5)
elements = st.lists(fracs, min_size=3, max_size=3).map(
    lambda cs: sum((K3.gen() ** i * c for i, c in enumerate(cs)), K3(0))
)


# -- number fields -----------------------------------------------------------------


def test_field_basics():
    t = K3.gen()
    assert t**3 == K3(2)
    assert (t * t).inverse() * t * t == K3(1)
    assert K3.degree == 3
    with pytest.raises(ValueError):
        NumberField((-1, 0, 1))
    assert adjoin_root((-1, 0, 1)) is None
    assert adjoin_root((1, 0, 1)).degree == 2


@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == K3(0)
    if a != K3(0):
        assert a * a.inverse() == K3(1)


@given(elements)
def test_minimal_polynomial_annihilates(a):
    m = a.minimal_polynomial()
    value = K3(0)
    for i, c in enumerate(m):
        value = value + a**i * c
    assert value == K3(0)


def test_simplify_and_common_field():
    assert simplify(K3(Q(3, 2))) == Q(3, 2)
    assert common_field([Q(1), K3.gen()]) == K3


# -- linear algebra --------------------------------------------------------------


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=3, max_size=3))
def test_rank_nullity(m):
    M = [[Q(x) for x in row] for row in m]
    ns = linalg.nullspace(M)
    assert linalg.rank(M) + len(ns) == 4
    for v in ns:
        assert all(x == 0 for x in linalg.matvec(M, v))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_charpoly_matches_sympy(m):
    cp = linalg.charpoly([[Q(x) for x in row] for row in m])
    lam = sp.Symbol("lam")
    ref = sp.Poly(sp.Matrix(m).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
    assert [Q(int(sp.numer(c)), int(sp.denom(c))) for c in ref] == list(cp)


def test_solve_linear():
    assert linalg.solve([[Q(1), Q(1)], [Q(1), Q(-1)]], [Q(3), Q(1)]) == [Q(2), Q(1)]
    assert linalg.solve([[Q(1), Q(1)], [Q(2), Q(2)]], [Q(1), Q(3)]) is None


# -- polynomials ------------------------------------------------------------------

R3 = PolyRing(("a", "b", "c"))
A, B, C = R3.gens()


def _random_poly(rng, deg=3, terms=4, ring=R3):
    p = ring.zero()
    for _ in range(terms):
        e = [rng.randint(0, deg) for _ in range(ring.nvars)]
        if sum(e) <= deg:
            p = p + ring.monomial(e, rng.randint(-5, 5))
    return p


@given(st.randoms(use_true_random=False))
def test_substitution_is_a_ring_homomorphism(r):
    p, q = _random_poly(r), _random_poly(r)
    phi = {v: _random_poly(r, 2, 3) for v in R3.variables}
    assert (p * q).substitute(phi) == p.substitute(phi) * q.substitute(phi)
    assert (p + q).substitute(phi) == p.substitute(phi) + q.substitute(phi)


@given(st.randoms(use_true_random=False))
def test_leibniz_rule(r):
    p, q = _random_poly(r), _random_poly(r)
    assert (p * q).diff("a") == p.diff("a") * q + p * q.diff("a")


def test_weighted_degree():
    x1, y1, x2, y2, x3 = RING.gens()
    F = x3**2 + x2**3 + x1**6
    assert F.is_homogeneous(6)
    assert not (F + x1).is_homogeneous()
    assert F.degree_in("x2") == 3


# -- Groebner bases ----------------------------------------------------------------

a_, b_, c_ = sp.symbols("a b c")


def _to_sympy(p):
    return sum(
        sp.Rational(c.numerator, c.denominator) * a_ ** e[0] * b_ ** e[1] * c_ ** e[2]
        for e, c in p.terms.items()
    )


@pytest.mark.parametrize("seed", range(20))
def test_groebner_matches_sympy(seed):
    rng = random.Random(seed)
    polys = [p for p in (_random_poly(rng) for _ in range(3)) if not p.is_zero()]
    if not polys:
        return
    mine = {str(sp.expand(_to_sympy(g))) for g in groebner(polys)}
    ref = sp.groebner([_to_sympy(p) for p in polys], a_, b_, c_, order="grevlex")
    theirs = {str(sp.expand(g / sp.LC(g, a_, b_, c_, order="grevlex"))) for g in ref.exprs}
    assert mine == theirs


def test_ideal_membership():
    gb = groebner([A * A - B, B * B - C])
    assert normal_form(A**4 - C, gb).is_zero()
    assert not normal_form(A - C, gb).is_zero()
    assert is_unit_ideal(groebner([A, A - 1]))


# -- zero-dimensional solving -------------------------------------------------------

RXY = PolyRing(("x", "y"))
X, Y = RXY.gens()


def test_solve_examples():
    s = zero_dim_solve([X**2, Y])
    assert [(p.coords, p.multiplicity) for p in s.points] == [((0, 0), 2)]
    s = zero_dim_solve([X**3 - 2, Y - X])
    assert s.points[0].field.degree == 3 and s.total() == 3
    s = zero_dim_solve([(X * X + 1) * (X - 1) ** 2, Y * Y - X])
    assert s.total() == 8 and s.unresolved[0].degree == 4


@pytest.mark.parametrize("seed", range(12))
def test_solutions_satisfy_system_and_count(seed):
    # oracle: the total count equals dim Q[x,y]/I, and every point is a zero
    rng = random.Random(seed)
    while True:
        f = _random_poly(rng, 2, 5, RXY) + X * X
        g = _random_poly(rng, 2, 5, RXY) + Y * Y
        gb = groebner([f, g])
        if not is_unit_ideal(gb):
            break
    s = zero_dim_solve([f, g])
    assert s.total() == QuotientAlgebra(RXY, gb).dim
    for p in s.points:
        pt = dict(zip(RXY.variables, p.coords))
        assert f.evaluate(pt) == 0 and g.evaluate(pt) == 0


# -- binary forms and jets -----------------------------------------------------------


def test_binary_forms():
    R = PolyRing(("x2", "y2"))
    x, y = R.gens()
    assert squarefree_pattern(x * x * y, "x2", "y2") == (2, 1)
    assert squarefree_pattern(x**3 - y**3, "x2", "y2") == (1, 1, 1)
    assert quadratic_coeffs(x * x - 3 * x * y, "x2", "y2") == (1, -3, 0)
    assert binary_quadratic_rank((x + y) ** 2, "x2", "y2") == 1
    assert binary_quadratic_rank(x * y, "x2", "y2") == 2


def test_jet_truncation_and_hessian():
    j = Jet.from_poly(A * A + 2 * A * B + C**5, 4)
    assert j.order_of_vanishing() == 2
    assert all(sum(e) <= 4 for e in j.terms)
    assert j.hessian() == [[2, 2, 0], [2, 0, 0], [0, 0, 0]]


def _mod(c, p):
    return c.numerator * pow(c.denominator, -1, p) % p


def _fp_zeros(system, p):
    """Brute-force count of common zeros in F_p^2."""
    count = 0
    for a in range(p):
        for b in range(p):
            if all(
                sum(_mod(c, p) * pow(a, e[0], p) * pow(b, e[1], p) for e, c in f.terms.items()) % p == 0
                for f in system
            ):
                count += 1
    return count


def _fp_roots(modulus, p):
    return sum(1 for a in range(p) if sum(_mod(Q(c), p) * pow(a, i, p) for i, c in enumerate(modulus)) % p == 0)


@pytest.mark.parametrize("seed", range(6))
def test_solve_matches_finite_field_counts(seed):
    # each orbit over Q contributes the number of roots of its minimal
    # polynomial mod p, for primes of good reduction
    rng = random.Random(seed)
    while True:
        f = _random_poly(rng, 3, 5, RXY) + X**3
        g = _random_poly(rng, 3, 5, RXY) + Y**3
        if not is_unit_ideal(groebner([f, g])):
            break
    s = zero_dim_solve([f, g])
    for p in (101, 103):
        predicted = sum(1 if pt.field is None else _fp_roots(pt.field.modulus, p) for pt in s.points)
        predicted += sum(_fp_roots(o.minpoly, p) for o in s.unresolved)
        assert _fp_zeros([f, g], p) == predicted
