from fractions import Fraction as Q

from hypothesis import given
from hypothesis import strategies as st

from sextic.algebra import univariate as U

small = st.integers(-6, 6)
polys = st.lists(small, min_size=1, max_size=6).map(lambda c: U.trim(tuple(Q(x) for x in c)))


def test_divmod_and_gcd():
    a = U.mul((Q(-1), Q(1)), (Q(2), Q(0), Q(1)))  # (t-1)(t^2+2)
    q, r = U.divmod_(a, (Q(-1), Q(1)))
    assert r == () and q == (Q(2), Q(0), Q(1))
    assert U.gcd_(a, U.mul((Q(-1), Q(1)), (Q(3), Q(1)))) == (Q(-1), Q(1))


@given(polys, polys)
def test_divmod_identity(a, b):
    if not b:
        return
    q, r = U.divmod_(a, b)
    assert U.add(U.mul(q, b), r) == U.trim(a)
    assert U.degree(r) < U.degree(b)


@given(polys, polys)
def test_xgcd_bezout(a, b):
    g, s, t = U.xgcd(a, b)
    assert U.add(U.mul(s, a), U.mul(t, b)) == g


def test_squarefree_decomposition():
    f = U.mul(U.mul((Q(1), Q(1)), (Q(1), Q(1))), (Q(-2), Q(0), Q(1)))  # (t+1)^2 (t^2-2)
    parts = dict((k, p) for p, k in U.squarefree_decomposition(f))
    assert parts[2] == (Q(1), Q(1))
    assert parts[1] == (Q(-2), Q(0), Q(1))


def test_rational_roots():
    f = U.mul(U.mul((Q(-1, 2), Q(1)), (Q(3), Q(1))), (Q(1), Q(0), Q(1)))
    assert sorted(U.rational_roots(f)) == [Q(-3), Q(1, 2)]
    assert U.rational_roots((Q(-2), Q(0), Q(1))) == []


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=4))
def test_rational_roots_recovered(roots):
    f = (Q(1),)
    for r in roots:
        f = U.mul(f, (-r, Q(1)))
    assert set(U.rational_roots(f)) == set(roots)


def test_irreducibility_and_factoring():
    assert U.is_irreducible_small((Q(-2), Q(0), Q(0), Q(1)))
    assert not U.is_irreducible_small((Q(-1), Q(0), Q(1)))
    f = U.mul((Q(-2), Q(0), Q(1)), U.mul((Q(1), Q(1)), (Q(1), Q(1))))
    fac = U.factor_small(f)
    assert ((Q(1), Q(1)), 2) in fac and ((Q(-2), Q(0), Q(1)), 1) in fac


def test_to_str():
    assert U.to_str((Q(1), Q(0), Q(-1, 2)), "t") in ("-1/2*t^2 + 1", "1 - 1/2*t^2") or "t^2" in U.to_str(
        (Q(1), Q(0), Q(-1, 2)), "t"
    )
