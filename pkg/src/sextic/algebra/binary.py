"""Binary forms: root multiplicity patterns and quadratic ranks."""

from __future__ import annotations

from fractions import Fraction

from . import univariate as U
from .poly import WPolynomial


def _form_degree(f: WPolynomial, x: str, y: str) -> int:
    ix, iy = f.ring.index(x), f.ring.index(y)
    degs = set()
    for e in f.terms:
        if any(a for k, a in enumerate(e) if k not in (ix, iy)):
            raise ValueError(f"binary form may only involve {x} and {y}")
        degs.add(e[ix] + e[iy])
    if len(degs) != 1:
        raise ValueError("binary form must be homogeneous")
    return degs.pop()


def dehomogenize(f: WPolynomial, x: str, y: str) -> tuple[int, tuple]:
    """Return ``(d, g)`` with ``g(t) = f(t, 1)`` as a coefficient tuple."""
    d = _form_degree(f, x, y)
    ix = f.ring.index(x)
    coeffs = [Fraction(0)] * (d + 1)
    for e, c in f.terms.items():
        coeffs[e[ix]] = c
    return d, U.trim(coeffs)


def squarefree_pattern(f: WPolynomial, x: str, y: str) -> tuple[int, ...]:
    """Multiplicities of the distinct linear factors over the closure.

    Sorted in decreasing order; they sum to the degree. The root at
    infinity (a factor of ``y``) is accounted for by the degree drop of
    ``f(t, 1)``.

    >>> from sextic.algebra.poly import PolyRing
    >>> R = PolyRing(("x2", "y2"))
    >>> x, y = R.gens()
    >>> squarefree_pattern(x * x * y, "x2", "y2")
    (2, 1)
    """
    if f.is_zero():
        raise ValueError("the zero form has no root pattern")
    d, g = dehomogenize(f, x, y)
    mults = [k for fac, k in U.squarefree_decomposition(g) for _ in range(U.degree(fac))]
    at_infinity = d - U.degree(g)
    if at_infinity:
        mults.append(at_infinity)
    return tuple(sorted(mults, reverse=True))


def quadratic_coeffs(q: WPolynomial, x: str, y: str) -> tuple:
    """``(a, b, c)`` with ``q = a x^2 + b x y + c y^2``; zero form allowed."""
    if q.is_zero():
        return (Fraction(0),) * 3
    d, _ = dehomogenize(q, x, y)
    if d != 2:
        raise ValueError("expected a quadratic form")
    iy = q.ring.index(y)
    out = [Fraction(0)] * 3
    for e, c in q.terms.items():
        out[e[iy]] = c
    return tuple(out)


def binary_quadratic_rank(q: WPolynomial, x: str, y: str) -> int:
    """Rank of the symmetric matrix of ``q``: 2 iff the discriminant is nonzero."""
    a, b, c = quadratic_coeffs(q, x, y)
    if a == 0 and b == 0 and c == 0:
        return 0
    return 2 if b * b - 4 * a * c != 0 else 1
