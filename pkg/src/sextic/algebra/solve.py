"""Exact solutions of zero-dimensional polynomial systems over Q.

The quotient algebra ``A = Q[x]/I`` is built from a Groebner basis. The
radical is obtained by adjoining squarefree parts of the eliminants, a
separating linear form ``l`` is found on ``A/rad(I)``, and each coordinate is
written as a polynomial in ``l``. The characteristic polynomial of ``l`` on
``A`` then carries the multiplicities: a root of ``l`` with algebraic
multiplicity ``k`` corresponds to a point whose local algebra has length ``k``.

Points whose separating value has an irreducible minimal polynomial of degree
at most 3 get explicit coordinates (rational, or in a number field standing
for the whole Galois orbit). Larger orbits are reported by degree only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Sequence

from . import linalg as L
from . import univariate as U
from .groebner import NotZeroDimensional, QuotientAlgebra, groebner, is_unit_ideal
from .numberfield import NFElement, NumberField, simplify
from .poly import PolyRing, WPolynomial

__all__ = [
    "NotZeroDimensional",
    "SolutionPoint",
    "UnresolvedOrbit",
    "Solutions",
    "zero_dim_solve",
]


@dataclass(frozen=True)
class SolutionPoint:
    """A point, or a Galois orbit of ``conjugates`` points when over a field.

    ``multiplicity`` is the length of the local algebra at each point.
    """

    coords: tuple
    multiplicity: int
    field: NumberField | None = None

    @property
    def conjugates(self) -> int:
        return 1 if self.field is None else self.field.degree

    def is_rational(self) -> bool:
        return self.field is None


@dataclass(frozen=True)
class UnresolvedOrbit:
    """Points whose separating value is a root of ``minpoly`` (degree >= 4).

    ``form`` gives the separating linear form's coefficients.
    """

    degree: int
    multiplicity: int
    minpoly: tuple
    form: tuple


@dataclass(frozen=True)
class Solutions:
    variables: tuple
    points: tuple
    unresolved: tuple

    def total(self) -> int:
        """Number of solutions over the algebraic closure, with multiplicity."""
        return sum(p.conjugates * p.multiplicity for p in self.points) + sum(
            o.degree * o.multiplicity for o in self.unresolved
        )

    def distinct(self) -> int:
        return sum(p.conjugates for p in self.points) + sum(o.degree for o in self.unresolved)

    def is_empty(self) -> bool:
        return not self.points and not self.unresolved


def _linear_form(ring: PolyRing, coeffs: Sequence[int]) -> dict:
    out = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * ring.nvars
            e[i] = 1
            out[tuple(e)] = Fraction(c)
    return out


def _candidate_forms(n: int):
    for i in range(n):
        yield tuple(1 if k == i else 0 for k in range(n))
    for c in count(1):
        yield tuple(c**k for k in range(n))
        yield tuple((-c) ** k for k in range(n))


def _radical_algebra(ring: PolyRing, basis: list[WPolynomial], algebra: QuotientAlgebra):
    extra = []
    for i, v in enumerate(ring.variables):
        mp = L.krylov_minpoly(algebra.var_matrix(i), algebra.one())
        sq = U.squarefree_part(mp)
        if U.degree(sq) < U.degree(mp):
            x = ring.gen(v)
            extra.append(sum((x**k * c for k, c in enumerate(sq) if c != 0), ring.zero()))
    if not extra:
        return algebra
    return QuotientAlgebra(ring, groebner(list(basis) + extra))


def _point_key(p: SolutionPoint):
    deg = p.conjugates
    if p.field is None:
        return (deg, p.multiplicity, (), tuple((c,) for c in p.coords))
    return (
        deg,
        p.multiplicity,
        tuple(p.field.modulus),
        tuple(p.field.element_key(c) for c in p.coords),
    )


def zero_dim_solve(system: Sequence[WPolynomial]) -> Solutions:
    """All common zeros of ``system`` over the algebraic closure of Q.

    Every variable of the ring is an unknown. Raises
    :class:`NotZeroDimensional` when the zero set is infinite.
    """
    system = [p for p in system if not p.is_zero()]
    if not system:
        raise NotZeroDimensional("empty system")
    ring = system[0].ring
    basis = groebner(system)
    if is_unit_ideal(basis):
        return Solutions(ring.variables, (), ())
    algebra = QuotientAlgebra(ring, basis)
    reduced = _radical_algebra(ring, basis, algebra)
    npts = reduced.dim
    one = reduced.one()

    for form in _candidate_forms(ring.nvars):
        ell = _linear_form(ring, form)
        m_red = reduced.mult_matrix(ell)
        mp = L.krylov_minpoly(m_red, one)
        if U.degree(mp) == npts:
            break

    # coordinates as polynomials in ell on the reduced algebra
    krylov = [one]
    for _ in range(npts - 1):
        krylov.append(L.matvec(m_red, krylov[-1]))
    kmat = [[krylov[j][i] for j in range(npts)] for i in range(npts)]
    coord_polys = []
    for i in range(ring.nvars):
        target = [row[0] for row in reduced.var_matrix(i)]
        g = L.solve(kmat, target)
        coord_polys.append(U.trim(g))

    chi = L.charpoly(algebra.mult_matrix(ell))
    points = []
    unresolved = []
    for factor, mult in U.squarefree_decomposition(chi):
        for q, _ in U.factor_small(factor):
            d = U.degree(q)
            if d == 1:
                theta = -q[0]
                coords = tuple(Fraction(U.evaluate(g, theta)) for g in coord_polys)
                points.append(SolutionPoint(coords, mult, None))
            elif d <= 3:
                field = NumberField(q)
                theta = field.gen()
                coords = tuple(
                    simplify(U.evaluate(g, theta) + NFElement(field, ())) for g in coord_polys
                )
                points.append(SolutionPoint(coords, mult, field))
            else:
                unresolved.append(UnresolvedOrbit(d, mult, tuple(q), tuple(form)))
    points.sort(key=_point_key)
    unresolved.sort(key=lambda o: (o.degree, o.multiplicity, o.minpoly))
    return Solutions(ring.variables, tuple(points), tuple(unresolved))
