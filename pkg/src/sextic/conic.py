"""Conic-bundle numerics: discriminant curves, the intersection ledger of the
link through the blowup of the index-2 point, genus and Prym arithmetic,
and the weighted homogenization of cubics with an Eckardt point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra.groebner import NotZeroDimensional
from .algebra.poly import PolyRing, WPolynomial
from .algebra.solve import zero_dim_solve
from .errors import PreconditionViolation
from .normal_form import NormalForm
from .singularities import exceptional_cubed  # noqa: F401  (re-exported)
from .wps import RING, Sextic, validate

BASE_RING = PolyRing(("x1", "y1", "x2"), (1, 1, 2))
DISCRIMINANT_DEGREE = 8

PAPER = "paper"
CONIC = "conic"
CONVENTIONS = (PAPER, CONIC)


# -- discriminant -----------------------------------------------------------------


def conic_coefficients(nf: NormalForm) -> tuple[WPolynomial, WPolynomial, WPolynomial]:
    """``(A, B, C)`` with the normal form equal to ``x3^2 + A*y2^2 + B*y2 + C``.

    A, B, C are forms of degrees 2, 4, 6 in (x1, y1, x2): the fibres of the
    projection from (0,0,0,1,0) to P(1,1,2) are these conics.
    """
    groups = nf.template().coefficients_in(["y2", "x3"])
    if set(groups) - {(0, 2), (2, 0), (1, 0), (0, 0)}:
        raise AssertionError("normal form not quadratic in (y2, x3)")
    zero = RING.zero()
    A, B, C = (groups.get(k, zero).to_ring(BASE_RING) for k in ((2, 0), (1, 0), (0, 0)))
    return A, B, C


@dataclass(frozen=True)
class DiscriminantCurve:
    """Discriminant of the conic bundle in P(1,1,2) with coordinates (x1, y1, x2)."""

    D: WPolynomial
    source_case: str
    convention: str

    @property
    def degree(self) -> int:
        return self.D.weighted_degree()


def discriminant(nf: NormalForm, convention: str = PAPER) -> DiscriminantCurve:
    """Discriminant curve of the projection from the point (0,0,0,1,0).

    ``paper`` assembles ``A*C - 4*B^2`` from the closed formulas per case,
    for instance ``phi2''*(x2*phi4 + phi6) - 4*(x2^2 + phi4')^2`` in case
    Eq2. ``conic`` is ``4*A*C - B^2``, the determinant of the conic's
    symmetric matrix up to the factor -4; it is the one whose zero set is
    the locus of singular fibres.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    A, B, C = conic_coefficients(nf)
    D = A * C - B * B * 4 if convention == PAPER else A * C * 4 - B * B
    if D.is_zero() or not D.is_homogeneous(DISCRIMINANT_DEGREE):
        raise AssertionError(f"discriminant of degree {D.weighted_degree()} instead of 8")
    return DiscriminantCurve(D, nf.case, convention)


@dataclass(frozen=True)
class CurveSmoothness:
    """Whether a curve in P(1,1,2) is smooth: quasi-smooth and missing (0,0,1)."""

    decided: bool
    smooth: bool = False
    through_singular_point: bool = False
    detail: str = ""


def curve_smoothness(D: WPolynomial) -> CurveSmoothness:
    """Smoothness of ``{D = 0}`` in P(1,1,2) via the Jacobian system.

    Curves through the quotient point (0,0,1) are reported as not smooth.
    Undecided when the coefficients are irrational.
    """
    if not D.is_rational():
        return CurveSmoothness(False, detail="coefficients in a number field; not decided")
    through = D.coefficient((0, 0, DISCRIMINANT_DEGREE // 2)) == 0
    # one partial per chart is implied by the Euler relation
    charts = (
        ({"x1": 1}, ("y1", "x2"), ("y1", "x2")),
        ({"x1": 0, "y1": 1}, ("x2",), ("x1", "x2")),
    )
    for fixed, free, partials in charts:
        ring = PolyRing(free)
        eqs = [D] + [D.diff(v) for v in partials]
        system = []
        for e in eqs:
            s = e.specialize(fixed)
            system.append(
                WPolynomial(
                    ring,
                    {tuple(x[BASE_RING.index(v)] for v in free): c for x, c in s.terms.items()},
                )
            )
        try:
            sols = zero_dim_solve(system)
        except NotZeroDimensional:
            return CurveSmoothness(True, False, through, "non-reduced component")
        if not sols.is_empty():
            return CurveSmoothness(True, False, through, "singular point in a chart")
    if through:
        return CurveSmoothness(True, False, True, "passes through (0,0,1)")
    return CurveSmoothness(True, True, False, "")


def germ_tag(D: WPolynomial) -> str:
    """Report tag for the conic-bundle germ over the quotient point (0,0,1).

    T2 when the discriminant misses the point, ID1-dual when it passes
    through it. Tags only; no germ geometry is computed.
    """
    return "T2" if D.coefficient((0, 0, DISCRIMINANT_DEGREE // 2)) != 0 else "ID1v"


# -- genus and Prym ---------------------------------------------------------------


def curve_genus_adjunction(d, h2, k) -> int:
    """Genus of a smooth curve in the class ``d*h`` on a surface with
    ``K = k*h`` and ``h^2 = h2``: ``2g - 2 = (K + D).D``."""
    g = 1 + Fraction(k + d) * d * Fraction(h2) / 2
    if g.denominator != 1 or g < 0:
        raise PreconditionViolation(f"adjunction gives non-integral genus {g}")
    return int(g)


@dataclass(frozen=True)
class PrymData:
    dimension: int
    cover_genus: int


def prym_dimension(g: int) -> PrymData:
    """Prym variety of a connected étale double cover of a genus-g curve."""
    if g < 1:
        raise PreconditionViolation("an étale double cover needs genus at least 1")
    return PrymData(g - 1, 2 * g - 1)


@dataclass(frozen=True)
class SurfaceCatalogEntry:
    name: str
    h2: Fraction
    minus_k: int


SURFACE_CATALOG = (
    SurfaceCatalogEntry("P2", Fraction(1), 3),
    SurfaceCatalogEntry("P(1,1,2)", Fraction(1, 2), 4),
    SurfaceCatalogEntry("P(1,2,3)", Fraction(1, 6), 6),
    SurfaceCatalogEntry("X6 in P(1,2,3,5)", Fraction(1, 5), 5),
)


def cb_invariants(h2, k_dot_h, delta_dot_h) -> tuple[Fraction, Fraction]:
    """``(K_Y . F^2, K_Y^2 . F)`` for a conic bundle over a surface with
    fundamental class h, fibre F the pullback of h."""
    h2, kh, dh = Fraction(h2), Fraction(k_dot_h), Fraction(delta_dot_h)
    return -2 * h2, -4 * kh - dh


# -- intersection ledger ----------------------------------------------------------

LEDGER_RING = PolyRing(("A", "E"))


@dataclass(frozen=True)
class IntersectionLedger:
    """Triple intersections of the pullback A of the fundamental divisor and
    the exceptional divisor E; mixed products vanish."""

    a3: Fraction = Fraction(1, 2)
    a2e: Fraction = Fraction(0)
    ae2: Fraction = Fraction(0)
    e3: Fraction = Fraction(4)

    def values(self) -> dict:
        return {(3, 0): self.a3, (2, 1): self.a2e, (1, 2): self.ae2, (0, 3): self.e3}


def ledger_eval(L: IntersectionLedger, expr: WPolynomial) -> Fraction:
    """Evaluate a homogeneous cubic in A, E against the ledger."""
    if expr.ring != LEDGER_RING:
        expr = expr.to_ring(LEDGER_RING)
    if expr.is_zero():
        return Fraction(0)
    if not expr.is_homogeneous(3):
        raise PreconditionViolation("ledger expressions must be homogeneous cubics in A, E")
    vals = L.values()
    return sum((Fraction(c) * vals[e] for e, c in expr.terms.items()), Fraction(0))


def ledger_eval_product(L: IntersectionLedger, *factors: tuple) -> Fraction:
    """Trilinear product of three classes given as ``(alpha, beta)`` for
    ``alpha*A + beta*E``."""
    if len(factors) != 3:
        raise PreconditionViolation("need three factors")
    vals = L.values()
    total = Fraction(0)
    for mask in range(8):
        coeff = Fraction(1)
        na = 0
        for k, (alpha, beta) in enumerate(factors):
            if mask >> k & 1:
                coeff *= Fraction(beta)
            else:
                coeff *= Fraction(alpha)
                na += 1
        total += coeff * vals[(na, 3 - na)]
    return total


def binomial_cube(L: IntersectionLedger, alpha, beta) -> Fraction:
    """``(alpha*A + beta*E)^3`` by the binomial theorem."""
    vals = L.values()
    return sum(
        (comb(3, j) * Fraction(alpha) ** (3 - j) * Fraction(beta) ** j * vals[(3 - j, j)]
         for j in range(4)),
        Fraction(0),
    )


STANDARD_IDENTITIES = (
    ("(A - 1/2*E)^3", ((1, Fraction(-1, 2)),) * 3, Fraction(0)),
    ("(A - 1/2*E)^2*(3*A - 1/2*E)", ((1, Fraction(-1, 2)),) * 2 + ((3, Fraction(-1, 2)),), Fraction(1)),
    ("(3*A - 1/2*E)^2*(A - 1/2*E)", ((3, Fraction(-1, 2)),) * 2 + ((1, Fraction(-1, 2)),), Fraction(4)),
)


# -- Eckardt construction ---------------------------------------------------------

ECKARDT_VARIABLES = ("x1", "x2", "y2", "x3")
ECKARDT_RING = PolyRing(ECKARDT_VARIABLES, (1, 2, 2, 3))


def _to_eckardt_ring(cubic: WPolynomial) -> WPolynomial:
    if cubic.ring == ECKARDT_RING:
        return cubic
    if not set(cubic.free_variables()) <= set(ECKARDT_VARIABLES):
        raise PreconditionViolation(
            f"variables {sorted(cubic.free_variables())} outside x1, x2, y2, x3"
        )
    out = {}
    for e, c in cubic.terms.items():
        e2 = [0] * 4
        for v, a in zip(cubic.ring.variables, e):
            if a:
                e2[ECKARDT_VARIABLES.index(v)] = a
        out[tuple(e2)] = c
    return WPolynomial(ECKARDT_RING, out)


def eckardt_homogenize(cubic: WPolynomial) -> Sextic:
    """Weighted homogenization of ``x3^2 + phi(x1, x2, y2)``, with a new
    weight-1 variable y1 padding each term to degree 6."""
    p = _to_eckardt_ring(cubic)
    if p.coefficient((0, 0, 0, 2)) != 1:
        raise PreconditionViolation("the cubic must contain x3^2 with coefficient 1")
    out = {}
    for e, c in p.terms.items():
        if e[3] and e != (0, 0, 0, 2):
            raise PreconditionViolation("x3 may only occur as x3^2")
        if sum(e) > 3:
            raise PreconditionViolation("phi must have total degree at most 3")
        w = p.weighted_degree_of(e)
        out[(e[0], 6 - w, e[1], e[2], e[3])] = c
    return validate(WPolynomial(RING, out))


def eckardt_dehomogenize(X: Sextic) -> WPolynomial:
    """Restriction to the chart y1 = 1, in the variables x1, x2, y2, x3."""
    s = X.F.specialize({"y1": 1})
    return WPolynomial(
        ECKARDT_RING, {(e[0], e[2], e[3], e[4]): c for e, c in s.terms.items()}
    )
