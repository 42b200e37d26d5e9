"""The weighted projective space P(1,1,2,2,3) and sextic hypersurfaces in it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .algebra.groebner import NotZeroDimensional, groebner
from .algebra.numberfield import NumberField, common_field, simplify
from .algebra.poly import PolyRing, WPolynomial
from .algebra.solve import Solutions, zero_dim_solve
from .errors import NotHomogeneous, NotRational, WrongDegree

VARIABLES = ("x1", "y1", "x2", "y2", "x3")
WEIGHTS = (1, 1, 2, 2, 3)
RING = PolyRing(VARIABLES, WEIGHTS)
DEGREE = 6


def gens() -> tuple[WPolynomial, ...]:
    return RING.gens()


class Sextic:
    """A validated weighted-homogeneous sextic ``F(x1, y1, x2, y2, x3)``."""

    __slots__ = ("F",)

    def __init__(self, F: WPolynomial):
        self.F = F

    def __eq__(self, other):
        return isinstance(other, Sextic) and self.F == other.F

    def __hash__(self):
        return hash(self.F)

    def __repr__(self):
        return f"Sextic({self.F})"

    def x3_square_coeff(self):
        return self.F.coefficient((0, 0, 0, 0, 2))


def validate(F: WPolynomial) -> Sextic:
    """Accept ``F`` as a sextic of P(1,1,2,2,3) or raise.

    ``WrongDegree`` is raised when some terms have degree 6 and others do not
    (the others are the offenders), or when ``F`` is homogeneous of another
    degree; ``NotHomogeneous`` when the terms have several degrees, none 6.
    """
    if F.ring != RING:
        if set(F.ring.variables) <= set(VARIABLES):
            F = F.to_ring(RING)
        else:
            raise NotHomogeneous(f"unexpected variables {F.ring.variables}")
    if F.is_zero():
        raise WrongDegree("the zero polynomial defines no hypersurface")
    if not F.is_rational():
        raise NotRational("coefficients must be rational")
    degrees = sorted({F.weighted_degree_of(e) for e in F.terms})
    if degrees == [DEGREE]:
        return Sextic(F)
    offending = tuple(
        sorted((e for e in F.terms if F.weighted_degree_of(e) != DEGREE), key=lambda e: e)
    )
    if DEGREE in degrees:
        shown = ", ".join(f"{_mono(e)} (degree {F.weighted_degree_of(e)})" for e in offending)
        raise WrongDegree(f"terms of weighted degree other than 6: {shown}", offending)
    if len(degrees) == 1:
        raise WrongDegree(f"weighted degree is {degrees[0]}, expected 6", offending)
    raise NotHomogeneous(f"terms of several weighted degrees {degrees}", offending)


def _mono(e: Sequence[int]) -> str:
    parts = [v if a == 1 else f"{v}^{a}" for v, a in zip(VARIABLES, e) if a]
    return "*".join(parts) or "1"


# -- points ---------------------------------------------------------------------


class WPSPoint:
    """A point of P(1,1,2,2,3) with coordinates in Q or a number field.

    Coordinates are stored in a canonical representative of the scaling
    class, so equal points compare equal. When a weight-1 coordinate is
    nonzero the first such is scaled to 1. Otherwise, if ``x3 = 0``, the first
    nonzero weight-2 coordinate is scaled to 1; if ``x3 != 0`` the scaling
    ``lambda = x3 / c^2`` (``c`` the first nonzero weight-2 coordinate) gives a
    representative that depends only on the point and stays in the field.
    """

    __slots__ = ("coords", "field", "chart")

    def __init__(self, coords: Sequence, field: NumberField | None = None):
        coords = [simplify(c) for c in coords]
        if len(coords) != 5:
            raise ValueError("a point of P(1,1,2,2,3) has five coordinates")
        if all(c == 0 for c in coords):
            raise ValueError("all coordinates zero")
        self.coords, self.chart = self._normalize(coords)
        # a point whose canonical coordinates are rational is a rational point
        found = common_field(self.coords)
        self.field = None if found is None else (field or found)

    @staticmethod
    def _scale(coords, lam):
        return tuple(simplify(c * lam**w) for c, w in zip(coords, WEIGHTS))

    def _normalize(self, c):
        for i in (0, 1):
            if c[i] != 0:
                return self._scale(c, 1 / _as_num(c[i])), VARIABLES[i]
        for i in (2, 3):
            if c[i] != 0:
                if c[4] == 0:
                    inv = 1 / _as_num(c[i])
                    return tuple(simplify(x * inv) for x in c), VARIABLES[i]
                lam = c[4] / (_as_num(c[i]) ** 2)
                return self._scale(c, lam), VARIABLES[i]
        return (Fraction(0),) * 4 + (Fraction(1),), "x3"

    def __eq__(self, other):
        return isinstance(other, WPSPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    @property
    def conjugates(self) -> int:
        return 1 if self.field is None else self.field.degree

    def sort_key(self):
        fkey = () if self.field is None else tuple(self.field.modulus)
        if self.field is None:
            ck = tuple((c,) for c in self.coords)
        else:
            ck = tuple(self.field.element_key(c) for c in self.coords)
        return (self.conjugates, fkey, ck)

    def as_dict(self) -> dict:
        return dict(zip(VARIABLES, self.coords))

    def on_locus_x1_y1_x3(self) -> bool:
        return self.coords[0] == 0 and self.coords[1] == 0 and self.coords[4] == 0

    def __str__(self):
        body = "(" + ", ".join(str(c) for c in self.coords) + ")"
        if self.field is not None:
            body += f" over Q[t]/({_modulus_str(self.field)})"
        return body

    def __repr__(self):
        return f"WPSPoint{self}"


def _modulus_str(field: NumberField) -> str:
    from .algebra.univariate import to_str

    return to_str(field.modulus, field.name)


def _as_num(x):
    return Fraction(x) if isinstance(x, int) else x


def map_point(mapping: Mapping[str, WPolynomial], coords: Sequence) -> list:
    """Evaluate a substitution ``old var -> expr(new vars)`` at new coordinates."""
    values = dict(zip(VARIABLES, coords))
    out = []
    for v in VARIABLES:
        expr = mapping.get(v)
        out.append(values[v] if expr is None else expr.evaluate(values))
    return out


# -- square completion --------------------------------------------------------


@dataclass(frozen=True)
class SquareCompletion:
    """``G_completed = scalar * F(forward(x))`` with ``forward`` affecting x3 only."""

    poly: WPolynomial
    forward: dict
    inverse: dict
    scalar: object


def complete_square(F: WPolynomial) -> SquareCompletion | None:
    """Remove the x3-linear part by ``x3 -> x3 - b/(2a)`` and scale ``a`` to 1.

    Returns None when F has no ``x3^2`` term.
    """
    groups = F.coefficients_in(["x3"])
    a_poly = groups.get((2,))
    if a_poly is None:
        return None
    a = a_poly.constant_coeff()
    b = groups.get((1,), RING.zero())
    x3 = RING.gen("x3")
    shift = b / (2 * a)
    forward = {"x3": x3 - shift}
    inverse = {"x3": x3 + shift}
    scalar = 1 / a
    G = F.substitute(forward) * scalar
    return SquareCompletion(G, forward, inverse, scalar)


# -- Jacobian systems chart by chart ------------------------------------------

CHART_ORDER = ("x1", "y1", "x2", "y2")


def _chart_ring(chart: str) -> PolyRing:
    free = {"x1": ("y1", "x2", "y2"), "y1": ("x2", "y2"), "x2": ("y2",), "y2": ()}[chart]
    return PolyRing(free)


def _chart_fixed(chart: str) -> dict:
    return {
        "x1": {"x1": 1},
        "y1": {"x1": 0, "y1": 1},
        "x2": {"x1": 0, "y1": 0, "x2": 1},
        "y2": {"x1": 0, "y1": 0, "x2": 0, "y2": 1},
    }[chart]


def chart_system(G: WPolynomial, chart: str) -> tuple[PolyRing, list[WPolynomial]]:
    """Equations for singular cone points of ``x3^2 + G`` in a chart.

    ``G`` must be free of x3; such points have ``x3 = 0``. The chart fixes
    the named coordinate to 1 and the earlier ones (in CHART_ORDER) to 0.
    One partial derivative is omitted, being implied by the Euler relation.
    """
    ring = _chart_ring(chart)
    fixed = _chart_fixed(chart)
    partials = [v for v in ("x1", "y1", "x2", "y2") if v != chart]
    eqs = [G] + [G.diff(v) for v in partials]
    out = []
    for e in eqs:
        s = e.specialize(fixed)
        s = WPolynomial(
            ring,
            {tuple(ex[RING.index(v)] for v in ring.variables): c for ex, c in s.terms.items()},
        )
        out.append(s)
    return ring, out


def chart_point(chart: str, ring: PolyRing, coords: Sequence) -> list:
    values = dict(_chart_fixed(chart))
    values.update(zip(ring.variables, coords))
    values["x3"] = 0
    return [values[v] for v in VARIABLES]


@lru_cache(maxsize=512)
def chart_solutions(G: WPolynomial, chart: str) -> Solutions:
    """Singular cone points of ``x3^2 + G`` in one chart (cached, pure)."""
    ring, system = chart_system(G, chart)
    if ring.nvars == 0:
        if all(p.is_zero() for p in system):
            from .algebra.solve import SolutionPoint

            return Solutions((), (SolutionPoint((), 1, None),), ())
        return Solutions((), (), ())
    return zero_dim_solve(system)


@dataclass(frozen=True)
class QuasiSmoothness:
    quasi_smooth: bool
    witness: WPSPoint | None = None
    component: tuple = ()
    detail: str = ""

    def __bool__(self):
        return self.quasi_smooth


def is_quasi_smooth(X: Sextic) -> QuasiSmoothness:
    """Decide whether the affine cone over X is smooth away from the origin.

    Charts are examined in the order x1, y1, x2, y2, x3 with early exit. On
    failure a singular cone point is returned in the input's coordinates,
    or the Groebner basis of a positive-dimensional component.
    """
    comp = complete_square(X.F)
    if comp is None:
        return QuasiSmoothness(
            False, WPSPoint((0, 0, 0, 0, 1)), (), "no x3^2 term: cone singular over (0,0,0,0,1)"
        )
    G = comp.poly - RING.gen("x3") ** 2
    for chart in CHART_ORDER:
        ring, system = chart_system(G, chart)
        try:
            sols = chart_solutions(G, chart)
        except NotZeroDimensional:
            basis = tuple(groebner(system))
            return QuasiSmoothness(
                False, None, basis, f"positive-dimensional singular locus in chart {chart}=1"
            )
        if sols.points:
            p = sols.points[0]
            coords = map_point(comp.forward, chart_point(chart, ring, p.coords))
            return QuasiSmoothness(False, WPSPoint(coords, p.field), (), f"chart {chart}=1")
        if sols.unresolved:
            o = sols.unresolved[0]
            return QuasiSmoothness(
                False, None, (), f"chart {chart}=1: orbit of {o.degree} singular points"
            )
    # chart x3 = 1: the x3-derivative is 2*x3 after completion, never zero there
    return QuasiSmoothness(True)
