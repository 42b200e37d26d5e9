"""Singular points of a sextic: the index-2 points on {x1 = y1 = x3 = 0} read off
from the normal form, and the Gorenstein points located by solving the
Jacobian system and classified as A_n by the splitting lemma on jets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import linalg as L
from .algebra import univariate as U
from .algebra.binary import binary_quadratic_rank
from .algebra.groebner import NotZeroDimensional, QuotientAlgebra, groebner, is_unit_ideal
from .algebra.jet import Jet, JetOrderExceeded, jet_diff, series_eval
from .algebra.numberfield import NumberField, simplify
from .algebra.poly import PolyRing, WPolynomial
from .errors import NonIsolatedSingularLocus, NotTerminalAtHalfPoint, PreconditionViolation
from .normal_form import EQ1, EQ2, EQ3, NormalForm, binary_cubic
from .wps import RING, VARIABLES, WPSPoint, chart_point, chart_solutions, chart_system, map_point

DEFAULT_JET_ORDER = 8
MAX_JET_ORDER = 16


# -- singularity classes -------------------------------------------------------


@dataclass(frozen=True)
class HalfQuotient:
    """Cyclic quotient singularity 1/2(1,1,1)."""

    def label(self) -> str:
        return "1/2(1,1,1)"


@dataclass(frozen=True)
class CA2:
    """Type cA/2; ``aw`` is the axial weight, known for moderate points."""

    moderate: bool
    aw: int | None = None

    def label(self) -> str:
        if self.moderate:
            return f"cA/2 moderate aw={self.aw}"
        return "cA/2 non-moderate"


@dataclass(frozen=True)
class CAx2:
    def label(self) -> str:
        return "cAx/2"


@dataclass(frozen=True)
class CD2:
    def label(self) -> str:
        return "cD/2"


@dataclass(frozen=True)
class CE2:
    def label(self) -> str:
        return "cE/2"


@dataclass(frozen=True)
class An:
    n: int

    def label(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True)
class WorseGorenstein:
    reason: str

    def label(self) -> str:
        return f"worse than A_n ({self.reason})"


@dataclass(frozen=True)
class Smooth:
    def label(self) -> str:
        return "smooth"


NON_GORENSTEIN_KINDS = (HalfQuotient, CA2, CAx2, CD2, CE2)


def is_worse_than_moderate(kind) -> bool:
    """Non-Gorenstein classes that are not 1/2(1,1,1) and not moderate cA/2."""
    if isinstance(kind, CA2):
        return not kind.moderate
    return isinstance(kind, (CAx2, CD2, CE2))


@dataclass(frozen=True)
class SingularityRecord:
    """A singular point, or a Galois orbit of ``count`` conjugate points.

    ``point`` is a representative in the input's coordinates; it is None for
    orbits whose field has degree above 3. ``tjurina`` is the local length of
    the Jacobian algebra, known for Gorenstein points.
    """

    point: WPSPoint | None
    kind: object
    gorenstein: bool
    count: int = 1
    tjurina: int | None = None
    detail: str = ""

    def sort_key(self):
        pk = self.point.sort_key() if self.point is not None else (99,)
        return (self.kind.label(), pk, self.count, self.detail)


# -- non-Gorenstein profile ---------------------------------------------------------

_TEMPLATE_POINTS = {
    EQ3: ((0, 0, 0, 1, 0), (0, 0, 1, 0, 0), (0, 0, 1, -1, 0)),
    EQ2: ((0, 0, 0, 1, 0), (0, 0, 1, 0, 0)),
    EQ1: ((0, 0, 0, 1, 0),),
}


def table_kind(nf: NormalForm):
    """Class of the non-Gorenstein point at (0,0,0,1,0) of the normal form
    for cases Eq2 and Eq1 (the point where c has a multiple root)."""
    if nf.case == EQ3:
        return HalfQuotient()
    rank = binary_quadratic_rank(nf.form("phi2pp"), "x1", "y1")
    if nf.case == EQ2:
        if rank == 2:
            return CA2(True, 2)
        if rank == 1:
            return CA2(False)
        return CAx2()
    if rank == 2:
        return CA2(True, 3)
    if rank == 1:
        return CA2(False)
    if not nf.form("phi2p").is_zero():
        return CD2()
    if not nf.form("phi4p").is_zero():
        return CE2()
    raise NotTerminalAtHalfPoint(
        "case Eq1 with φ2'' = φ2' = φ4' = 0: the point (0,0,0,1,0) is not terminal"
    )


def _group_orbits(entries: Sequence[tuple[list, object]]) -> list[SingularityRecord]:
    """Merge points that are Galois conjugate into single records."""
    rational, irrational = [], {}
    for coords, kind in entries:
        pt = WPSPoint(coords)
        if pt.field is None:
            rational.append(SingularityRecord(pt, kind, False))
        else:
            irrational.setdefault((pt.field, kind), []).append(pt)
    out = list(rational)
    for (fld, kind), pts in irrational.items():
        pts.sort(key=WPSPoint.sort_key)
        out.append(SingularityRecord(pts[0], kind, False, count=len(pts)))
    out.sort(key=SingularityRecord.sort_key)
    return out


def non_gorenstein_profile(nf: NormalForm) -> list[SingularityRecord]:
    """Index-2 singular points with their classes, in the input's coordinates."""
    special = table_kind(nf)
    entries = []
    for k, tp in enumerate(_TEMPLATE_POINTS[nf.case]):
        kind = special if (k == 0 and nf.case != EQ3) else HalfQuotient()
        entries.append((map_point(nf.forward, tp), kind))
    return _group_orbits(entries)


def eq3_profile_from_cubic(G: WPolynomial) -> list[SingularityRecord]:
    """Three 1/2(1,1,1) points at the roots of c, without a normal form.

    Used when the roots of c span a field of degree 6: the orbit is then
    reported as one record of three points with no explicit coordinates
    beyond a single root.
    """
    c = binary_cubic(G)
    ix2 = RING.index("x2")
    coeffs = [Fraction(0)] * 4
    for e, v in c.terms.items():
        coeffs[e[ix2]] = v
    g = U.trim(coeffs)
    records = []
    infinity = 3 - U.degree(g)
    if infinity:
        records.append(SingularityRecord(WPSPoint((0, 0, 1, 0, 0)), HalfQuotient(), False))
    for f, _ in U.factor_small(g):
        if U.degree(f) == 1:
            pt = WPSPoint((0, 0, -f[0], 1, 0))
        else:
            K = NumberField(f)
            pt = WPSPoint((0, 0, K.gen(), 1, 0), K)
        records.append(SingularityRecord(pt, HalfQuotient(), False, count=U.degree(f)))
    records.sort(key=SingularityRecord.sort_key)
    return records


# -- Gorenstein points ------------------------------------------------------------


@dataclass(frozen=True)
class GorensteinPoint:
    """A singular point of ``x3^2 + G`` off the index-2 locus.

    ``chart_coords`` are the solver's coordinates (y1, x2, y2) in the chart
    x1 = 1 of ``G`` sheared by ``x1 -> x1 - shear*y1``; ``point`` is in the
    input's coordinates. ``chart_coords`` is None for orbits of degree above
    3, described by ``orbit_degree`` only.
    """

    shear: int
    chart_coords: tuple | None
    field: NumberField | None
    multiplicity: int
    point: WPSPoint | None
    orbit_degree: int = 1


MAX_SHEAR_TRIES = 25


def _shears():
    yield 0
    for k in range(1, MAX_SHEAR_TRIES):
        yield k
        yield -k


def sheared(G: WPolynomial, t: int) -> WPolynomial:
    """``G`` with x1 replaced by ``x1 - t*y1``."""
    if t == 0:
        return G
    return G.substitute({"x1": RING.gen("x1") - RING.gen("y1") * t})


def _solutions(G: WPolynomial, chart: str):
    try:
        return chart_solutions(G, chart)
    except NotZeroDimensional as exc:
        raise NonIsolatedSingularLocus(
            f"positive-dimensional singular locus in chart {chart}=1"
        ) from exc


def gorenstein_singular_points(G: WPolynomial, forward: dict | None = None) -> list[GorensteinPoint]:
    """Singular points of ``x3^2 + G = 0`` off {x1 = y1 = x3 = 0}.

    A singular point has x3 = 0 because the x3-derivative is 2*x3. After a
    shear ``x1 -> x1 - t*y1`` chosen so that no singular point lies on
    x1 = 0, all of them lie in the single affine chart x1 = 1, where the
    solver's multiplicities are Tjurina numbers. ``forward`` maps back to
    the input's coordinates (default: identity).
    """
    forward = forward or {}
    for t in _shears():
        Gt = sheared(G, t)
        if _solutions(Gt, "y1").is_empty():
            break
    else:
        raise NonIsolatedSingularLocus("no shear moves the singular points off x1 = 0")
    unshear = {"x1": RING.gen("x1") - RING.gen("y1") * t} if t else {}
    ring, _ = chart_system(Gt, "x1")
    sols = _solutions(Gt, "x1")
    out = []
    for p in sols.points:
        coords = chart_point("x1", ring, p.coords)
        if unshear:
            coords = map_point(unshear, coords)
        coords = map_point(forward, coords)
        out.append(
            GorensteinPoint(
                t, tuple(p.coords), p.field, p.multiplicity, WPSPoint(coords, p.field), p.conjugates
            )
        )
    for o in sols.unresolved:
        out.append(GorensteinPoint(t, None, None, o.multiplicity, None, o.degree))
    return out


def local_equation(G: WPolynomial, gp: GorensteinPoint) -> WPolynomial:
    """``x3^2 + G`` in the affine chart of ``gp``, translated so the point is the origin."""
    if gp.chart_coords is None:
        raise PreconditionViolation("no explicit coordinates for this orbit")
    free = [v for v in VARIABLES if v != "x1"]
    ring = PolyRing(free)
    values = dict(zip([v for v in free if v != "x3"], gp.chart_coords))
    values["x3"] = Fraction(0)
    f = (sheared(G, gp.shear) + RING.gen("x3") ** 2).specialize({"x1": 1})
    f = WPolynomial(
        ring, {tuple(e[RING.index(v)] for v in free): c for e, c in f.terms.items()}
    )
    shift = {v: ring.gen(v) + values[v] for v in free if values[v] != 0}
    return f.substitute(shift) if shift else f


try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = None


def _fast(x):
    """Fraction -> gmpy2 rational for the series loop (unchanged without gmpy2)."""
    return _mpq(x.numerator, x.denominator) if _mpq is not None else x


def classify_local(f: WPolynomial, order: int = DEFAULT_JET_ORDER):
    """A_n type of an isolated hypersurface singularity at the origin.

    ``f`` must vanish with its gradient at the origin. Raises
    :class:`JetOrderExceeded` when corank is 1 but no power of the kernel
    variable survives up to ``order``.
    """
    n = f.ring.nvars
    jet = Jet.from_poly(f, order)
    if any(sum(e) < 2 for e in jet.terms):
        raise PreconditionViolation("the origin is not a singular point of f")
    hess = jet.hessian()
    r = L.rank(hess)
    if r == n:
        return An(1)
    if r < n - 1:
        return WorseGorenstein(f"corank {n - r}")
    (kernel,) = L.nullspace(hess)
    j0 = next(i for i, x in enumerate(kernel) if x != 0)
    units = [i for i in range(n) if i != j0]
    T = [[Fraction(0)] * n for _ in range(n)]
    for col, i in enumerate(units):
        T[i][col] = Fraction(1)
    for i in range(n):
        T[i][n - 1] = kernel[i]
    g = jet.linear_change(T)
    h2 = g.hessian()
    A = [row[: n - 1] for row in h2[: n - 1]]
    m = n - 1
    Ainv_cols = [L.solve(A, [Fraction(int(i == j)) for i in range(m)]) for j in range(m)]
    Ainv = [[Ainv_cols[j][i] for j in range(m)] for i in range(m)]
    if all(isinstance(c, Fraction) for c in g.terms.values()):
        g = Jet(n, g.order, {e: _fast(c) for e, c in g.terms.items()})
        Ainv = [[_fast(x) for x in row] for row in Ainv]
    grads = [jet_diff(g, i) for i in range(m)]
    w_series = [0] * (order + 1)
    w_series[1] = 1
    u = [[0] * (order + 1) for _ in range(m)]
    # fixed-point iteration u <- u - A^-1 grad_u g(u, w); each pass fixes one more order
    for _ in range(order + 2):
        args = u + [w_series]
        grad_vals = [series_eval(gi, args, order) for gi in grads]
        delta = [
            [simplify(sum((Ainv[i][j] * grad_vals[j][k] for j in range(m)), 0)) for k in range(order + 1)]
            for i in range(m)
        ]
        if all(x == 0 for row in delta for x in row):
            break
        u = [[simplify(a - b) for a, b in zip(u[i], delta[i])] for i in range(m)]
    residual = series_eval(g, u + [w_series], order)
    for k, c in enumerate(residual):
        if c != 0:
            if k < 3:
                raise AssertionError("splitting lemma produced a low-order term")
            return An(k - 1)
    raise JetOrderExceeded(f"no surviving power of the kernel variable up to order {order}")


def classify_An(f: WPolynomial, order: int = DEFAULT_JET_ORDER):
    """Classify with jet order ``order``, retrying once at order 16."""
    try:
        return classify_local(f, order)
    except JetOrderExceeded:
        if order >= MAX_JET_ORDER:
            return WorseGorenstein(f"undetermined-beyond-A{MAX_JET_ORDER - 1}")
        try:
            return classify_local(f, MAX_JET_ORDER)
        except JetOrderExceeded:
            return WorseGorenstein(f"undetermined-beyond-A{MAX_JET_ORDER - 1}")


def kind_from_tjurina(tau: int):
    """Class of a singular point known only through its Tjurina number.

    Tjurina number 1 characterizes A1; Tjurina number 2 forces corank 1 and
    hence A2. Anything larger is left open.
    """
    if tau == 1:
        return An(1)
    if tau == 2:
        return An(2)
    return WorseGorenstein(f"orbit beyond supported field degree, Tjurina number {tau}")


def classify_gorenstein(G: WPolynomial, gp: GorensteinPoint, order: int = DEFAULT_JET_ORDER) -> SingularityRecord:
    if gp.chart_coords is None:
        kind = kind_from_tjurina(gp.multiplicity)
        return SingularityRecord(
            None, kind, True, gp.orbit_degree, gp.multiplicity,
            f"orbit of degree {gp.orbit_degree}",
        )
    kind = classify_An(local_equation(G, gp), order)
    if isinstance(kind, An) and kind.n != gp.multiplicity:
        raise AssertionError(
            f"A{kind.n} from jets but Tjurina number {gp.multiplicity} at {gp.point}"
        )
    return SingularityRecord(gp.point, kind, True, gp.orbit_degree, gp.multiplicity)


def tjurina_number(f: WPolynomial) -> int:
    """Dimension of ``Q[x] / (f, grad f)`` (all singular points together)."""
    basis = groebner([f] + f.gradient())
    if is_unit_ideal(basis):
        return 0
    return QuotientAlgebra(f.ring, basis).dim


# -- profile -------------------------------------------------------------------


@dataclass(frozen=True)
class SingularityProfile:
    non_gorenstein: tuple
    gorenstein: tuple
    gorenstein_count: int = field(init=False)
    all_moderate: bool = field(init=False)
    all_nodes_or_cusps: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "gorenstein_count", sum(r.count for r in self.gorenstein))
        object.__setattr__(
            self,
            "all_moderate",
            all(
                isinstance(r.kind, HalfQuotient) or (isinstance(r.kind, CA2) and r.kind.moderate)
                for r in self.non_gorenstein
            ),
        )
        object.__setattr__(
            self,
            "all_nodes_or_cusps",
            all(isinstance(r.kind, An) and r.kind.n <= 2 for r in self.gorenstein),
        )

    def non_gorenstein_total(self) -> int:
        return sum(r.count for r in self.non_gorenstein)

    def multiset(self) -> tuple:
        """Classes with multiplicities, independent of coordinates."""
        counts: dict = {}
        for r in self.non_gorenstein + self.gorenstein:
            counts[r.kind.label()] = counts.get(r.kind.label(), 0) + r.count
        return tuple(sorted(counts.items()))


def build_profile(non_gorenstein: Sequence[SingularityRecord], gorenstein: Sequence[SingularityRecord]) -> SingularityProfile:
    return SingularityProfile(
        tuple(sorted(non_gorenstein, key=SingularityRecord.sort_key)),
        tuple(sorted(gorenstein, key=SingularityRecord.sort_key)),
    )


# -- blowups -------------------------------------------------------------------


@dataclass(frozen=True)
class BlowupResult:
    points: tuple
    e_cubed: Fraction
    exceptional: str

    def singular(self) -> tuple:
        return tuple(k for k in self.points if not isinstance(k, Smooth))


def exceptional_cubed(r: int, a: int) -> Fraction:
    """``E^3 = r^2 / (a (r - a))`` for the weighted blowup 1/r(a, r-a, 1, r)."""
    from math import gcd

    if not (0 < a < r) or gcd(r, a) != 1:
        raise PreconditionViolation("need 0 < a < r with gcd(r, a) = 1")
    return Fraction(r * r, a * (r - a))


def blowup_transform(kind) -> BlowupResult:
    """Singular points and E^3 after the extremal blowup of a point.

    Moderate cA/2 (r = 2, a = 1, axial weight m > 1): two smooth points and
    a point of type 1/2(1,1,1) if m = 2, else moderate cA/2 with weight m-1.
    A_n: blowup of the maximal ideal, leaving A_(n-2) for n >= 3; E is a
    quadric surface, so E^3 = 2.
    """
    if isinstance(kind, CA2):
        if not kind.moderate or kind.aw is None or kind.aw <= 1:
            raise PreconditionViolation("blowup needs a moderate cA/2 point with aw > 1")
        rest = HalfQuotient() if kind.aw == 2 else CA2(True, kind.aw - 1)
        return BlowupResult((Smooth(), Smooth(), rest), exceptional_cubed(2, 1), "P(1,1,4)")
    if isinstance(kind, An):
        rest = An(kind.n - 2) if kind.n >= 3 else Smooth()
        surface = "P1xP1" if kind.n == 1 else "P(1,1,2)"
        return BlowupResult((rest,), Fraction(2), surface)
    raise PreconditionViolation(f"no blowup rule for {kind.label()}")


def blowup_chain(kind) -> list:
    """Iterate blowups of an A_n point until it is smooth."""
    chain = [kind]
    while not isinstance(chain[-1], Smooth):
        chain.append(blowup_transform(chain[-1]).points[0])
    return chain
