"""Rationality verdicts and explicit birational witnesses.

A sextic whose index-2 point is worse than moderate contains, after a
linear change, an affine chart whose equation is linear in one variable.
Solving for that variable gives a birational map to affine 3-space; the
witness records the full coordinate change and the solution so that it can
be re-checked against the original equation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.binary import binary_quadratic_rank, quadratic_coeffs
from .algebra.numberfield import NumberField
from .algebra import univariate as U
from .algebra.poly import PolyRing, WPolynomial
from .errors import NotLinearizable, PreconditionViolation
from .normal_form import EQ1, EQ2, NormalForm
from .singularities import An, SingularityProfile, is_worse_than_moderate, table_kind
from .wps import RING, VARIABLES, Sextic

MAX_GORENSTEIN_POINTS = 4


@dataclass(frozen=True)
class Flags:
    """Hypotheses asserted by the user; the tool never computes them."""

    terminal: bool = False
    q_factorial: bool = False


# -- witnesses ------------------------------------------------------------------


@dataclass(frozen=True)
class RationalityWitness:
    """An affine chart where the equation is linear in ``solved_variable``.

    ``change`` is a weight-preserving automorphism expressing the input
    coordinates (x1, y1, x2, y2, x3) through new ones; ``chart_map`` sets
    ``chart = 1`` and expresses the other new coordinates affine-linearly
    through the chart coordinates ``ring.variables``. The chart equation is
    ``F(change)(chart_map)``. Setting ``solved_variable = numerator /
    denominator`` makes it vanish identically while the remaining chart
    coordinates stay free, so X is birational to affine 3-space.
    """

    chart: str
    ring: PolyRing
    solved_variable: str
    numerator: WPolynomial
    denominator: WPolynomial
    change: dict = field(repr=False)
    chart_map: dict = field(repr=False)
    inverse_data: str = ""
    field: NumberField | None = None

    def expression(self) -> str:
        return f"{self.solved_variable} = ({self.numerator}) / ({self.denominator})"

    def chart_equation(self, F: WPolynomial) -> WPolynomial:
        return F.substitute(self.change).substitute(self.chart_map, ring=self.ring)


def _x1_change(l: WPolynomial) -> tuple[dict, str]:
    """Linear change of (x1, y1) making the linear form ``l`` the new x1.

    Returns the map old -> new and a description of it.
    """
    a = l.coefficient((1, 0, 0, 0, 0))
    b = l.coefficient((0, 1, 0, 0, 0))
    x1, y1 = RING.gen("x1"), RING.gen("y1")
    if a != 0:
        return {"x1": (x1 - y1 * b) / a, "y1": y1}, f"x1' = {l}"
    return {"x1": y1, "y1": x1 / b}, f"x1' = {l}, y1' = x1"


def _square_root(c) -> tuple[object, NumberField | None]:
    """A square root of the rational ``c`` in Q or in Q(sqrt c)."""
    c = Fraction(c)
    roots = U.rational_roots((-c, Fraction(0), Fraction(1)))
    if roots:
        return max(roots), None
    K = NumberField((-c, Fraction(0), Fraction(1)), "s")
    return K.gen(), K


def build_witness(nf: NormalForm) -> RationalityWitness:
    """Witness of rationality for case Eq2/Eq1 with ``rank(phi2'') <= 1``.

    Rank 1: with ``phi2'' = c*l^2``, move ``l`` to x1, pass to the chart
    x1 = 1 and factor ``x3^2 + c*y2^2 = u*v`` with ``u = x3 - s*y2``,
    ``v = x3 + s*y2``, ``s^2 = -c``. The equation becomes
    ``u*v + (v - u)*L/(2s) + M = 0``, linear in u.
    Rank 0: the equation ``x3^2 + y2*L + M`` is linear in y2.
    """
    if nf.case not in (EQ2, EQ1):
        raise PreconditionViolation("witnesses exist only in cases Eq2 and Eq1")
    table_kind(nf)  # raises NotTerminalAtHalfPoint outside the table
    phi2pp = nf.form("phi2pp")
    rank = binary_quadratic_rank(phi2pp, "x1", "y1")
    if rank == 2:
        raise PreconditionViolation("rank(phi2'') = 2: the index-2 point is moderate")

    if rank == 1:
        a, b, c = quadratic_coeffs(phi2pp, "x1", "y1")
        # a*x1^2 + b*x1*y1 + c*y1^2 = lead * l^2
        if a != 0:
            lead = a
            l = RING.gen("x1") + RING.gen("y1") * (b / (2 * a))
        else:
            lead = c
            l = RING.gen("y1")
    else:
        lead, l = None, RING.gen("x1")
    x1_change, change_desc = _x1_change(l)
    change = {
        v: nf.forward.get(v, RING.gen(v)).substitute(x1_change) for v in VARIABLES
    }

    if rank == 1:
        s, K = _square_root(-lead)
        ring = PolyRing(("y1", "x2", "u", "v"))
        y1, x2, u, v = ring.gens()
        chart_map = {
            "x1": ring.one(), "y1": y1, "x2": x2,
            "y2": (v - u) * (1 / (2 * s)), "x3": (u + v) * Fraction(1, 2),
        }
        solved = "u"
        inverse_desc = f"{change_desc}; chart x1' = 1; u = x3 - {s}*y2, v = x3 + {s}*y2"
    else:
        K = None
        ring = PolyRing(("y1", "x2", "y2", "x3"))
        chart_map = {"x1": ring.one(), **{v: ring.gen(v) for v in ring.variables}}
        solved = "y2"
        inverse_desc = f"{change_desc}; chart x1' = 1"

    # the normal form itself, so that the witness is stated without the scalar
    E = nf.template().substitute(x1_change).substitute(chart_map, ring=ring)
    groups = E.coefficients_in([solved])
    if set(groups) - {(0,), (1,)} or (1,) not in groups:
        raise NotLinearizable(f"the chart equation is not linear in {solved}")
    numerator = -groups[(0,)] if (0,) in groups else ring.zero()
    denominator = groups[(1,)]
    return RationalityWitness(
        "x1", ring, solved, numerator, denominator, change, chart_map, inverse_desc, K
    )


def verify_witness(w: RationalityWitness, X: Sextic) -> bool:
    """Re-check a witness against X by exact back-substitution.

    Checks that ``change`` is a weight-preserving automorphism and
    ``chart_map`` an invertible affine chart map, that the chart equation
    has degree exactly 1 in the solved variable (so projecting away from it
    is birational), and that ``denominator * E(numerator / denominator)``
    vanishes identically with a nonzero denominator.
    """
    try:
        if not (_is_automorphism(w.change) and _is_affine_chart(w)):
            return False
        E = w.chart_equation(X.F)
    except (KeyError, ValueError, ZeroDivisionError):
        return False
    if w.denominator.is_zero():
        return False
    if w.denominator.degree_in(w.solved_variable) or w.numerator.degree_in(w.solved_variable):
        return False
    groups = E.coefficients_in([w.solved_variable])
    if set(groups) - {(0,), (1,)} or (1,) not in groups:
        return False
    e0 = groups.get((0,), w.ring.zero())
    residual = groups[(1,)] * w.numerator + e0 * w.denominator
    return residual.is_zero()


def _is_automorphism(change: dict) -> bool:
    """Weighted homogeneous images of the right weights with constant,
    nonzero Jacobian determinant; such a triangular map is invertible."""
    for v, wt in zip(VARIABLES, RING.weights):
        p = change.get(v)
        if p is None or p.ring != RING or p.is_zero() or not p.is_homogeneous(wt):
            return False
    det = _det_poly([[change[v].diff(c) for c in VARIABLES] for v in VARIABLES])
    return not det.is_zero() and det.total_degree() == 0


def _is_affine_chart(w: RationalityWitness) -> bool:
    """``chart -> 1`` and the other four coordinates affine-linear and
    invertible in the chart coordinates."""
    image = w.chart_map.get(w.chart)
    if image is None or image != w.ring.one():
        return False
    rest = [v for v in VARIABLES if v != w.chart]
    if any(w.chart_map[v].total_degree() > 1 for v in rest):
        return False
    det = _det_poly([[w.chart_map[v].diff(c) for c in w.ring.variables] for v in rest])
    return not det.is_zero()


def _det_poly(m: list[list[WPolynomial]]) -> WPolynomial:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = m[0][0].ring.zero()
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det_poly(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- verdicts -------------------------------------------------------------------


@dataclass(frozen=True)
class Rational:
    witness: RationalityWitness | None
    reason: str

    tag = "Rational"


@dataclass(frozen=True)
class NonRational:
    profile: SingularityProfile
    flags: Flags
    reason: str

    tag = "NonRational"


@dataclass(frozen=True)
class Undetermined:
    reasons: tuple

    tag = "Undetermined"


def decide(profile: SingularityProfile, flags: Flags) -> Rational | NonRational | Undetermined:
    """Apply the rationality criterion to a complete singularity profile.

    A non-Gorenstein point worse than moderate gives Rational (the witness
    is attached by the caller). Otherwise NonRational requires every
    Gorenstein point to be a node or cusp, at most four of them, and both
    hypotheses asserted; anything short of that is Undetermined with the
    failed conditions listed.
    """
    worse = [r for r in profile.non_gorenstein if is_worse_than_moderate(r.kind)]
    if worse:
        labels = sorted({r.kind.label() for r in worse})
        return Rational(None, "non-Gorenstein point worse than moderate: " + ", ".join(labels))

    reasons = []
    bad = sorted(
        {r.kind.label() for r in profile.gorenstein if not (isinstance(r.kind, An) and r.kind.n <= 2)}
    )
    for label in bad:
        reasons.append(f"Gorenstein point of type {label}")
    if profile.gorenstein_count > MAX_GORENSTEIN_POINTS:
        reasons.append(f"{profile.gorenstein_count} Gorenstein points (more than {MAX_GORENSTEIN_POINTS})")
    if not flags.terminal:
        reasons.append("terminality not asserted")
    if not flags.q_factorial:
        reasons.append("Q-factoriality not asserted")
    if reasons:
        return Undetermined(tuple(reasons))
    return NonRational(
        profile,
        flags,
        f"{profile.gorenstein_count} Gorenstein points, all nodes or cusps; "
        "non-Gorenstein points moderate",
    )
