"""Reduction of a sextic to one of the three normal forms Eq3, Eq2, Eq1.

After completing the square in x3, the binary cubic ``c(x2, y2) = F(0,0,x2,y2,0)``
decides the case by its root multiplicities. A linear change of (x2, y2)
moves its roots to the template positions, a scaling fixes the template
coefficients to 1, and translations of x2, y2 by quadratic forms in (x1, y1)
clear the monomials absent from the template. The forms are then read off
by coefficient matching::

    Eq3: x3^2 + x2*y2*(x2+y2) + x2^2*p2 + x2*y2*p2' + y2^2*p2'' + x2*p4 + y2*p4' + p6
    Eq2: x3^2 + x2^2*y2 + y2^2*p2'' + x2*p4 + y2*p4' + p6
    Eq1: x3^2 + x2^3 + x2*y2*p2' + y2^2*p2'' + x2*p4 + y2*p4' + p6

(``p`` standing for the binary forms in x1, y1 of the subscripted degree.)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra import univariate as U
from .algebra.binary import dehomogenize, squarefree_pattern
from .algebra.numberfield import NumberField, simplify
from .algebra.poly import WPolynomial, compose_substitutions
from .errors import CubicVanishes, MissingX3Square, UnsupportedField
from .wps import RING, Sextic, SquareCompletion
from .wps import complete_square as _complete_square

EQ3, EQ2, EQ1 = "Eq3", "Eq2", "Eq1"
CASES = (EQ3, EQ2, EQ1)

# (x2, y2, x3) exponents of each form slot
SLOTS = {
    "phi2": (2, 0, 0),
    "phi2p": (1, 1, 0),
    "phi2pp": (0, 2, 0),
    "phi4": (1, 0, 0),
    "phi4p": (0, 1, 0),
    "phi6": (0, 0, 0),
}
CASE_SLOTS = {
    EQ3: ("phi2", "phi2p", "phi2pp", "phi4", "phi4p", "phi6"),
    EQ2: ("phi2pp", "phi4", "phi4p", "phi6"),
    EQ1: ("phi2p", "phi2pp", "phi4", "phi4p", "phi6"),
}
SLOT_LABELS = {
    "phi2": "φ2",
    "phi2p": "φ2'",
    "phi2pp": "φ2''",
    "phi4": "φ4",
    "phi4p": "φ4'",
    "phi6": "φ6",
}


def template_cubic(case: str) -> WPolynomial:
    x2, y2 = RING.gen("x2"), RING.gen("y2")
    return {EQ3: x2 * y2 * (x2 + y2), EQ2: x2 * x2 * y2, EQ1: x2**3}[case]


@dataclass(frozen=True)
class NormalForm:
    """Case tag, the forms in (x1, y1), and the coordinate change used.

    ``forward`` expresses the input coordinates through the normalized ones
    and ``inverse`` the other way round; ``scalar`` satisfies
    ``template == scalar * F(forward)`` where F is the input polynomial.
    ``field`` is the number field the change and the forms live over, or None.
    """

    case: str
    forms: Mapping[str, WPolynomial]
    forward: Mapping[str, WPolynomial] = field(repr=False)
    inverse: Mapping[str, WPolynomial] = field(repr=False)
    scalar: object = Fraction(1)
    field: NumberField | None = None

    def form(self, name: str) -> WPolynomial:
        if name not in CASE_SLOTS[self.case]:
            raise KeyError(f"{name} is not a slot of case {self.case}")
        return self.forms.get(name, RING.zero())

    def template(self) -> WPolynomial:
        """Reassemble the normalized equation from the stored forms."""
        x3 = RING.gen("x3")
        out = x3**2 + template_cubic(self.case)
        for name in CASE_SLOTS[self.case]:
            e = SLOTS[name]
            mono = RING.monomial((0, 0) + e, 1)
            out = out + mono * self.form(name)
        return out


def complete_square(X: Sextic) -> SquareCompletion:
    """Square completion of X; raises MissingX3Square without an x3^2 term."""
    comp = _complete_square(X.F)
    if comp is None:
        raise MissingX3Square("no x3^2 term; the point (0,0,0,0,1) is not terminal")
    return comp


def binary_cubic(G: WPolynomial) -> WPolynomial:
    """``c(x2, y2) = G(0, 0, x2, y2, 0)``."""
    return G.specialize({"x1": 0, "y1": 0, "x3": 0})


def classify_case(G: WPolynomial) -> str:
    """Case tag of a square-completed sextic from the root pattern of c."""
    c = binary_cubic(G)
    if c.is_zero():
        raise CubicVanishes("F(0,0,x2,y2,0) vanishes identically")
    pattern = squarefree_pattern(c, "x2", "y2")
    return {(1, 1, 1): EQ3, (2, 1): EQ2, (3,): EQ1}[pattern]


# -- roots of the cubic -----------------------------------------------------


@dataclass(frozen=True)
class CubicRoot:
    """A root of c as the linear form ``a*x2 + b*y2`` vanishing on it."""

    a: object
    b: object
    multiplicity: int
    field: NumberField | None

    def form(self) -> WPolynomial:
        return RING.gen("x2") * self.a + RING.gen("y2") * self.b

    def point(self) -> tuple:
        """(x2, y2) coordinates of the root."""
        return (-self.b, self.a) if self.a != 0 else (Fraction(1), Fraction(0))


def _root_order_key(r: Fraction):
    # 0 before everything else so that the templates are fixed points
    return (r != 0, abs(r.numerator) + r.denominator, r)


def cubic_roots(c: WPolynomial) -> tuple[list[CubicRoot], NumberField | None]:
    """Roots of the binary cubic as linear forms, over the smallest field
    of degree <= 3 containing all of them.

    Ordering: rational roots first (root x2 = 0 first, then the root at
    infinity, then by height), then the roots of an irreducible factor.
    Raises UnsupportedField when the splitting field has degree 6.
    """
    d, g = dehomogenize(c, "x2", "y2")
    roots: list[CubicRoot] = []
    infinity = d - U.degree(g)
    rational = []
    higher = []
    for f, k in U.factor_small(g):
        if U.degree(f) == 1:
            rational.append((-f[0], k))
        else:
            higher.append((f, k))
    rational.sort(key=lambda rk: _root_order_key(rk[0]))
    zero = [rk for rk in rational if rk[0] == 0]
    rest = [rk for rk in rational if rk[0] != 0]
    for r, k in zero:
        roots.append(CubicRoot(Fraction(1), -r, k, None))
    if infinity:
        roots.append(CubicRoot(Fraction(0), Fraction(1), infinity, None))
    for r, k in rest:
        roots.append(CubicRoot(Fraction(1), -r, k, None))
    if not higher:
        return roots, None
    (f, k), = higher
    K = NumberField(f)
    theta = K.gen()
    if U.degree(f) == 2:
        conj = -f[1] - theta
        in_field = [theta, conj]
    else:
        in_field = roots_in_field(f, K)
        if len(in_field) < 3:
            raise UnsupportedField("the cubic's splitting field has degree 6")
    for t in in_field:
        roots.append(CubicRoot(Fraction(1), -t, k, K))
    return roots, K


def roots_in_field(f: tuple, K: NumberField) -> list:
    """Roots of the rational polynomial ``f`` lying in ``K`` (degree 3 only).

    Writes a root as ``a0 + a1 t + a2 t^2`` and solves the resulting
    polynomial system for rational (a0, a1, a2).
    """
    from .algebra.poly import PolyRing
    from .algebra.solve import zero_dim_solve

    n = K.degree
    R = PolyRing(tuple(f"a{i}" for i in range(n)))
    a = R.gens()
    # multiplication table of K in the power basis
    powers = [K((0,) * i + (1,)) for i in range(2 * n)]

    def mul(u, v):
        out = [R.zero()] * n
        for i in range(n):
            for j in range(n):
                prod = powers[i + j]
                for k, ck in enumerate(prod.coeffs):
                    if ck != 0:
                        out[k] = out[k] + u[i] * v[j] * ck
        return out

    elt = list(a)
    acc = [R.const(f[-1])] + [R.zero()] * (n - 1)
    for c in reversed(f[:-1]):
        acc = mul(acc, elt)
        acc[0] = acc[0] + R.const(c)
    sols = zero_dim_solve(acc)
    out = []
    for p in sols.points:
        if p.field is None:
            out.append(simplify(K(tuple(p.coords))))
    out.sort(key=K.element_key)
    return out


# -- the reduction ----------------------------------------------------------------


def _linear_change(a11, a12, a21, a22) -> tuple[dict, dict]:
    """New (X2, Y2) = M (x2, y2); return forward (old via new) and inverse."""
    det = a11 * a22 - a12 * a21
    x2, y2 = RING.gen("x2"), RING.gen("y2")
    inverse = {"x2": x2 * a11 + y2 * a12, "y2": x2 * a21 + y2 * a22}
    forward = {
        "x2": x2 * (a22 / det) - y2 * (a12 / det),
        "y2": -x2 * (a21 / det) + y2 * (a11 / det),
    }
    return forward, inverse


def _complement(root: CubicRoot) -> tuple:
    """A linear form completing ``root.form()`` to a basis: y2 or x2."""
    return (Fraction(0), Fraction(1)) if root.a != 0 else (Fraction(1), Fraction(0))


class _Chain:
    """Accumulates coordinate changes and the global scalar."""

    def __init__(self, poly: WPolynomial, forward: dict, inverse: dict, scalar):
        self.poly = poly
        self.forward = {v: forward.get(v, RING.gen(v)) for v in RING.variables}
        self.inverse = {v: inverse.get(v, RING.gen(v)) for v in RING.variables}
        self.scalar = scalar

    def apply(self, forward: dict, inverse: dict, scalar=1):
        self.poly = self.poly.substitute(forward) * scalar
        self.forward = compose_substitutions(self.forward, forward, RING)
        self.inverse = compose_substitutions(inverse, self.inverse, RING)
        self.scalar = simplify(self.scalar * scalar)


def _translate(var: str, amount: WPolynomial) -> tuple[dict, dict]:
    v = RING.gen(var)
    return {var: v + amount}, {var: v - amount}


def normalize(X: Sextic) -> NormalForm:
    """Bring X to its normal form; see the module docstring for the templates."""
    comp = complete_square(X)
    G = comp.poly
    case = classify_case(G)
    chain = _Chain(G, comp.forward, comp.inverse, comp.scalar)

    c = binary_cubic(G)
    roots, K = cubic_roots(c)
    if case == EQ3:
        r1, r2, r3 = roots
        # l3 = p*l1 + q*l2; X2 = p*l1, Y2 = q*l2 gives X2*Y2*(X2+Y2) = pq*l1*l2*l3
        det = r1.a * r2.b - r1.b * r2.a
        p = (r3.a * r2.b - r3.b * r2.a) / det
        q = (r1.a * r3.b - r1.b * r3.a) / det
        fwd, inv = _linear_change(p * r1.a, p * r1.b, q * r2.a, q * r2.b)
    elif case == EQ2:
        double = next(r for r in roots if r.multiplicity == 2)
        single = next(r for r in roots if r.multiplicity == 1)
        fwd, inv = _linear_change(double.a, double.b, single.a, single.b)
    else:
        (root,) = roots
        ca, cb = _complement(root)
        fwd, inv = _linear_change(root.a, root.b, ca, cb)
    chain.apply(fwd, inv)

    # scale so that the cubic is exactly the template
    k = binary_cubic(chain.poly).coefficient(
        {EQ3: (0, 0, 2, 1, 0), EQ2: (0, 0, 2, 1, 0), EQ1: (0, 0, 3, 0, 0)}[case]
    )
    if k != 1:
        inv_k = 1 / k
        x2, y2, x3 = RING.gen("x2"), RING.gen("y2"), RING.gen("x3")
        chain.apply(
            {"x2": x2 * inv_k, "y2": y2 * inv_k, "x3": x3 * inv_k},
            {"x2": x2 * k, "y2": y2 * k, "x3": x3 * k},
            k * k,
        )

    if case == EQ2:
        phi2 = _slot(chain.poly, "phi2")
        if not phi2.is_zero():
            chain.apply(*_translate("y2", -phi2))
        phi2p = _slot(chain.poly, "phi2p")
        if not phi2p.is_zero():
            chain.apply(*_translate("x2", phi2p * Fraction(-1, 2)))
    elif case == EQ1:
        phi2 = _slot(chain.poly, "phi2")
        if not phi2.is_zero():
            chain.apply(*_translate("x2", phi2 * Fraction(-1, 3)))

    forms = {}
    for name in CASE_SLOTS[case]:
        f = _slot(chain.poly, name)
        if not f.is_zero():
            forms[name] = f
    nf = NormalForm(case, forms, chain.forward, chain.inverse, chain.scalar, K)
    if nf.template() != chain.poly:
        raise AssertionError("normal form reassembly mismatch")
    return nf


def _slot(poly: WPolynomial, name: str) -> WPolynomial:
    groups = poly.coefficients_in(["x2", "y2", "x3"])
    return groups.get(SLOTS[name], RING.zero())

