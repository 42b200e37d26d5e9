"""Random sextics with prescribed normal-form data, random weight-preserving
automorphisms of P(1,1,2,2,3), and local models of A_n singularities.

All generators take a :class:`random.Random` so that runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra.binary import squarefree_pattern
from .algebra.poly import PolyRing, WPolynomial
from .conic import ECKARDT_RING
from .normal_form import EQ1, EQ2, EQ3, template_cubic
from .wps import RING

X1, Y1, X2, Y2, X3 = RING.gens()
COEFF_RANGE = 3


def _coeff(rng: random.Random, lo: int = -COEFF_RANGE, hi: int = COEFF_RANGE, nonzero=False) -> int:
    while True:
        c = rng.randint(lo, hi)
        if c or not nonzero:
            return c


def random_binary_form(rng: random.Random, degree: int, density: float = 0.7) -> WPolynomial:
    """Random form of the given degree in (x1, y1)."""
    out = RING.zero()
    for i in range(degree + 1):
        if rng.random() < density:
            out = out + X1 ** (degree - i) * Y1**i * _coeff(rng)
    return out


def random_quadratic_of_rank(rng: random.Random, rank: int) -> WPolynomial:
    """Binary quadratic form in (x1, y1) of the given rank."""
    if rank == 0:
        return RING.zero()
    if rank == 1:
        a, b = _coeff(rng), _coeff(rng)
        if a == 0 and b == 0:
            a = 1
        return (X1 * a + Y1 * b) ** 2 * _coeff(rng, nonzero=True)
    while True:
        a, b, c = _coeff(rng), _coeff(rng), _coeff(rng)
        if b * b - 4 * a * c != 0:
            return X1 * X1 * a + X1 * Y1 * b + Y1 * Y1 * c


# -- table rows ---------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    """One row of the classification table, split by the rank of phi2''
    where the row distinguishes moderate from non-moderate points."""

    name: str
    case: str
    expected: tuple  # sorted (label, count) pairs of non-Gorenstein classes


TABLE_ROWS = (
    TableRow("Eq3", EQ3, (("1/2(1,1,1)", 3),)),
    TableRow("Eq2 rank 2", EQ2, (("1/2(1,1,1)", 1), ("cA/2 moderate aw=2", 1))),
    TableRow("Eq2 rank 1", EQ2, (("1/2(1,1,1)", 1), ("cA/2 non-moderate", 1))),
    TableRow("Eq2 phi2''=0", EQ2, (("1/2(1,1,1)", 1), ("cAx/2", 1))),
    TableRow("Eq1 rank 2", EQ1, (("cA/2 moderate aw=3", 1),)),
    TableRow("Eq1 rank 1", EQ1, (("cA/2 non-moderate", 1),)),
    TableRow("Eq1 cD/2", EQ1, (("cD/2", 1),)),
    TableRow("Eq1 cE/2", EQ1, (("cE/2", 1),)),
)


def _nonzero_form(rng: random.Random, degree: int) -> WPolynomial:
    while True:
        f = random_binary_form(rng, degree)
        if not f.is_zero():
            return f


def normal_form_member(rng: random.Random, row: TableRow) -> WPolynomial:
    """A sextic already in normal form realizing ``row``."""
    x3sq = X3**2
    if row.case == EQ3:
        return (
            x3sq + template_cubic(EQ3)
            + X2 * X2 * random_binary_form(rng, 2) + X2 * Y2 * random_binary_form(rng, 2)
            + Y2 * Y2 * random_binary_form(rng, 2) + X2 * random_binary_form(rng, 4)
            + Y2 * random_binary_form(rng, 4) + random_binary_form(rng, 6)
        )
    rank = {"rank 2": 2, "rank 1": 1}.get(row.name.split(" ", 1)[1], 0)
    phi2pp = random_quadratic_of_rank(rng, rank)
    phi4, phi4p, phi6 = (random_binary_form(rng, d) for d in (4, 4, 6))
    if row.case == EQ2:
        return x3sq + X2 * X2 * Y2 + Y2 * Y2 * phi2pp + X2 * phi4 + Y2 * phi4p + phi6
    phi2p = random_binary_form(rng, 2)
    if row.name == "Eq1 cD/2":
        phi2p = _nonzero_form(rng, 2)
    elif row.name == "Eq1 cE/2":
        phi2p = RING.zero()
        phi4p = _nonzero_form(rng, 4)
    return x3sq + X2**3 + X2 * Y2 * phi2p + Y2 * Y2 * phi2pp + X2 * phi4 + Y2 * phi4p + phi6


def random_cubic_member(rng: random.Random) -> WPolynomial:
    """Case Eq3 with a random squarefree cubic c (roots possibly irrational)."""
    while True:
        a, b, c, d = (_coeff(rng) for _ in range(4))
        disc = b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d
        if disc != 0:
            break
    cubic = X2**3 * a + X2 * X2 * Y2 * b + X2 * Y2 * Y2 * c + Y2**3 * d
    return (
        X3**2 + cubic + X2 * X2 * random_binary_form(rng, 2) + Y2 * Y2 * random_binary_form(rng, 2)
        + X2 * random_binary_form(rng, 4) + Y2 * random_binary_form(rng, 4)
        + random_binary_form(rng, 6)
    )


# -- automorphisms ----------------------------------------------------------------


def _invertible_2x2(rng: random.Random, lo=-2, hi=2) -> tuple:
    while True:
        m = tuple(rng.randint(lo, hi) for _ in range(4))
        if m[0] * m[3] - m[1] * m[2] != 0:
            return m


def random_automorphism(rng: random.Random, translations: bool = True) -> dict:
    """A random weight-preserving automorphism, as a substitution old -> new.

    GL2 on (x1, y1); GL2 on (x2, y2) plus quadratic forms in (x1, y1); a
    nonzero multiple of x3 plus a weight-3 polynomial in the others.
    """
    a = _invertible_2x2(rng)
    b = _invertible_2x2(rng)
    x1 = X1 * a[0] + Y1 * a[1]
    y1 = X1 * a[2] + Y1 * a[3]
    x2 = X2 * b[0] + Y2 * b[1]
    y2 = X2 * b[2] + Y2 * b[3]
    x3 = X3 * _coeff(rng, -2, 2, nonzero=True)
    if translations:
        x2 = x2 + random_binary_form(rng, 2, 0.5)
        y2 = y2 + random_binary_form(rng, 2, 0.5)
        t3 = random_binary_form(rng, 3, 0.4)
        for lin in (X1, Y1):
            for quad in (X2, Y2):
                if rng.random() < 0.3:
                    t3 = t3 + lin * quad * _coeff(rng)
        x3 = x3 + t3
    return {"x1": x1, "y1": y1, "x2": x2, "y2": y2, "x3": x3}


def apply_automorphism(F: WPolynomial, phi: dict) -> WPolynomial:
    return F.substitute(phi)


def disguise(rng: random.Random, F: WPolynomial, translations: bool = True) -> WPolynomial:
    """F composed with a random automorphism."""
    return apply_automorphism(F, random_automorphism(rng, translations))


def table_member(rng: random.Random, row: TableRow, translations: bool = True) -> WPolynomial:
    return disguise(rng, normal_form_member(rng, row), translations)


def rank_le1_member(rng: random.Random) -> WPolynomial:
    """A disguised member of a row with rank(phi2'') <= 1 (rational sextics)."""
    rows = [r for r in TABLE_ROWS if r.case != EQ3 and "rank 2" not in r.name]
    return table_member(rng, rng.choice(rows))


# -- Gorenstein points -----------------------------------------------------------


def gorenstein_member(rng: random.Random, types: tuple = (1,)) -> WPolynomial:
    """Eq3 sextic with prescribed A_n points over distinct points of P^1.

    ``x3^2 + c(x2,y2) + (x2^2 + y2^2)*x1^2 + prod(l_i^(n_i+1)) * M(x1,y1)``
    with distinct linear forms l_i missing x1 = 0 and a form M of the
    remaining degree; at ``l_i = x2 = y2 = x3 = 0`` the point is A_(n_i)
    when M does not vanish there. Other singular points may occur.
    """
    if sum(n + 1 for n in types) > 6:
        raise ValueError("the A_n exponents must fit in degree 6")
    slopes = rng.sample(range(-4, 5), len(types))
    prod = RING.one()
    for n, t in zip(types, slopes):
        prod = prod * (Y1 - X1 * t) ** (n + 1)
    rest = 6 - sum(n + 1 for n in types)
    while True:
        M = random_binary_form(rng, rest) + (X1**rest + Y1**rest) * _coeff(rng, 1, 3)
        if M.is_zero():
            continue
        values = [M.evaluate({"x1": 1, "y1": t, "x2": 0, "y2": 0, "x3": 0}) for t in slopes]
        values.append(M.coefficient((0, rest, 0, 0, 0)))
        if all(v != 0 for v in values) and (rest < 2 or set(squarefree_pattern(M, "x1", "y1")) == {1}):
            break
    return X3**2 + template_cubic(EQ3) + (X2 * X2 + Y2 * Y2) * X1 * X1 + prod * M


# -- Eckardt cubics ---------------------------------------------------------------


def random_eckardt_cubic(rng: random.Random, generic: bool = True) -> WPolynomial:
    """``x3^2 + phi(x1, x2, y2)`` with phi of total degree at most 3."""
    x1, x2, y2, x3 = ECKARDT_RING.gens()
    out = x3**2
    monomials = [
        (i, j, k) for i in range(4) for j in range(4) for k in range(4) if i + j + k <= 3
    ]
    for i, j, k in monomials:
        c = _coeff(rng, nonzero=generic)
        if c:
            out = out + x1**i * x2**j * y2**k * c
    return out


# -- local A_n models ----------------------------------------------------------------

LOCAL_RING = PolyRing(("u", "v", "w", "s"))


def an_model(n: int) -> WPolynomial:
    u, v, w, s = LOCAL_RING.gens()
    return u * u + v * v + w * w + s ** (n + 1)


def random_unimodular(rng: random.Random, size: int = 4, steps: int = 6) -> list[list[int]]:
    """Product of random elementary integer matrices (determinant 1)."""
    m = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(steps):
        i, j = rng.sample(range(size), 2)
        k = _coeff(rng, -2, 2, nonzero=True)
        m = [row[:] for row in m]
        for r in range(size):
            m[r][i] += k * m[r][j]
    return m


def random_local_change(rng: random.Random, nonlinear: bool = True) -> dict:
    """A unimodular linear change followed by a triangular change
    ``x_i -> x_i + q_i(x_(i+1), ...)`` with q_i of order 2 (origin fixed)."""
    gens = LOCAL_RING.gens()
    m = random_unimodular(rng)
    linear = [sum((gens[j] * m[i][j] for j in range(4)), LOCAL_RING.zero()) for i in range(4)]
    if not nonlinear:
        return dict(zip(LOCAL_RING.variables, linear))
    tri = list(gens)
    for i in range(3):
        later = gens[i + 1:]
        q = LOCAL_RING.zero()
        for a in later:
            for b in later:
                if rng.random() < 0.3:
                    q = q + a * b * _coeff(rng, -1, 1)
        tri[i] = gens[i] + q
    tri_map = dict(zip(LOCAL_RING.variables, tri))
    return {v: p.substitute(tri_map) for v, p in zip(LOCAL_RING.variables, linear)}


def disguised_an(rng: random.Random, n: int, nonlinear: bool = True) -> WPolynomial:
    return an_model(n).substitute(random_local_change(rng, nonlinear))


__all__ = [
    "TABLE_ROWS",
    "TableRow",
    "an_model",
    "apply_automorphism",
    "disguise",
    "disguised_an",
    "gorenstein_member",
    "normal_form_member",
    "random_automorphism",
    "random_binary_form",
    "random_cubic_member",
    "random_eckardt_cubic",
    "random_local_change",
    "random_quadratic_of_rank",
    "random_unimodular",
    "rank_le1_member",
    "table_member",
]
