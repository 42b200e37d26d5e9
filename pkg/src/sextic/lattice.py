"""Brute-force checks in the Picard lattice of the Hirzebruch surface F2
blown up in l <= 4 points.

Classes are integer vectors on the basis (S, F, E1, ..., El) with
``S^2 = -2``, ``S.F = 1``, ``F^2 = 0``, ``Ei^2 = -1``; the canonical class is
``K = -2S - 4F + sum Ei``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionViolation

MAX_POINTS = 4


def gram_matrix(l: int) -> np.ndarray:
    g = np.zeros((l + 2, l + 2), dtype=np.int64)
    g[0, 0] = -2
    g[0, 1] = g[1, 0] = 1
    for i in range(l):
        g[2 + i, 2 + i] = -1
    return g


def canonical(l: int) -> np.ndarray:
    return np.array([-2, -4] + [1] * l, dtype=np.int64)


@dataclass(frozen=True)
class LatticeClass:
    coeffs: tuple

    @property
    def l(self) -> int:
        return len(self.coeffs) - 2

    def dot(self, other: "LatticeClass") -> int:
        a = np.array(self.coeffs, dtype=np.int64)
        b = np.array(other.coeffs, dtype=np.int64)
        return int(a @ gram_matrix(self.l) @ b)

    def __add__(self, other):
        return LatticeClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return LatticeClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k: int):
        return LatticeClass(tuple(k * a for a in self.coeffs))

    def __str__(self):
        names = ["S", "F"] + [f"E{i + 1}" for i in range(self.l)]
        return " + ".join(f"{c}*{n}" for c, n in zip(self.coeffs, names) if c) or "0"


def canonical_class(l: int) -> LatticeClass:
    return LatticeClass(tuple(int(x) for x in canonical(l)))


@dataclass(frozen=True)
class Candidate:
    """A decomposition ``-2K = D1 + D2`` with ``D1.D2 = 2``, with side data."""

    d1: LatticeClass
    d2: LatticeClass
    minus_k_d1: int
    minus_k_d2: int
    d1_squared: int
    d2_squared: int
    arithmetic_genus_d1: int
    arithmetic_genus_d2: int


@dataclass(frozen=True)
class LatticeReport:
    l: int
    bound: int
    enumerated: int
    candidates: int
    violations: tuple
    minus2_classes: int
    parity_failures: int
    k_squared: int
    side_conditions: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and self.parity_failures == 0


def _grid(l: int, bound: int) -> np.ndarray:
    """All D1 with D1 and -2K - D1 both in the box: S in [0,4], F in [0,8],
    each Ei coefficient a with a and -2-a in [-bound, bound]."""
    s = np.arange(0, 5)
    f = np.arange(0, 9)
    e = np.arange(-bound, bound - 1)
    axes = [s, f] + [e] * l
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1).astype(np.int64)


def lattice_check_surf(l: int, bound: int = 8) -> LatticeReport:
    """Search decompositions ``-2K = D1 + D2`` with ``D1.D2 = 2`` for ones
    with ``-K.D1 > 0`` and ``-K.D2 > 0``.

    The box is nonnegative on (S, F) and signed on the Ei, within ``bound``.
    Also checks on every class D1 of the box with ``D1^2 = -2`` that
    ``D1.(-2K - D1)`` is even.
    """
    if not 0 <= l <= MAX_POINTS:
        raise PreconditionViolation(f"l must lie in 0..{MAX_POINTS}")
    if bound < 8:
        raise PreconditionViolation("bound must cover the coefficients of -2K (at least 8)")
    G = gram_matrix(l)
    K = canonical(l)
    target = -2 * K
    D1 = _grid(l, bound)
    D2 = target[None, :] - D1
    GD1 = D1 @ G
    mkd1 = -(GD1 @ K)
    mkd2 = -(D2 @ G @ K)
    d1d2 = np.einsum("ij,ij->i", GD1, D2)
    d1sq = np.einsum("ij,ij->i", GD1, D1)

    cand = d1d2 == 2
    bad = cand & (mkd1 > 0) & (mkd2 > 0)
    violations = []
    for i in np.flatnonzero(bad):
        d1 = LatticeClass(tuple(int(x) for x in D1[i]))
        d2 = LatticeClass(tuple(int(x) for x in D2[i]))
        d2sq = int(d2.dot(d2))
        violations.append(
            Candidate(
                d1, d2, int(mkd1[i]), int(mkd2[i]), int(d1sq[i]), d2sq,
                (int(d1sq[i]) - int(mkd1[i])) // 2 + 1, (d2sq - int(mkd2[i])) // 2 + 1,
            )
        )

    minus2 = d1sq == -2
    parity_failures = int(np.count_nonzero(minus2 & (d1d2 % 2 != 0)))

    cand_idx = np.flatnonzero(cand)
    side = {
        "candidates_with_-K.D1=0": int(np.count_nonzero(cand & (mkd1 == 0))),
        "candidates_with_-K.D2=0": int(np.count_nonzero(cand & (mkd2 == 0))),
        "candidates_with_negative_-K.D": int(
            np.count_nonzero(cand & ((mkd1 < 0) | (mkd2 < 0)))
        ),
        "candidates_with_D1^2<0": int(np.count_nonzero(d1sq[cand_idx] < 0)),
    }
    return LatticeReport(
        l, bound, int(D1.shape[0]), int(cand_idx.size), tuple(violations),
        int(np.count_nonzero(minus2)), parity_failures, int(K @ G @ K), side,
    )
