"""Exact dense linear algebra over Q or a number field.

Matrices are lists of rows. Nothing here uses floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import univariate as U


def _copy(matrix: Sequence[Sequence]) -> list[list]:
    return [[Fraction(x) if isinstance(x, int) else x for x in row] for row in matrix]


def row_echelon(matrix: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = _copy(matrix)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix or not matrix[0]:
        return 0
    return len(row_echelon(matrix)[1])


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One solution of ``matrix @ x = rhs`` or None when inconsistent."""
    n = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, piv = row_echelon(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = red[i][n]
    return x


def nullspace(matrix: Sequence[Sequence]) -> list[list]:
    n = len(matrix[0]) if matrix else 0
    red, piv = row_echelon(matrix)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x != 0), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x != 0 and y != 0), Fraction(0)) for row in a]


def charpoly(matrix: Sequence[Sequence]) -> tuple:
    """Characteristic polynomial ``det(t*I - M)`` via Hessenberg reduction."""
    n = len(matrix)
    h = _copy(matrix)
    for k in range(1, n - 1):
        p = next((i for i in range(k, n) if h[i][k - 1] != 0), None)
        if p is None:
            continue
        if p != k:
            h[k], h[p] = h[p], h[k]
            for row in h:
                row[k], row[p] = row[p], row[k]
        inv = 1 / h[k][k - 1]
        for i in range(k + 1, n):
            f = h[i][k - 1] * inv
            if f == 0:
                continue
            h[i] = [a - f * b for a, b in zip(h[i], h[k])]
            for row in h:
                row[k] += f * row[i]
    # recurrence on leading principal submatrices of the Hessenberg form
    polys: list[tuple] = [(Fraction(1),)]
    for m in range(1, n + 1):
        pm = U.mul((-h[m - 1][m - 1], Fraction(1)), polys[m - 1])
        prod = Fraction(1)
        for i in range(1, m):
            prod *= h[m - i][m - i - 1]
            if prod == 0:
                break
            pm = U.sub(pm, U.scale(polys[m - i - 1], prod * h[m - i - 1][m - 1]))
        polys.append(pm)
    return polys[n]


class Echelon:
    """Incrementally maintained echelon basis used for Krylov iterations."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[tuple[int, list, list]] = []  # (pivot, vector, combination)

    def reduce(self, v: Sequence, tag: list) -> tuple[list, list]:
        v = list(v)
        tag = list(tag)
        for piv, row, comb in self.rows:
            c = v[piv]
            if c != 0:
                v = [a - c * b for a, b in zip(v, row)]
                tag = [a - c * b for a, b in zip(tag, comb)]
        return v, tag

    def insert(self, v: Sequence, tag: Sequence) -> bool:
        """Add ``v``; return False (and do nothing) if it is dependent."""
        v, tag = self.reduce(v, tag)
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        tag = [x * inv for x in tag]
        new_rows = []
        for p, row, comb in self.rows:
            c = row[piv]
            if c != 0:
                row = [a - c * b for a, b in zip(row, v)]
                comb = [a - c * b for a, b in zip(comb, tag)]
            new_rows.append((p, row, comb))
        new_rows.append((piv, v, tag))
        self.rows = new_rows
        return True


def krylov_minpoly(matrix: Sequence[Sequence], start: Sequence) -> tuple:
    """Monic minimal polynomial of ``matrix`` relative to the vector ``start``."""
    n = len(start)
    ech = Echelon(n)
    vecs = [list(start)]
    k = 0
    while True:
        tag = [Fraction(0)] * (n + 1)
        tag[k] = Fraction(1)
        v, t = ech.reduce(vecs[k], tag)
        if all(x == 0 for x in v):
            # t encodes a vanishing combination sum t_i * M^i start
            return U.monic(t[: k + 1])
        ech.insert(vecs[k], tag)
        vecs.append(matvec(matrix, vecs[k]))
        k += 1
