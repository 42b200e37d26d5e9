"""Truncated power series in local coordinates.

A :class:`Jet` keeps the terms of total degree at most ``order``; products
drop everything above it. Univariate truncated series (used for the
critical-point curve of the splitting lemma) are plain coefficient lists.
"""

from __future__ import annotations

from fractions import Fraction
from operator import add
from typing import Sequence

from .numberfield import simplify
from .poly import WPolynomial


class JetOrderExceeded(ArithmeticError):
    """No nonzero term survives up to the truncation order."""


class Jet:
    """Polynomial part of total degree <= ``order`` of a power series."""

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int, terms: dict | None = None):
        self.nvars = nvars
        self.order = order
        self.terms = {
            tuple(e): simplify(c)
            for e, c in (terms or {}).items()
            if c != 0 and sum(e) <= order
        }

    @classmethod
    def from_poly(cls, p: WPolynomial, order: int) -> "Jet":
        return cls(p.ring.nvars, order, p.terms)

    def _check(self, other: "Jet"):
        if self.nvars != other.nvars:
            raise ValueError("jets in different numbers of variables")

    def __add__(self, other: "Jet") -> "Jet":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Jet(self.nvars, min(self.order, other.order), out)

    def __neg__(self) -> "Jet":
        return Jet(self.nvars, self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Jet") -> "Jet":
        return self + (-other)

    def __mul__(self, other) -> "Jet":
        if not isinstance(other, Jet):
            return Jet(self.nvars, self.order, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        n = min(self.order, other.order)
        out: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > n:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Jet(self.nvars, n, out)

    __rmul__ = __mul__

    def homogeneous_part(self, d: int) -> dict:
        return {e: c for e, c in self.terms.items() if sum(e) == d}

    def order_of_vanishing(self) -> int | None:
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def hessian(self) -> list[list]:
        """Matrix of second partial derivatives at the origin."""
        n = self.nvars
        h = [[Fraction(0)] * n for _ in range(n)]
        for e, c in self.homogeneous_part(2).items():
            idx = [i for i, a in enumerate(e) for _ in range(a)]
            i, j = idx
            if i == j:
                h[i][i] = h[i][i] + 2 * c
            else:
                h[i][j] = h[i][j] + c
                h[j][i] = h[j][i] + c
        return h

    def linear_change(self, matrix: Sequence[Sequence]) -> "Jet":
        """Substitute ``x_i = sum_j matrix[i][j] * y_j``."""
        n = self.nvars
        unit = [tuple(int(k == j) for k in range(n)) for j in range(n)]
        images = [
            {unit[j]: matrix[i][j] for j in range(n) if matrix[i][j] != 0} for i in range(n)
        ]
        powers: dict = {}

        def power(i, a):
            if (i, a) not in powers:
                powers[(i, a)] = {(0,) * n: 1} if a == 0 else _dict_mul(power(i, a - 1), images[i])
            return powers[(i, a)]

        # products over prefixes of the exponent vector are shared between terms
        prefixes: dict = {(): {(0,) * n: 1}}

        def prefix(e):
            if e not in prefixes:
                prefixes[e] = _dict_mul(prefix(e[:-1]), power(len(e) - 1, e[-1]))
            return prefixes[e]

        out: dict = {}
        for e, c in self.terms.items():
            for k, v in prefix(tuple(e)).items():
                out[k] = out.get(k, 0) + c * v
        return Jet(n, self.order, out)


def _dict_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(map(add, e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return out


# -- univariate truncated series ---------------------------------------------


def series_mul(a: Sequence, b: Sequence, order: int) -> list:
    out = [0] * (order + 1)
    nb = [(j, y) for j, y in enumerate(b[: order + 1]) if y != 0]
    for i, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        for j, y in nb:
            if i + j > order:
                break
            out[i + j] = out[i + j] + x * y
    return out


def _valuation(s: Sequence) -> int | None:
    return next((k for k, x in enumerate(s) if x != 0), None)


def series_eval(jet: Jet, series: Sequence[Sequence], order: int) -> list:
    """Evaluate a jet at univariate truncated series (one per variable).

    Coefficients may be Fractions, number-field elements or any other
    exact rationals (such as gmpy2's); the output is left in that type.
    """
    out = [0] * (order + 1)
    vals = [_valuation(s) for s in series]
    cache: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            if k == 1:
                cache[key] = list(series[i][: order + 1])
            else:
                cache[key] = series_mul(power(i, k - 1), series[i], order)
        return cache[key]

    for e, c in jet.terms.items():
        low = 0
        for i, a in enumerate(e):
            if a:
                if vals[i] is None:
                    low = None
                    break
                low += a * vals[i]
        if low is None or low > order:
            continue
        t = [0] * (order + 1)
        t[0] = c
        for i, a in enumerate(e):
            if a:
                t = series_mul(t, power(i, a), order)
        for k in range(low, order + 1):
            if t[k] != 0:
                out[k] = out[k] + t[k]
    return out


def jet_diff(jet: Jet, i: int) -> Jet:
    out = {}
    for e, c in jet.terms.items():
        if e[i]:
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
    return Jet(jet.nvars, jet.order - 1, out)
