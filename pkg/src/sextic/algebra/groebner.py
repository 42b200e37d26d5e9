"""Buchberger's algorithm over Q in graded reverse lexicographic order.

Polynomials are handled internally as ``{exponent tuple: rational}`` dicts,
using gmpy2 rationals when available for speed. The public entry points
accept and return :class:`WPolynomial` with ``Fraction`` coefficients.

Pairs are processed by the normal strategy (smallest lcm first, ties broken
by insertion order), with Buchberger's coprime criterion and the
Gebauer-Moeller chain criterion, so results are reproducible.
"""

from __future__ import annotations

import heapq
from operator import add, le, sub
from fractions import Fraction

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction
from typing import Iterable, Sequence

from .poly import PolyRing, WPolynomial

_KEYS: dict = {}


def grevlex_key(e: tuple) -> tuple:
    k = _KEYS.get(e)
    if k is None:
        k = (sum(e), tuple(-x for x in reversed(e)))
        if len(_KEYS) > 500_000:
            _KEYS.clear()
        _KEYS[e] = k
    return k


def _lm(p: dict) -> tuple:
    return max(p, key=grevlex_key)


def _divides(a: tuple, b: tuple) -> bool:
    return all(map(le, a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a: tuple, b: tuple) -> tuple:
    return tuple(map(sub, a, b))


def _add_exp(a: tuple, b: tuple) -> tuple:
    return tuple(map(add, a, b))


class _Basis:
    """Basis element with cached leading data."""

    __slots__ = ("poly", "lm", "lc", "items")

    def __init__(self, poly: dict):
        self.poly = poly
        self.lm = _lm(poly)
        self.lc = poly[self.lm]
        self.items = list(poly.items())


def _monic(p: dict) -> dict:
    lc = p[_lm(p)]
    if lc == 1:
        return p
    inv = 1 / lc
    return {e: c * inv for e, c in p.items()}


def _heap_key(e: tuple) -> tuple:
    """Key whose minimum is the grevlex maximum (each component negated)."""
    return (-sum(e), e[::-1])


def _reduce(f: dict, basis: Sequence[_Basis], full: bool = True) -> dict:
    """Remainder of ``f`` on division by ``basis`` (complete reduction).

    Terms are visited in decreasing grevlex order through a heap; entries
    for terms that have since cancelled are skipped when popped.
    """
    p = dict(f)
    heap = [(_heap_key(e), e) for e in p]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        _, lm = heapq.heappop(heap)
        c = p.get(lm)
        if c is None:
            continue
        for g in basis:
            if _divides(g.lm, lm):
                shift = _sub_exp(lm, g.lm)
                factor = c / g.lc
                for e, gc in g.items:
                    key = tuple(map(add, e, shift))
                    old = p.get(key)
                    if old is None:
                        p[key] = -factor * gc
                        heapq.heappush(heap, (_heap_key(key), key))
                    else:
                        v = old - factor * gc
                        if v:
                            p[key] = v
                        else:
                            del p[key]
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[lm] = p.pop(lm)
    return rem


def _spoly(f: _Basis, g: _Basis) -> dict:
    l = _lcm(f.lm, g.lm)
    sf, sg = _sub_exp(l, f.lm), _sub_exp(l, g.lm)
    out: dict = {}
    a = 1 / f.lc
    for e, c in f.poly.items():
        out[_add_exp(e, sf)] = c * a
    b = 1 / g.lc
    for e, c in g.poly.items():
        k = _add_exp(e, sg)
        v = out.get(k, 0) - c * b
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def buchberger(polys: Iterable[dict]) -> list[dict]:
    """Reduced Groebner basis (monic, sorted by leading monomial)."""
    basis: list[_Basis] = []
    pairs: list[tuple] = []  # (lcm key, serial, i, j, lcm)
    serial = 0

    def add(h: dict):
        nonlocal serial
        new = _Basis(_monic(h))
        j = len(basis)
        basis.append(new)
        if all(x == 0 for x in new.lm):
            return True
        # chain criterion: drop pairs (i,k) whose lcm is divisible by lm(new)
        # with both lcm(i,new) and lcm(k,new) strictly smaller
        kept = []
        for item in pairs:
            _, _, i, k, l = item
            if (
                _divides(new.lm, l)
                and _lcm(basis[i].lm, new.lm) != l
                and _lcm(basis[k].lm, new.lm) != l
            ):
                continue
            kept.append(item)
        for i in range(j):
            l = _lcm(basis[i].lm, new.lm)
            kept.append((grevlex_key(l), serial, i, j, l))
            serial += 1
        heapq.heapify(kept)
        pairs[:] = kept
        return False

    one = _Q(1)
    for f in polys:
        f = {e: _Q(c.numerator, c.denominator) for e, c in f.items() if c}
        if not f:
            continue
        r = _reduce(f, basis)
        if r:
            if add(r):
                return [{basis[-1].lm: one}]
    while pairs:
        _, _, i, j, l = heapq.heappop(pairs)
        bi, bj = basis[i], basis[j]
        # coprime leading monomials: the pair reduces to zero
        if all(x == 0 or y == 0 for x, y in zip(bi.lm, bj.lm)):
            continue
        s = _spoly(bi, bj)
        if not s:
            continue
        r = _reduce(s, basis)
        if r:
            if add(r):
                return [{basis[-1].lm: one}]
    return _interreduce([b.poly for b in basis])


def _interreduce(polys: list[dict]) -> list[dict]:
    elems = [_Basis(_monic(p)) for p in polys]
    # keep only minimal leading monomials
    minimal: list[_Basis] = []
    for idx, g in enumerate(elems):
        redundant = False
        for jdx, h in enumerate(elems):
            if jdx == idx:
                continue
            if _divides(h.lm, g.lm) and (h.lm != g.lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = [h for k, h in enumerate(minimal) if k != idx]
        tail = {e: c for e, c in g.poly.items() if e != g.lm}
        r = _reduce(tail, others)
        r[g.lm] = _Q(1)
        out.append(r)
    out.sort(key=lambda p: grevlex_key(_lm(p)))
    return out


# -- public wrappers ---------------------------------------------------------


def _to_dict(p: WPolynomial) -> dict:
    if not p.is_rational():
        raise ValueError("Groebner bases are computed over the rationals only")
    return dict(p.terms)


def groebner(polys: Sequence[WPolynomial]) -> list[WPolynomial]:
    """Reduced grevlex Groebner basis of the ideal generated by ``polys``."""
    if not polys:
        return []
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise ValueError("all generators must share a ring")
    return [_from_q(ring, g) for g in buchberger(_to_dict(p) for p in polys)]


def _to_q(p: dict) -> dict:
    return {e: _Q(c.numerator, c.denominator) for e, c in p.items()}


def _frac(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _from_q(ring: PolyRing, g: dict) -> WPolynomial:
    return WPolynomial(ring, {e: _frac(c) for e, c in g.items()})


def is_unit_ideal(basis: Sequence[WPolynomial]) -> bool:
    return len(basis) == 1 and basis[0].total_degree() == 0


def leading_monomial(p: WPolynomial) -> tuple:
    return _lm(p.terms)


def normal_form(p: WPolynomial, basis: Sequence[WPolynomial]) -> WPolynomial:
    bs = [_Basis(_to_q(g.terms)) for g in basis]
    return _from_q(p.ring, _reduce(_to_q(p.terms), bs))


class QuotientAlgebra:
    """The finite-dimensional algebra ``Q[x]/I`` for a zero-dimensional ``I``.

    ``basis`` must be a reduced Groebner basis. Standard monomials are listed
    in increasing grevlex order; ``standard[0]`` is the constant monomial.
    """

    def __init__(self, ring: PolyRing, basis: Sequence[WPolynomial]):
        self.ring = ring
        self.gb = [_Basis(_to_q(g.terms)) for g in basis]
        leads = [g.lm for g in self.gb]
        n = ring.nvars
        bounds = []
        for i in range(n):
            pure = [lm[i] for lm in leads if all(lm[k] == 0 for k in range(n) if k != i)]
            if not pure:
                raise NotZeroDimensional(f"no pure power of {ring.variables[i]} among leading terms")
            bounds.append(min(pure))
        self.standard = _standard_monomials(leads, bounds)
        self.index = {e: k for k, e in enumerate(self.standard)}
        self._mult: dict[int, list[list]] = {}

    @property
    def dim(self) -> int:
        return len(self.standard)

    def coords(self, p: dict) -> list[Fraction]:
        r = _reduce(_to_q(p), self.gb)
        v = [Fraction(0)] * self.dim
        for e, c in r.items():
            v[self.index[e]] = _frac(c)
        return v

    def mult_matrix(self, poly: dict) -> list[list]:
        """Matrix of multiplication by ``poly`` (columns are images)."""
        cols = []
        for e in self.standard:
            prod: dict = {}
            for e2, c in poly.items():
                k = _add_exp(e, e2)
                prod[k] = prod.get(k, 0) + c
            cols.append(self.coords({k: c for k, c in prod.items() if c}))
        d = self.dim
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def var_matrix(self, i: int) -> list[list]:
        if i not in self._mult:
            e = [0] * self.ring.nvars
            e[i] = 1
            self._mult[i] = self.mult_matrix({tuple(e): Fraction(1)})
        return self._mult[i]

    def one(self) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        v[0] = Fraction(1)
        return v


def _standard_monomials(leads: Sequence[tuple], bounds: Sequence[int]) -> list[tuple]:
    n = len(bounds)
    out = []

    def rec(i, prefix):
        if i == n:
            e = tuple(prefix)
            if not any(_divides(l, e) for l in leads):
                out.append(e)
            return
        for k in range(bounds[i]):
            rec(i + 1, prefix + [k])

    rec(0, [])
    out.sort(key=grevlex_key)
    return out


class NotZeroDimensional(ValueError):
    """The ideal has a positive-dimensional zero set."""
