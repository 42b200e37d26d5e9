"""Sparse exact multivariate polynomials with weighted variables."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .numberfield import NFElement, NumberField, common_field, simplify


class RingMismatch(ValueError):
    """Operands live in polynomial rings with different variables or weights."""


class PolyRing:
    """Variable names with positive integer weights.

    >>> R = PolyRing(("x", "y"), (1, 2))
    >>> x, y = R.gens()
    >>> (x**2 + y).weighted_degree()
    2
    """

    __slots__ = ("variables", "weights", "_index")

    def __init__(self, variables: Sequence[str], weights: Sequence[int] | None = None):
        self.variables = tuple(variables)
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.variables)
        if len(self.weights) != len(self.variables):
            raise ValueError("one weight per variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        self._index = {v: i for i, v in enumerate(self.variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.variables, self.weights))

    def __repr__(self):
        inner = ", ".join(f"{v}:{w}" for v, w in zip(self.variables, self.weights))
        return f"PolyRing({inner})"

    def zero(self) -> "WPolynomial":
        return WPolynomial(self, {})

    def one(self) -> "WPolynomial":
        return self.const(1)

    def const(self, c) -> "WPolynomial":
        return WPolynomial(self, {(0,) * self.nvars: c})

    def gen(self, name: str) -> "WPolynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return WPolynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple["WPolynomial", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, exps: Sequence[int], coeff=1) -> "WPolynomial":
        return WPolynomial(self, {tuple(exps): coeff})

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All exponent vectors of weighted degree ``d``."""
        out: list[tuple[int, ...]] = []

        def rec(i, remaining, prefix):
            if i == self.nvars:
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            w = self.weights[i]
            for k in range(remaining // w + 1):
                rec(i + 1, remaining - k * w, prefix + [k])

        rec(0, d, [])
        return out

    def sub_ring(self, keep: Sequence[str]) -> "PolyRing":
        return PolyRing(keep, [self.weights[self.index(v)] for v in keep])


def _norm_coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return simplify(c)


class WPolynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero coefficient.

    Coefficients are ``Fraction`` or :class:`NFElement`. Zero coefficients are
    never stored.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, object] | None = None):
        self.ring = ring
        clean = {}
        for e, c in (terms or {}).items():
            if c != 0:
                if len(e) != ring.nvars:
                    raise ValueError("exponent vector length does not match ring")
                clean[tuple(e)] = _norm_coeff(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # basic structure ------------------------------------------------------
    @property
    def variables(self) -> tuple[str, ...]:
        return self.ring.variables

    @property
    def weights(self) -> tuple[int, ...]:
        return self.ring.weights

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def weighted_degree_of(self, e: Sequence[int]) -> int:
        return sum(a * w for a, w in zip(e, self.ring.weights))

    def weighted_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.weighted_degree_of(e) for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self.ring.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {self.weighted_degree_of(e) for e in self.terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def off_degree_terms(self, degree: int) -> dict:
        return {e: c for e, c in self.terms.items() if self.weighted_degree_of(e) != degree}

    def homogeneous_part(self, degree: int) -> "WPolynomial":
        return WPolynomial._raw(
            self.ring,
            {e: c for e, c in self.terms.items() if self.weighted_degree_of(e) == degree},
        )

    def field(self) -> NumberField | None:
        return common_field(self.terms.values())

    def is_rational(self) -> bool:
        return all(not isinstance(c, NFElement) for c in self.terms.values())

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), Fraction(0))

    def free_variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for v, a in zip(self.ring.variables, e):
                if a:
                    used.add(v)
        return used

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "WPolynomial"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def _lift(self, other) -> "WPolynomial":
        if isinstance(other, WPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, NFElement)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s != 0:
                out[e] = simplify(s)
            else:
                out.pop(e, None)
        return WPolynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return WPolynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            if other == 0:
                return self.ring.zero()
            return WPolynomial._raw(
                self.ring, {e: simplify(c * other) for e, c in self.terms.items()}
            )
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s != 0:
                    out[e] = s
                else:
                    out.pop(e, None)
        return WPolynomial._raw(self.ring, {e: simplify(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            inv = 1 / Fraction(other) if isinstance(other, int) else 1 / other
            return self * inv
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, WPolynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, NFElement)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution -------------------------------------------
    def diff(self, var: str) -> "WPolynomial":
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = simplify(c * e[i])
        return WPolynomial._raw(self.ring, out)

    def gradient(self) -> list["WPolynomial"]:
        return [self.diff(v) for v in self.ring.variables]

    def substitute(self, mapping: Mapping[str, "WPolynomial | int | Fraction | NFElement"],
                   ring: PolyRing | None = None) -> "WPolynomial":
        """Ring homomorphism sending ``var -> mapping[var]`` (others fixed).

        Images must live in ``ring`` (default: this polynomial's ring). When a
        target ring is given, unmapped variables must also exist there.
        """
        target = ring or self.ring
        images = []
        for v in self.ring.variables:
            if v in mapping:
                img = mapping[v]
                if not isinstance(img, WPolynomial):
                    img = target.const(img)
                elif img.ring != target:
                    raise RingMismatch(f"image of {v} lives in {img.ring!r}, expected {target!r}")
            else:
                img = target.gen(v)
            images.append(img)
        power_cache: list[dict[int, WPolynomial]] = [{} for _ in images]

        def power(i, k):
            cache = power_cache[i]
            if k not in cache:
                if k == 0:
                    cache[k] = target.one()
                elif k == 1:
                    cache[k] = images[i]
                else:
                    cache[k] = power(i, k // 2) * power(i, k - k // 2)
            return cache[k]

        out: dict = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, a in enumerate(e):
                if a:
                    term = term * power(i, a)
            for e2, c2 in term.terms.items():
                s = out.get(e2, 0) + c2
                if s != 0:
                    out[e2] = s
                else:
                    out.pop(e2, None)
        return WPolynomial._raw(target, {e: simplify(c) for e, c in out.items()})

    def evaluate(self, point: Mapping[str, object]):
        """Fully evaluate at scalar values for all variables."""
        vals = [point[v] for v in self.ring.variables]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, a in zip(vals, e):
                if a:
                    t = t * x**a
            total = total + t
        return simplify(total)

    def specialize(self, values: Mapping[str, object]) -> "WPolynomial":
        """Plug scalars into some variables, keeping the ring unchanged."""
        idx = [(self.ring.index(v), x) for v, x in values.items()]
        out: dict = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, x in idx:
                if e[i]:
                    c = c * x ** e[i]
                    e2[i] = 0
            if c == 0:
                continue
            key = tuple(e2)
            s = out.get(key, 0) + c
            if s != 0:
                out[key] = s
            else:
                out.pop(key, None)
        return WPolynomial._raw(self.ring, {e: simplify(c) for e, c in out.items()})

    def to_ring(self, ring: PolyRing) -> "WPolynomial":
        """Re-express in another ring; variables absent there must not occur."""
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * ring.nvars
            for v, a in zip(self.ring.variables, e):
                if a:
                    try:
                        e2[ring.index(v)] = a
                    except KeyError:
                        raise RingMismatch(f"variable {v} not in target ring") from None
            out[tuple(e2)] = c
        return WPolynomial(ring, out)

    def coefficients_in(self, vars_: Sequence[str]) -> dict[tuple, "WPolynomial"]:
        """Group by exponents of ``vars_``; values keep the remaining variables."""
        idx = [self.ring.index(v) for v in vars_]
        groups: dict[tuple, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            rest = list(e)
            for i in idx:
                rest[i] = 0
            groups.setdefault(key, {})[tuple(rest)] = c
        return {k: WPolynomial._raw(self.ring, v) for k, v in groups.items()}

    def map_coefficients(self, fn) -> "WPolynomial":
        return WPolynomial(self.ring, {e: fn(c) for e, c in self.terms.items()})

    def monic_by(self, c) -> "WPolynomial":
        return self / c

    # display --------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms by decreasing weighted degree, then reverse-lex exponents."""
        return sorted(
            self.terms.items(),
            key=lambda ec: (-self.weighted_degree_of(ec[0]), tuple(-a for a in ec[0])),
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self.ring.variables, e) if a
            )
            if isinstance(c, NFElement):
                cs = str(c)
                parts.append(("+ ", f"{cs}*{mon}" if mon else cs))
                continue
            neg = c < 0
            mag = -c if neg else c
            if mon:
                body = mon if mag == 1 else f"{mag}*{mon}"
            else:
                body = str(mag)
            parts.append(("- " if neg else "+ ", body))
        first_sign, first_body = parts[0]
        s = ("-" if first_sign == "- " else "") + first_body
        for sign, body in parts[1:]:
            s += " " + sign + body
        return s

    def __repr__(self):
        return f"WPolynomial({self})"


def as_poly(ring: PolyRing, x) -> WPolynomial:
    return x if isinstance(x, WPolynomial) else ring.const(x)


def compose_substitutions(
    outer: Mapping[str, WPolynomial], inner: Mapping[str, WPolynomial], ring: PolyRing
) -> dict[str, WPolynomial]:
    """Composite of two changes of variables written old -> f(new).

    ``outer`` expresses the original variables through intermediate ones and
    ``inner`` the intermediate ones through the final ones; the result
    expresses the original variables through the final ones.
    """
    out = {}
    for v in ring.variables:
        expr = outer.get(v, ring.gen(v))
        out[v] = expr.substitute(inner)
    return out


def identity_substitution(ring: PolyRing) -> dict[str, WPolynomial]:
    return {v: ring.gen(v) for v in ring.variables}


def binary_form_from_coeffs(ring: PolyRing, x: str, y: str, coeffs: Iterable) -> WPolynomial:
    """``sum c_i x^(d-i) y^i`` for coefficients listed from x^d down to y^d."""
    coeffs = list(coeffs)
    d = len(coeffs) - 1
    X, Y = ring.gen(x), ring.gen(y)
    out = ring.zero()
    for i, c in enumerate(coeffs):
        if c != 0:
            out = out + (X ** (d - i)) * (Y**i) * c
    return out
