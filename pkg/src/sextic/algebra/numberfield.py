"""Simple algebraic extensions ``Q[t]/(m(t))`` of degree at most 3."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import univariate as U

MAX_DEGREE = 3


class NumberField:
    """The field ``Q[t]/(m)`` for a monic irreducible ``m`` of degree 2 or 3.

    Fields compare equal when their moduli agree, so elements built from
    separately constructed but identical descriptors interoperate.
    """

    __slots__ = ("modulus", "name", "_hash")

    def __init__(self, modulus: Sequence, name: str = "t"):
        m = U.monic(tuple(Fraction(c) for c in modulus))
        d = U.degree(m)
        if d < 2 or d > MAX_DEGREE:
            raise ValueError(f"number field degree must be 2 or 3, got {d}")
        if not U.is_irreducible_small(m):
            raise ValueError(f"modulus {U.to_str(m)} is reducible over Q")
        self.modulus = m
        self.name = name
        self._hash = hash(m)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"NumberField({U.to_str(self.modulus, self.name)})"

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (tuple, list)):
            return NFElement(self, value)
        return NFElement(self, (Fraction(value),))

    def gen(self) -> "NFElement":
        return NFElement(self, (Fraction(0), Fraction(1)))

    def element_key(self, x) -> tuple:
        """Sort key used for deterministic ordering of field elements."""
        if isinstance(x, NFElement):
            return tuple(x.coeffs) + (Fraction(0),) * (self.degree - len(x.coeffs))
        return (Fraction(x),) + (Fraction(0),) * (self.degree - 1)


class NFElement:
    """Residue class of a rational polynomial modulo the field's modulus."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Sequence):
        self.field = field
        c = U.trim(Fraction(x) for x in coeffs)
        if len(c) > field.degree:
            c = U.rem(c, field.modulus)
        self.coeffs = c

    # construction helpers -------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("mixing elements of different number fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return U.trim((Fraction(other),))
        return NotImplemented

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, U.add(self.coeffs, o))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, U.sub(self.coeffs, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, U.sub(o, self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, U.rem(U.mul(self.coeffs, o), self.field.modulus))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in number field")
        g, s, _ = U.xgcd(self.coeffs, self.field.modulus)
        # modulus irreducible, so g == 1
        return NFElement(self.field, s)

    def __truediv__(self, other):
        if isinstance(other, NFElement):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return NFElement(self.field, tuple(c / other for c in self.coeffs))
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = NFElement(self.field, (Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == U.trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_rational())
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def minimal_polynomial(self) -> tuple:
        """Monic minimal polynomial over Q, from the multiplication matrix."""
        from .linalg import charpoly

        d = self.field.degree
        basis = [NFElement(self.field, (0,) * i + (1,)) for i in range(d)]
        cols = [(self * b).coeffs + (Fraction(0),) * (d - len((self * b).coeffs)) for b in basis]
        matrix = [[cols[j][i] for j in range(d)] for i in range(d)]
        chi = charpoly(matrix)
        return U.squarefree_part(chi)

    def __repr__(self):
        return f"NFElement({self})"

    def __str__(self):
        if self.is_rational():
            return str(self.to_rational())
        return "(" + U.to_str(self.coeffs, self.field.name) + ")"


def adjoin_root(m: Sequence) -> NumberField | None:
    """Arithmetic context in which a root of ``m`` lives.

    ``m`` must be squarefree. Rational roots are extracted first; if one
    exists the rationals suffice and ``None`` is returned. Otherwise the
    first irreducible factor of degree <= 3 is adjoined.
    """
    m = U.trim(tuple(Fraction(c) for c in m))
    if U.degree(m) < 1:
        raise ValueError("adjoin_root needs a nonconstant polynomial")
    if U.degree(U.gcd_(m, U.deriv(m))) > 0:
        raise ValueError("adjoin_root needs a squarefree polynomial")
    if U.rational_roots(m):
        return None
    for f, _ in U.factor_small(m):
        if U.degree(f) <= MAX_DEGREE:
            return NumberField(f)
    raise ValueError("no irreducible factor of degree <= 3 found")


def field_degree(field: NumberField | None) -> int:
    return 1 if field is None else field.degree


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, NFElement))


def common_field(values) -> NumberField | None:
    """The single number field among ``values``, or None if all rational."""
    found = None
    for v in values:
        if isinstance(v, NFElement) and not v.is_rational():
            if found is None:
                found = v.field
            elif found != v.field:
                raise ValueError("values from different number fields")
    return found


def simplify(x):
    """Demote rational number-field elements to Fraction."""
    if isinstance(x, NFElement) and x.is_rational():
        return x.to_rational()
    if isinstance(x, int):
        return Fraction(x)
    return x
