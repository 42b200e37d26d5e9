"""Dense univariate polynomials as coefficient tuples, lowest degree first.

Functions here work over any exact field whose elements support ``+ - * /``
and comparison with ``0``; the factorization helpers assume rational
coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

Coeffs = tuple


def _inv(c):
    return 1 / Fraction(c) if isinstance(c, int) else 1 / c


def trim(a: Sequence) -> Coeffs:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def degree(a: Sequence) -> int:
    return len(a) - 1 if a else -1


def lead(a: Sequence):
    return a[-1]


def add(a: Sequence, b: Sequence) -> Coeffs:
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def sub(a: Sequence, b: Sequence) -> Coeffs:
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    )


def scale(a: Sequence, c) -> Coeffs:
    return trim(x * c for x in a)


def mul(a: Sequence, b: Sequence) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def divmod_(a: Sequence, b: Sequence) -> tuple[Coeffs, Coeffs]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(trim(a))
    db = len(b) - 1
    inv = _inv(b[-1])
    if len(r) - 1 < db:
        return (), tuple(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c != 0:
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return trim(q), trim(r[:db])


def rem(a: Sequence, b: Sequence) -> Coeffs:
    return divmod_(a, b)[1]


def monic(a: Sequence) -> Coeffs:
    a = trim(a)
    if not a:
        return a
    c = a[-1]
    if c == 1:
        return a
    inv = _inv(c)
    return tuple(x * inv for x in a)


def gcd_(a: Sequence, b: Sequence) -> Coeffs:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a: Sequence, b: Sequence) -> tuple[Coeffs, Coeffs, Coeffs]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), s0, t0
    inv = _inv(r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def deriv(a: Sequence) -> Coeffs:
    return trim(i * a[i] for i in range(1, len(a)))


def evaluate(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def compose(a: Sequence, b: Sequence) -> Coeffs:
    acc: Coeffs = ()
    for c in reversed(a):
        acc = add(mul(acc, b), (c,))
    return acc


def squarefree_decomposition(a: Sequence) -> list[tuple[Coeffs, int]]:
    """Yun's algorithm: ``a = lc * prod(f_k ** k)`` with each ``f_k`` monic,
    squarefree and pairwise coprime. Factors equal to 1 are omitted."""
    a = monic(a)
    if degree(a) < 1:
        return []
    out = []
    da = deriv(a)
    g = gcd_(a, da)
    b = divmod_(a, g)[0]
    c = divmod_(da, g)[0]
    d = sub(c, deriv(b))
    k = 1
    while degree(b) > 0:
        f = gcd_(b, d)
        b = divmod_(b, f)[0]
        c = divmod_(d, f)[0]
        d = sub(c, deriv(b))
        if degree(f) > 0:
            out.append((monic(f), k))
        k += 1
    return out


def squarefree_part(a: Sequence) -> Coeffs:
    a = trim(a)
    if degree(a) < 1:
        return monic(a) if a else a
    return monic(divmod_(a, gcd_(a, deriv(a)))[0])


# -- rational coefficients ---------------------------------------------------


def to_integer(a: Sequence) -> tuple[int, ...]:
    """Primitive integer polynomial with the same roots as ``a``."""
    fr = [Fraction(x) for x in trim(a)]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    if ints and ints[-1] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _primes(start: int):
    n = max(start, 2)
    while True:
        if n < 4 or all(n % d for d in range(2, isqrt(n) + 1)):
            yield n
        n += 1


def _poly_mod(a: Sequence[int], p: int) -> list[int]:
    out = [x % p for x in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def _gcd_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for j in range(len(b)):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return a


def _rational_reconstruct(r: int, m: int) -> Fraction | None:
    bound = isqrt(m // 2)
    r0, r1 = m, r % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def rational_roots(a: Sequence) -> list[Fraction]:
    """All distinct rational roots of a nonzero rational polynomial.

    Roots are found modulo a prime of good reduction, lifted p-adically and
    recovered by rational reconstruction; every candidate is confirmed by
    exact evaluation, so the result never depends on the choice of prime.
    """
    f = to_integer(squarefree_part(a))
    if degree(f) < 1:
        return []
    roots: set[Fraction] = set()
    if f[0] == 0:
        roots.add(Fraction(0))
        f = f[1:]
        while f and f[0] == 0:
            f = f[1:]
    if degree(f) < 1:
        return sorted(roots)
    if degree(f) == 1:
        roots.add(Fraction(-f[0], f[1]))
        return sorted(roots)
    bound = 2 * abs(f[0]) * abs(f[-1]) + 1
    df = deriv(f)
    for p in _primes(101):
        if f[-1] % p == 0 or f[0] % p == 0:
            continue
        fp = _poly_mod(f, p)
        if len(_gcd_mod(fp, _poly_mod(df, p), p)) > 1:
            continue
        break
    candidates = [r for r in range(p) if evaluate(fp, r) % p == 0]
    m = p
    lifted = candidates
    while m <= 2 * bound * bound:
        m2 = m * m
        nxt = []
        for r in lifted:
            fr = evaluate(f, r) % m2
            dr = evaluate(df, r) % m2
            nxt.append((r - fr * pow(dr, -1, m2)) % m2)
        lifted, m = nxt, m2
    for r in lifted:
        cand = _rational_reconstruct(r, m)
        if cand is not None and evaluate(f, cand) == 0:
            roots.add(cand)
    return sorted(roots)


def is_irreducible_small(a: Sequence) -> bool:
    """Irreducibility over Q for degree <= 3 (no rational root)."""
    d = degree(a)
    if d < 1:
        return False
    if d == 1:
        return True
    if d > 3:
        raise ValueError("irreducibility certificate only for degree <= 3")
    return not rational_roots(a)


def factor_small(a: Sequence) -> list[tuple[Coeffs, int]]:
    """Partial factorization over Q.

    Returns monic factors with multiplicities. Every factor of degree <= 3 is
    irreducible; a factor of degree >= 4 is squarefree with no rational root
    but may still split.
    """
    out: list[tuple[Coeffs, int]] = []
    for f, k in squarefree_decomposition(a):
        rest = f
        for r in rational_roots(f):
            out.append(((-r, Fraction(1)), k))
            rest = divmod_(rest, (-r, Fraction(1)))[0]
        if degree(rest) >= 1:
            out.append((monic(rest), k))
    out.sort(key=lambda fk: (degree(fk[0]), fk[1], [Fraction(c) for c in fk[0]]))
    return out


def to_str(a: Sequence, var: str = "t") -> str:
    a = trim(a)
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mon and c == 1:
            term = mon
        elif mon and c == -1:
            term = "-" + mon
        else:
            term = f"{c}*{mon}" if mon else f"{c}"
        parts.append(term)
    return " + ".join(parts).replace("+ -", "- ")
