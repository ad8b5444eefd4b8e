"""Dense univariate integer polynomials.

A polynomial is a tuple of Python ints in ascending degree with no trailing
zeros; the zero polynomial is ``()``. Everything here is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Sequence

Poly = tuple


def trim(c: Sequence[int]) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def scale(f: Poly, k: int) -> Poly:
    if k == 0:
        return ()
    return tuple(k * c for c in f)


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def shift(f: Poly, k: int) -> Poly:
    """Multiply by t**k."""
    if not f:
        return ()
    return (0,) * k + tuple(f)


def omt_power(k: int) -> Poly:
    """(1 - t)**k."""
    return tuple((-1) ** i * comb(k, i) for i in range(k + 1))


def mul_omt(f: Poly, k: int) -> Poly:
    """Multiply by (1 - t)**k."""
    if k == 0 or not f:
        return f
    return mul(f, omt_power(k))


def div_t(f: Poly) -> Poly | None:
    """f / t if t divides f, else None."""
    if f and f[0] == 0:
        return tuple(f[1:])
    return None


def div_omt(f: Poly) -> Poly | None:
    """f / (1 - t) if (1 - t) divides f, else None."""
    if not f or sum(f) != 0:
        return None
    # synthetic division by (t - 1), then negate
    n = len(f) - 1
    q = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        acc = f[i] + acc
        q[i - 1] = acc
    return trim(-c for c in q)


def derivative(f: Poly) -> Poly:
    return trim(i * f[i] for i in range(1, len(f)))


def content(f: Poly) -> int:
    g = 0
    for c in f:
        g = gcd(g, c)
    return g


def primitive(f: Poly) -> Poly:
    """f divided by its content, with positive leading coefficient."""
    if not f:
        return ()
    g = content(f)
    if f[-1] < 0:
        g = -g
    return tuple(c // g for c in f)


def pos_primitive(f: Poly) -> Poly:
    """f divided by its (positive) content; the sign is kept."""
    if not f:
        return ()
    g = content(f)
    return tuple(c // g for c in f)


def pseudo_rem(f: Poly, g: Poly) -> Poly:
    """Remainder of |lc(g)|**(deg f - deg g + 1) * f by g.

    Only a positive factor is applied to f, so the sign pattern of a Sturm
    chain built from it is unchanged.
    """
    if not g:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    alc = abs(lc)
    sgn = 1 if lc > 0 else -1
    steps = len(r) - dg
    while len(r) - 1 >= dg and r:
        k = len(r) - 1 - dg
        coef = r[-1] * sgn
        r = [alc * c for c in r]
        for i, b in enumerate(g):
            r[i + k] -= coef * b
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        steps -= 1
    if steps > 0:
        r = [c * alc**steps for c in r]
    return trim(r)


def exact_div(f: Poly, g: Poly) -> Poly:
    """Quotient of f by g over Q, scaled to a primitive integer polynomial."""
    r = [Fraction(c) for c in f]
    dg = len(g) - 1
    q = [Fraction(0)] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and any(r):
        k = len(r) - 1 - dg
        coef = r[-1] / g[-1]
        q[k] = coef
        for i, b in enumerate(g):
            r[i + k] -= coef * b
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    if any(r):
        raise ArithmeticError("polynomial division is not exact")
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    return primitive(trim(int(c * den) for c in q))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Primitive gcd over Z[t] (primitive PRS), positive leading coefficient."""
    f, g = primitive(f), primitive(g)
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = pseudo_rem(f, g)
        f, g = g, primitive(r)
    return primitive(f)


def squarefree_part(f: Poly) -> Poly:
    """Primitive square-free part of f; keeps the sign of the leading term."""
    if len(f) <= 1:
        return pos_primitive(f)
    d = poly_gcd(f, derivative(f))
    if len(d) == 1:
        return pos_primitive(f)
    q = exact_div(f, d)
    return q if (q[-1] > 0) == (f[-1] > 0) else neg(q)


def eval_exact(f: Poly, x: Fraction) -> Fraction:
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    return Fraction(eval_homog(f, p, q), q ** max(len(f) - 1, 0))


def eval_homog(f: Poly, p: int, q: int) -> int:
    """q**deg(f) * f(p/q) as an integer; its sign is the sign of f(p/q) for q > 0."""
    if not f:
        return 0
    return _homog(f, p, q)


def _homog(f: Poly, p: int, q: int) -> int:
    # Horner on sum c_k p^k q^(d-k)
    d = len(f) - 1
    acc = f[d]
    qpow = 1
    for k in range(d - 1, -1, -1):
        qpow *= q
        acc = acc * p + f[k] * qpow
    return acc


def sign_at(f: Poly, x: Fraction) -> int:
    x = Fraction(x)
    v = _homog(f, x.numerator, x.denominator) if f else 0
    return (v > 0) - (v < 0)


def sturm_chain(f: Poly) -> list[Poly]:
    """Sturm sequence f, f', -rem(...), ... using positive pseudo-remainders."""
    chain = [f, derivative(f)]
    if not chain[1]:
        return [f]
    while True:
        r = pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(pos_primitive(neg(r)))
    return chain


def sign_variations(chain: Sequence[Poly], x: Fraction) -> int:
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    last = 0
    v = 0
    for g in chain:
        s = _homog(g, p, q) if g else 0
        if s == 0:
            continue
        s = 1 if s > 0 else -1
        if last and s != last:
            v += 1
        last = s
    return v


def to_str(f: Poly, var: str = "t") -> str:
    if not f:
        return "0"
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out
