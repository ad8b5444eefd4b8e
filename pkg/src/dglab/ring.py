"""The ring G0 = Z[t, 1/t, 1/(1-t)] in canonical form.

Every element is stored as ``num(t) / (t**t_pow * (1-t)**omt_pow)`` with an
integer numerator, and the representation is reduced so that neither ``t``
nor ``1-t`` can be cancelled. Canonical forms are unique, so structural
equality is equality of functions on (0, 1).
"""
from __future__ import annotations

import contextlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from . import _poly
from .errors import DomainError, LimitError

__all__ = [
    "RingElement",
    "canon",
    "add",
    "neg",
    "mul",
    "alpha",
    "eval_at",
    "ZERO",
    "ONE",
    "T",
    "HALF_WEIGHT",
    "Limits",
    "LIMITS",
    "limits",
]


@dataclass
class Limits:
    max_degree: int = 512
    max_pow: int = 64


LIMITS = Limits()


@contextlib.contextmanager
def limits(**overrides) -> Iterator[Limits]:
    """Temporarily override the global size caps."""
    saved = Limits(LIMITS.max_degree, LIMITS.max_pow)
    for k, v in overrides.items():
        setattr(LIMITS, k, v)
    try:
        yield LIMITS
    finally:
        LIMITS.max_degree, LIMITS.max_pow = saved.max_degree, saved.max_pow


Coercible = Union["RingElement", int]


@dataclass(frozen=True, init=False)
class RingElement:
    num: tuple
    t_pow: int
    omt_pow: int

    def __init__(self, num: Iterable[int] = (), t_pow: int = 0, omt_pow: int = 0):
        if t_pow < 0 or omt_pow < 0:
            raise DomainError("denominator exponents must be non-negative")
        f = _poly.trim(int(c) for c in num)
        a, b = int(t_pow), int(omt_pow)
        if not f:
            a = b = 0
        while a > 0:
            q = _poly.div_t(f)
            if q is None:
                break
            f, a = q, a - 1
        while b > 0:
            q = _poly.div_omt(f)
            if q is None:
                break
            f, b = q, b - 1
        if len(f) - 1 > LIMITS.max_degree:
            raise LimitError(f"numerator degree {len(f) - 1} exceeds cap {LIMITS.max_degree}")
        if a > LIMITS.max_pow or b > LIMITS.max_pow:
            raise LimitError(f"denominator exponent ({a}, {b}) exceeds cap {LIMITS.max_pow}")
        object.__setattr__(self, "num", f)
        object.__setattr__(self, "t_pow", a)
        object.__setattr__(self, "omt_pow", b)

    @classmethod
    def const(cls, c: int) -> "RingElement":
        return cls((c,))

    @classmethod
    def coerce(cls, x: Coercible) -> "RingElement":
        if isinstance(x, RingElement):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot interpret {x!r} as an element of G0")

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: Coercible) -> "RingElement":
        try:
            return add(self, RingElement.coerce(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return neg(self)

    def __sub__(self, other: Coercible) -> "RingElement":
        try:
            return add(self, neg(RingElement.coerce(other)))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Coercible) -> "RingElement":
        return add(RingElement.coerce(other), neg(self))

    def __mul__(self, other: Coercible) -> "RingElement":
        try:
            return mul(self, RingElement.coerce(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise ValueError("negative powers are not in G0 in general")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def alpha(self, k: int = 1) -> "RingElement":
        return alpha(self, k)

    def __call__(self, t0) -> Fraction:
        return eval_at(self, t0)

    def denominator_poly(self) -> tuple:
        return _poly.mul_omt(_poly.shift((1,), self.t_pow), self.omt_pow)

    def __str__(self) -> str:
        n = _poly.to_str(self.num)
        den = []
        if self.t_pow:
            den.append("t" if self.t_pow == 1 else f"t^{self.t_pow}")
        if self.omt_pow:
            den.append("(1-t)" if self.omt_pow == 1 else f"(1-t)^{self.omt_pow}")
        if not den:
            return n
        if len(self.num) > 1 and len([c for c in self.num if c]) > 1:
            n = f"({n})"
        return f"{n}/({'*'.join(den)})" if len(den) > 1 else f"{n}/{den[0]}"

    def __repr__(self) -> str:
        return f"RingElement({list(self.num)}, {self.t_pow}, {self.omt_pow})"


def canon(num: Iterable[int], a: int = 0, b: int = 0) -> RingElement:
    """Canonical form of num / (t**a (1-t)**b)."""
    return RingElement(num, a, b)


def _lift(x: RingElement, a: int, b: int) -> tuple:
    """Numerator of x over the common denominator t**a (1-t)**b."""
    return _poly.mul_omt(_poly.shift(x.num, a - x.t_pow), b - x.omt_pow)


def add(x: RingElement, y: RingElement) -> RingElement:
    if not x.num:
        return y
    if not y.num:
        return x
    a = max(x.t_pow, y.t_pow)
    b = max(x.omt_pow, y.omt_pow)
    return RingElement(_poly.add(_lift(x, a, b), _lift(y, a, b)), a, b)


def neg(x: RingElement) -> RingElement:
    return RingElement(_poly.neg(x.num), x.t_pow, x.omt_pow)


def mul(x: RingElement, y: RingElement) -> RingElement:
    return RingElement(_poly.mul(x.num, y.num), x.t_pow + y.t_pow, x.omt_pow + y.omt_pow)


def alpha(x: RingElement, k: int = 1) -> RingElement:
    """x * (t/(1-t))**k; negative k applies the inverse automorphism."""
    if k == 0 or not x.num:
        return x
    if k > 0:
        return RingElement(_poly.shift(x.num, k), x.t_pow, x.omt_pow + k)
    return RingElement(_poly.mul_omt(x.num, -k), x.t_pow - k, x.omt_pow)


def eval_at(x: RingElement, t0) -> Fraction:
    """Exact value x(t0) for rational 0 < t0 < 1."""
    t0 = Fraction(t0)
    if not 0 < t0 < 1:
        raise DomainError(f"evaluation point {t0} is not in (0, 1)")
    if not x.num:
        return Fraction(0)
    p, q = t0.numerator, t0.denominator
    d = len(x.num) - 1
    top = _poly.eval_homog(x.num, p, q) * q ** (x.t_pow + x.omt_pow)
    bottom = q**d * p**x.t_pow * (q - p) ** x.omt_pow
    return Fraction(top, bottom)


def eval_float(x: RingElement, t0: float) -> float:
    """Floating-point value, for diagnostics and search heuristics only."""
    acc = 0.0
    for c in reversed(x.num):
        acc = acc * t0 + float(c)
    return acc / (t0**x.t_pow * (1.0 - t0) ** x.omt_pow)


ZERO = RingElement()
ONE = RingElement((1,))
T = RingElement((0, 1))
# (2t - 1) / (t (1 - t)): the weight by which [[-b, a, b]] shifts the twisted sum
HALF_WEIGHT = RingElement((-1, 2), 1, 1)
