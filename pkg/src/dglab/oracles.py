"""Independent checkers used to cross-examine the main algorithms.

None of this shares code with the Sturm machinery: root counts come from
Descartes' rule of signs with bisection over Q, and grid sampling decides
signs with a rigorous floating-point error bound, falling back to exact
rational evaluation when the bound is inconclusive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .param_sets import ParamSet
from .ring import RingElement, eval_at


# ---- polynomials over Q as lists of Fractions, ascending -----------------

def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_q(a: list, b: list) -> tuple[list, list]:
    a, b = _trim(a), _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] -= c * bi
        a = _trim(a)
    return q, a


def _gcd_q(a: list, b: list) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod_q(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def _squarefree_q(p: list) -> list:
    p = [Fraction(c) for c in _trim(p)]
    dp = [i * c for i, c in enumerate(p)][1:]
    if not _trim(dp):
        return p
    q, r = _divmod_q(p, _gcd_q(p, dp))
    assert not r
    return _trim(q)


def _eval_q(p: list, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _taylor_shift(p: list, a: Fraction) -> list:
    """Coefficients of p(x + a)."""
    n = len(p)
    out = [Fraction(0)] * n
    for k, c in enumerate(p):
        for j in range(k + 1):
            out[j] += c * comb(k, j) * a ** (k - j)
    return out


def _descartes(p: list, lo: Fraction, hi: Fraction) -> int:
    """Sign variations of (1+x)^d p((lo + hi x)/(1+x)); bounds roots in (lo, hi)."""
    # p(lo + (hi - lo) y), then y = x/(1+x): reverse, shift by 1
    q = _taylor_shift(p, lo)
    w = hi - lo
    q = [c * w**k for k, c in enumerate(q)]
    q = list(reversed(q))
    q = _taylor_shift(q, Fraction(1))
    signs = [1 if c > 0 else -1 for c in q if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def bisection_root_count(num, lo, hi, max_depth: int = 200) -> int:
    """Number of distinct real roots of the polynomial `num` in the open interval (lo, hi)."""
    p = _squarefree_q([Fraction(c) for c in num])
    if len(p) <= 1:
        return 0
    count = 0
    stack = [(Fraction(lo), Fraction(hi), 0)]
    while stack:
        a, b, depth = stack.pop()
        v = _descartes(p, a, b)
        if v == 0:
            continue
        if v == 1:
            count += 1
            continue
        if depth > max_depth:
            raise RuntimeError("bisection did not separate the roots")
        m = (a + b) / 2
        if _eval_q(p, m) == 0:
            count += 1
        stack.append((a, m, depth + 1))
        stack.append((m, b, depth + 1))
    return count


# ---- grid sampling --------------------------------------------------------

_U = 2.0**-53


@dataclass(frozen=True)
class Grid:
    """Isolated points plus evenly spaced rationals lo + i*step, i < count, per interval."""

    points: tuple
    runs: tuple  # (lo, step, count)

    def __len__(self) -> int:
        return len(self.points) + sum(k for _, _, k in self.runs)

    def floats(self) -> np.ndarray:
        parts = [np.array([float(p) for p in self.points])]
        for lo, step, k in self.runs:
            parts.append(float(lo) + float(step) * np.arange(k))
        return np.concatenate(parts)

    def exact(self, i: int) -> Fraction:
        if i < len(self.points):
            return self.points[i]
        i -= len(self.points)
        for lo, step, k in self.runs:
            if i < k:
                return lo + i * step
            i -= k
        raise IndexError(i)

    def __iter__(self):
        return (self.exact(i) for i in range(len(self)))


def sample_grid(S: ParamSet, n: int) -> Grid:
    """About n rational points of S: every isolated point plus an even grid on each interval."""
    runs = []
    if S.intervals:
        total = sum(hi - lo for lo, hi in S.intervals)
        budget = max(n - len(S.points), 2 * len(S.intervals))
        for lo, hi in S.intervals:
            k = max(2, int(budget * (hi - lo) / total))
            runs.append((lo, (hi - lo) / (k - 1), k))
    return Grid(tuple(S.points), tuple(runs))


def min_sign_on_grid(f: RingElement, grid: Grid) -> tuple[int, Fraction | None]:
    """Smallest sign of f over the grid and a point attaining it (exact decision).

    The denominator t^a (1-t)^b is positive on (0, 1), so only the numerator
    matters. Horner in floats with a rigorous error bound settles most points;
    the rest are evaluated exactly.
    """
    if len(grid) == 0:
        return 1, None
    if not f.num:
        return 0, grid.exact(0)
    if max(abs(c) for c in f.num).bit_length() > 1000:
        return _min_sign_exact(f, grid)
    coeffs = np.array([float(c) for c in f.num], dtype=float)
    ts = grid.floats()
    val = np.zeros_like(ts)
    mag = np.zeros_like(ts)
    for c in coeffs[::-1]:
        val = val * ts + c
        mag = mag * ts + abs(c)
    # covers rounding in Horner steps as well as in the inputs
    bound = 4.0 * (3 * len(coeffs) + 2) * _U * mag + 1e-300
    neg = np.nonzero(val < -bound)[0]
    if neg.size:
        t = grid.exact(int(neg[0]))
        if eval_at(f, t) >= 0:
            raise AssertionError("float error bound violated")
        return -1, t
    worst, where = 1, None
    for i in np.nonzero(val <= bound)[0]:
        t = grid.exact(int(i))
        s = eval_at(f, t)
        sgn = (s > 0) - (s < 0)
        if sgn < worst:
            worst, where = sgn, t
            if worst < 0:
                break
    return worst, where


def _min_sign_exact(f: RingElement, grid: Grid) -> tuple[int, Fraction | None]:
    worst, where = 1, None
    for t in grid:
        s = eval_at(f, t)
        sgn = (s > 0) - (s < 0)
        if sgn < worst:
            worst, where = sgn, t
    return worst, where
