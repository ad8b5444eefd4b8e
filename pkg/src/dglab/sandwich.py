"""Integer polynomials squeezed strictly between two bounds on a closed set.

Given constraints ``lower(t) < weight(t) * a(t) < upper(t)`` on a ParamSet,
find ``a`` in Z[t]. Integer polynomials are dense on closed subsets of (0, 1),
so a solution exists at some degree; the search is a heuristic and every
answer passes the exact positivity oracle before it is returned.

Search loop, per degree: sample the set on a dyadic grid, solve the LP for
the real polynomial with the largest normalized slack (a Chebyshev center),
round it to integer coefficients (coordinate rounding plus Babai rounding in
an LLL-reduced basis, each with a small flip neighborhood), and verify the
best few candidates exactly. A candidate that already fails on the grid means
the degree is too low; one that passes the grid but fails exactly means the
grid is too coarse, so the grid is doubled (twice) before the degree grows.
"""
from __future__ import annotations

import os
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from . import _lattice, _poly
from .errors import Infeasible, SearchExhausted
from .param_sets import ParamSet, member
from .positivity import PositivityCertificate, is_positive_on
from .ring import ONE, RingElement, eval_at

DEFAULT_MAX_DEGREE = 32
DEFAULT_MAX_ITERATIONS = 200
BASE_GRID_LOG2 = 6
GRID_DOUBLINGS = 2
VERIFY_PER_ROUND = 6


def default_max_degree() -> int:
    env = os.environ.get("DGLAB_MAX_DEGREE")
    return int(env) if env else DEFAULT_MAX_DEGREE


@dataclass(frozen=True)
class Constraint:
    """lower < weight * a < upper on ``where`` (the problem's set when None)."""

    lower: RingElement
    weight: RingElement
    upper: RingElement
    where: ParamSet | None = None

    @classmethod
    def between(cls, lower, upper, weight=ONE, where=None) -> "Constraint":
        return cls(RingElement.coerce(lower), RingElement.coerce(weight), RingElement.coerce(upper), where)


@dataclass(frozen=True)
class SandwichProblem:
    constraints: tuple
    set: ParamSet
    max_degree: int = field(default_factory=default_max_degree)
    max_iterations: int = DEFAULT_MAX_ITERATIONS

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))


@dataclass(frozen=True)
class SandwichSolution:
    candidate: RingElement
    degree_cap: int
    iterations: int
    certificates: tuple[PositivityCertificate, ...]


def basis_poly(k: int) -> tuple:
    """k-th search basis polynomial u**(k//2) * t**(k%2) with u = t(1-t).

    {u**j, t*u**j} is a unimodular basis of Z[t] (each element has leading
    coefficient +-1 in its own degree) whose members are <= 4**-j on (0, 1),
    which keeps the LP and the lattice far better conditioned than monomials.
    """
    j, r = divmod(k, 2)
    u = (0, 1, -1)
    out = (1,)
    for _ in range(j):
        out = _poly.mul(out, u)
    return _poly.shift(out, r)


def _basis_values(ts: np.ndarray, n: int) -> np.ndarray:
    u = ts * (1 - ts)
    cols = []
    for k in range(n):
        j, r = divmod(k, 2)
        cols.append(u**j * (ts if r else 1.0))
    return np.array(cols).T


def coefficients_to_poly(coeffs: Sequence[int]) -> tuple:
    out: tuple = ()
    for k, c in enumerate(coeffs):
        if c:
            out = _poly.add(out, _poly.scale(basis_poly(k), int(c)))
    return out


def _grid(S: ParamSet, level: int) -> list[Fraction]:
    pts = list(S.points)
    n = 2 ** (BASE_GRID_LOG2 + level)
    for lo, hi in S.intervals:
        step = (hi - lo) / n
        pts.extend(lo + i * step for i in range(n + 1))
    return sorted(set(pts))


def _rational_roots(f: tuple, limit: int = 10**6) -> list[Fraction]:
    """Rational roots of an integer polynomial, when its end coefficients are small."""
    f = _poly.trim(f)
    if len(f) <= 1:
        return []
    shift = 0
    while f[shift] == 0:
        shift += 1
    g = f[shift:]
    roots = {Fraction(0)} if shift else set()
    if len(g) <= 1:
        return sorted(roots)
    a0, an = abs(g[0]), abs(g[-1])
    if a0 > limit or an > limit:
        return sorted(roots)
    divs = lambda m: [d for d in range(1, m + 1) if m % d == 0]
    for p in divs(a0):
        for q in divs(an):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if _poly.sign_at(g, r) == 0:
                    roots.add(r)
    return sorted(roots)


def check_feasibility(problem: SandwichProblem) -> None:
    """Exact necessary conditions: a strict gap, and lower < 0 < upper where a weight vanishes."""
    for i, c in enumerate(problem.constraints):
        S = _where(problem, c)
        cert = is_positive_on(c.upper - c.lower, S)
        if not cert.positive:
            raise Infeasible(f"constraint {i}: lower < upper fails on the set", i, cert)
        if c.weight.is_zero():
            for side in (c.upper, -c.lower):
                cert = is_positive_on(side, S)
                if not cert.positive:
                    raise Infeasible(f"constraint {i}: weight is 0 but lower < 0 < upper fails", i, cert)
            continue
        zeros = [r for r in _rational_roots(c.weight.num) if 0 < r < 1 and member(S, r)]
        for z in zeros:
            lo, hi = eval_at(c.lower, z), eval_at(c.upper, z)
            if not lo < 0 < hi:
                raise Infeasible(
                    f"constraint {i}: weight vanishes at {z} but lower({z}) = {lo}, upper({z}) = {hi}"
                    " do not straddle 0",
                    i,
                )


def _where(problem: SandwichProblem, c: Constraint) -> ParamSet:
    return problem.set if c.where is None else c.where


@lru_cache(maxsize=128)
def _samples(constraints: tuple, S: ParamSet, level: int):
    """Per grid point: t, weight / half-gap and midpoint / half-gap (exact, then rounded)."""
    ts, scales, targets, seen = [], [], [], set()
    for c in constraints:
        grid = _grid(S if c.where is None else c.where, level)
        seen.update(grid)
        for t in grid:
            w = eval_at(c.weight, t)
            if w == 0:
                continue
            lo, hi = eval_at(c.lower, t), eval_at(c.upper, t)
            h = (hi - lo) / 2
            ts.append(float(t))
            scales.append(float(w / h))
            targets.append(float((hi + lo) / 2 / h))
    return np.array(ts), np.array(scales), np.array(targets), len(seen)


def _rows(problem: SandwichProblem, level: int, n: int):
    """Normalized LP/lattice rows: |row . c - target| < 1 encodes one strict sandwich.

    Also returns the number of distinct sample points.
    """
    ts, scales, targets, points = _samples(problem.constraints, problem.set, level)
    A = scales[:, None] * _basis_values(ts, n) if ts.size else np.zeros((0, n))
    return A, targets, points


def _chebyshev_center(A: np.ndarray, b: np.ndarray):
    """Real coefficients maximizing the common slack s in |A c - b| <= 1 - s."""
    m, n = A.shape
    ones = np.ones((m, 1))
    A_ub = np.vstack([np.hstack([A, ones]), np.hstack([-A, ones])])
    b_ub = np.concatenate([b + 1.0, 1.0 - b])
    obj = np.zeros(n + 1)
    obj[-1] = -1.0
    res = linprog(
        obj, A_ub=A_ub, b_ub=b_ub,
        bounds=[(None, None)] * n + [(None, 1.0)], method="highs",
    )
    if res.status != 0:
        return None, None
    return res.x[:n], -res.fun


def _drop_null_part(A: np.ndarray, c: np.ndarray, rank: int) -> np.ndarray:
    """Remove the component of c along the null space of A (it changes nothing on the grid)."""
    _, _, vt = np.linalg.svd(A, full_matrices=True)
    null = vt[rank:]
    return c - null.T @ (null @ c)


def _flip_neighbors(base: list[int], real: np.ndarray) -> list[list[int]]:
    """base plus single-coordinate flips to the other integer neighbour, closest ties first."""
    frac = real - np.floor(real)
    order = np.argsort(np.abs(frac - 0.5), kind="stable")
    out = [list(base)]
    for i in order:
        i = int(i)
        alt = list(base)
        alt[i] = base[i] + (1 if real[i] > base[i] else -1)
        out.append(alt)
    return out


def _candidates(A: np.ndarray, center: np.ndarray, penalty: float = 0.0) -> list[list[int]]:
    n = A.shape[1]
    cands = _flip_neighbors([int(round(x)) for x in center], center)
    # lattice rounding: geometry of the columns of A lives in the R factor;
    # a small penalty on the coefficients keeps a degenerate lattice bounded
    if penalty:
        A = np.vstack([A, penalty * np.eye(n)])
    _, R = np.linalg.qr(A)
    target = R @ center
    B, U = _lattice.lll(R.T)
    coords, real = _lattice.babai(B, target)
    for z in _flip_neighbors(coords, real):
        cands.append([sum(z[i] * U[i][k] for i in range(n)) for k in range(n)])
    seen, out = set(), []
    for c in cands:
        key = tuple(c)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def verify_candidate(problem: SandwichProblem, a: RingElement) -> tuple[PositivityCertificate, ...] | None:
    """Exact check of every one-sided inequality; None if any fails."""
    certs = []
    for c in problem.constraints:
        wa = c.weight * a
        for gap in (c.upper - wa, wa - c.lower):
            cert = is_positive_on(gap, _where(problem, c))
            if not cert.positive:
                return None
            certs.append(cert)
    return tuple(certs)


def _degree_schedule(cap: int, start: int = 0):
    d = 0
    while d < cap:
        if d >= start:
            yield d
        d += max(1, d // 4)
    if cap >= start:
        yield cap


def solve_sandwich(problem: SandwichProblem, start_degree: int = 0) -> SandwichSolution:
    """Find a in Z[t] with every constraint strict on the whole set, verified exactly."""
    if all(_where(problem, c).is_empty() for c in problem.constraints):
        a = RingElement()
        return SandwichSolution(a, 0, 0, ())
    check_feasibility(problem)
    iterations = 0
    for deg in _degree_schedule(problem.max_degree, start_degree):
        n = deg + 1
        for level in range(GRID_DOUBLINGS + 1):
            iterations += 1
            if iterations > problem.max_iterations:
                raise SearchExhausted(f"iteration cap {problem.max_iterations} reached at degree {deg}")
            A, b, points = _rows(problem, level, n)
            if A.shape[0] == 0:
                a = RingElement()
                certs = verify_candidate(problem, a)
                if certs is not None:
                    return SandwichSolution(a, deg, iterations, certs)
                break
            center, slack = _chebyshev_center(A, b)
            if center is None or slack <= 1e-9:
                break
            # fewer distinct points than unknowns: the LP leaves a free direction
            penalty = 0.0
            if points < n:
                center = _drop_null_part(A, center, points)
                penalty = 1e-3
            scored = []
            for coeffs in _candidates(A, center, penalty):
                err = float(np.max(np.abs(A @ np.array(coeffs, dtype=float) - b)))
                if err < 1.0:
                    scored.append((err, coeffs))
            if not scored:
                break
            scored.sort(key=lambda p: p[0])
            for _, coeffs in scored[:VERIFY_PER_ROUND]:
                a = RingElement(coefficients_to_poly(coeffs))
                certs = verify_candidate(problem, a)
                if certs is not None:
                    return SandwichSolution(a, deg, iterations, certs)
    raise SearchExhausted(f"no verified candidate up to degree {problem.max_degree}")


_U = RingElement((0, 1, -1))


def solve_sandwich_G0(problem: SandwichProblem, max_shift: int | None = None) -> SandwichSolution:
    """Like solve_sandwich, but a may carry a denominator (t(1-t))**k.

    With a = a'/u**k the bounds become lower*u**k < weight*a' < upper*u**k
    (u > 0 on (0, 1)), which cancels poles of the bounds at 0 and 1 and
    often makes a' far easier to find. k runs from 0 up to the largest
    denominator exponent among the bounds; the answer is re-verified against
    the original constraints.
    """
    if max_shift is None:
        exps = [max(e.t_pow, e.omt_pow) for c in problem.constraints for e in (c.lower, c.upper)]
        max_shift = max([1] + exps)
    # interleave shifts by degree band so a hopeless k = 0 does not eat the budget
    bands = sorted({min(b, problem.max_degree) for b in (8, 16, problem.max_degree)})
    shifted = []
    for k in range(max_shift + 1):
        scale = _U**k
        shifted.append(SandwichProblem(
            [Constraint(c.lower * scale, c.weight, c.upper * scale, c.where) for c in problem.constraints],
            problem.set,
            problem.max_degree,
            problem.max_iterations,
        ))
    last: SearchExhausted | None = None
    start = 0
    for band in bands:
        for k, sp in enumerate(shifted):
            sp = SandwichProblem(sp.constraints, sp.set, band, sp.max_iterations)
            try:
                sol = solve_sandwich(sp, start_degree=start)
            except SearchExhausted as exc:
                last = exc
                continue
            a = RingElement(sol.candidate.num, k, k)
            certs = verify_candidate(problem, a)
            if certs is None:
                raise AssertionError("shifted sandwich solution fails the original constraints")
            return SandwichSolution(a, sol.degree_cap, sol.iterations, certs)
        start = band + 1
    raise SearchExhausted(f"no candidate with denominator shifts 0..{max_shift}: {last}")
