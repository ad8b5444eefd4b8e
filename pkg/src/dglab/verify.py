"""End-to-end property harness: replays the constructions on random instances.

Every instance draws from its own ``random.Random(f"{seed}:{suite}:{i}")``,
so a failure is reproduced from the seed string alone. Suites run in name
order and the report carries no timing except the single wall-time field.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import generators as gen
from . import oracles
from .errors import DglabError, HalfPointViolation, EmptyF
from .group import (
    embed_single,
    embed_triple,
    gamma_star,
    in_G_plus,
    in_G_plusplus,
    sum_alpha,
    sum_plain,
)
from .k_theory import S_of, QuotientClass, coboundary, in_image, positive_representative, solve_coboundary
from .param_sets import HALF, beta_to_t, f1_for_K, member, normalize, points, t_to_beta, validate_spec
from .positivity import is_positive_on, count_roots, sup_on
from .riesz import interpolate
from .ring import RingElement, alpha, eval_at
from .sandwich import Constraint, SandwichProblem, solve_sandwich, verify_candidate
from .traces import (
    AtomicMeasure,
    classify_eigenfunctional,
    beta_normalize,
    kms_spectrum,
    measure_trace,
    plain,
    scaling_check,
    twisted,
    apply,
)

SCALES = {"small": 1, "medium": 3, "large": 10}

# instances per suite at scale "small"
BASE_COUNTS = {
    "cokernel": 1000,
    "cone": 100,
    "group_order": 200,
    "hypothesis_gate": 1000,
    "param_sets": 300,
    "positivity": 1000,
    "riesz": 120,
    "ring_laws": 1000,
    "s_map": 1000,
    "sandwich_progress": 1,
    "spectrum": 100,
    "sturm_vs_bisection": 300,
    "traces": 1000,
}

MAX_EXAMPLES = 2


class Check(Exception):
    """A property violated on one instance."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise Check(message)


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)
    examples: list = field(default_factory=list)
    durations: list = field(default_factory=list)  # seconds per instance

    @property
    def seconds(self) -> float:
        return sum(self.durations)

    def to_obj(self, timing: bool = False) -> dict:
        out = {
            "name": self.name,
            "instances": self.instances,
            "failures": self.failures,
            "examples": self.examples,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class VerifyReport:
    suites: list
    config: dict
    wall_time: float

    @property
    def failed(self) -> int:
        return sum(len(s.failures) for s in self.suites)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_obj(self, timing: bool = True) -> dict:
        out = {"config": self.config, "suites": [s.to_obj(timing) for s in self.suites], "failures": self.failed}
        if timing:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_obj(timing), indent=2)

    def to_text(self, timing: bool = True) -> str:
        cfg = ", ".join(f"{k}={v}" for k, v in self.config.items())
        lines = [f"verify: {cfg}"]
        for s in self.suites:
            status = "ok" if not s.failures else f"{len(s.failures)} FAILED"
            lines.append(f"  {s.name:<20} {s.instances:>6} instances  {status}")
            for f in s.failures[:5]:
                lines.append(f"      seed {f['seed']}: {f['message']}")
            for ex in s.examples:
                lines.append(f"      example: {ex}")
        lines.append(f"total failures: {self.failed}")
        if timing:
            lines.append(f"wall time: {self.wall_time:.2f} s")
        return "\n".join(lines)


# ---- suites ---------------------------------------------------------------
# each suite takes an rng and returns an optional example string

def _ring_laws(rng: random.Random) -> str | None:
    x, y, z = (gen.random_ring(rng) for _ in range(3))
    _require((x + y) + z == x + (y + z), "addition not associative")
    _require((x * y) * z == x * (y * z), "multiplication not associative")
    _require(x + y == y + x and x * y == y * x, "not commutative")
    _require(x * (y + z) == x * y + x * z, "not distributive")
    _require((x + (-x)).is_zero(), "no additive inverse")
    _require(RingElement(x.num, x.t_pow, x.omt_pow) == x, "canon not idempotent")
    k, m = rng.randint(-4, 4), rng.randint(-4, 4)
    _require(alpha(alpha(x, k), m) == alpha(x, k + m), "alpha powers do not compose")
    p = gen.random_rational(rng)
    _require(eval_at(x + y, p) == eval_at(x, p) + eval_at(y, p), "eval not additive")
    _require(eval_at(x * y, p) == eval_at(x, p) * eval_at(y, p), "eval not multiplicative")
    _require(eval_at(alpha(x, k), p) == eval_at(x, p) * (p / (1 - p)) ** k, "eval(alpha) mismatch")
    return f"({x}) * ({y}) = {x * y}"


def _positivity(rng: random.Random) -> str | None:
    f = gen.random_poly(rng, 8, 20) if rng.random() < 0.7 else gen.random_ring(rng, 6, 20, 3)
    S = gen.random_nonempty_set(rng)
    cert = is_positive_on(f, S)
    for lo, hi in S.intervals:
        a, b = count_roots(f.num, lo, hi), oracles.bisection_root_count(f.num, lo, hi)
        _require(a == b, f"Sturm count {a} != bisection count {b} on ({lo}, {hi})")
    if cert.positive:
        sgn, t = oracles.min_sign_on_grid(f, oracles.sample_grid(S, 10_000))
        _require(sgn > 0, f"POSITIVE contradicted at t = {t}")
    else:
        if cert.witness is not None:
            _require(member(S, cert.witness), "witness outside the set")
            _require(eval_at(f, cert.witness) == cert.witness_value <= 0, "witness value wrong")
        else:
            lo, hi = cert.witness_interval
            _require(lo < hi and member(S, lo) and member(S, hi), "isolating interval outside the set")
            _require(count_roots(f.num, lo, hi) >= 1, "isolating interval has no root")
            _require(oracles.bisection_root_count(f.num, lo, hi) >= 1, "oracle finds no root in interval")
    # sup_on brackets the grid maximum
    if rng.random() < 0.1:
        lo, hi = sup_on(f, S, Fraction(1, 100))
        grid = list(oracles.sample_grid(S, 200))
        vals = [eval_at(f, t) for t in grid]
        _require(max(vals) <= hi, "sup_on upper bound exceeded on the grid")
        _require(hi - lo <= Fraction(1, 100), "sup_on bracket wider than tol")
    return f"{f} on {S}: {cert.verdict.value}"


def _sturm_vs_bisection(rng: random.Random) -> str | None:
    f = gen.random_poly(rng, 8, 20)
    lo, hi = sorted((gen.random_rational(rng), gen.random_rational(rng)))
    if rng.random() < 0.2:
        # force a rational root into the interval
        r = (lo + hi) / 2
        f = f * RingElement((-r.numerator, r.denominator))
    a = count_roots(f.num, lo, hi)
    b = oracles.bisection_root_count(f.num, lo, hi)
    _require(a == b, f"Sturm count {a} != bisection count {b} on ({lo}, {hi})")
    return f"{f} has {a} roots in ({lo}, {hi})"


def _cokernel(rng: random.Random) -> str | None:
    width = rng.randint(1, 8)
    y = gen.random_group(rng, width, lo=rng.randint(-4, 4) - width // 2, max_deg=4, height=10, max_pow=3)
    x = coboundary(y)
    _require(sum_alpha(x).is_zero(), "twisted sum of a coboundary is nonzero")
    _require(in_image(x), "coboundary not recognized")
    _require(solve_coboundary(x) == y, "solve_coboundary did not recover y")
    return f"y = {y}"


def _s_map(rng: random.Random) -> str | None:
    x = gen.random_group(rng, 4)
    q = QuotientClass.of(x)
    moved = x
    for _ in range(10):
        moved = moved + coboundary(gen.random_group(rng, rng.randint(1, 5)))
    _require(QuotientClass.of(moved) == q, "S not invariant under coboundaries")
    a = gen.random_ring(rng)
    _require(S_of(embed_single(a)) == a, "S o embed_single is not the identity")
    y = gen.random_group(rng, 4)
    _require(S_of(x + y) == S_of(x) + S_of(y), "S not additive")
    return f"S({x}) = {q.s_value}"


def _group_order(rng: random.Random) -> str | None:
    spec = rng.choice(list(gen.REPLAY_SPECS.values()))
    x = gen.random_group(rng, 3, max_deg=3, height=6, max_pow=2)
    k = rng.randint(-3, 3)
    gx = gamma_star(x, k)
    _require(gamma_star(gx, -k) == x, "gamma_star not invertible")
    _require(sum_alpha(gamma_star(x, 1)) == sum_alpha(x), "twisted sum not gamma-invariant")
    y = gen.random_group(rng, 3)
    _require(gamma_star(x + y, k) == gx + gamma_star(y, k), "gamma_star not additive")
    a, b = gen.random_ring(rng), gen.random_ring(rng)
    _require(sum_plain(embed_triple(a, b)) == a, "plain sum of [[-b, a, b]] is not a")
    if x:
        _require(not (in_G_plus(x, spec) and in_G_plus(-x, spec)), "x and -x both positive")
    n = rng.randint(1, 9)
    _require(bool(in_G_plus(x, spec)) == bool(in_G_plus(n * x, spec)), "scaling changed positivity")
    return None


def _riesz(rng: random.Random, idx: int) -> str | None:
    names = sorted(gen.REPLAY_SPECS)
    spec = gen.REPLAY_SPECS[names[idx % len(names)]]
    kw = dict(max_deg=3, height=5, max_pow=2)
    one = embed_single(RingElement.const(1))
    x1 = gen.random_group(rng, 3, **kw)
    x2 = x1 - gen.random_positive(rng, spec, 3, **kw)
    if rng.random() < 0.5:
        y1 = x1 + one  # tight: a must fit a unit gap
    else:
        y1 = x1 + gen.random_positive(rng, spec, 3, **kw)
    y2 = x1 + gen.random_positive(rng, spec, 3, **kw)
    xs, ys = [x1, x2], [y1, y2]
    rng.shuffle(xs)
    rng.shuffle(ys)
    res = interpolate(xs[0], xs[1], ys[0], ys[1], spec, max_degree=32)
    _require(set(res.z.support()) <= {-1, 0, 1}, "interpolant support outside {-1, 0, 1}")
    for x in xs:
        _require(bool(in_G_plus(res.z - x, spec)), "z - x not in G+")
    for y in ys:
        _require(bool(in_G_plus(y - res.z, spec)), "y - z not in G+")
    return f"{names[idx % len(names)]}: z = {res.z}"


def _cone_instance(rng: random.Random, spec):
    kw = dict(max_deg=3, height=5, max_pow=2)
    for _ in range(1000):
        y = gen.random_group(rng, 3, **kw)
        x = coboundary(y) + embed_single(gen.random_ring(rng, 3, 5, 2))
        if x and in_G_plusplus(x, spec.F) and not in_G_plus(x, spec):
            return x
    raise Check("no element of G++ outside G+ found in 1000 draws")


def _cone(rng: random.Random, idx: int) -> str | None:
    names = sorted(gen.CONE_SPECS)
    spec = gen.CONE_SPECS[names[idx % len(names)]]
    x = _cone_instance(rng, spec)
    rep = positive_representative(x, spec, max_degree=32)
    _require(sum_alpha(rep.y) == sum_alpha(x), "representative changed the twisted sum")
    _require(bool(in_G_plus(rep.y, spec)), "representative not in G+")
    return f"{names[idx % len(names)]}: b = {rep.b}"


def _traces(rng: random.Random) -> str | None:
    t0 = gen.random_rational(rng)
    x = gen.random_group(rng, 4)
    for tf in (plain(t0), twisted(t0)):
        lhs, rhs = scaling_check(tf, x)
        _require(lhs == rhs, f"{tf}: scaling law fails")
    spec = rng.choice(list(gen.REPLAY_SPECS.values()))
    s = Fraction(rng.randint(1, 40), rng.randint(1, 40))
    if s != 1:
        tf = classify_eigenfunctional(s, spec)
        if tf is not None:
            _require(apply(tf, gamma_star(x, 1)) == s * apply(tf, x), "eigenfunctional factor is not s")
            _require(member(spec.F1, tf.t0), "eigenfunctional point outside F1")
        else:
            _require(not member(spec.F1, s / (1 + s)), "classification missed a point of F1")
    ts = sorted({gen.random_rational(rng) for _ in range(rng.randint(1, 3))})
    m = AtomicMeasure(tuple((t, Fraction(rng.randint(1, 9), rng.randint(1, 9))) for t in ts))
    y = gen.random_group(rng, 3)
    _require(measure_trace(m, coboundary(y)) == 0, "measure trace does not kill coboundaries")
    c = rng.randint(-5, 5)
    _require(measure_trace(m, x + c * y) == measure_trace(m, x) + c * measure_trace(m, y), "not linear in x")
    return None


def _random_K(rng: random.Random) -> list:
    cuts = sorted(rng.uniform(-20, 20) for _ in range(2 * rng.randint(1, 4)))
    K = []
    for lo, hi in zip(cuts[::2], cuts[1::2]):
        if hi - lo < 1e-3 or rng.random() < 0.3:
            K.append(lo)
        else:
            K.append((lo, hi))
    return K


def _spectrum(rng: random.Random) -> str | None:
    K = _random_K(rng)
    spec = validate_spec(points(HALF), f1_for_K(K))
    got = kms_spectrum(spec).as_pairs()
    want = beta_normalize(K + [0.0])
    _require(len(got) == len(want), f"component count {len(got)} != {len(want)}")
    for (a, b), (c, d) in zip(got, want):
        _require(abs(a - c) < 1e-9 and abs(b - d) < 1e-9, f"component [{a}, {b}] vs [{c}, {d}]")
    half = kms_spectrum(validate_spec(points(HALF), points(HALF))).as_pairs()
    _require(half == [(0.0, 0.0)], "F1 = {1/2} does not give {0}")
    return None


def _hypothesis_gate(rng: random.Random) -> str | None:
    F, F1 = gen.random_half_spec_pair(rng)
    # oracle: direct arithmetic on the defining pieces
    def has_half(S):
        return HALF in S.points or any(lo <= HALF <= hi for lo, hi in S.intervals)

    conforming = has_half(F) == has_half(F1)
    try:
        validate_spec(F, F1)
        accepted = True
    except HalfPointViolation:
        accepted = False
    _require(accepted == conforming, f"validate_spec({F}, {F1}) accepted={accepted}")
    try:
        validate_spec(normalize([]), F1)
        _require(False, "empty F accepted")
    except EmptyF:
        pass
    return None


def _param_sets(rng: random.Random) -> str | None:
    pts = [gen.random_rational(rng, max_den=16) for _ in range(rng.randint(0, 3))]
    ivs = [tuple(sorted((gen.random_rational(rng, max_den=16), gen.random_rational(rng, max_den=16))))
           for _ in range(rng.randint(0, 3))]
    S = normalize(pts, ivs)
    _require(normalize(S.points, S.intervals) == S, "normalize not idempotent")
    rng.shuffle(pts)
    rng.shuffle(ivs)
    _require(normalize(pts, ivs) == S, "normalize depends on input order")
    beta = rng.uniform(-50, 50)
    _require(abs(t_to_beta(beta_to_t(beta, precision=30)) - beta) < 1e-12, f"beta round trip at {beta}")
    b2 = beta + rng.uniform(1e-6, 1)
    _require(beta_to_t(b2, precision=30) < beta_to_t(beta, precision=30), "beta_to_t not decreasing")
    if abs(beta) < 30:
        _require(beta_to_t(b2) < beta_to_t(beta), "float beta_to_t not decreasing")
    return None


def _sandwich_progress(rng: random.Random) -> str | None:
    """The fixed benchmark family; rng unused."""
    S = normalize([], [(Fraction(1, 4), Fraction(3, 4))])
    solved = []
    for k in (-3, 0, 5):
        problem = SandwichProblem([Constraint.between(k, k + 2)], S, 32)
        sol = solve_sandwich(problem)
        _require(verify_candidate(problem, sol.candidate) is not None, f"constant sandwich {k} < a < {k + 2}")
    for c in (Fraction(1, 2), Fraction(7, 3), Fraction(-5, 7)):
        for m in range(1, 9):
            p, q = c.numerator * 2 ** (m + 1), c.denominator * 2 ** (m + 1)
            # c - 2^-(m+1) < a < c + 2^-(m+1), scaled by q*2^(m+1)
            cons = Constraint(
                RingElement.const(p - c.denominator), RingElement.const(q), RingElement.const(p + c.denominator)
            )
            problem = SandwichProblem([cons], S, 32)
            sol = solve_sandwich(problem)
            _require(verify_candidate(problem, sol.candidate) is not None, f"gap 2^-{m} around {c}")
            solved.append(sol.degree_cap)
    return f"benchmark degrees used: {solved}"


SUITES: dict[str, Callable] = {
    "cokernel": _cokernel,
    "cone": _cone,
    "group_order": _group_order,
    "hypothesis_gate": _hypothesis_gate,
    "param_sets": _param_sets,
    "positivity": _positivity,
    "riesz": _riesz,
    "ring_laws": _ring_laws,
    "s_map": _s_map,
    "sandwich_progress": _sandwich_progress,
    "spectrum": _spectrum,
    "sturm_vs_bisection": _sturm_vs_bisection,
    "traces": _traces,
}
_INDEXED = {"riesz", "cone"}


def instance_seed(seed: int, suite: str, i: int) -> str:
    return f"{seed}:{suite}:{i}"


def run_instance(seed: int, suite: str, i: int) -> str | None:
    """Re-run a single instance; raises on failure."""
    rng = random.Random(instance_seed(seed, suite, i))
    fn = SUITES[suite]
    return fn(rng, i) if suite in _INDEXED else fn(rng)


def _run_suite(seed: int, suite: str, count: int) -> SuiteResult:
    res = SuiteResult(suite)
    for i in range(count):
        res.instances += 1
        t0 = time.perf_counter()
        try:
            ex = run_instance(seed, suite, i)
        except Check as exc:
            res.failures.append({"seed": instance_seed(seed, suite, i), "message": str(exc)})
            continue
        except (DglabError, AssertionError, ArithmeticError, ValueError) as exc:
            res.failures.append(
                {"seed": instance_seed(seed, suite, i), "message": f"{type(exc).__name__}: {exc}"}
            )
            continue
        finally:
            res.durations.append(time.perf_counter() - t0)
        if ex is not None and len(res.examples) < MAX_EXAMPLES:
            res.examples.append(ex)
    return res


def iter_suites(names=None) -> Iterator[str]:
    return iter(sorted(names or SUITES))


def run_verify(seed: int = 42, scale: str = "small", suites=None) -> VerifyReport:
    """Run every suite (or the named ones) and collect a report."""
    if scale not in SCALES:
        raise ValueError(f"scale must be one of {sorted(SCALES)}")
    mult = SCALES[scale]
    start = time.perf_counter()
    results = []
    for name in iter_suites(suites):
        count = BASE_COUNTS[name] * (1 if name == "sandwich_progress" else mult)
        results.append(_run_suite(seed, name, count))
    config = {"seed": seed, "scale": scale, "suites": len(results)}
    return VerifyReport(results, config, time.perf_counter() - start)
