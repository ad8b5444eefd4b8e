"""Command-line front end: ``dglab <group> <command> [options]``.

Exit codes: 0 success, 2 usage or invalid input, 3 negative mathematical
verdict, 4 search exhausted, 5 internal assertion (including failed verify
suites).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path

from . import serialize as ser
from .errors import (
    AtomOutsideF,
    DglabError,
    Infeasible,
    LimitError,
    ParseError,
    PreconditionError,
    SearchExhausted,
    SpecError,
)
from .group import GroupElement
from .k_theory import S_of, in_image, positive_representative, solve_coboundary
from .param_sets import HALF, KmsSpec, f1_for_K, points, t_to_beta, validate_spec
from .positivity import is_positive_on
from .riesz import interpolate
from .sandwich import solve_sandwich, solve_sandwich_G0
from .traces import classify_eigenfunctional, kms_spectrum, measure_trace
from .verify import SCALES, SUITES, run_verify

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_EXHAUSTED, EXIT_INTERNAL = 0, 2, 3, 4, 5

log = logging.getLogger("dglab")


class Negative(Exception):
    """Raised after output is written when the answer is a negative verdict."""


# ---- input helpers --------------------------------------------------------

def _read(arg: str) -> str:
    """Text of a file argument: a path or inline JSON ('-' reads stdin)."""
    if arg.lstrip().startswith("{"):
        return arg
    if arg == "-":
        return sys.stdin.read()
    try:
        return Path(arg).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {arg}: {exc.strerror}") from exc


def _load(arg: str, kind: str, args):
    return ser.loads(_read(arg), kind, strict=args.strict)


def _set_from_args(args, file_attr: str = "set"):
    path = getattr(args, file_attr, None)
    if path:
        return _load(path, "set", args)
    if getattr(args, "t_set", None) is not None:
        return ser.parse_inline_set(args.t_set)
    if getattr(args, "beta_set", None) is not None:
        return ser.parse_inline_set(args.beta_set, beta=True, precision=args.precision)
    raise ParseError("a set is required (--set, --t-set or --beta-set)")


def _rational_arg(text: str, precision: int) -> Fraction:
    """Exact for 'p/q' and integers; decimals are rounded to `precision` significant digits."""
    try:
        if "/" in text:
            return Fraction(text)
        d = Decimal(text)
    except (ValueError, InvalidOperation, ZeroDivisionError) as exc:
        raise ParseError(f"not a number: {text!r}") from exc
    digits = len(d.as_tuple().digits)
    if digits > precision:
        d = round(d, precision - d.adjusted() - 1)
        log.info("rounded %s to %s (%d significant digits)", text, d, precision)
    return Fraction(d)


# ---- output helpers -------------------------------------------------------

def _emit(args, obj: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _cert_lines(certs, indent: str = "  ") -> list[str]:
    out = []
    for i, c in enumerate(certs):
        body = c.describe().splitlines()
        out.append(f"{indent}[{i}] {body[0]}")
        out.extend(f"{indent}    {line.strip()}" for line in body[1:])
    return out


def _group_obj(x: GroupElement) -> dict:
    return {"value": ser.group_to_obj(x), "text": str(x)}


def _ring_obj(x) -> dict:
    return {"value": ser.ring_to_obj(x), "text": str(x)}


# ---- commands -------------------------------------------------------------

def cmd_positivity_check(args) -> None:
    f = _load(args.elem, "ring", args)
    S = _set_from_args(args)
    cert = is_positive_on(f, S)
    _emit(args, {"element": str(f), "set": str(S), "certificate": ser.certificate_to_obj(cert)},
          f"element: {f}\nset: {S}\n{cert.describe()}")
    if not cert.positive:
        raise Negative


def cmd_sandwich_solve(args) -> None:
    problem = _load(args.problem, "sandwich", args)
    if args.max_degree is not None:
        problem = type(problem)(problem.constraints, problem.set, args.max_degree, problem.max_iterations)
    sol = solve_sandwich_G0(problem) if args.denominators else solve_sandwich(problem)
    obj = {
        "candidate": _ring_obj(sol.candidate),
        "degree_cap": sol.degree_cap,
        "iterations": sol.iterations,
        "certificates": [ser.certificate_to_obj(c) for c in sol.certificates],
    }
    lines = [
        f"candidate: {sol.candidate}",
        f"degree cap at success: {sol.degree_cap}",
        f"iterations: {sol.iterations}",
        "certificates (upper - w*a, then w*a - lower, per constraint):",
        *_cert_lines(sol.certificates),
    ]
    _emit(args, obj, "\n".join(lines))


def cmd_riesz_interpolate(args) -> None:
    xs = [_load(getattr(args, k), "group", args) for k in ("x1", "x2", "y1", "y2")]
    spec = _load(args.spec, "spec", args)
    res = interpolate(*xs, spec, max_degree=args.max_degree)
    obj = {
        "z": _group_obj(res.z),
        "a": None if res.a is None else _ring_obj(res.a),
        "b": None if res.b is None else _ring_obj(res.b),
        "certificates": [ser.certificate_to_obj(c) for c in res.certificates],
    }
    lines = [f"spec: {spec}", f"z = {res.z}"]
    if res.a is not None:
        lines.append(f"  a = {res.a}")
        lines.append(f"  b = {res.b}")
    else:
        lines.append("  (an input already interpolates)")
    lines.append("certificates for z - x1, z - x2, y1 - z, y2 - z:")
    lines.extend(_cert_lines(res.certificates))
    _emit(args, obj, "\n".join(lines))


def cmd_coker_in_image(args) -> None:
    x = _load(args.elem, "group", args)
    yes = in_image(x)
    s = S_of(x)
    _emit(args, {"in_image": yes, "twisted_sum": _ring_obj(s)},
          f"in image of (id - gamma_*): {'yes' if yes else 'no'}\ntwisted sum: {s}")
    if not yes:
        raise Negative


def cmd_coker_solve(args) -> None:
    x = _load(args.elem, "group", args)
    if not in_image(x):
        s = S_of(x)
        _emit(args, {"in_image": False, "twisted_sum": _ring_obj(s)},
              f"not a coboundary: twisted sum is {s}")
        raise Negative
    y = solve_coboundary(x)
    _emit(args, {"in_image": True, "y": _group_obj(y)}, f"y = {y}\n(id - gamma_*)(y) = x verified")


def cmd_coker_s_map(args) -> None:
    x = _load(args.elem, "group", args)
    s = S_of(x)
    _emit(args, {"s_value": _ring_obj(s)}, f"S(x) = {s}")


def cmd_coker_positive_rep(args) -> None:
    x = _load(args.elem, "group", args)
    spec = _load(args.spec, "spec", args)
    rep = positive_representative(x, spec, max_degree=args.max_degree)
    obj = {
        "y": _group_obj(rep.y),
        "b": _ring_obj(rep.b),
        "s_value": _ring_obj(S_of(rep.y)),
        "certificates": [ser.certificate_to_obj(c) for c in rep.certificates],
    }
    lines = [
        f"spec: {spec}",
        f"y = {rep.y}",
        f"b = {rep.b}",
        f"S(y) = S(x) = {S_of(rep.y)}",
        "certificates (twisted sum on F, plain sum on F1):",
        *_cert_lines(rep.certificates),
    ]
    _emit(args, obj, "\n".join(lines))


def _spec_for_kms(args) -> KmsSpec:
    if args.spec:
        return _load(args.spec, "spec", args)
    if args.beta_set is not None:
        K = ser.parse_inline_items(args.beta_set, beta=True)
        return validate_spec(points(HALF), f1_for_K(K, args.precision))
    raise ParseError("kms needs --spec or --beta-set")


def cmd_kms_spectrum(args) -> None:
    spec = _spec_for_kms(args)
    sp = kms_spectrum(spec)
    comps = []
    lines = [f"spec: {spec}", f"beta spectrum: {sp}", "components (beta  <-  t):"]
    for c in sp.components:
        entry = {"beta": [c.lo, c.hi], "t": None}
        if c.t_source is not None:
            lo, hi = c.t_source
            entry["t"] = [ser.rational_str(lo), ser.rational_str(hi)]
            tdesc = str(lo) if lo == hi else f"[{lo}, {hi}]"
        else:
            tdesc = "none (1/2 is not in F1)"
        bdesc = f"{c.lo:.12g}" if c.is_point else f"[{c.lo:.12g}, {c.hi:.12g}]"
        if c.lo <= 0 <= c.hi:
            entry["note"] = "beta = 0: traces come from positive measures on F"
            tdesc += "; beta = 0 traces come from positive measures on F"
        comps.append(entry)
        lines.append(f"  {bdesc}  <-  {tdesc}")
    if spec.F1.provenance:
        lines.append(f"F1 provenance: {spec.F1.provenance}")
    _emit(args, {"spec": ser.spec_to_obj(spec), "components": comps}, "\n".join(lines))


def cmd_kms_classify(args) -> None:
    spec = _load(args.spec, "spec", args)
    s = _rational_arg(args.s, args.precision)
    tf = classify_eigenfunctional(s, spec)
    t1 = s / (1 + s)
    if tf is not None:
        obj = {"s": ser.rational_str(s), "status": "constructed", "kind": tf.kind.value,
               "t": ser.rational_str(tf.t0), "beta": t_to_beta(tf.t0)}
        text = (f"s = {s}: constructed {tf.kind.value} trace at t = {tf.t0} "
                f"(beta = {t_to_beta(tf.t0):.12g}); scales by s under gamma_*")
        _emit(args, obj, text)
        return
    obj = {"s": ser.rational_str(s), "status": "absent", "t": ser.rational_str(t1),
           "reason": "s/(1+s) is not in F1; for s != 1 every positive eigenfunctional "
                     "is a multiple of the PLAIN trace at s/(1+s)"}
    _emit(args, obj, f"s = {s}: absent, since t = {t1} is not in F1 and for s != 1 every positive "
                     "eigenfunctional is a multiple of the PLAIN trace at s/(1+s)")
    raise Negative


def cmd_kms_trace(args) -> None:
    m = _load(args.measure, "measure", args)
    x = _load(args.elem, "group", args)
    F = _load(args.spec, "spec", args).F if args.spec else None
    v = measure_trace(m, x, F)
    _emit(args, {"value": ser.rational_str(v), "float": float(v)}, f"trace = {v}  (~ {float(v):.12g})")


def cmd_verify(args) -> None:
    rep = run_verify(args.seed, args.scale, args.suite or None)
    timing = not args.no_timing
    print(rep.to_json(timing) if args.format == "json" else rep.to_text(timing))
    if not rep.ok:
        raise AssertionError(f"{rep.failed} verification failures")


# ---- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                        help="significant digits when rationalizing floats (default 30)")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="reject non-canonical ring elements in input files")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="dglab", description="Certified computations in the dimension group G.")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--precision", type=int, default=30)
    p.add_argument("--strict", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    groups = p.add_subparsers(dest="group", required=True)

    def leaf(sub, name, func, help_):
        q = sub.add_parser(name, parents=[common], help=help_)
        q.set_defaults(func=func)
        return q

    def set_args(q):
        g = q.add_mutually_exclusive_group(required=True)
        g.add_argument("--set", help="ParamSet JSON file")
        g.add_argument("--t-set", help="inline set in t, e.g. '1/3;[1/4,1/2]'")
        g.add_argument("--beta-set", help="inline set in beta, e.g. '0;[1.5,2]'")

    pos = groups.add_parser("positivity", help="exact positivity certificates on parameter sets").add_subparsers(dest="cmd", required=True)
    q = leaf(pos, "check", cmd_positivity_check, "decide f > 0 on a set")
    q.add_argument("--elem", required=True, help="RingElement JSON file")
    set_args(q)

    sw = groups.add_parser("sandwich", help="integer polynomials squeezed between bounds").add_subparsers(dest="cmd", required=True)
    q = leaf(sw, "solve", cmd_sandwich_solve, "find a in Z[t] with lower < w*a < upper")
    q.add_argument("--problem", required=True)
    q.add_argument("--max-degree", type=int)
    q.add_argument("--denominators", action="store_true",
                   help="allow a to carry a denominator (t(1-t))^k")

    rz = groups.add_parser("riesz", help="interpolation between two lower and two upper bounds").add_subparsers(dest="cmd", required=True)
    q = leaf(rz, "interpolate", cmd_riesz_interpolate, "z with x1, x2 <= z <= y1, y2")
    for k in ("x1", "x2", "y1", "y2"):
        q.add_argument(f"--{k}", required=True)
    q.add_argument("--spec", required=True)
    q.add_argument("--max-degree", type=int)

    ck = groups.add_parser("coker", help="the cokernel of id - gamma_* and the map S").add_subparsers(dest="cmd", required=True)
    for name, func, help_ in (
        ("solve", cmd_coker_solve, "y with (id - gamma_*)(y) = x"),
        ("in-image", cmd_coker_in_image, "is x a coboundary"),
        ("s-map", cmd_coker_s_map, "S(x) = sum_n alpha^n(x_n)"),
    ):
        q = leaf(ck, name, func, help_)
        q.add_argument("--elem", required=True, help="GroupElement JSON file")
    q = leaf(ck, "positive-rep", cmd_coker_positive_rep, "element of G+ in the coset of x")
    q.add_argument("--elem", required=True)
    q.add_argument("--spec", required=True)
    q.add_argument("--max-degree", type=int)

    km = groups.add_parser("kms", help="trace functionals and the inverse-temperature spectrum").add_subparsers(dest="cmd", required=True)
    q = leaf(km, "spectrum", cmd_kms_spectrum, "inverse temperatures admitting KMS states")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--spec")
    g.add_argument("--beta-set", help="K in beta; uses F = {1/2}, F1 = image of K plus 1/2")
    q = leaf(km, "classify", cmd_kms_classify, "eigenfunctional with gamma_* factor s")
    q.add_argument("--s", required=True, help="rational 'p/q' or decimal")
    q.add_argument("--spec", required=True)
    q = leaf(km, "trace", cmd_kms_trace, "value of the trace given by an atomic measure")
    q.add_argument("--measure", required=True)
    q.add_argument("--elem", required=True)
    q.add_argument("--spec", help="check the atoms lie in F")

    q = groups.add_parser("verify", parents=[common], help="randomized replay of all property suites")
    q.set_defaults(func=cmd_verify)
    q.add_argument("--seed", type=int, default=42)
    q.add_argument("--scale", choices=sorted(SCALES), default="small")
    q.add_argument("--suite", action="append", choices=sorted(SUITES), help="run only these suites")
    q.add_argument("--no-timing", action="store_true", help="omit wall time (byte-stable output)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        args.func(args)
    except Negative:
        return EXIT_NEGATIVE
    except (ParseError, SpecError, LimitError, AtomOutsideF) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, Infeasible) as exc:
        print(f"negative: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except AssertionError as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DglabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK
