"""JSON file formats for every value the CLI reads or writes.

Integers and rationals travel as decimal strings ("-3", "2/5") so nothing is
lost to JSON number handling. Parsers accept plain JSON integers too.
Semantic errors carry the JSON path and the byte offset of the offending
value in the source text.
"""
from __future__ import annotations

import json
import re
import warnings
from fractions import Fraction
from typing import Any, Callable

from .errors import DglabError, ParseError
from .group import GroupElement
from .param_sets import KmsSpec, ParamSet, from_beta, normalize, validate_spec
from .positivity import PositivityCertificate
from .ring import RingElement
from .sandwich import Constraint, SandwichProblem, default_max_degree, DEFAULT_MAX_ITERATIONS
from .traces import AtomicMeasure, BetaSpectrum

_INT_RE = re.compile(r"^[+-]?\d+$")
_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class _Ctx:
    """Source text plus the current JSON path, for error locations."""

    def __init__(self, text: str | None, strict: bool):
        self.text = text
        self.strict = strict

    def error(self, message: str, path: tuple) -> ParseError:
        return ParseError(message, _locate(self.text, path) if self.text else None, _fmt_path(path))


def _fmt_path(path: tuple) -> str:
    out = "$"
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _locate(text: str, path: tuple) -> int | None:
    """Byte offset of the value at `path`, found with the stdlib scanner."""
    dec = json.JSONDecoder()
    ws = re.compile(r"\s*")
    try:
        i = ws.match(text, 0).end()
        for key in path:
            if isinstance(key, str):
                if text[i] != "{":
                    return None
                i = ws.match(text, i + 1).end()
                while text[i] != "}":
                    k, i = dec.raw_decode(text, i)
                    i = ws.match(text, i).end() + 1  # ':'
                    i = ws.match(text, i).end()
                    if k == key:
                        break
                    _, i = dec.raw_decode(text, i)
                    i = ws.match(text, i).end()
                    if text[i] == ",":
                        i = ws.match(text, i + 1).end()
                else:
                    return None
            else:
                if text[i] != "[":
                    return None
                i = ws.match(text, i + 1).end()
                for _ in range(key):
                    _, i = dec.raw_decode(text, i)
                    i = ws.match(text, i).end()
                    if text[i] != ",":
                        return None
                    i = ws.match(text, i + 1).end()
        return len(text[:i].encode("utf-8"))
    except (IndexError, ValueError):
        return None


def _int(ctx: _Ctx, v: Any, path: tuple) -> int:
    if isinstance(v, bool):
        raise ctx.error("expected an integer", path)
    if isinstance(v, int):
        return v
    if isinstance(v, str) and _INT_RE.match(v.strip()):
        return int(v)
    raise ctx.error(f"expected an integer (decimal string), got {v!r}", path)


def _nonneg(ctx: _Ctx, v: Any, path: tuple) -> int:
    n = _int(ctx, v, path)
    if n < 0:
        raise ctx.error(f"exponent must be non-negative, got {n}", path)
    return n


def _rational(ctx: _Ctx, v: Any, path: tuple) -> Fraction:
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    if not isinstance(v, str):
        raise ctx.error(f"expected a rational 'num/den', got {v!r}", path)
    m = _RAT_RE.match(v)
    if not m:
        raise ctx.error(f"malformed rational {v!r}", path)
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ctx.error("zero denominator", path)
    q = Fraction(num, den)
    if ctx.strict and (q.numerator, q.denominator) != (num, den):
        warnings.warn(f"rational {v!r} at {_fmt_path(path)} normalized to {rational_str(q)}", stacklevel=2)
    return q


def rational_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


# ---- RingElement ---------------------------------------------------------

def ring_to_obj(x: RingElement) -> dict:
    return {"num": [str(c) for c in x.num], "t_pow": str(x.t_pow), "omt_pow": str(x.omt_pow)}


def _ring(ctx: _Ctx, obj: Any, path: tuple) -> RingElement:
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        return RingElement.const(_int(ctx, obj, path))
    if not isinstance(obj, dict) or "num" not in obj:
        raise ctx.error("ring element must be an object with 'num'", path)
    raw = obj["num"]
    if not isinstance(raw, list):
        raise ctx.error("'num' must be a list of integers", path + ("num",))
    num = [_int(ctx, c, path + ("num", i)) for i, c in enumerate(raw)]
    a = _nonneg(ctx, obj.get("t_pow", 0), path + ("t_pow",))
    b = _nonneg(ctx, obj.get("omt_pow", 0), path + ("omt_pow",))
    try:
        x = RingElement(num, a, b)
    except DglabError as exc:
        raise ctx.error(str(exc), path) from exc
    if ctx.strict and (list(x.num), x.t_pow, x.omt_pow) != (num, a, b):
        raise ctx.error(f"non-canonical ring element (canonical form: {x})", path)
    return x


# ---- ParamSet / KmsSpec --------------------------------------------------

def param_set_to_obj(S: ParamSet) -> dict:
    return {
        "points": [rational_str(p) for p in S.points],
        "intervals": [[rational_str(lo), rational_str(hi)] for lo, hi in S.intervals],
    }


def _param_set(ctx: _Ctx, obj: Any, path: tuple) -> ParamSet:
    if not isinstance(obj, dict):
        raise ctx.error("set must be an object with 'points' and 'intervals'", path)
    pts = [_rational(ctx, v, path + ("points", i)) for i, v in enumerate(obj.get("points", []))]
    ivs = []
    for i, iv in enumerate(obj.get("intervals", [])):
        if not isinstance(iv, list) or len(iv) != 2:
            raise ctx.error("interval must be a pair [lo, hi]", path + ("intervals", i))
        ivs.append(tuple(_rational(ctx, v, path + ("intervals", i, k)) for k, v in enumerate(iv)))
    try:
        return normalize(pts, ivs)
    except DglabError as exc:
        raise ctx.error(str(exc), path) from exc


def spec_to_obj(spec: KmsSpec) -> dict:
    return {"F": param_set_to_obj(spec.F), "F1": param_set_to_obj(spec.F1)}


def _spec(ctx: _Ctx, obj: Any, path: tuple) -> KmsSpec:
    if not isinstance(obj, dict) or "F" not in obj:
        raise ctx.error("spec must be an object with 'F' and 'F1'", path)
    F = _param_set(ctx, obj["F"], path + ("F",))
    F1 = _param_set(ctx, obj.get("F1", {}), path + ("F1",))
    return validate_spec(F, F1)


# ---- GroupElement --------------------------------------------------------

def group_to_obj(x: GroupElement) -> dict:
    return {"entries": {str(n): ring_to_obj(v) for n, v in x.entries}}


def _group(ctx: _Ctx, obj: Any, path: tuple) -> GroupElement:
    if not isinstance(obj, dict) or not isinstance(obj.get("entries", None), dict):
        raise ctx.error("group element must be an object with an 'entries' map", path)
    d = {}
    for k, v in obj["entries"].items():
        n = _int(ctx, k, path + ("entries",))
        d[n] = _ring(ctx, v, path + ("entries", k))
    try:
        return GroupElement(d)
    except DglabError as exc:
        raise ctx.error(str(exc), path) from exc


# ---- SandwichProblem -----------------------------------------------------

def _constraint_to_obj(c: Constraint) -> dict:
    out = {"lower": ring_to_obj(c.lower), "weight": ring_to_obj(c.weight), "upper": ring_to_obj(c.upper)}
    if c.where is not None:
        out["where"] = param_set_to_obj(c.where)
    return out


def sandwich_to_obj(p: SandwichProblem) -> dict:
    return {
        "constraints": [_constraint_to_obj(c) for c in p.constraints],
        "set": param_set_to_obj(p.set),
        "max_degree": p.max_degree,
        "max_iterations": p.max_iterations,
    }


def _sandwich(ctx: _Ctx, obj: Any, path: tuple) -> SandwichProblem:
    if not isinstance(obj, dict) or "constraints" not in obj or "set" not in obj:
        raise ctx.error("sandwich problem needs 'constraints' and 'set'", path)
    cons = []
    for i, c in enumerate(obj["constraints"]):
        p = path + ("constraints", i)
        if not isinstance(c, dict):
            raise ctx.error("constraint must be an object", p)
        lower = _ring(ctx, c.get("lower"), p + ("lower",))
        upper = _ring(ctx, c.get("upper"), p + ("upper",))
        weight = _ring(ctx, c["weight"], p + ("weight",)) if "weight" in c else RingElement.const(1)
        where = _param_set(ctx, c["where"], p + ("where",)) if "where" in c else None
        cons.append(Constraint(lower, weight, upper, where))
    S = _param_set(ctx, obj["set"], path + ("set",))
    md = _int(ctx, obj["max_degree"], path + ("max_degree",)) if "max_degree" in obj else default_max_degree()
    mi = (
        _int(ctx, obj["max_iterations"], path + ("max_iterations",))
        if "max_iterations" in obj
        else DEFAULT_MAX_ITERATIONS
    )
    return SandwichProblem(cons, S, md, mi)


# ---- AtomicMeasure -------------------------------------------------------

def measure_to_obj(m: AtomicMeasure) -> dict:
    return {"atoms": [[rational_str(t), rational_str(w)] for t, w in m.atoms]}


def _measure(ctx: _Ctx, obj: Any, path: tuple) -> AtomicMeasure:
    if not isinstance(obj, dict) or not isinstance(obj.get("atoms"), list):
        raise ctx.error("measure must be an object with an 'atoms' list", path)
    atoms = []
    for i, a in enumerate(obj["atoms"]):
        if not isinstance(a, list) or len(a) != 2:
            raise ctx.error("atom must be a pair [t, weight]", path + ("atoms", i))
        atoms.append((_rational(ctx, a[0], path + ("atoms", i, 0)), _rational(ctx, a[1], path + ("atoms", i, 1))))
    try:
        return AtomicMeasure(tuple(atoms))
    except (DglabError, ValueError) as exc:
        raise ctx.error(str(exc), path) from exc


# ---- outputs -------------------------------------------------------------

def certificate_to_obj(c: PositivityCertificate) -> dict:
    out: dict[str, Any] = {"verdict": c.verdict.value}
    if c.witness is not None:
        out["witness"] = {"t": rational_str(c.witness), "value": rational_str(c.witness_value)}
    if c.witness_interval is not None:
        out["witness_interval"] = [rational_str(v) for v in c.witness_interval]
    out["trace"] = [
        {
            "lo": rational_str(e.lo),
            "hi": rational_str(e.hi),
            "root_count": e.root_count,
            "signs": [e.lo_sign, e.hi_sign],
        }
        for e in c.method_trace
    ]
    return out


def spectrum_to_obj(sp: BetaSpectrum) -> dict:
    comps = []
    for c in sp.components:
        comps.append(
            {
                "beta": [c.lo, c.hi],
                "t_source": None if c.t_source is None else [rational_str(v) for v in c.t_source],
            }
        )
    return {"components": comps}


def parse_inline_items(text: str, beta: bool = False) -> list:
    """Items of an inline set: separated by ';', each 'x' or '[lo,hi]'.

    Fractions in t-space ('1/3', '0.25' are both exact), floats in beta-space.
    """
    items = []
    for i, raw in enumerate(p.strip() for p in text.split(";")):
        if not raw:
            continue
        try:
            if raw.startswith("["):
                if not raw.endswith("]") or raw.count(",") != 1:
                    raise ValueError("expected [lo,hi]")
                lo, hi = (v.strip() for v in raw[1:-1].split(","))
                items.append((float(lo), float(hi)) if beta else (Fraction(lo), Fraction(hi)))
            else:
                items.append(float(raw) if beta else Fraction(raw))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad set item {raw!r}: {exc}", path=f"item {i}") from exc
    return items


def parse_inline_set(text: str, beta: bool = False, precision: int = 30) -> ParamSet:
    """Inline set; beta-space items are mapped to t at the given precision."""
    items = parse_inline_items(text, beta)
    if beta:
        return from_beta(items, precision)
    pts = [x for x in items if not isinstance(x, tuple)]
    ivs = [x for x in items if isinstance(x, tuple)]
    try:
        return normalize(pts, ivs)
    except DglabError as exc:
        raise ParseError(str(exc)) from exc


_PARSERS: dict[str, Callable] = {
    "ring": _ring,
    "set": _param_set,
    "spec": _spec,
    "group": _group,
    "sandwich": _sandwich,
    "measure": _measure,
}


def loads(text: str, kind: str, strict: bool = False):
    """Parse JSON text into the value of the given kind ('ring', 'set', 'spec', ...)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, len(text[: exc.pos].encode("utf-8"))) from exc
    return from_obj(obj, kind, strict, text)


def from_obj(obj: Any, kind: str, strict: bool = False, text: str | None = None):
    return _PARSERS[kind](_Ctx(text, strict), obj, ())


_EMITTERS: dict[type, Callable] = {
    RingElement: ring_to_obj,
    ParamSet: param_set_to_obj,
    KmsSpec: spec_to_obj,
    GroupElement: group_to_obj,
    SandwichProblem: sandwich_to_obj,
    AtomicMeasure: measure_to_obj,
    PositivityCertificate: certificate_to_obj,
    BetaSpectrum: spectrum_to_obj,
}


def to_obj(value) -> Any:
    return _EMITTERS[type(value)](value)


def dumps(value, indent: int | None = None) -> str:
    """Canonical JSON text (compact unless indent is given)."""
    obj = to_obj(value)
    if indent is None:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=indent)
