import json
import warnings
from fractions import Fraction as Q

import pytest
from hypothesis import given

from dglab.errors import HalfPointViolation, ParseError
from dglab.param_sets import HALF, interval, normalize, points, validate_spec
from dglab.ring import RingElement
from dglab.sandwich import Constraint, SandwichProblem
from dglab.serialize import dumps, loads, parse_inline_set, rational_str, to_obj
from dglab.traces import AtomicMeasure

from conftest import group_elements, ring_elements


def test_ring_round_trip_is_exact():
    text = '{"num":["-1","2"],"t_pow":"1","omt_pow":"1"}'
    x = loads(text, "ring")
    assert x == RingElement((-1, 2), 1, 1)
    assert dumps(x) == text


def test_negative_exponent_points_at_the_field():
    text = '{"num": ["1"], "t_pow": "-1", "omt_pow": "0"}'
    with pytest.raises(ParseError) as err:
        loads(text, "ring")
    assert err.value.path == "$.t_pow"
    assert text[err.value.offset:].startswith('"-1"')


def test_non_reduced_rational_warns_in_strict_mode():
    text = '{"points": ["2/4"], "intervals": []}'
    with pytest.warns(UserWarning, match="1/2"):
        S = loads(text, "set", strict=True)
    assert S.points == (HALF,)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert loads(text, "set") == S


def test_malformed_json_reports_offset():
    with pytest.raises(ParseError) as err:
        loads('{"num": [1,', "ring")
    assert err.value.offset is not None


def test_spec_validation_runs_on_load():
    text = json.dumps({"F": {"points": ["1/3"]}, "F1": {"points": ["1/2"]}})
    with pytest.raises(HalfPointViolation):
        loads(text, "spec")


def test_inline_sets():
    assert parse_inline_set("1/3; [2/5, 3/5]") == normalize([Q(1, 3)], [(Q(2, 5), Q(3, 5))])
    S = parse_inline_set("0", beta=True)
    assert S == points(HALF)
    with pytest.raises(ParseError):
        parse_inline_set("[1/4, 1/3")


@pytest.mark.parametrize(
    "value, kind",
    [
        (interval(Q(1, 4), Q(3, 4)), "set"),
        (validate_spec(points(HALF), points(HALF, Q(1, 7))), "spec"),
        (AtomicMeasure(((Q(1, 3), Q(5, 2)),)), "measure"),
        (
            SandwichProblem(
                [Constraint.between(0, 2), Constraint.between(-1, 1, where=points(Q(1, 3)))],
                interval(Q(1, 5), Q(1, 3)),
                12,
            ),
            "sandwich",
        ),
    ],
)
def test_round_trips(value, kind):
    assert loads(dumps(value), kind) == value
    assert loads(dumps(value, indent=2), kind) == value


def test_rational_str():
    assert rational_str(Q(-6, 4)) == "-3/2"
    assert rational_str(Q(3)) == "3/1"


@given(ring_elements())
def test_ring_round_trip_property(x):
    assert loads(dumps(x), "ring") == x


@given(group_elements())
def test_group_round_trip_property(x):
    assert loads(dumps(x), "group") == x
    assert set(to_obj(x)["entries"]) == {str(n) for n in x.support()}
