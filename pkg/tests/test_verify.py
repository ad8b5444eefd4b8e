import random

import pytest

from dglab import generators as gen
from dglab.group import in_G_plus
from dglab.param_sets import HALF, member
from dglab.verify import BASE_COUNTS, SUITES, run_instance, run_verify


def test_every_suite_is_counted():
    assert set(SUITES) == set(BASE_COUNTS)


def test_report_is_reproducible_and_scaled():
    a = run_verify(7, "small", ["cokernel", "traces"])
    b = run_verify(7, "small", ["cokernel", "traces"])
    assert a.ok and a.to_json(timing=False) == b.to_json(timing=False)
    assert [s.instances for s in a.suites] == [BASE_COUNTS["cokernel"], BASE_COUNTS["traces"]]
    assert "wall time" in a.to_text() and "wall time" not in a.to_text(timing=False)


def test_unknown_scale():
    with pytest.raises(ValueError):
        run_verify(1, "huge", ["traces"])


def test_single_instance_replay():
    assert run_instance(42, "riesz", 0) == run_instance(42, "riesz", 0)


def test_replay_specs_cover_required_shapes():
    specs = gen.REPLAY_SPECS
    assert len(specs) >= 5
    half = specs["half_only"]
    assert half.F.points == (HALF,) and half.F1.points == (HALF,)
    assert len(specs["disjoint_intervals"].F.intervals) == 1


def test_random_positive_is_positive():
    rng = random.Random(3)
    for spec in gen.REPLAY_SPECS.values():
        assert in_G_plus(gen.random_positive(rng, spec), spec)


def test_half_pairs_hit_both_branches():
    rng = random.Random(0)
    flags = set()
    for _ in range(200):
        F, F1 = gen.random_half_spec_pair(rng)
        flags.add(member(F, HALF) == member(F1, HALF))
    assert flags == {True, False}
