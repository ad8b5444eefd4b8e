import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from dglab.group import GroupElement
from dglab.ring import RingElement

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def ring_elements(draw, max_deg=4, height=12, max_pow=3):
    num = draw(st.lists(st.integers(-height, height), min_size=0, max_size=max_deg + 1))
    return RingElement(num, draw(st.integers(0, max_pow)), draw(st.integers(0, max_pow)))


@st.composite
def unit_rationals(draw, max_den=200):
    q = draw(st.integers(2, max_den))
    p = draw(st.integers(1, q - 1))
    return Fraction(p, q)


@st.composite
def group_elements(draw, width=4, **kw):
    lo = draw(st.integers(-3, 3))
    entries = draw(st.lists(ring_elements(**kw), min_size=width, max_size=width))
    return GroupElement({lo + i: e for i, e in enumerate(entries)})


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
