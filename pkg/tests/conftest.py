import sys
from fractions import Fraction

from hypothesis import settings, strategies as st

from riordanpaths import RArray, Series

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ORDER = 10

small_int = st.integers(min_value=-4, max_value=4)
nonzero_int = small_int.filter(lambda v: v != 0)
unit = st.sampled_from([1, -1])


def series_st(order=ORDER, const=None):
    """Integer series of the given order; ``const`` pins the constant term."""
    tail = st.lists(small_int, min_size=order - 1, max_size=order - 1)
    head = small_int if const is None else const
    return st.builds(lambda c, t: Series([c] + t, order), head, tail)


@st.composite
def riordan_st(draw, order=ORDER, unit_diag=True):
    """Random integer Riordan array; unit diagonal keeps inverses integral."""
    g0 = draw(unit) if unit_diag else draw(nonzero_int)
    f1 = draw(unit) if unit_diag else draw(nonzero_int)
    g = [g0] + draw(st.lists(small_int, min_size=order - 1, max_size=order - 1))
    f = [0, f1] + draw(st.lists(small_int, min_size=order - 2, max_size=order - 2))
    return RArray(Series(g, order), Series(f, order))


def fr(*vals):
    return [Fraction(v) for v in vals]


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(acc.LINES):
        terminalreporter.write_line(acc.LINES[crit])
