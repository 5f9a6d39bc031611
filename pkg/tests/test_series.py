from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from riordanpaths import (NotASquare, NotReversible, OrderExceeded, Series, ZeroConstantTerm,
                          ps_arith, ps_compose, ps_equal, ps_reciprocal, ps_revert, ps_solve_fixpoint, ps_sqrt)
from riordanpaths.catalog import catalan, g_rs, motzkin, schroeder, ternary

from conftest import ORDER, nonzero_int, series_st, unit

X = sympy.Symbol("x")


def sym_terms(expr, n):
    """Taylor coefficients from sympy, used as an independent oracle."""
    poly = sympy.series(expr, X, 0, n).removeO()
    return [Fraction(str(poly.coeff(X, i))) for i in range(n)]


def test_basic_constructors():
    assert Series.one(4).coeffs == (1, 0, 0, 0)
    assert Series.x(3).coeffs == (0, 1, 0)
    assert Series.monomial(5, 2, 4).coeffs == (0, 0, 5, 0)
    assert Series.x(1).coeffs == (0,)
    assert Series([1, 2, 3]).order == 3


def test_shift_and_truncate():
    s = Series([1, 2, 3, 4])
    assert s.shift(1).coeffs == (0, 1, 2, 3, 4)
    assert s.shift(1).order == 5
    assert s.truncate(2).coeffs == (1, 2)
    assert Series([0, 0, 3, 4]).shift(-2).coeffs == (3, 4)
    with pytest.raises(ValueError):
        s.shift(-1)


def test_order_is_min_of_operands():
    a = Series([1, 1, 1, 1, 1])
    b = Series([1, 2, 3])
    assert (a + b).order == 3
    assert (a * b).order == 3


def test_fibonacci_reciprocal():
    s = ps_reciprocal(Series([1, -1, -1], 12))
    assert s.to_ints() == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]


def test_reciprocal_needs_unit():
    with pytest.raises(ZeroConstantTerm):
        Series([0, 1, 2]).reciprocal()


def test_rational_coefficients_survive():
    s = Series([2, 1], 5).reciprocal()
    assert s.coeffs == (Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8), Fraction(-1, 16), Fraction(1, 32))
    assert not s.is_integral()


@pytest.mark.parametrize("expr,build", [
    ("catalan", lambda n: catalan(n)),
    ("motzkin", lambda n: motzkin(n)),
    ("schroeder", lambda n: schroeder(n)),
])
def test_named_series_against_sympy(expr, build):
    n = 14
    oracle = {
        "catalan": (1 - sympy.sqrt(1 - 4 * X)) / (2 * X),
        "motzkin": (1 - X - sympy.sqrt(1 - 2 * X - 3 * X ** 2)) / (2 * X ** 2),
        "schroeder": (1 - X - sympy.sqrt(1 - 6 * X + X ** 2)) / (2 * X),
    }[expr]
    assert list(build(n).coeffs) == sym_terms(oracle, n)


def test_g_rs_matches_sympy():
    for r, s in [(1, 1), (2, 1), (0, 2), (3, -1)]:
        expr = (1 - r * X - sympy.sqrt(1 - 2 * (r + 2 * s) * X + r ** 2 * X ** 2)) / (2 * s * X)
        assert list(g_rs(r, s, 10).coeffs) == sym_terms(expr, 10)


def test_ternary_numbers():
    assert ternary(8).to_ints() == [1, 1, 3, 12, 55, 273, 1428, 7752]


def test_revert_of_catalan_kernel():
    # x c(x) is the inverse of x - x^2
    r = ps_revert(Series([0, 1, -1], 10))
    assert r.to_ints() == [0, 1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_revert_errors():
    with pytest.raises(NotReversible):
        ps_revert(Series([1, 1, 0]))
    with pytest.raises(NotReversible):
        ps_revert(Series([0, 0, 1]))


def test_sqrt_errors_and_rational_root():
    with pytest.raises(NotASquare):
        ps_sqrt(Series([2, 1, 0]))
    with pytest.raises(NotASquare):
        ps_sqrt(Series([0, 1, 0]))
    r = ps_sqrt(Series([4, 1, 0, 0]))
    assert r.coeff(0) == 2 and r.coeff(1) == Fraction(1, 4)


def test_sqrt_of_even_valuation():
    s = Series([0, 0, 1, 2, 1], 5)
    r = ps_sqrt(s)
    assert (r * r).truncate(r.order) == s.truncate(r.order)


def test_fixpoint_string_and_callable_agree():
    a = ps_solve_fixpoint("1+x*u^2", 12)
    b = ps_solve_fixpoint(lambda u: 1 + Series.x(12) * u * u, 12)
    assert a == b == catalan(12)


def test_ps_equal_respects_order():
    a, b = Series([1, 2, 3]), Series([1, 2, 4])
    assert ps_equal(a, b, 2)
    assert not ps_equal(a, b, 3)
    with pytest.raises(OrderExceeded):
        ps_equal(a, b, 4)


def test_ps_arith_dispatch():
    a, b = Series([1, 1], 3), Series([1, -1], 3)
    assert ps_arith("add", a, b).coeffs == (2, 0, 0)
    assert ps_arith("sub", a, b).coeffs == (0, 2, 0)
    assert ps_arith("mul", a, b).coeffs == (1, 0, -1)
    with pytest.raises(ValueError):
        ps_arith("pow", a, b)


# ring laws and inverses


@given(series_st(), series_st(), series_st())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == Series.zero(ORDER)


@given(series_st(const=nonzero_int))
def test_reciprocal_roundtrip(a):
    assert a * a.reciprocal() == Series.one(ORDER)


@given(series_st(const=st.just(0)).filter(lambda s: s.coeff(1) != 0))
def test_revert_roundtrip(f):
    r = ps_revert(f)
    x = Series.x(ORDER)
    assert ps_compose(f, r) == x
    assert ps_compose(r, f) == x


@given(series_st(const=unit.map(lambda v: 1)))
def test_sqrt_squares_back(a):
    r = ps_sqrt(a)
    assert r * r == a


@given(series_st(), series_st(const=st.just(0)), series_st(const=st.just(0)))
def test_composition_associates(a, f, h):
    assert ps_compose(ps_compose(a, f), h) == ps_compose(a, ps_compose(f, h))


@given(st.integers(0, 3), st.integers(1, 3))
def test_fixpoint_residual_vanishes(r, s):
    order = 10
    u = ps_solve_fixpoint(f"1+{r}*x*u+{s}*x*u^2", order)
    x = Series.x(order)
    assert u - (1 + r * x * u + s * x * u * u) == Series.zero(order)
