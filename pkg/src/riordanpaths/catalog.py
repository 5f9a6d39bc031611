"""Named generating functions and arrays that recur throughout the library."""
from __future__ import annotations

from .parser import ps_parse
from .riordan import AlmostR, RArray
from .series import DEFAULT_ORDER, Series, ps_solve_fixpoint


def catalan(order: int = DEFAULT_ORDER) -> Series:
    """c(x) = (1 - sqrt(1 - 4x)) / (2x)."""
    return ps_parse("(1-sqrt(1-4*x))/(2*x)", order)


def motzkin(order: int = DEFAULT_ORDER) -> Series:
    return ps_parse("(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)", order)


def schroeder(order: int = DEFAULT_ORDER) -> Series:
    """Large Schroeder numbers 1, 2, 6, 22, 90, ..."""
    return ps_parse("(1-x-sqrt(1-6*x+x^2))/(2*x)", order)


def ternary(order: int = DEFAULT_ORDER) -> Series:
    """t = 1 + x t^3: 1, 1, 3, 12, 55, ..."""
    return ps_solve_fixpoint("1+x*u^3", order)


def g_rs(r: int, s: int, order: int = DEFAULT_ORDER) -> Series:
    """(1 - r x - sqrt(1 - 2(r+2s)x + r^2 x^2)) / (2 s x); s must be nonzero."""
    if s == 0:
        raise ValueError("s must be nonzero")
    return ps_parse(f"(1-({r})*x-sqrt(1-2*({r + 2 * s})*x+{r * r}*x^2))/(2*({s})*x)", order)


def at_x_squared(a: Series) -> Series:
    """a(x^2), keeping the order of ``a``."""
    return a.compose(Series.monomial(1, 2, a.order))


def pascal(order: int = DEFAULT_ORDER) -> RArray:
    return RArray.parse("1/(1-x)", "x/(1-x)", order)


def pascal_like(r: int, order: int = DEFAULT_ORDER) -> RArray:
    """(1/(1-x), x(1+rx)/(1-x)); r = 1 is the Delannoy triangle."""
    return RArray.parse("1/(1-x)", f"x*(1+({r})*x)/(1-x)", order)


def delannoy(order: int = DEFAULT_ORDER) -> RArray:
    return pascal_like(1, order)


def fibonacci_steps(order: int = DEFAULT_ORDER) -> RArray:
    """(1/(1-x-x^2), x(1+x)/(1-x-x^2)): steps {(1,0),(2,0),(1,1),(2,1)}."""
    return RArray.parse("1/(1-x-x^2)", "x*(1+x)/(1-x-x^2)", order)


def catalan_matrix(order: int = DEFAULT_ORDER) -> RArray:
    return RArray.bell(catalan(order))


def motzkin_matrix(order: int = DEFAULT_ORDER) -> RArray:
    return RArray.bell(motzkin(order))


def schroeder_matrix(order: int = DEFAULT_ORDER) -> RArray:
    return RArray.bell(schroeder(order))


def ternary_matrix(order: int = DEFAULT_ORDER) -> RArray:
    return RArray.bell(ternary(order))


def dyck_matrix(order: int = DEFAULT_ORDER) -> RArray:
    """(c(x^2), x c(x^2)): Dyck paths to (n, k)."""
    return RArray.bell(at_x_squared(catalan(order)))


def motzkin_tilde(order: int = DEFAULT_ORDER) -> RArray:
    """((1+x)/(1+3x+x^2), x/(1+3x+x^2))^{-1}: Motzkin paths with 3-coloured level steps off the ground."""
    return RArray.parse("(1+x)/(1+3*x+x^2)", "x/(1+3*x+x^2)", order).inverse()


def g_tilde_matrix(order: int = DEFAULT_ORDER) -> RArray:
    """(g/(1-x), x g) with g = (1 - x - sqrt(1 - 6x + 5x^2))/(2x)."""
    g = ps_parse("(1-x-sqrt(1-6*x+5*x^2))/(2*x)", order)
    return RArray(g / (1 - Series.x(order)), g.shift(1).truncate(order))


def central_delannoy_array(order: int = DEFAULT_ORDER) -> RArray:
    """(1/sqrt(1-6x+x^2), (1-x-sqrt(1-6x+x^2))/2): reverse-symmetrizes to the Delannoy square."""
    return RArray.parse("1/sqrt(1-6*x+x^2)", "(1-x-sqrt(1-6*x+x^2))/2", order)


def extended_square_array(order: int = DEFAULT_ORDER) -> RArray:
    d = "sqrt(1-6*x-x^2+2*x^3+x^4)"
    return RArray.parse(f"1/{d}", f"(1-x-x^2-{d})/2", order)


def almost_examples(order: int = DEFAULT_ORDER) -> list[AlmostR]:
    """The three almost Riordan arrays of the level-dependent step examples."""
    q = "sqrt(1-6*x^2+x^4)"
    return [
        AlmostR.parse("1/(1-x)", "(1+x)/(1-x)^2", "x/(1-x)", order),
        AlmostR.parse("1/(1-x^2)", "(1+x)/(1-x^2)^2", "x*(1+x)/(1-x)", order),
        AlmostR.parse(f"1-x*(1-2*x-x^2-{q})/(2*(1-2*x-x^2))",
                      f"-(1-2*x-x^2-{q})/(2*x*(1-2*x-x^2))",
                      f"(1-x^2-{q})/(2*x)", order),
    ]
