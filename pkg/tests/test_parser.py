import pytest
from hypothesis import given, strategies as st

from riordanpaths import OrderExceeded, ParseError, Series, ps_parse
from riordanpaths.parser import compile_expression


@pytest.mark.parametrize("text,want", [
    ("1+x", [1, 1, 0, 0]),
    ("-x+1", [1, -1, 0, 0]),
    ("(1+x)^3", [1, 3, 3, 1]),
    ("1/(1-2*x)", [1, 2, 4, 8]),
    ("x^2/x", [0, 1, 0, 0]),
    ("sqrt(1+2*x+x^2)", [1, 1, 0, 0]),
    ("2*3-4", [2, 0, 0, 0]),
])
def test_small_expressions(text, want):
    assert ps_parse(text, 4).to_ints() == want


def test_division_by_x_keeps_requested_order():
    s = ps_parse("(1-sqrt(1-4*x))/(2*x)", 9)
    assert s.order == 9
    assert s.to_ints() == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_symbols_and_composition():
    c = ps_parse("(1-sqrt(1-4*x))/(2*x)", 8)
    assert ps_parse("c", 8, {"c": c}) == c
    # c(x^2) aerates
    assert ps_parse("c(x^2)", 8, {"c": c}).to_ints() == [1, 0, 1, 0, 2, 0, 5, 0]
    assert compile_expression("c(x) + d*x").symbols() == {"c", "d"}


@pytest.mark.parametrize("text", ["", "1+", "2x", "x^-1", "sqrt x", "(1+x", "1 $ 2", "x^y"])
def test_malformed(text):
    with pytest.raises(ParseError):
        ps_parse(text, 4)


def test_undefined_symbol():
    with pytest.raises(ParseError, match="undefined"):
        ps_parse("1+c", 4)


def test_hopeless_negative_order():
    with pytest.raises((OrderExceeded, ValueError)):
        ps_parse("1/x", 4)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_polynomial_text_roundtrip(cs):
    text = "+".join(f"({c})*x^{i}" for i, c in enumerate(cs))
    assert ps_parse(text, len(cs)) == Series(cs, len(cs))
