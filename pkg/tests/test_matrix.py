from fractions import Fraction
import json

import pytest
from hypothesis import given, strategies as st

from riordanpaths import DimensionMismatch, IntMatrix, NonIntegralEntry, binomial_matrix, matrix_from_json, render

ints = st.integers(-50, 50)


def square(n):
    return st.lists(st.lists(ints, min_size=n, max_size=n), min_size=n, max_size=n).map(IntMatrix)


def test_parse_accepts_latex_rows():
    m = IntMatrix.parse(r"""
        1 & 0 \\
        2 & 3 \\""")
    assert m.tolist() == [[1, 0], [2, 3]]
    assert m.shape == "square"


def test_shape_tags():
    assert IntMatrix([[1, 0], [1, 1]], "lower").shape == "lower"
    with pytest.raises(ValueError):
        IntMatrix([[1, 1], [1, 1]], "lower")
    with pytest.raises(ValueError):
        IntMatrix([[1]], "banana")
    assert IntMatrix([[1, 2, 3]]).shape == "general"


def test_entry_types():
    assert IntMatrix([[Fraction(4, 2)]])[0, 0] == 2
    with pytest.raises(NonIntegralEntry):
        IntMatrix([[Fraction(1, 2)]])
    with pytest.raises(TypeError):
        IntMatrix([[True]])
    with pytest.raises(DimensionMismatch):
        IntMatrix([[1, 2], [3]])


def test_binomial_inverse():
    for a in (1, 2, -3):
        assert binomial_matrix(6, a) @ binomial_matrix(6, -a) == IntMatrix.identity(6)


def test_sums_and_reversal():
    m = binomial_matrix(5)
    assert m.row_sums() == [1, 2, 4, 8, 16]
    assert m.diagonal_sums() == [1, 1, 2, 3, 5]
    assert m.reversal() == m
    with pytest.raises(ValueError):
        IntMatrix([[1, 1], [0, 1]]).reversal()


def test_leading_block_keeps_lower_tag():
    m = binomial_matrix(5)
    assert m.leading(3).shape == "lower"
    assert m.leading(3, 2).shape == "general"
    with pytest.raises(DimensionMismatch):
        m.leading(6)


def test_render_formats():
    m = IntMatrix([[1, 0], [-12, 3]])
    assert render(m) == "  1   0\n-12   3"
    assert render(m, "csv") == "1,0\n-12,3"
    assert json.loads(render(m, "json")) == [["1", "0"], ["-12", "3"]]
    assert render([1, 2, 3]) == "1, 2, 3"
    with pytest.raises(ValueError):
        render(m, "xml")


def test_json_keeps_big_integers():
    big = 10 ** 40 + 7
    m = IntMatrix([[big]])
    assert matrix_from_json(render(m, "json")) == m


@given(square(4), square(4), square(4))
def test_matmul_associates(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@given(square(3), square(3))
def test_transpose_reverses_products(a, b):
    assert (a @ b).transpose() == b.transpose() @ a.transpose()
    assert a.transpose().transpose() == a
