from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from riordanpaths import (AlmostR, Beta0Zero, F2Zero, IntMatrix, InvalidArray, OrderExceeded, RArray, Series,
                          binomial_matrix, mat_binomial_conjugate, named_matrix, ra_apply, ra_element, ra_inverse,
                          ra_matrix, ra_multiply, ra_rectify, ra_reverse, ra_stretch, ra_sums, ra_triangulate,
                          reverse_symmetrize, step_to_riordan)
from riordanpaths import catalog as cat
from riordanpaths.goldens import MATRICES

from conftest import ORDER, riordan_st, series_st

N = 7


def test_pascal_entries_are_binomials():
    P = cat.pascal(12)
    assert ra_matrix(P, 10) == IntMatrix.from_function(10, 10, comb, "lower")
    assert ra_element(P, 9, 4) == 126
    assert ra_element(P, 3, 5) == 0


def test_invalid_pairs():
    with pytest.raises(InvalidArray):
        RArray(Series([0, 1], 4), Series.x(4))
    with pytest.raises(InvalidArray):
        RArray(Series.one(4), Series([0, 0, 1], 4))
    with pytest.raises(InvalidArray):
        RArray(Series.one(4), Series([1, 1], 4))
    with pytest.raises(InvalidArray):
        AlmostR(Series([0, 1], 4), Series.one(4), Series.x(4))


def test_order_is_enforced():
    P = cat.pascal(5)
    with pytest.raises(OrderExceeded):
        ra_element(P, 5, 0)
    with pytest.raises(OrderExceeded):
        ra_matrix(P, 6)
    with pytest.raises(OrderExceeded):
        ra_rectify(P, 4)


def test_pascal_inverse_is_signed():
    inv = ra_matrix(cat.pascal(10).inverse(), 8)
    assert inv == binomial_matrix(8, -1)


def test_sums():
    P = cat.pascal(12)
    assert ra_sums(P, "row", 8) == [2 ** n for n in range(8)]
    assert ra_sums(P, "diagonal", 8) == [1, 1, 2, 3, 5, 8, 13, 21]
    with pytest.raises(ValueError):
        ra_sums(P, "column", 4)


@pytest.mark.parametrize("name,build", [
    ("pascal", lambda: ra_matrix(cat.pascal(N), N)),
    ("delannoy_triangle", lambda: ra_matrix(cat.delannoy(N), N)),
    ("pascal_rectified", lambda: ra_rectify(cat.pascal(2 * N), N)),
    ("pascal_stretched", lambda: ra_stretch(cat.pascal(N)).matrix(N)),
    ("fibonacci_steps_reversal", lambda: ra_reverse(cat.fibonacci_steps(N), N)),
    ("delannoy_square", lambda: ra_rectify(cat.delannoy(2 * N), N)),
    ("delannoy_square", lambda: reverse_symmetrize(cat.central_delannoy_array(N), N)),
    ("catalan_triangulated", lambda: ra_matrix(ra_triangulate(cat.catalan_matrix(N + 1)), N)),
    ("catalan_triangulated_twice",
     lambda: ra_matrix(ra_triangulate(ra_triangulate(cat.catalan_matrix(N + 2))), N)),
    ("dyck", lambda: ra_matrix(cat.dyck_matrix(N), N)),
    ("motzkin_tilde", lambda: ra_matrix(cat.motzkin_tilde(N), N)),
    ("A060693", lambda: named_matrix("A060693", N)),
    ("ternary_T", lambda: named_matrix("ternary-T", N)),
    ("almost_1", lambda: cat.almost_examples(N)[0].matrix(N)),
    ("almost_3", lambda: cat.almost_examples(N)[2].matrix(N)),
])
def test_golden_matrices(name, build):
    assert build() == MATRICES[name]


def test_triangulation_needs_f2():
    with pytest.raises(F2Zero):
        ra_triangulate(RArray(Series.one(6), Series.x(6)))


def test_step_to_riordan():
    # level steps (1,0),(2,0); up steps (1,1),(2,1)
    R = step_to_riordan([1, 1], [1, 1], 10)
    assert ra_matrix(R, N) == MATRICES["fibonacci_steps"]
    with pytest.raises(Beta0Zero):
        step_to_riordan([1], [0, 1])


def test_named_matrix_errors():
    with pytest.raises(ValueError):
        named_matrix("nope", 3)
    with pytest.raises(ValueError):
        named_matrix("A060693", 0)


def test_binomial_conjugate_directions():
    M = MATRICES["catalan"]
    there = mat_binomial_conjugate(M, 1, "forward")
    assert mat_binomial_conjugate(there, 1, "inverse") == M
    with pytest.raises(ValueError):
        mat_binomial_conjugate(M, 1, "sideways")


def test_ternary_narayana_without_transpose():
    got = mat_binomial_conjugate(MATRICES["ternary_T"], 1, "inverse", transpose=False)
    assert got == MATRICES["ternary_narayana"]


def test_inverse_against_sympy():
    R = cat.fibonacci_steps(8)
    M = sympy.Matrix(ra_matrix(R, 8).tolist())
    assert ra_matrix(ra_inverse(R), 8).tolist() == M.inv().tolist()


# group structure


@given(riordan_st(), riordan_st(), riordan_st())
def test_product_associates(a, b, c):
    assert ra_matrix((a * b) * c, ORDER) == ra_matrix(a * (b * c), ORDER)


@given(riordan_st(), riordan_st())
def test_matrix_is_a_homomorphism(a, b):
    assert ra_matrix(ra_multiply(a, b), ORDER) == ra_matrix(a, ORDER) @ ra_matrix(b, ORDER)


@given(riordan_st())
def test_inverse_both_sides(a):
    ident = IntMatrix.identity(ORDER)
    assert ra_matrix(a * a.inverse(), ORDER) == ident
    assert ra_matrix(a.inverse() * a, ORDER) == ident


@given(riordan_st(), series_st())
def test_ftra(R, a):
    M = ra_matrix(R, ORDER)
    col = [sum(M[n, k] * a.coeff(k) for k in range(ORDER)) for n in range(ORDER)]
    assert list(ra_apply(R, a).coeffs) == col


@given(riordan_st(), riordan_st(), series_st())
def test_action_composes(a, b, s):
    assert (a * b)(s) == a(b(s))


@given(riordan_st(order=2 * N))
def test_rectify_then_reverse(R):
    # row n of the rectified square is the n-th diagonal of the triangle
    rect = ra_rectify(R, N)
    tri = ra_matrix(R, 2 * N - 1)
    assert all(rect[n, k] == tri[n + k, k] for n in range(N) for k in range(N))
    rev = ra_reverse(R, N)
    assert all(rev[n, k] == tri[n, n - k] for n in range(N) for k in range(n + 1))


@given(riordan_st())
def test_stretch_row_sums_are_diagonal_sums(R):
    assert ra_stretch(R).matrix(ORDER).row_sums() == ra_sums(R, "diagonal", ORDER)


@given(riordan_st(order=2 * N).filter(lambda R: R.f.coeff(2) != 0))
def test_triangulation_recovers_rectified(R):
    f1 = int(R.f.coeff(1))
    tri = ra_matrix(ra_triangulate(R), N)
    assert mat_binomial_conjugate(tri, f1, "forward") == ra_rectify(R, N)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_rectified_pascal_like_is_symmetric(r):
    assert ra_rectify(cat.pascal_like(r, 2 * N), N).is_symmetric()


@given(series_st(const=st.just(1)), series_st(const=st.just(1)))
def test_bell_arrays_are_closed(g1, g2):
    prod = RArray.bell(g1) * RArray.bell(g2)
    assert prod.is_bell()


@given(riordan_st())
def test_reverse_symmetrize_is_symmetric(R):
    assert reverse_symmetrize(R, ORDER).is_symmetric()
