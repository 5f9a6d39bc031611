"""Riordan arrays, almost Riordan arrays, and their structural transformations.

A Riordan array ``(g, f)`` is realized as the lower-triangular matrix with
entries ``[x^n] g(x) f(x)^k``.  Matrices are only ever built from exact
series; an entry that comes out non-integral is an error, never rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .errors import Beta0Zero, F2Zero, InvalidArray, NonIntegralEntry, OrderExceeded
from .matrix import IntMatrix
from .parser import ps_parse
from .series import DEFAULT_ORDER, Series


def _int_entry(v: Fraction, n: int, k: int) -> int:
    if v.denominator != 1:
        raise NonIntegralEntry(f"entry ({n},{k}) is {v}")
    return v.numerator


def pair_columns(g: Series, f: Series, ncols: int) -> list[Series]:
    """[g, g*f, g*f^2, ...]: the column generating functions of the pair."""
    cols = []
    col = g
    for _ in range(ncols):
        cols.append(col)
        col = col * f
    return cols


def pair_matrix(g: Series, f: Series, n: int, ncols: int | None = None, shape: str | None = "lower") -> IntMatrix:
    """Matrix of [x^i] g f^k for any pair, Riordan or not."""
    ncols = n if ncols is None else ncols
    order = min(g.order, f.order)
    if n > order:
        raise OrderExceeded(f"{n} rows need series known to order {n}, have {order}")
    cols = pair_columns(g.truncate(order), f.truncate(order), ncols)
    rows = [[_int_entry(cols[k].coeffs[i], i, k) for k in range(ncols)] for i in range(n)]
    if shape == "lower" and ncols != n:
        shape = None
    return IntMatrix(rows, shape)


@dataclass(frozen=True)
class RArray:
    """The Riordan array (g, f) with g(0) != 0, f(0) = 0 and f'(0) != 0."""

    g: Series
    f: Series

    def __post_init__(self):
        if self.g.order == 0 or self.g.coeffs[0] == 0:
            raise InvalidArray("g(0) must be nonzero")
        if self.f.order < 2 or self.f.coeffs[0] != 0 or self.f.coeffs[1] == 0:
            raise InvalidArray("f must satisfy f(0) = 0 and f'(0) != 0")

    @classmethod
    def parse(cls, g: str, f: str, order: int = DEFAULT_ORDER,
              symbols: Mapping[str, Series] | None = None) -> "RArray":
        return cls(ps_parse(g, order, symbols), ps_parse(f, order, symbols))

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "RArray":
        return cls(Series.one(order), Series.x(order))

    @classmethod
    def bell(cls, g: Series) -> "RArray":
        """The Bell matrix (g, x g)."""
        return cls(g, g.shift(1).truncate(g.order))

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def is_bell(self) -> bool:
        n = self.order
        return self.f.truncate(n) == self.g.shift(1).truncate(n)

    def matrix(self, n: int) -> IntMatrix:
        return ra_matrix(self, n)

    def inverse(self) -> "RArray":
        return ra_inverse(self)

    def __mul__(self, other: "RArray") -> "RArray":
        return ra_multiply(self, other)

    def __call__(self, a: Series) -> Series:
        return ra_apply(self, a)


@dataclass(frozen=True)
class GFPair:
    """A (g, f) pair that need not satisfy the Riordan conditions.

    Used for stretched arrays (g, x f), whose f has f'(0) = 0.
    """

    g: Series
    f: Series

    riordan = False

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def matrix(self, n: int) -> IntMatrix:
        return pair_matrix(self.g, self.f, n)


@dataclass(frozen=True)
class AlmostR:
    """First-order almost Riordan array (a; g, f).

    Column 0 is a(x); the block from (1, 1) onward is the Riordan array (g, f).
    """

    a: Series
    g: Series
    f: Series

    def __post_init__(self):
        if self.a.order == 0 or self.a.coeffs[0] == 0:
            raise InvalidArray("a(0) must be nonzero")
        RArray(self.g, self.f)

    @classmethod
    def parse(cls, a: str, g: str, f: str, order: int = DEFAULT_ORDER,
              symbols: Mapping[str, Series] | None = None) -> "AlmostR":
        return cls(ps_parse(a, order, symbols), ps_parse(g, order, symbols), ps_parse(f, order, symbols))

    def matrix(self, n: int) -> IntMatrix:
        return almost_matrix(self, n)


# element access and matrices


def ra_element(R: RArray, n: int, k: int) -> int:
    if k < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    if k > n:
        return 0
    if n >= R.order:
        raise OrderExceeded(f"entry ({n},{k}) needs series known to order {n + 1}, have {R.order}")
    val = (R.g * R.f ** k).coeff(n)
    return _int_entry(val, n, k)


def ra_matrix(R: RArray, N: int) -> IntMatrix:
    return pair_matrix(R.g, R.f, N)


def ra_multiply(R1: RArray, R2: RArray) -> RArray:
    """(g, f) . (u, v) = (g u(f), v(f))."""
    return RArray(R1.g * R2.g.compose(R1.f), R2.f.compose(R1.f))


def ra_inverse(R: RArray) -> RArray:
    fbar = R.f.revert()
    return RArray(R.g.compose(fbar).reciprocal(), fbar)


def ra_apply(R: RArray, a: Series) -> Series:
    """g(x) a(f(x)); the coefficient vector of a multiplied by the matrix of R."""
    return R.g * a.compose(R.f)


def ra_sums(R: RArray, mode: str, N: int) -> list[int]:
    """Row sums g/(1 - f) or diagonal sums g/(1 - x f)."""
    n = R.order
    if N > n:
        raise OrderExceeded(f"{N} sums need order {N}, have {n}")
    if mode == "row":
        s = R.g / (1 - R.f)
    elif mode == "diagonal":
        s = R.g / (1 - R.f.shift(1).truncate(n))
    else:
        raise ValueError(f"mode must be 'row' or 'diagonal', not {mode!r}")
    return [_int_entry(c, i, 0) for i, c in enumerate(s.coeffs[:N])]


def ra_rectify(R: RArray, N: int) -> IntMatrix:
    """Square matrix with entry (n, k) = a_{n+k, k}, i.e. the pair (g, f/x)."""
    if R.order < 2 * N - 1:
        raise OrderExceeded(f"rectifying to size {N} needs order {2 * N - 1}, have {R.order}")
    return pair_matrix(R.g, R.f.shift(-1), N, N, shape="square")


def ra_stretch(R: RArray) -> GFPair:
    return GFPair(R.g, R.f.shift(1).truncate(R.order))


def ra_reverse(R: RArray, N: int) -> IntMatrix:
    """Entry (n, k) = a_{n, n-k}."""
    return ra_matrix(R, N).reversal()


def ra_triangulate(R: RArray) -> RArray:
    """(g, (f - f_1 x)/x), the triangle hidden in the rectified square."""
    f1 = R.f.coeff(1)
    if R.f.coeff(2) == 0:
        raise F2Zero("triangulation needs f_2 != 0; use mat_binomial_conjugate on the rectified matrix")
    return RArray(R.g, (R.f - f1 * Series.x(R.f.order)).shift(-1))


def mat_binomial_conjugate(M: IntMatrix, a: int, direction: str = "inverse", transpose: bool = True) -> IntMatrix:
    """Right-multiply M by (B_a)^T or (B_a^{-1})^T (or by B_a, B_a^{-1} when transpose is False).

    With the transpose this is the binomial transform acting on the
    y-variable of the bivariate generating function of M; without it, it is
    the substitution y -> y + a (forward) or y -> y - a (inverse).
    """
    if direction == "forward":
        b = a
    elif direction == "inverse":
        b = -a
    else:
        raise ValueError("direction must be 'forward' or 'inverse'")
    ncols = M.ncols
    if transpose:
        def entry(n, k):
            return sum(M[n, j] * comb(k, j) * b ** (k - j) for j in range(k + 1))
    else:
        def entry(n, k):
            return sum(M[n, j] * comb(j, k) * b ** (j - k) for j in range(k, ncols))
    out = IntMatrix.from_function(M.nrows, ncols, entry)
    if out.nrows == out.ncols and out.is_lower():
        return IntMatrix(out.rows, "lower")
    return out


def almost_element(A: AlmostR, n: int, k: int) -> int:
    if k > n:
        return 0
    if k == 0:
        return _int_entry(A.a.coeff(n), n, 0)
    order = min(A.g.order, A.f.order)
    if n - 1 >= order:
        raise OrderExceeded(f"entry ({n},{k}) needs order {n}, have {order}")
    return _int_entry((A.g * A.f ** (k - 1)).coeff(n - 1), n, k)


def almost_matrix(A: AlmostR, N: int) -> IntMatrix:
    if N > A.a.order or N - 1 > min(A.g.order, A.f.order):
        raise OrderExceeded(f"size {N} exceeds the series orders")
    inner = pair_matrix(A.g, A.f, N - 1) if N > 1 else IntMatrix([])
    rows = []
    for n in range(N):
        row = [_int_entry(A.a.coeffs[n], n, 0)]
        row += [inner[n - 1, k - 1] if n >= 1 else 0 for k in range(1, N)]
        rows.append(row)
    return IntMatrix(rows, "lower")


def step_to_riordan(alpha: Sequence[int], beta: Sequence[int], order: int = DEFAULT_ORDER) -> RArray:
    """Riordan array of the step polynomial sum_i alpha_i x^i + y x sum_j beta_j x^j.

    ``alpha[i-1]`` weights the level step (i, 0); ``beta[j]`` weights the
    up step (j+1, 1).
    """
    if not beta or beta[0] == 0:
        raise Beta0Zero("the step (1,1) must be present (beta_0 != 0)")
    level = Series([0] + list(alpha), order)
    up = Series(beta, order)
    g = (1 - level).reciprocal()
    return RArray(g, (up * g).shift(1).truncate(order))


def reverse_symmetrize(R: RArray, N: int) -> IntMatrix:
    """rev(M) + rev(M)^T - diag(rev(M)) for M the matrix of R."""
    rev = ra_reverse(R, N)
    t = rev.transpose()
    return IntMatrix([[rev[n, k] + t[n, k] - (rev[n, k] if n == k else 0) for k in range(N)]
                      for n in range(N)], "square")


def _narayana_like(n: int, k: int) -> int:
    num = comb(2 * n - k, k) * comb(2 * n - 2 * k, n - k)
    q, r = divmod(num, n - k + 1)
    if r:
        raise NonIntegralEntry(f"entry ({n},{k}) is {Fraction(num, n - k + 1)}")
    return q


def _ternary_t(n: int, k: int) -> int:
    num = comb(3 * n - 2 * k, k) * comb(3 * n - 3 * k, n - k)
    q, r = divmod(num, 2 * n - 2 * k + 1)
    if r:
        raise NonIntegralEntry(f"entry ({n},{k}) is {Fraction(num, 2 * n - 2 * k + 1)}")
    return q


NAMED_MATRICES = {
    "A060693": _narayana_like,
    "ternary-T": _ternary_t,
}


def named_matrix(name: str, N: int) -> IntMatrix:
    """Closed-form triangles: 'A060693' and 'ternary-T'."""
    if N < 1:
        raise ValueError("N must be at least 1")
    try:
        term = NAMED_MATRICES[name]
    except KeyError:
        raise ValueError(f"unknown matrix {name!r}; choose from {sorted(NAMED_MATRICES)}") from None
    return IntMatrix.from_function(N, N, term, "lower")

