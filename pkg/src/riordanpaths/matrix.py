"""Dense exact integer matrices indexed from (0, 0), plus serialization."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonIntegralEntry

SHAPES = ("lower", "square", "general")


def _as_int(v, where: str) -> int:
    if isinstance(v, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise NonIntegralEntry(f"entry {where} is {v}")
        return v.numerator
    if isinstance(v, str):
        return int(v)
    raise TypeError(f"entry {where} has unsupported type {type(v).__name__}")


class IntMatrix:
    """Immutable matrix of Python ints.

    ``shape`` is a tag: ``"lower"`` promises (and is checked to have) zeros
    above the diagonal, ``"square"`` and ``"general"`` make no promise.
    """

    __slots__ = ("_rows", "shape")

    def __init__(self, rows: Iterable[Iterable], shape: str | None = None):
        data = tuple(tuple(_as_int(v, f"({i},{j})") for j, v in enumerate(r)) for i, r in enumerate(rows))
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise DimensionMismatch("ragged rows")
        if shape is None:
            shape = "square" if data and len(data) == len(data[0]) else "general"
        if shape not in SHAPES:
            raise ValueError(f"unknown shape tag {shape!r}")
        if shape == "lower":
            for i, r in enumerate(data):
                if any(r[i + 1:]):
                    raise ValueError(f"row {i} has entries above the diagonal")
        self._rows = data
        self.shape = shape

    @classmethod
    def from_function(cls, nrows: int, ncols: int, fn, shape: str | None = None) -> "IntMatrix":
        if shape == "lower":
            return cls([[fn(n, k) if k <= n else 0 for k in range(ncols)] for n in range(nrows)], shape)
        return cls([[fn(n, k) for k in range(ncols)] for n in range(nrows)], shape)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], "lower")

    @classmethod
    def parse(cls, text: str, shape: str | None = None) -> "IntMatrix":
        """Read whitespace/comma/``&`` separated rows, one row per line."""
        rows = []
        for line in text.strip().splitlines():
            line = line.replace("&", " ").replace(",", " ").replace("\\\\", " ").strip()
            if line:
                rows.append([int(tok) for tok in line.split()])
        return cls(rows, shape)

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            n, k = idx
            return self._rows[n][k]
        return self._rows[idx]

    def row(self, n: int) -> list[int]:
        return list(self._rows[n])

    def col(self, k: int) -> list[int]:
        return [r[k] for r in self._rows]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols}, {self.shape})\n{render_text(self)}"

    def leading(self, n: int, m: int | None = None) -> "IntMatrix":
        m = n if m is None else m
        if n > self.nrows or m > self.ncols:
            raise DimensionMismatch(f"cannot take {n}x{m} block of a {self.nrows}x{self.ncols} matrix")
        shape = "lower" if self.shape == "lower" and n == m else None
        return IntMatrix([r[:m] for r in self._rows[:n]], shape)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows)) if self._rows else IntMatrix([])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        cols = list(zip(*other._rows))
        out = [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows]
        shape = "lower" if self.shape == other.shape == "lower" else None
        return IntMatrix(out, shape)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in addition")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in subtraction")
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def lower_part(self) -> "IntMatrix":
        return IntMatrix([[v if k <= n else 0 for k, v in enumerate(r)] for n, r in enumerate(self._rows)], "lower")

    def is_lower(self) -> bool:
        return all(not any(r[i + 1:]) for i, r in enumerate(self._rows))

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.nrows) for j in range(i))

    def diagonal(self) -> list[int]:
        return [self._rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self._rows]

    def diagonal_sums(self) -> list[int]:
        """sum_k a_{n-k,k}: the antidiagonal sums read down the rows."""
        return [sum(self._rows[n - k][k] for k in range(n + 1) if k < self.ncols) for n in range(self.nrows)]

    def reversal(self) -> "IntMatrix":
        """Entry (n, k) becomes a_{n, n-k}; defined for lower-triangular input."""
        if not self.is_lower():
            raise ValueError("reversal is defined for lower-triangular matrices")
        return IntMatrix([[self._rows[n][n - k] if k <= n else 0 for k in range(self.ncols)]
                          for n in range(self.nrows)], "lower")


def binomial_matrix(n: int, a: int = 1) -> IntMatrix:
    """B_a with entries binom(n, k) a^(n-k); B_a^{-1} = B_{-a}."""
    return IntMatrix.from_function(n, n, lambda i, j: comb(i, j) * a ** (i - j), "lower")


def render_text(m: IntMatrix | Sequence[int]) -> str:
    if isinstance(m, IntMatrix):
        if not m.rows:
            return ""
        width = max(len(str(v)) for r in m.rows for v in r)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in m.rows)
    return ", ".join(str(v) for v in m)


def render_csv(m: IntMatrix | Sequence[int]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(m, IntMatrix):
        writer.writerows(m.rows)
    else:
        writer.writerow(list(m))
    return buf.getvalue().rstrip("\n")


def render_json(m: IntMatrix | Sequence) -> str:
    if isinstance(m, IntMatrix):
        return json.dumps([[str(v) for v in r] for r in m.rows])
    return json.dumps([str(v) for v in m])


def render(m, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(m)
    if fmt == "csv":
        return render_csv(m)
    if fmt == "json":
        return render_json(m)
    raise ValueError(f"unknown format {fmt!r}")


def matrix_from_json(text: str, shape: str | None = None) -> IntMatrix:
    return IntMatrix([[int(v) for v in r] for r in json.loads(text)], shape)
