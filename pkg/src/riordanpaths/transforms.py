"""Sequence transforms: Hankel determinants, INVERT, continued fractions, Somos-4."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InsufficientDepth, InsufficientTerms, NonIntegralEntry, ZeroHankel
from .series import Series

CF_KINDS = ("jacobi", "thron")


def _ints(seq) -> list[int]:
    out = []
    for i, v in enumerate(seq):
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise NonIntegralEntry(f"term {i} is {v}")
            v = v.numerator
        out.append(int(v))
    return out


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * p - a[i][k] * a[k][j]) // prev
        prev = p
    return sign * a[-1][-1]


def hankel(seq: Sequence, m: int) -> list[int]:
    """h_n = det(seq[i+j])_{0<=i,j<=n} for n < m."""
    s = _ints(seq)
    if len(s) < 2 * m - 1:
        raise InsufficientTerms(f"{m} Hankel determinants need {2 * m - 1} terms, have {len(s)}")
    return [bareiss_det([[s[i + j] for j in range(n + 1)] for i in range(n + 1)]) for n in range(m)]


def invert_transform(g: Series) -> Series:
    """g / (1 - x g)."""
    xg = g.shift(1).truncate(g.order)
    return g / (1 - xg)


@dataclass(frozen=True)
class CFSpec:
    """Jacobi: 1/(1 - b0 x - lam1 x^2/(1 - b1 x - ...)); Thron: 1/(1 - b0 x - lam1 x/(1 - b1 x - ...)).

    ``lam[i]`` is the numerator under level i, so ``lam[0]`` is lambda_1.
    For a Thron fraction ``b`` holds the c's and ``lam`` the d's.
    """

    kind: str
    b: tuple
    lam: tuple

    def __post_init__(self):
        if self.kind not in CF_KINDS:
            raise ValueError(f"kind must be one of {CF_KINDS}")
        object.__setattr__(self, "b", tuple(Fraction(v) for v in self.b))
        object.__setattr__(self, "lam", tuple(Fraction(v) for v in self.lam))

    @property
    def depth(self) -> int:
        return min(len(self.b), len(self.lam))

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "b": [str(v) for v in self.b], "lam": [str(v) for v in self.lam]})

    @classmethod
    def from_json(cls, text_or_obj) -> "CFSpec":
        data = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        return cls(data["kind"], tuple(Fraction(v) for v in data["b"]), tuple(Fraction(v) for v in data["lam"]))

    @classmethod
    def periodic(cls, kind: str, first_b, b, first_lam, lam, depth: int) -> "CFSpec":
        """b = (first_b, b, b, ...), lam = (first_lam, lam, lam, ...), each of length ``depth``."""
        return cls(kind, (first_b,) + (b,) * (depth - 1), (first_lam,) + (lam,) * (depth - 1))


def _cf_at_depth(spec: CFSpec, depth: int, order: int) -> Series:
    xpow = 2 if spec.kind == "jacobi" else 1
    x = Series.x(order)
    num_shift = Series.monomial(1, xpow, order)
    tail = Series.one(order)
    for i in reversed(range(depth)):
        tail = (1 - spec.b[i] * x - spec.lam[i] * num_shift * tail).reciprocal()
    return tail


def cf_eval(spec: CFSpec, order: int, check: bool = True) -> Series:
    """Evaluate bottom-up with tail 1 at full depth.

    With ``check`` set, the value one level shallower must agree on the
    first ``order`` coefficients, otherwise InsufficientDepth is raised.
    """
    d = spec.depth
    if d < 1:
        raise InsufficientDepth("the continued fraction has no levels")
    full = _cf_at_depth(spec, d, order)
    if check and _cf_at_depth(spec, d - 1, order) != full:
        raise InsufficientDepth(f"depth {d} does not determine {order} coefficients")
    return full


def jfraction_extract(g: Series, depth: int) -> CFSpec:
    """Jacobi coefficients of g by repeated reciprocal-and-shift.

    With g_0 = 1 write 1/g = 1 - b x - lam x^2 h, where h again has
    constant term 1, and recurse on h.  A remainder that vanishes to the
    known order ends the fraction, all later coefficients being zero.
    Needs g to order 2*depth; the last lambda is read only if g is known
    to order 2*depth + 1 and is left at 0 otherwise (it does not affect
    the first 2*depth coefficients).
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if g.order < 2 * depth:
        raise InsufficientTerms(f"depth {depth} needs order {2 * depth}, have {g.order}")
    c0 = g.coeff(0)
    if c0 == 0:
        raise ZeroHankel("g(0) = 0")
    cur = (g * (1 / c0)).truncate(min(g.order, 2 * depth + 1))
    b, lam = [], []
    for i in range(depth):
        r = cur.reciprocal()
        bi = -r.coeff(1)
        b.append(bi)
        rest = -(r - 1 + bi * Series.x(r.order))
        if rest.order <= 2:
            lam.append(Fraction(0))
            break
        if not any(rest.coeffs):
            lam.extend([Fraction(0)] * (depth - i))
            b.extend([Fraction(0)] * (depth - i - 1))
            break
        li = rest.coeff(2)
        if li == 0:
            raise ZeroHankel(f"lambda_{i + 1} = 0 with a nonzero remainder")
        lam.append(li)
        if i < depth - 1:
            cur = rest.shift(-2) * (1 / li)
    return CFSpec("jacobi", tuple(b), tuple(lam))


def somos4_check(seq: Sequence, A, B) -> bool:
    """s_n s_{n-4} = A s_{n-1} s_{n-3} + B s_{n-2}^2 for every n >= 4."""
    s = list(seq)
    if len(s) < 5:
        raise InsufficientTerms("Somos-4 needs at least 5 terms")
    return all(s[n] * s[n - 4] == A * s[n - 1] * s[n - 3] + B * s[n - 2] ** 2 for n in range(4, len(s)))


def somos4_coefficients(alpha, beta, gamma) -> tuple:
    """The (A, B) pair attached to the (alpha, beta, gamma) family."""
    A = (alpha * gamma + beta + 2 * gamma ** 3) ** 2
    B = (-alpha ** 3 * gamma ** 2 - alpha ** 2 * gamma * (2 * beta + 3 * gamma ** 3)
         - alpha * (beta ** 2 + 6 * beta * gamma ** 3 + 4 * gamma ** 6)
         - gamma * (2 * beta ** 2 + 6 * beta * gamma ** 3 + 3 * gamma ** 6))
    return A, B
