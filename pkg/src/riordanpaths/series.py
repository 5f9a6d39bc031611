"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores the first ``order`` coefficients of a power series
in ``x``.  Everything past ``order`` is unknown, so binary operations keep
the smaller of the two orders and operations that divide by a power of
``x`` lose that many coefficients.

    >>> c = (1 - (1 - 4 * Series.x(8)).sqrt()) / (2 * Series.x(8))
    >>> c.to_ints()
    [1, 1, 2, 5, 14, 42, 132]
"""
from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .errors import (
    NonzeroConstantTerm,
    NonIntegralEntry,
    NotASquare,
    NotContractive,
    NotReversible,
    OrderExceeded,
    ZeroConstantTerm,
)

DEFAULT_ORDER = 16

Scalar = Union[int, Fraction]


def _frac(c) -> Fraction:
    return c if type(c) is Fraction else Fraction(c)


def _integer_form(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Return (numerators, d) with cs[i] == numerators[i] / d."""
    d = 1
    for c in cs:
        if c.denominator != 1:
            d = d * c.denominator // math.gcd(d, c.denominator)
    if d == 1:
        return [c.numerator for c in cs], 1
    return [c.numerator * (d // c.denominator) for c in cs], d


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> tuple:
    A, da = _integer_form(a[:n])
    B, db = _integer_form(b[:n])
    den = da * db
    out = []
    mul = operator.mul
    for i in range(n):
        s = sum(map(mul, A[: i + 1], B[i::-1]))
        out.append(Fraction(s, den) if den != 1 else Fraction(s))
    return tuple(out)


class Series:
    """Immutable truncated power series over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if len(cs) < order:
                cs.extend([Fraction(0)] * (order - len(cs)))
            else:
                del cs[order:]
        self._c = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Series":
        s = object.__new__(cls)
        s._c = coeffs
        return s

    # constructors

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls._raw((Fraction(0),) * order)

    @classmethod
    def constant(cls, c: Scalar, order: int = DEFAULT_ORDER) -> "Series":
        if order == 0:
            return cls._raw(())
        return cls._raw((_frac(c),) + (Fraction(0),) * (order - 1))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls.monomial(1, 1, order)

    @classmethod
    def monomial(cls, c: Scalar, power: int, order: int = DEFAULT_ORDER) -> "Series":
        cs = [Fraction(0)] * order
        if power < order:
            cs[power] = _frac(c)
        return cls._raw(tuple(cs))

    @classmethod
    def poly(cls, coeffs: Iterable, order: int = DEFAULT_ORDER) -> "Series":
        """Polynomial with the given low-to-high coefficients, known to ``order``."""
        return cls(coeffs, order)

    # basic access

    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple:
        return self._c

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n >= len(self._c):
            raise OrderExceeded(f"coefficient x^{n} requested from a series known to order {self.order}")
        return self._c[n]

    def __getitem__(self, n):
        if isinstance(n, slice):
            return list(self._c[n])
        return self.coeff(n)

    def __iter__(self):
        return iter(self._c)

    def valuation(self) -> int | None:
        """Index of the first nonzero known coefficient, or None if all are zero."""
        for i, c in enumerate(self._c):
            if c:
                return i
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def to_ints(self) -> list[int]:
        out = []
        for i, c in enumerate(self._c):
            if c.denominator != 1:
                raise NonIntegralEntry(f"coefficient x^{i} is {c}")
            out.append(c.numerator)
        return out

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise OrderExceeded(f"cannot extend a series of order {self.order} to {order}")
        return Series._raw(self._c[:order])

    def pad(self, order: int) -> "Series":
        """Extend with zeros up to ``order``.  The new coefficients are a guess, not data."""
        if order <= self.order:
            return Series._raw(self._c[:order])
        return Series._raw(self._c + (Fraction(0),) * (order - self.order))

    def shift(self, k: int) -> "Series":
        """Multiply by x**k.  Negative k divides and needs the low coefficients to vanish."""
        if k >= 0:
            return Series._raw((Fraction(0),) * k + self._c)
        k = -k
        if any(self._c[:k]):
            raise ZeroConstantTerm(f"cannot divide by x^{k}: low coefficients are nonzero")
        return Series._raw(self._c[k:])

    # equality and printing

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def equal(self, other: "Series", order: int) -> bool:
        return ps_equal(self, other, order)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._c[:10])
        more = ", ..." if self.order > 10 else ""
        return f"Series([{shown}{more}], order={self.order})"

    # ring operations

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return Series._raw(tuple(map(operator.add, self._c[:n], other._c[:n])))

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(tuple(-c for c in self._c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return Series._raw(tuple(map(operator.sub, self._c[:n], other._c[:n])))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return Series._raw(tuple(a * c for a in self._c))
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series._raw(_convolve(self._c, other._c, n))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            c = 1 / _frac(other)
            return Series._raw(tuple(a * c for a in self._c))
        if not isinstance(other, Series):
            return NotImplemented
        return ps_divide(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_divide(other, self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def reciprocal(self) -> "Series":
        return ps_reciprocal(self)

    def compose(self, f: "Series") -> "Series":
        return ps_compose(self, f)

    def __call__(self, f: "Series") -> "Series":
        return ps_compose(self, f)

    def revert(self) -> "Series":
        return ps_revert(self)

    def sqrt(self) -> "Series":
        return ps_sqrt(self)


# spec-level operations


def ps_arith(op: str, a: Series, b: Series) -> Series:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def ps_reciprocal(a: Series) -> Series:
    if a.order == 0:
        return a
    a0 = a._c[0]
    if a0 == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    n = a.order
    inv0 = 1 / a0
    b = [inv0]
    ac = a._c
    for i in range(1, n):
        s = Fraction(0)
        for j in range(1, i + 1):
            if ac[j]:
                s += ac[j] * b[i - j]
        b.append(-s * inv0)
    return Series._raw(tuple(b))


def ps_divide(a: Series, b: Series) -> Series:
    """a / b after cancelling the common power of x from both."""
    n = min(a.order, b.order)
    v = b.truncate(n).valuation()
    if v is None:
        raise ZeroConstantTerm("division by a series with no nonzero known coefficient")
    if any(a._c[:v]):
        raise ZeroConstantTerm(f"quotient has a pole: denominator divisible by x^{v}, numerator is not")
    num = Series._raw(a._c[v:n])
    den = Series._raw(b._c[v:n])
    return num * ps_reciprocal(den)


def ps_compose(a: Series, f: Series) -> Series:
    """a(f(x)), known to min(a.order, f.order)."""
    n = min(a.order, f.order)
    if n == 0:
        return Series._raw(())
    if f._c[0] != 0:
        raise NonzeroConstantTerm("the inner series of a composition must have f(0) = 0")
    ft = Series._raw(f._c[:n])
    # Horner; a_i for i >= n cannot reach x^(n-1) since f has valuation >= 1.
    acc = Series.constant(a._c[n - 1], n)
    for i in range(n - 2, -1, -1):
        acc = acc * ft
        acc = Series._raw((acc._c[0] + a._c[i],) + acc._c[1:])
    return acc


def ps_revert(f: Series) -> Series:
    """Compositional inverse, one new coefficient per step.

    Writing the inverse as x*h(x), the coefficient of x^n in f(x*h) is
    f_1*h_{n-1} plus terms that only involve h_0..h_{n-2}; setting it to
    zero determines h_{n-1}.  Powers of h are tabulated lazily.  Integer
    series with f_1 = +-1 stay in Python ints throughout.
    """
    n = f.order
    if n < 2 or f._c[0] != 0 or f._c[1] == 0:
        raise NotReversible("reversion needs f(0) = 0 and f'(0) != 0")
    fc = f._c
    if abs(fc[1]) == 1 and all(c.denominator == 1 for c in fc):
        fc = [c.numerator for c in fc]
        inv = fc[1]
    else:
        inv = 1 / fc[1]
    mul = operator.mul
    h = [inv]
    # rows[k][m] = [x^m] h^k
    rows: dict[int, list] = {1: h}

    def extend(k: int, m: int):
        row = rows.setdefault(k, [])
        if len(row) > m:
            return
        extend(k - 1, m)
        prev = rows[k - 1]
        for j in range(len(row), m + 1):
            row.append(sum(map(mul, h[: j + 1], prev[j::-1])))

    for deg in range(2, n):
        s = 0
        for k in range(2, deg + 1):
            if fc[k]:
                extend(k, deg - k)
                s += fc[k] * rows[k][deg - k]
        h.append(-s * inv)
    return Series._raw((Fraction(0),) + tuple(_frac(c) for c in h[: n - 1]))


def _rational_sqrt(q: Fraction) -> Fraction:
    if q < 0:
        raise NotASquare(f"{q} has no rational square root")
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise NotASquare(f"{q} has no rational square root")
    return Fraction(rn, rd)


def ps_sqrt(a: Series) -> Series:
    """Square root with positive leading coefficient."""
    if a.order == 0:
        return a
    v = a.valuation()
    if v is None:
        return a
    if v:
        if v % 2:
            raise NotASquare(f"series has odd valuation {v}")
        return ps_sqrt(a.shift(-v)).shift(v // 2)
    ac = a._c
    b0 = _rational_sqrt(ac[0])
    inv = 1 / (2 * b0)
    b = [b0]
    for i in range(1, a.order):
        s = ac[i]
        for j in range(1, i):
            s -= b[j] * b[i - j]
        b.append(s * inv)
    return Series._raw(tuple(b))


def ps_coeff(a: Series, n: int) -> Fraction:
    return a.coeff(n)


def ps_equal(a: Series, b: Series, order: int) -> bool:
    if a.order < order or b.order < order:
        raise OrderExceeded(f"comparison to order {order} needs both series known that far "
                            f"(have {a.order} and {b.order})")
    return a._c[:order] == b._c[:order]


def ps_solve_fixpoint(phi: Union[str, Callable[[Series], Series]], order: int = DEFAULT_ORDER,
                      var: str = "u", symbols: dict | None = None) -> Series:
    """Solve u = phi(x, u) by iteration from u = 0.

    ``phi`` is either an expression string in ``x`` and ``var`` or a callable
    taking the current iterate.  For an x-adic contraction the i-th iterate
    is correct to at least i coefficients, so the loop stops after
    ``order + 2`` rounds at most.  The iterate is zero-padded before each
    evaluation so that divisions by x inside phi do not eat into the
    requested order.
    """
    if isinstance(phi, str):
        from .parser import compile_expression

        expr = compile_expression(phi)
        env = dict(symbols or {})

        def step(u: Series, work: int) -> Series:
            env[var] = u
            return expr.evaluate(work, env)
    else:
        def step(u: Series, work: int) -> Series:
            return phi(u)

    slack = 0
    while True:
        work = order + slack
        u = Series.zero(order)
        for it in range(order + 2):
            new = step(u.pad(work), work)
            if new.order < order:
                break
            new = new.truncate(order)
            agree = 0
            while agree < order and new._c[agree] == u._c[agree]:
                agree += 1
            if agree == order:
                return new
            if agree < it:
                raise NotContractive(f"iteration {it} fixed only {agree} coefficients")
            u = new
        else:
            raise NotContractive(f"no fixed point to order {order} after {order + 2} iterations")
        if slack > 4 * order + 8:
            raise NotContractive("the map loses too much precision to reach the requested order")
        slack = 2 * slack + 2
