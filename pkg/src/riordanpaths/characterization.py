"""Production matrices, A- and Z-sequences, and A-matrix recurrences.

An A-matrix specification is kept in its most general form: a list of
monomials ``c * x^p * u^q`` whose sum is f/x.  A monomial stands for the
term ``c * t[n-p, k+q]`` in the recurrence for ``t[n+1, k+1]``.  Row ``i``
of the A-matrix contributes ``(a_ij, i, j)``, the rho-sequence contributes
``(rho_j, -1, j+2)``, and anything else (cubic terms and the like) is
listed explicitly.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, InvalidArray, NotContractive, OrderExceeded, SingularMatrix
from .matrix import IntMatrix
from .riordan import RArray
from .series import DEFAULT_ORDER, Series, ps_solve_fixpoint


def _norm(v: Fraction):
    return v.numerator if v.denominator == 1 else v


@dataclass(frozen=True)
class ProductionMatrix:
    """P = M^{-1} Mbar, kept as exact rationals."""

    entries: tuple

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def z(self) -> list:
        return [_norm(r[0]) for r in self.entries]

    @property
    def a(self) -> list:
        if self.size < 2:
            return []
        return [_norm(self.entries[i][1]) for i in range(self.size)]

    @property
    def raw(self) -> IntMatrix:
        """The integer matrix; raises NonIntegralEntry if P has fractions."""
        return IntMatrix(self.entries)

    def is_banded(self) -> bool:
        """Column k+1 is the A-sequence moved down k rows (zeros above)."""
        a = [Fraction(v) for v in self.a]
        n = self.size
        for k in range(1, n - 1):
            for i in range(n):
                want = a[i - k] if i >= k else 0
                if self.entries[i][k + 1] != want:
                    return False
        return True


def production_matrix(M: IntMatrix, size: int) -> ProductionMatrix:
    """Leading size x size block of M^{-1} Mbar, Mbar being M without its top row.

    Needs ``size + 1`` rows of M.  Solved column by column by forward
    substitution over the rationals.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    if M.nrows < size + 1 or M.ncols < size:
        raise DimensionMismatch(f"a production matrix of size {size} needs {size + 1} rows and {size} columns")
    if not M.is_lower():
        raise DimensionMismatch("production matrices are defined for lower-triangular arrays")
    for i in range(size):
        if M[i, i] == 0:
            raise SingularMatrix(f"diagonal entry {i} is zero")
    P = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        for i in range(size):
            acc = Fraction(M[i + 1, j])
            for m in range(i):
                if M[i, m]:
                    acc -= M[i, m] * P[m][j]
            P[i][j] = acc / M[i, i]
    return ProductionMatrix(tuple(tuple(r) for r in P))


def a_sequence(R: RArray, length: int) -> list:
    """Coefficients of A(x) = x / fbar(x)."""
    fbar = R.f.revert()
    A = fbar.shift(-1).reciprocal()
    if length > A.order:
        raise OrderExceeded(f"{length} terms need order {length + 1}, have {R.order}")
    return [_norm(c) for c in A.coeffs[:length]]


def z_sequence(M: IntMatrix, length: int) -> list:
    return production_matrix(M, length).z


def verify_rogers(M: IntMatrix, z: Sequence, a: Sequence) -> bool:
    """t[n,0] = sum z_i t[n-1,i] and t[n,k] = sum a_i t[n-1,k-1+i] for n >= 1.

    Missing terms of z and a count as zero.
    """
    N, C = M.nrows, M.ncols

    def t(n, k):
        return M[n, k] if k < C else 0

    for n in range(1, N):
        want = sum(z[i] * t(n - 1, i) for i in range(min(len(z), C)))
        if M[n, 0] != want:
            return False
        for k in range(1, C):
            want = sum(a[i] * t(n - 1, k - 1 + i) for i in range(len(a)) if k - 1 + i < C)
            if M[n, k] != want:
                return False
    return True


# A-matrix


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    xpow: int
    upow: int


@dataclass(frozen=True)
class AMatrixSpec:
    """rows[i][j] = a_{i,j}, rho[j] = rho_j, plus explicit (coeff, xpow, upow) monomials."""

    rows: tuple = ()
    rho: tuple = ()
    extra_terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(Fraction(c) for c in r) for r in self.rows))
        object.__setattr__(self, "rho", tuple(Fraction(c) for c in self.rho))
        extra = []
        for t in self.extra_terms:
            if isinstance(t, Term):
                extra.append(t)
            elif isinstance(t, dict):
                extra.append(Term(Fraction(t["coeff"]), int(t["xpow"]), int(t["upow"])))
            else:
                c, p, q = t
                extra.append(Term(Fraction(c), int(p), int(q)))
        for t in extra:
            if t.upow < 0:
                raise ValueError("u-powers must be non-negative")
        object.__setattr__(self, "extra_terms", tuple(extra))
        if self.f1 == 0:
            raise InvalidArray("a_{0,0} (the x^0 u^0 term) must be nonzero")

    def terms(self) -> list[Term]:
        """All monomials with like terms merged and zeros dropped, sorted by (xpow, upow)."""
        acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for i, r in enumerate(self.rows):
            for j, c in enumerate(r):
                acc[(i, j)] += c
        for j, c in enumerate(self.rho):
            acc[(-1, j + 2)] += c
        for t in self.extra_terms:
            acc[(t.xpow, t.upow)] += t.coeff
        return [Term(c, p, q) for (p, q), c in sorted(acc.items()) if c]

    @property
    def f1(self) -> Fraction:
        return sum((t.coeff for t in self.terms() if (t.xpow, t.upow) == (0, 0)), Fraction(0))

    def check_contractive(self):
        for t in self.terms():
            ok = t.xpow >= 0 if t.upow == 0 else t.xpow + t.upow >= 1
            if not ok:
                raise NotContractive(f"term {t.coeff}*x^{t.xpow}*u^{t.upow} does not raise the x-adic order")

    def to_json(self) -> str:
        def enc(c):
            return str(c) if c.denominator != 1 else c.numerator

        return json.dumps({
            "rows": [[enc(c) for c in r] for r in self.rows],
            "rho": [enc(c) for c in self.rho],
            "extra_terms": [{"coeff": enc(t.coeff), "xpow": t.xpow, "upow": t.upow} for t in self.extra_terms],
        })

    @classmethod
    def from_json(cls, text_or_obj) -> "AMatrixSpec":
        data = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        return cls(tuple(data.get("rows", [])), tuple(data.get("rho", [])), tuple(data.get("extra_terms", [])))


def _rhs(terms: Sequence[Term], f: Series) -> Series:
    """sum c x^(p+1) f^q; the order drops by the most negative x-shift."""
    n = f.order
    shift_min = min(t.xpow + 1 for t in terms)
    out_order = n + min(0, shift_min)
    acc = Series.zero(out_order)
    powers = {0: Series.one(n)}
    for t in terms:
        if t.upow not in powers:
            powers[t.upow] = f ** t.upow
        acc = acc + t.coeff * powers[t.upow].shift(t.xpow + 1).truncate(out_order)
    return acc


def solve_f_from_amatrix(spec: AMatrixSpec, order: int = DEFAULT_ORDER) -> Series:
    """The f with f = sum c x^(p+1) f^q over the monomials of ``spec``, to ``order``."""
    spec.check_contractive()
    terms = spec.terms()
    return ps_solve_fixpoint(lambda u: _rhs(terms, u), order)


def amatrix_residual(spec: AMatrixSpec, f: Series) -> Series:
    """f - sum c x^(p+1) f^q, to whatever order is known."""
    rhs = _rhs(spec.terms(), f)
    return f.truncate(rhs.order) - rhs


def verify_amatrix(M: IntMatrix, spec: AMatrixSpec) -> bool:
    """Check t[n+1,k+1] = sum c t[n-p,k+q] wherever every referenced entry is known.

    For lower-triangular M, entries right of the diagonal are known zeros
    even past the last column; rows past the last row are unknown and the
    equation is skipped.
    """
    terms = spec.terms()
    lower = M.is_lower()
    N, C = M.nrows, M.ncols

    def t(n, k):
        if n < 0 or k < 0:
            return 0
        if lower and k > n:
            return 0
        return M[n, k]

    def known(n, k):
        if n < 0 or k < 0 or (lower and k > n):
            return True
        return n < N and k < C

    for n in range(-1, N - 1):
        for k in range(C - 1):
            refs = [(n - tm.xpow, k + tm.upow) for tm in terms]
            if not all(known(*r) for r in refs):
                continue
            want = sum(tm.coeff * t(*r) for tm, r in zip(terms, refs))
            if t(n + 1, k + 1) != want:
                return False
    return True


def rs_spec(r: int, s: int) -> AMatrixSpec:
    """u/x = 1 + r u + s u^2/x."""
    return AMatrixSpec(rows=((1, r),), rho=(s,))


def abc_spec(alpha: int, beta: int, gamma: int) -> AMatrixSpec:
    """u/x = 1 + alpha x u + beta x u^2 + gamma u^2/x."""
    return AMatrixSpec(rows=((1,), (0, alpha, beta)), rho=(gamma,))


def cubic_spec(level_xpow: int | None) -> AMatrixSpec:
    """u/x = 1 + x^p u + u^3/x^2 (p = level_xpow), or 1 + u^3/x^2 when p is None."""
    extra = [(1, -2, 3)]
    if level_xpow is not None:
        extra.append((1, level_xpow, 1))
    return AMatrixSpec(rows=((1,),), extra_terms=tuple(extra))

