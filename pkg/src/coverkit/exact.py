"""Exact scalar and integer-matrix arithmetic.

Rational values are ``fractions.Fraction`` (always stored reduced, with a
positive denominator, hashable and structurally comparable), re-exported
here as :data:`Rational`.  Integer matrices carry arbitrary-precision
entries; the only linear algebra provided is what lattice coset
enumeration needs: multiplication, exact determinants, and a Hermite
normal form with its unimodular transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PeriodOverflowError, SingularMatrixError

Rational = Fraction

#: Periods (lcm values) are kept inside the signed 64-bit range.  Subset
#: counts are unbounded Python ints; only moduli lcms hit this guard.
PERIOD_BOUND = 2**63 - 1


def frac_part(x: Rational) -> Rational:
    """Fractional part of ``x``: the unique value in [0, 1) with x - {x} integral."""
    return x - (x.numerator // x.denominator)


def lcm_all(values: list[int] | tuple[int, ...]) -> int:
    """Least common multiple of positive integers; 1 for an empty list.

    Raises :class:`PeriodOverflowError` once the running lcm exceeds
    ``PERIOD_BOUND``.
    """
    acc = 1
    for v in values:
        if v < 1:
            raise ValueError(f"lcm_all requires positive integers, got {v}")
        acc = math.lcm(acc, v)
        if acc > PERIOD_BOUND:
            raise PeriodOverflowError(f"lcm period exceeds 2^63-1: {acc}")
    return acc


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be at least 1x1")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> IntMatrix:
        r = len(rows)
        c = len(rows[0]) if rows else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(int(x) for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)]

    def matmul(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][t] * b[t][j] for t in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out)


def det_int(a: IntMatrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    if a.rows != a.cols:
        raise ValueError("determinant requires a square matrix")
    n = a.rows
    m = a.to_rows()
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form of a nonsingular square matrix.

    Returns ``(h, u)`` with ``h = a @ u``, ``u`` unimodular, ``h``
    lower-triangular with positive diagonal and every off-diagonal entry
    ``h[i][j]`` (j < i) reduced into ``[0, h[i][i])``.  The form is
    canonical, so equal inputs always produce bit-identical outputs.

    Raises :class:`SingularMatrixError` on singular input.
    """
    if a.rows != a.cols:
        raise ValueError("hnf requires a square matrix")
    n = a.rows
    h = a.to_rows()
    u = IntMatrix.identity(n).to_rows()

    def col_swap(j1: int, j2: int) -> None:
        for m in (h, u):
            for row in m:
                row[j1], row[j2] = row[j2], row[j1]

    def col_addmul(dst: int, src: int, q: int) -> None:
        # column dst -= q * column src
        for m in (h, u):
            for row in m:
                row[dst] -= q * row[src]

    def col_negate(j: int) -> None:
        for m in (h, u):
            for row in m:
                row[j] = -row[j]

    for i in range(n):
        # Euclid on row i across columns i..n-1 until a single nonzero pivot remains.
        while True:
            nonzero = [j for j in range(i, n) if h[i][j] != 0]
            if not nonzero:
                raise SingularMatrixError("matrix is singular")
            piv = min(nonzero, key=lambda j: abs(h[i][j]))
            if piv != i:
                col_swap(i, piv)
            done = True
            for j in range(i + 1, n):
                if h[i][j] != 0:
                    q = h[i][j] // h[i][i]
                    col_addmul(j, i, q)
                    if h[i][j] != 0:
                        done = False
            if done:
                break
        if h[i][i] < 0:
            col_negate(i)
        # Reduce earlier columns' row-i entries into [0, h[i][i]).
        for j in range(i):
            q = h[i][j] // h[i][i]
            if q != 0:
                col_addmul(j, i, q)

    return IntMatrix.from_rows(h), IntMatrix.from_rows(u)
