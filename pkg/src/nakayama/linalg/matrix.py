"""Dense exact matrices over a :class:`~nakayama.fields.Field`.

Vectors are tuples of field elements.  Matrices act on column vectors.
Row reduction dispatches on the field: GF(p) goes through the kernel
selected in :mod:`nakayama.kernels`, QQ uses a fraction-free integer
Gauss-Jordan with content removal, everything else a generic elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Sequence

from .. import kernels
from ..errors import Inconsistent, SingularMatrix, SizeMismatch
from ..fields import Field, PrimeField, RationalField

__all__ = ["Matrix", "SolveSuite", "solve_suite", "lin_comb", "vec_add", "vec_sub", "vec_scale", "dot"]


def vec_add(F, u, v):
    add = F.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_sub(F, u, v):
    sub = F.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vec_scale(F, c, v):
    mul = F.mul
    return tuple(mul(c, a) for a in v)


def dot(F, u, v):
    add, mul = F.add, F.mul
    acc = F.zero
    for a, b in zip(u, v):
        acc = add(acc, mul(a, b))
    return acc


def lin_comb(F, coeffs, vectors, length: int | None = None):
    """``sum(c_i * v_i)``; ``length`` is required when ``vectors`` may be empty."""
    if length is None:
        length = len(vectors[0])
    add, mul, zero = F.add, F.mul, F.zero
    out = [zero] * length
    for c, v in zip(coeffs, vectors):
        if c == zero:
            continue
        for k, a in enumerate(v):
            if a != zero:
                out[k] = add(out[k], mul(c, a))
    return tuple(out)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _rref_rational(rows, ncols):
    work = []
    for r in rows:
        den = 1
        for x in r:
            if x.denominator != 1:
                den = _lcm(den, x.denominator)
        work.append([int(x * den) for x in r])
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        best = None
        for i in range(r, nrows):
            v = work[i][c]
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
                if best == 1:
                    break
        if piv < 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = work[i]
            f = row[c]
            if not f:
                continue
            g = math.gcd(pv, f)
            a, b = pv // g, f // g
            new = [a * x - b * y for x, y in zip(row, prow)]
            content = 0
            for x in new:
                if x:
                    content = math.gcd(content, x)
                    if content == 1:
                        break
            if content > 1:
                new = [x // content for x in new]
            work[i] = new
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        row = work[i]
        pv = row[c]
        out.append([Fraction(x, pv) for x in row])
    return out, pivots


def _rref_generic(F, rows, ncols):
    m = [list(r) for r in rows]
    nrows = len(m)
    add, sub, mul, inv, zero, one = F.add, F.sub, F.mul, F.inv, F.zero, F.one
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c] != zero:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        iv = inv(row[c])
        if iv != one:
            row[c:] = [mul(iv, x) for x in row[c:]]
        for i in range(nrows):
            if i == r:
                continue
            other = m[i]
            f = other[c]
            if f == zero:
                continue
            for j in range(c, ncols):
                if row[j] != zero:
                    other[j] = sub(other[j], mul(f, row[j]))
        pivots.append(c)
        r += 1
    del add
    return m[:r], pivots


def rref_rows(F: Field, rows, ncols: int):
    """RREF of a list of rows; returns ``(nonzero rows as tuples, pivots)``."""
    if not rows or ncols == 0:
        return [], []
    if isinstance(F, PrimeField):
        out, piv = kernels.rref_modp([list(r) for r in rows], ncols, F.p)
    elif isinstance(F, RationalField):
        out, piv = _rref_rational(rows, ncols)
    else:
        out, piv = _rref_generic(F, rows, ncols)
    return [tuple(r) for r in out], list(piv)


def _det_bareiss(rows):
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pk - m[i][k] * m[k][j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def det_rows(F: Field, rows):
    n = len(rows)
    if n == 0:
        return F.one
    if isinstance(F, PrimeField):
        return kernels.det_modp(rows, F.p)
    if isinstance(F, RationalField):
        scale = 1
        ints = []
        for r in rows:
            den = 1
            for x in r:
                if x.denominator != 1:
                    den = _lcm(den, x.denominator)
            scale *= den
            ints.append([int(x * den) for x in r])
        return Fraction(_det_bareiss(ints), scale)
    m = [list(r) for r in rows]
    sub, mul, inv, zero = F.sub, F.mul, F.inv, F.zero
    det = F.one
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if m[i][c] != zero:
                piv = i
                break
        if piv < 0:
            return zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = F.neg(det)
        row = m[c]
        det = mul(det, row[c])
        iv = inv(row[c])
        for i in range(c + 1, n):
            other = m[i]
            f = mul(other[c], iv)
            if f == zero:
                continue
            for j in range(c, n):
                other[j] = sub(other[j], mul(f, row[j]))
    return det


class Matrix:
    """Immutable dense matrix; ``rows`` is a tuple of tuples."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise SizeMismatch("ragged matrix rows")

    # constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, F, nrows, ncols):
        return cls(F, [[F.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, F, n):
        return cls(F, [[F.one if i == j else F.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, F, cols, nrows: int | None = None):
        cols = [tuple(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls(F, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def coerce(cls, F, rows):
        return cls(F, [[F.coerce(x) for x in r] for r in rows])

    # basic access ---------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self):
        return Matrix(self.field, list(zip(*self.rows)) if self.nrows else [], self.nrows)

    def is_square(self):
        return self.nrows == self.ncols

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.rows for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        fmt = self.field.format
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def to_strings(self):
        fmt = self.field.format
        return [[fmt(x) for x in r] for r in self.rows]

    # arithmetic -----------------------------------------------------------
    def _check(self, other):
        if self.field != other.field:
            from ..errors import FieldMismatch

            raise FieldMismatch("matrices over different fields")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise SizeMismatch("shape mismatch in matrix addition")
        add = self.field.add
        return Matrix(self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise SizeMismatch("shape mismatch in matrix subtraction")
        sub = self.field.sub
        return Matrix(self.field, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.rows], self.ncols)

    def apply(self, v):
        if len(v) != self.ncols:
            raise SizeMismatch("vector length does not match matrix")
        F = self.field
        add, mul, zero = F.add, F.mul, F.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                if a != zero and b != zero:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return self.apply(other)
        self._check(other)
        if self.ncols != other.nrows:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        add, mul, zero = F.add, F.mul, F.zero
        ocols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a != zero]
            row = []
            for col in ocols:
                acc = zero
                for k, a in nz:
                    b = col[k]
                    if b != zero:
                        acc = add(acc, mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(F, out, other.ncols)

    def trace(self):
        add = self.field.add
        acc = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = add(acc, self.rows[i][i])
        return acc

    # elimination ------------------------------------------------------------
    def rref(self):
        """Return ``(R, pivots)`` with ``R`` holding only the nonzero rows."""
        rows, piv = rref_rows(self.field, self.rows, self.ncols)
        return Matrix(self.field, rows, self.ncols), piv

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Canonical kernel basis: one vector per free column."""
        R, piv = self.rref()
        return _kernel_from_rref(self.field, R.rows, piv, self.ncols)

    def det(self):
        if not self.is_square():
            raise SizeMismatch("determinant of a non-square matrix")
        return det_rows(self.field, self.rows)

    def solve(self, b):
        """One solution ``x`` of ``self @ x == b``; raises Inconsistent."""
        return self.solve_many([b])[0]

    def solve_many(self, rhs):
        F = self.field
        n = self.ncols
        k = len(rhs)
        aug = [tuple(r) + tuple(b[i] for b in rhs) for i, r in enumerate(self.rows)]
        R, piv = rref_rows(F, aug, n + k)
        if any(c >= n for c in piv):
            raise Inconsistent("linear system has no solution")
        sols = []
        for t in range(k):
            x = [F.zero] * n
            for i, c in enumerate(piv):
                x[c] = R[i][n + t]
            sols.append(tuple(x))
        return sols

    def solve_matrix(self, B: "Matrix") -> "Matrix":
        """``X`` with ``self @ X == B``."""
        sols = self.solve_many(B.columns())
        return Matrix.from_columns(self.field, sols, self.ncols)

    def inverse(self):
        if not self.is_square():
            raise SizeMismatch("inverse of a non-square matrix")
        n = self.nrows
        F = self.field
        I = Matrix.identity(F, n)
        aug = [r + I.rows[i] for i, r in enumerate(self.rows)]
        R, piv = rref_rows(F, aug, 2 * n)
        if piv[:n] != list(range(n)) or len(piv) < n:
            raise SingularMatrix("matrix is singular")
        return Matrix(F, [r[n:] for r in R], n)


def _kernel_from_rref(F, R, piv, ncols):
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [F.zero] * ncols
        v[f] = F.one
        for i, c in enumerate(piv):
            a = R[i][f]
            if a != F.zero:
                v[c] = F.neg(a)
        basis.append(tuple(v))
    return basis


class SolveSuite(NamedTuple):
    rref: Matrix
    pivots: list
    rank: int
    kernel: list
    solutions: list


def solve_suite(A: Matrix, rhs=()) -> SolveSuite:
    """RREF, rank, kernel basis and particular solutions of ``A x = b`` for each ``b``."""
    R, piv = A.rref()
    kernel = _kernel_from_rref(A.field, R.rows, piv, A.ncols)
    sols = A.solve_many(list(rhs)) if rhs else []
    return SolveSuite(R, piv, len(piv), kernel, sols)
