"""Subspaces of ``k^n`` held in canonical reduced row-echelon form."""

from __future__ import annotations

from ..errors import AmbientMismatch, FieldMismatch, NotDisjoint
from .matrix import Matrix, _kernel_from_rref, rref_rows

__all__ = ["Subspace", "complement_through"]


class Subspace:
    """Span of vectors in ``field^ambient_dim``.

    Two subspaces are equal iff their RREF bases coincide, so equality and
    hashing are exact.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim: int, vectors=()):
        self.field = field
        self.ambient_dim = ambient_dim
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        self.basis, self.pivots = rref_rows(field, vectors, ambient_dim)
        self.basis = tuple(self.basis)
        self.pivots = tuple(self.pivots)

    @classmethod
    def _raw(cls, field, n, basis, pivots):
        obj = cls.__new__(cls)
        obj.field, obj.ambient_dim = field, n
        obj.basis, obj.pivots = tuple(basis), tuple(pivots)
        return obj

    @classmethod
    def zero(cls, F, n):
        return cls._raw(F, n, (), ())

    @classmethod
    def full(cls, F, n):
        return cls._raw(
            F, n, [tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)], range(n)
        )

    @classmethod
    def kernel_of(cls, M: Matrix):
        R, piv = M.rref()
        return cls(M.field, M.ncols, _kernel_from_rref(M.field, R.rows, piv, M.ncols))

    @property
    def dim(self):
        return len(self.basis)

    @property
    def codim(self):
        return self.ambient_dim - len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return len(self.basis) == self.ambient_dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        fmt = self.field.format
        vecs = ", ".join("(" + ",".join(fmt(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(dim={self.dim} in {self.ambient_dim}: [{vecs}])"

    def to_strings(self):
        fmt = self.field.format
        return [[fmt(x) for x in v] for v in self.basis]

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")

    # membership -------------------------------------------------------------
    def reduce(self, v):
        """Remainder of ``v`` after eliminating the pivot coordinates."""
        F = self.field
        sub, mul, zero = F.sub, F.mul, F.zero
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f != zero:
                for j, a in enumerate(row):
                    if a != zero:
                        v[j] = sub(v[j], mul(f, a))
        return tuple(v)

    def __contains__(self, v):
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length differs from ambient dimension")
        z = self.field.zero
        return all(x == z for x in self.reduce(v))

    member = __contains__

    def coordinates(self, v):
        """Coordinates of a member ``v`` with respect to ``basis``."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def vector(self, coords):
        from .matrix import lin_comb

        return lin_comb(self.field, coords, self.basis, self.ambient_dim)

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(v in self for v in other.basis)

    def __le__(self, other):
        return other.contains(self)

    def __ge__(self, other):
        return self.contains(other)

    # lattice operations ------------------------------------------------------
    def _zassenhaus(self, other):
        F, n = self.field, self.ambient_dim
        zero = (F.zero,) * n
        rows = [u + u for u in self.basis] + [v + zero for v in other.basis]
        R, piv = rref_rows(F, rows, 2 * n)
        sum_rows = [r[:n] for r, c in zip(R, piv) if c < n]
        meet_rows = [r[n:] for r, c in zip(R, piv) if c >= n]
        return sum_rows, [c for c in piv if c < n], meet_rows

    def __add__(self, other):
        self._check(other)
        rows, piv, _ = self._zassenhaus(other)
        return Subspace._raw(self.field, self.ambient_dim, rows, piv)

    def sum(self, other):
        return self + other

    def intersection(self, other):
        """Zassenhaus intersection."""
        self._check(other)
        _, _, meet = self._zassenhaus(other)
        return Subspace(self.field, self.ambient_dim, meet)

    __and__ = intersection

    def annihilator(self) -> "Subspace":
        """``{f : sum_i f_i v_i = 0 for all v}`` in the dual coordinates."""
        F, n = self.field, self.ambient_dim
        return Subspace(F, n, _kernel_from_rref(F, self.basis, list(self.pivots), n))

    def complement_basis(self):
        """Standard basis vectors at the non-pivot columns."""
        F, n = self.field, self.ambient_dim
        pivs = set(self.pivots)
        return [tuple(F.one if i == j else F.zero for i in range(n)) for j in range(n) if j not in pivs]

    def image(self, M: Matrix) -> "Subspace":
        return Subspace(self.field, M.nrows, [M.apply(v) for v in self.basis])

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient_dim)


def complement_through(inner: Subspace, avoid: Subspace) -> Subspace:
    """A subspace ``S' >= inner`` with ``S' & avoid = 0`` and ``S' + avoid`` everything.

    Greedy pivot completion by standard basis vectors, so the result is
    deterministic.
    """
    inner._check(avoid)
    if not inner.intersection(avoid).is_zero():
        raise NotDisjoint("inner subspace meets the subspace to avoid")
    F, n = inner.field, inner.ambient_dim
    vectors = list(inner.basis)
    current = inner + avoid
    for j in range(n):
        if current.is_full():
            break
        e = tuple(F.one if i == j else F.zero for i in range(n))
        if e not in current:
            vectors.append(e)
            current = current + Subspace(F, n, [e])
    return Subspace(F, n, vectors)
