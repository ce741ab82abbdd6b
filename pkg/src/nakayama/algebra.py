"""Finite-dimensional unital associative algebras given by structure constants.

``e_i * e_j = sum_m c[i][j][m] e_m``.  Elements are coordinate tuples.
Left and right regular representations follow the column convention:
``left_mul(a) @ b == a*b`` and ``right_mul(a) @ b == b*a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    AlgebraError,
    BadParams,
    Inconclusive,
    IdentityInvalid,
    Inconsistent,
    NotAssociative,
    NotAutomorphism,
    NotExtensionField,
    SingularMatrix,
)
from .fields import ExtensionField, Field
from .linalg import (
    FOUND,
    NONE_CERTIFIED,
    Matrix,
    SpanOracleResult,
    Subspace,
    lin_comb,
    nonsingular_in_span,
    vec_sub,
)

__all__ = [
    "Algebra",
    "AlgebraMap",
    "InnerResult",
    "MAX_DENSE_DIM",
    "restrict_structure",
]

MAX_DENSE_DIM = 64


class Algebra:
    """Structure-constant algebra over an exact field.

    ``structure_constants`` is an iterable of ``(i, j, m, value)`` quadruples;
    omitted entries are zero.  When ``one`` is omitted a two-sided identity is
    solved for and must exist uniquely.
    """

    def __init__(self, field: Field, dim: int, structure_constants, one=None, labels=None, simples=None, name=""):
        if dim < 1:
            raise BadParams("algebra dimension must be positive")
        if dim > MAX_DENSE_DIM:
            raise BadParams(f"dimension {dim} exceeds the dense limit {MAX_DENSE_DIM}")
        F = field
        self.field = F
        self.dim = n = dim
        self.name = name
        self.labels = list(labels) if labels else [f"e{i}" for i in range(n)]
        if len(self.labels) != n:
            raise BadParams("wrong number of basis labels")
        table = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
        for i, j, m, value in structure_constants:
            if not (0 <= i < n and 0 <= j < n and 0 <= m < n):
                raise BadParams(f"structure constant index ({i},{j},{m}) out of range")
            v = value if F.contains(value) else F.coerce(value)
            table[i][j][m] = F.add(table[i][j][m], v)
        self._prod = [[tuple(table[i][j]) for j in range(n)] for i in range(n)]
        self._sparse = [
            [[(m, c) for m, c in enumerate(self._prod[i][j]) if c != F.zero] for j in range(n)]
            for i in range(n)
        ]
        self._L = None
        self._R = None
        if one is None:
            self.one = self._solve_identity()
        else:
            self.one = tuple(x if F.contains(x) else F.coerce(x) for x in one)
            if len(self.one) != n:
                raise BadParams("identity vector has the wrong length")
        self.simples = simples  # optional list of Subspace, in algebra coordinates

    # -- basic data -----------------------------------------------------------
    @property
    def structure_constants(self):
        """Sparse ``(i, j, m, value)`` quadruples."""
        return [
            (i, j, m, c)
            for i in range(self.dim)
            for j in range(self.dim)
            for m, c in self._sparse[i][j]
        ]

    def product_table(self):
        return self._prod

    def basis(self, i):
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def basis_vectors(self):
        return [self.basis(i) for i in range(self.dim)]

    @property
    def zero(self):
        return (self.field.zero,) * self.dim

    def element(self, coords):
        F = self.field
        return tuple(F.coerce(x) for x in coords)

    def __repr__(self):
        return f"Algebra({self.name or 'unnamed'}, dim={self.dim}, field={self.field!r})"

    # -- arithmetic -------------------------------------------------------------
    def mul(self, a, b):
        F = self.field
        add, fmul, zero = F.add, F.mul, F.zero
        out = [zero] * self.dim
        sparse = self._sparse
        for i, x in enumerate(a):
            if x == zero:
                continue
            row = sparse[i]
            for j, y in enumerate(b):
                if y == zero:
                    continue
                xy = fmul(x, y)
                for m, c in row[j]:
                    out[m] = add(out[m], fmul(xy, c))
        return tuple(out)

    multiply = mul

    def add(self, a, b):
        add = self.field.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return vec_sub(self.field, a, b)

    def scale(self, c, a):
        mul = self.field.mul
        return tuple(mul(c, x) for x in a)

    def commutator(self, a, b):
        return self.sub(self.mul(a, b), self.mul(b, a))

    def power(self, a, k):
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def left_mul(self, a) -> Matrix:
        """Matrix of ``x -> a*x``."""
        cols = [self.mul(a, self.basis(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_mul(self, a) -> Matrix:
        """Matrix of ``x -> x*a``."""
        cols = [self.mul(self.basis(j), a) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    @property
    def L(self):
        """Left regular matrices of the basis elements."""
        if self._L is None:
            n = self.dim
            self._L = [
                Matrix.from_columns(self.field, [self._prod[i][j] for j in range(n)], n) for i in range(n)
            ]
        return self._L

    @property
    def R(self):
        """Right regular matrices of the basis elements."""
        if self._R is None:
            n = self.dim
            self._R = [
                Matrix.from_columns(self.field, [self._prod[j][i] for j in range(n)], n) for i in range(n)
            ]
        return self._R

    def left_mul_lin(self, a) -> Matrix:
        return _matrix_comb(self.field, a, self.L, self.dim)

    def right_mul_lin(self, a) -> Matrix:
        return _matrix_comb(self.field, a, self.R, self.dim)

    # -- validation ------------------------------------------------------------
    def _solve_identity(self):
        F, n = self.field, self.dim
        # u e_j = e_j and e_j u = e_j  <=>  R_{e_j} u = e_j, L_{e_j} u = e_j
        rows, rhs = [], []
        for j in range(n):
            ej = self.basis(j)
            for M in (self.R[j], self.L[j]):
                rows.extend(M.rows)
                rhs.extend(ej)
        A = Matrix(F, rows, n)
        try:
            u = A.solve(rhs)
        except Inconsistent:
            raise IdentityInvalid("algebra has no two-sided identity") from None
        if A.rank() != n:
            raise IdentityInvalid("identity is not unique")
        return u

    def validate(self):
        """Exhaustively check associativity and the identity; return ``self``."""
        n = self.dim
        e = self.basis_vectors()
        prod = self._prod
        for i in range(n):
            for j in range(n):
                eij = prod[i][j]
                for k in range(n):
                    if self.mul(eij, e[k]) != self.mul(e[i], prod[j][k]):
                        raise NotAssociative(i, j, k)
        for i in range(n):
            if self.mul(self.one, e[i]) != e[i] or self.mul(e[i], self.one) != e[i]:
                raise IdentityInvalid(f"identity fails on basis element {i}")
        return self

    def diagnostics(self):
        """``[]`` when valid, else a list of problem descriptions."""
        try:
            self.validate()
        except AlgebraError as exc:
            return [f"{type(exc).__name__}: {exc}"]
        return []

    # -- subspaces ------------------------------------------------------------
    def span(self, vectors) -> Subspace:
        return Subspace(self.field, self.dim, vectors)

    def full_space(self):
        return Subspace.full(self.field, self.dim)

    def zero_space(self):
        return Subspace.zero(self.field, self.dim)

    def product_space(self, U: Subspace, V: Subspace) -> Subspace:
        return self.span([self.mul(u, v) for u in U.basis for v in V.basis])

    def commutator_space(self) -> Subspace:
        """``[R, R]``, spanned by ``e_i e_j - e_j e_i``."""
        n, prod = self.dim, self._prod
        vecs = [vec_sub(self.field, prod[i][j], prod[j][i]) for i in range(n) for j in range(i + 1, n)]
        return self.span(vecs)

    def twisted_commutator_space(self, sigma: "AlgebraMap") -> Subspace:
        """Span of ``e_i e_j - e_j sigma(e_i)``; checked closed under the centre."""
        sigma.require_automorphism()
        n = self.dim
        e = self.basis_vectors()
        images = [sigma.image(i) for i in range(n)]
        vecs = [vec_sub(self.field, self._prod[i][j], self.mul(e[j], images[i])) for i in range(n) for j in range(n)]
        C = self.span(vecs)
        for z in self.center().basis:
            for c in C.basis:
                if self.mul(z, c) not in C or self.mul(c, z) not in C:  # pragma: no cover - algebraic identity
                    raise AlgebraError("twisted commutator span not closed under the centre")
        return C

    def center(self) -> Subspace:
        """``{z : L_z = R_z}``."""
        n = self.dim
        sub = self.field.sub
        rows = []
        # entry (p, q) of L_z - R_z is linear in z
        for p in range(n):
            for q in range(n):
                rows.append(tuple(sub(self.L[i].rows[p][q], self.R[i].rows[p][q]) for i in range(n)))
        return Subspace.kernel_of(Matrix(self.field, rows, n))

    def is_commutative(self):
        return self.commutator_space().is_zero()

    def largest_left_ideal_in(self, U: Subspace) -> Subspace:
        """``{x : e_i x in U for all i}``, the largest left ideal inside ``U``."""
        ann = U.annihilator()
        if not ann.basis:
            return self.full_space()
        rows = []
        for Li in self.L:
            for f in ann.basis:
                # f . (L_i x) = (L_i^T f) . x
                rows.append(Li.T.apply(f))
        return Subspace.kernel_of(Matrix(self.field, rows, self.dim))

    def largest_right_ideal_in(self, U: Subspace) -> Subspace:
        ann = U.annihilator()
        if not ann.basis:
            return self.full_space()
        rows = [Ri.T.apply(f) for Ri in self.R for f in ann.basis]
        return Subspace.kernel_of(Matrix(self.field, rows, self.dim))

    def left_ideal_generated(self, x) -> Subspace:
        return self.span([self.mul(self.basis(i), x) for i in range(self.dim)])

    def right_ideal_generated(self, x) -> Subspace:
        return self.span([self.mul(x, self.basis(i)) for i in range(self.dim)])

    def is_left_ideal(self, U: Subspace) -> bool:
        return all(self.mul(self.basis(i), u) in U for i in range(self.dim) for u in U.basis)

    def is_right_ideal(self, U: Subspace) -> bool:
        return all(self.mul(u, self.basis(i)) in U for i in range(self.dim) for u in U.basis)

    # -- units ----------------------------------------------------------------
    def inverse(self, a):
        """Two-sided inverse of ``a`` or ``None``."""
        La = self.left_mul(a)
        try:
            b = La.solve(self.one)
        except Inconsistent:
            return None
        if self.mul(b, a) != self.one or self.mul(a, b) != self.one:
            return None
        return b

    is_unit = inverse

    def random_element(self, rng):
        return tuple(self.field.random(rng) for _ in range(self.dim))

    def random_unit(self, rng, tries: int = 200):
        for _ in range(tries):
            a = self.random_element(rng)
            if self.inverse(a) is not None:
                return a
        raise AlgebraError("no unit found by random sampling")

    # -- automorphisms ---------------------------------------------------------
    def is_inner(self, sigma: "AlgebraMap", seed: int = 0, **oracle_kw) -> "InnerResult":
        """Find a unit ``u`` with ``sigma(r) = u^-1 r u`` for all ``r``."""
        sigma.require_automorphism()
        n = self.dim
        images = [sigma.image(i) for i in range(n)]
        # w sigma(e_i) - e_i w = (R_{sigma(e_i)} - L_i) w = 0
        rows = []
        for i in range(n):
            M = self.right_mul(images[i]) - self.L[i]
            rows.extend(M.rows)
        W = Subspace.kernel_of(Matrix(self.field, rows, n))
        mats = [self.left_mul(w) for w in W.basis]
        res = nonsingular_in_span(mats, seed=seed, **oracle_kw) if mats else SpanOracleResult(
            NONE_CERTIFIED, witness="empty"
        )
        if res.verdict == FOUND:
            u = lin_comb(self.field, res.coefficients, list(W.basis), n)
            uinv = self.inverse(u)
            if uinv is None:  # pragma: no cover - determinant was verified
                raise AlgebraError("span oracle returned a non-unit")
            for i in range(n):
                if self.mul(self.mul(uinv, self.basis(i)), u) != images[i]:  # pragma: no cover
                    raise AlgebraError("inner witness failed verification")
            return InnerResult("inner", u, res, W.dim)
        if res.verdict == NONE_CERTIFIED:
            return InnerResult("outer", None, res, W.dim)
        return InnerResult("inconclusive", None, res, W.dim)

    def identity_map(self) -> "AlgebraMap":
        return AlgebraMap(self, Matrix.identity(self.field, self.dim))

    def inner_by(self, u) -> "AlgebraMap":
        """``r -> u^-1 r u``."""
        uinv = self.inverse(u)
        if uinv is None:
            from .errors import NotUnit

            raise NotUnit("element is not a unit")
        return AlgebraMap(self, self.left_mul(uinv) @ self.right_mul(u))

    # -- constructions ---------------------------------------------------------
    def opposite(self) -> "Algebra":
        n = self.dim
        sc = [(j, i, m, c) for i in range(n) for j in range(n) for m, c in self._sparse[i][j]]
        return Algebra(self.field, n, sc, one=self.one, labels=self.labels, name=f"{self.name}^op")

    def direct_product(self, other: "Algebra") -> "Algebra":
        if other.field != self.field:
            raise BadParams("direct product of algebras over different fields")
        n, k = self.dim, other.dim
        sc = list(self.structure_constants)
        sc += [(n + i, n + j, n + m, c) for i, j, m, c in other.structure_constants]
        one = tuple(self.one) + tuple(other.one)
        labels = [f"{l}@1" for l in self.labels] + [f"{l}@2" for l in other.labels]
        return Algebra(self.field, n + k, sc, one=one, labels=labels, name=f"{self.name}x{other.name}")


def _matrix_comb(F, coeffs, mats, n):
    add, mul, zero = F.add, F.mul, F.zero
    out = [[zero] * n for _ in range(n)]
    for c, M in zip(coeffs, mats):
        if c == zero:
            continue
        for i, row in enumerate(M.rows):
            orow = out[i]
            for j, a in enumerate(row):
                if a != zero:
                    orow[j] = add(orow[j], mul(c, a))
    return Matrix(F, out, n)


@dataclass(frozen=True)
class InnerResult:
    verdict: str  # "inner" | "outer" | "inconclusive"
    unit: tuple | None
    oracle: SpanOracleResult = dc_field(repr=False)
    space_dim: int = 0

    @property
    def is_inner(self):
        return self.verdict == "inner"

    def require(self):
        if self.verdict == "inconclusive":
            raise Inconclusive("inner-automorphism test inconclusive")
        return self.verdict == "inner"


class AlgebraMap:
    """Linear endomorphism of an algebra; column ``j`` is the image of ``e_j``."""

    def __init__(self, algebra: Algebra, matrix: Matrix, kind: str = "endomorphism"):
        if matrix.shape != (algebra.dim, algebra.dim):
            raise BadParams("map matrix has the wrong shape")
        self.algebra = algebra
        self.matrix = matrix
        self.kind = kind

    def __call__(self, x):
        return self.matrix.apply(x)

    def image(self, i):
        return self.matrix.column(i)

    def __eq__(self, other):
        return isinstance(other, AlgebraMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"AlgebraMap({self.matrix!r})"

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """``self o other``."""
        return AlgebraMap(self.algebra, self.matrix @ other.matrix)

    __matmul__ = compose

    def inverse(self) -> "AlgebraMap":
        try:
            return AlgebraMap(self.algebra, self.matrix.inverse(), self.kind)
        except SingularMatrix:
            raise NotAutomorphism("map is not invertible") from None

    def is_identity(self):
        return self.matrix == Matrix.identity(self.algebra.field, self.algebra.dim)

    def automorphism_failures(self):
        """List of failed automorphism checks (empty when it is one)."""
        A = self.algebra
        problems = []
        if self.matrix.rank() != A.dim:
            problems.append("not invertible")
        if self(A.one) != A.one:
            problems.append("does not fix the identity")
        imgs = [self.image(i) for i in range(A.dim)]
        prod = A.product_table()
        for i in range(A.dim):
            for j in range(A.dim):
                if self(prod[i][j]) != A.mul(imgs[i], imgs[j]):
                    problems.append(f"not multiplicative on (e{i}, e{j})")
                    return problems
        return problems

    def is_automorphism(self):
        return not self.automorphism_failures()

    def require_automorphism(self):
        if self.kind == "automorphism":
            return self
        problems = self.automorphism_failures()
        if problems:
            raise NotAutomorphism("; ".join(problems))
        self.kind = "automorphism"
        return self


def restrict_structure(A: Algebra):
    """Structure constants of ``A`` over the base of its extension field.

    Returns ``(small_algebra, bridge, unbridge)`` where the small basis is
    ``e_i t^s`` at index ``i*d + s``.
    """
    K = A.field
    if not isinstance(K, ExtensionField):
        raise NotExtensionField(f"{K} is not an extension field")
    k, d, n = K.base, K.d, A.dim
    powers = [K._basis(s) for s in range(d)]
    sc = []
    prod = A.product_table()
    for i in range(n):
        for j in range(n):
            for m in range(n):
                c = prod[i][j][m]
                if c == K.zero:
                    continue
                for s in range(d):
                    for t in range(d):
                        coeff = K.mul(c, K.mul(powers[s], powers[t]))
                        for u, v in enumerate(K.prime_coordinates(coeff)):
                            if v != k.zero:
                                sc.append((i * d + s, j * d + t, m * d + u, v))

    def bridge(v):
        out = []
        for x in v:
            out.extend(K.prime_coordinates(x))
        return tuple(out)

    def unbridge(w):
        return tuple(K.from_coordinates(w[i * d : (i + 1) * d]) for i in range(n))

    labels = [f"{A.labels[i]}*t^{s}" if s else A.labels[i] for i in range(n) for s in range(d)]
    small = Algebra(k, n * d, sc, one=bridge(A.one), labels=labels, name=f"{A.name}|{k!r}")
    return small, bridge, unbridge

