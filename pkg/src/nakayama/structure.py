"""Jacobson radical, socles, the semisimple quotient and locality.

The radical is computed from traces of the left regular representation.
In characteristic 0 or ``p > dim`` it is the kernel of the trace form
``(x, y) -> Tr(L_x L_y)``.  In small positive characteristic the algebra is
first viewed over its prime field and the kernel of the trace form is cut
down by the sequence of integer-lifted trace functionals of Cohen, Ivanyos
and Wales (1997), which is exact over any finite field.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra import Algebra, restrict_structure
from .errors import AlgebraError, CharTooSmall, Inconsistent
from .fields import ExtensionField, PrimeField, RationalField
from .linalg import Matrix, Subspace

__all__ = [
    "trace_form",
    "radical",
    "left_socle",
    "right_socle",
    "semisimple_quotient",
    "QuotientMap",
    "radical_index",
    "is_local",
    "LocalResult",
    "StructureReport",
    "analyze_structure",
    "EXHAUSTIVE_UNIT_LIMIT",
]

EXHAUSTIVE_UNIT_LIMIT = 1 << 20


def trace_form(A: Algebra) -> Matrix:
    """``T[i][j] = Tr(L_{e_i} L_{e_j})``."""
    L = A.L
    n = A.dim
    rows = [[(L[i] @ L[j]).trace() for j in range(n)] for i in range(n)]
    return Matrix(A.field, rows, n)


def radical_index(A: Algebra, J: Subspace) -> int:
    """Least ``m >= 1`` with ``J^m = 0``; raises if ``J`` is not nilpotent."""
    P, m = J, 1
    while not P.is_zero():
        nxt = A.product_space(P, J)
        if nxt == P:
            raise AlgebraError("subspace is not nilpotent")
        P, m = nxt, m + 1
    return m


def _check_radical(A: Algebra, J: Subspace) -> Subspace:
    if not (A.is_left_ideal(J) and A.is_right_ideal(J)):
        raise AlgebraError("computed radical is not a two-sided ideal")
    radical_index(A, J)
    return J


def radical(A: Algebra, method: str = "auto") -> Subspace:
    """Jacobson radical of ``A``.

    ``method="dickson"`` uses the trace form only and raises CharTooSmall when
    ``0 < char <= dim`` and the trace form is degenerate.  ``"auto"`` falls
    back to the prime-field algorithm in that case.
    """
    F = A.field
    p = F.characteristic
    T = trace_form(A)
    K = Subspace.kernel_of(T)
    if K.is_zero() or p == 0 or p > A.dim:
        return _check_radical(A, K)
    if method == "dickson":
        raise CharTooSmall(f"trace form is degenerate and char {p} <= dim {A.dim}")
    if isinstance(F, ExtensionField):
        small, bridge, unbridge = restrict_structure(A)
        Js = _radical_prime_field(small)
        J = A.span([unbridge(v) for v in Js.basis])
    else:
        J = _radical_prime_field(A)
    return _check_radical(A, J)


def _int_matpow_trace(M, e, mod):
    # trace of M^e over Z/mod, square-and-multiply
    n = len(M)

    def mul(X, Y):
        Yt = list(zip(*Y))
        return [[sum(a * b for a, b in zip(row, col)) % mod for col in Yt] for row in X]

    R = [[int(i == j) for j in range(n)] for i in range(n)]
    B = [[x % mod for x in row] for row in M]
    while e:
        if e & 1:
            R = mul(R, B)
        B = mul(B, B)
        e >>= 1
    return sum(R[i][i] for i in range(n)) % mod


def _radical_prime_field(A: Algebra) -> Subspace:
    F = A.field
    if not isinstance(F, PrimeField):  # pragma: no cover - callers restrict first
        raise CharTooSmall("prime-field radical needs a prime field")
    p, n = F.p, A.dim
    l = 0
    while p ** (l + 1) <= n:
        l += 1
    I = Subspace.kernel_of(trace_form(A))
    for i in range(1, l + 1):
        if I.is_zero():
            break
        mod = p ** (i + 1)
        q = p**i

        def g(a):
            t = _int_matpow_trace(A.left_mul_lin(a).rows, q, mod)
            if t % q:
                raise AlgebraError("lifted trace not divisible by p^i")
            return (t // q) % p

        # g_i is linear on I_{i-1}; spot-check before relying on it
        if len(I.basis) >= 2:
            a, b = I.basis[0], I.basis[1]
            if (g(a) + g(b)) % p != g(A.add(a, b)):
                raise AlgebraError("lifted trace functional failed linearity check")
        rows = []
        for j in range(n):
            bj = A.basis(j)
            rows.append(tuple(g(A.mul(a, bj)) for a in I.basis))
        coeff = Subspace.kernel_of(Matrix(F, rows, len(I.basis)))
        I = A.span([I.vector(c) for c in coeff.basis])
    return I


def left_socle(A: Algebra, J: Subspace | None = None) -> Subspace:
    """``{x : J x = 0}``."""
    J = radical(A) if J is None else J
    if J.is_zero():
        return A.full_space()
    rows = []
    for j in J.basis:
        rows.extend(A.left_mul(j).rows)
    return Subspace.kernel_of(Matrix(A.field, rows, A.dim))


def right_socle(A: Algebra, J: Subspace | None = None) -> Subspace:
    """``{x : x J = 0}``."""
    J = radical(A) if J is None else J
    if J.is_zero():
        return A.full_space()
    rows = []
    for j in J.basis:
        rows.extend(A.right_mul(j).rows)
    return Subspace.kernel_of(Matrix(A.field, rows, A.dim))


@dataclass(frozen=True)
class QuotientMap:
    """Projection ``R -> R/J`` on the non-pivot coordinates of ``J``."""

    algebra: Algebra
    quotient: Algebra
    kernel: Subspace
    coords: tuple

    def __call__(self, v):
        r = self.kernel.reduce(v)
        return tuple(r[c] for c in self.coords)

    def lift(self, w):
        F = self.algebra.field
        out = [F.zero] * self.algebra.dim
        for c, x in zip(self.coords, w):
            out[c] = x
        return tuple(out)

    def matrix(self) -> Matrix:
        cols = [self(self.algebra.basis(j)) for j in range(self.algebra.dim)]
        return Matrix.from_columns(self.algebra.field, cols, len(self.coords))

    def image(self, U: Subspace) -> Subspace:
        return self.quotient.span([self(v) for v in U.basis])

    def preimage(self, W: Subspace) -> Subspace:
        return self.algebra.span([self.lift(w) for w in W.basis]) + self.kernel


def semisimple_quotient(A: Algebra, J: Subspace | None = None):
    """``(R/J, projection)``; the projection is checked multiplicative."""
    J = radical(A) if J is None else J
    F = A.field
    piv = set(J.pivots)
    coords = tuple(c for c in range(A.dim) if c not in piv)
    d = len(coords)
    # temporary map to compute quotient coordinates before the quotient exists
    reduce = lambda v: tuple(J.reduce(v)[c] for c in coords)  # noqa: E731
    sc = []
    for a, ca in enumerate(coords):
        for b, cb in enumerate(coords):
            for m, x in enumerate(reduce(A.mul(A.basis(ca), A.basis(cb)))):
                if x != F.zero:
                    sc.append((a, b, m, x))
    labels = [A.labels[c] for c in coords]
    # supplied simples live in R; their images are the simple left ideals of R/J
    simples = [Subspace(F, d, [reduce(v) for v in V.basis]) for V in A.simples] if A.simples else None
    Q = Algebra(F, d, sc, one=reduce(A.one), labels=labels, simples=simples, name=f"{A.name}/J")
    pi = QuotientMap(A, Q, J, coords)
    for i in range(A.dim):
        for j in range(A.dim):
            if pi(A.mul(A.basis(i), A.basis(j))) != Q.mul(pi(A.basis(i)), pi(A.basis(j))):
                raise AlgebraError("projection onto the quotient is not multiplicative")
    return Q, pi


@dataclass(frozen=True)
class LocalResult:
    verdict: str  # "yes" | "no" | "unknown"
    reason: str
    witness: tuple | None = None

    def __bool__(self):
        return self.verdict == "yes"


def _min_poly(Q: Algebra, a):
    """Monic minimal polynomial of ``a``, coefficients low to high."""
    F = Q.field
    powers = [Q.one]
    while True:
        nxt = Q.mul(powers[-1], a)
        M = Matrix.from_columns(F, powers, Q.dim)
        try:
            c = M.solve(nxt)
        except Inconsistent:
            powers.append(nxt)
            continue
        return [F.neg(x) for x in c] + [F.one]


def _factor(F, poly):
    """Irreducible factors as coefficient lists (low to high), or None."""
    import sympy

    t = sympy.Symbol("t")
    if isinstance(F, RationalField):
        P = sympy.Poly([sympy.Rational(x.numerator, x.denominator) for x in reversed(poly)], t, domain="QQ")
    elif isinstance(F, PrimeField):
        P = sympy.Poly([int(x) for x in reversed(poly)], t, modulus=F.p)
    else:
        return None
    _, facs = P.factor_list()
    out = []
    for f, _mult in facs:
        coeffs = [F.coerce(_sym_to_int_or_frac(c, F)) for c in reversed(f.all_coeffs())]
        out.append(coeffs)
    return out


def _sym_to_int_or_frac(c, F):
    import sympy
    from fractions import Fraction

    if isinstance(F, RationalField):
        c = sympy.Rational(c)
        return Fraction(int(c.p), int(c.q))
    return int(c) % F.p


def _poly_eval(Q, coeffs, a):
    out = Q.zero
    for c in reversed(coeffs):
        out = Q.add(Q.mul(out, a), Q.scale(c, Q.one))
    return out


def is_local(A: Algebra, J: Subspace | None = None, seed: int = 0, samples: int = 32) -> LocalResult:
    """Is ``R/J`` a division ring?  Tri-state answer."""
    Q, pi = semisimple_quotient(A, J)
    F, d = Q.field, Q.dim
    if d == 1:
        return LocalResult("yes", "semisimple quotient is one-dimensional")
    if F.order is not None and F.order**d <= EXHAUSTIVE_UNIT_LIMIT:
        elems = list(F.elements())
        for v in itertools.product(elems, repeat=d):
            if all(x == F.zero for x in v):
                continue
            if Q.inverse(v) is None:
                return LocalResult("no", "nonzero non-unit in the quotient", pi.lift(v))
        return LocalResult("yes", "every nonzero element of the quotient is a unit")
    rng = random.Random(seed)
    stream = list(Q.basis_vectors()) + [Q.random_element(rng) for _ in range(samples)]
    commutative = Q.is_commutative()
    for a in stream:
        if all(x == F.zero for x in a):
            continue
        mp = _min_poly(Q, a)
        facs = _factor(F, mp)
        if facs is None:
            break
        if len(facs) > 1 or sum(len(f) - 1 for f in facs) < len(mp) - 1:
            # a proper factor evaluated at a is a zero divisor
            g = facs[0]
            z = _poly_eval(Q, g, a)
            return LocalResult("no", "minimal polynomial of a quotient element is reducible", pi.lift(z))
        if commutative and len(mp) - 1 == d:
            return LocalResult("yes", "quotient is generated by an element with irreducible minimal polynomial")
    return LocalResult("unknown", f"{len(stream)} sampled quotient elements had irreducible minimal polynomials")


@dataclass(frozen=True)
class StructureReport:
    radical: Subspace
    socle: Subspace
    right_socle: Subspace
    quotient: Algebra
    projection: QuotientMap
    radical_index: int
    local: LocalResult

    def summary(self) -> dict:
        return {
            "radical_dim": self.radical.dim,
            "radical": self.radical.to_strings(),
            "socle_dim": self.socle.dim,
            "socle": self.socle.to_strings(),
            "right_socle_dim": self.right_socle.dim,
            "quotient_dim": self.quotient.dim,
            "radical_index": self.radical_index,
            "local": self.local.verdict,
            "local_reason": self.local.reason,
        }


def analyze_structure(A: Algebra, seed: int = 0) -> StructureReport:
    J = radical(A)
    S = left_socle(A, J)
    Sr = right_socle(A, J)
    if not (A.is_left_ideal(S) and A.is_right_ideal(S)):
        raise AlgebraError("left socle is not a two-sided ideal")
    Q, pi = semisimple_quotient(A, J)
    return StructureReport(J, S, Sr, Q, pi, radical_index(A, J), is_local(A, J, seed=seed))

