"""Modules and bimodules given by action matrices.

Vectors are columns.  A left module ``X`` stores ``act[i]`` with
``e_i . x = act[i] @ x``.  A right module stores ``act[i]`` with
``x . e_i = act[i] @ x``, so ``act(ab) = act(b) act(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, AlgebraMap
from .errors import AlgebraError, NotAutomorphism, NotSubmodule, SizeMismatch
from .linalg import FOUND, NONE_CERTIFIED, Matrix, SpanOracleResult, Subspace, dot, nonsingular_in_span

__all__ = [
    "LeftModule",
    "RightModule",
    "Bimodule",
    "regular_left",
    "regular_right",
    "regular_bimodule",
    "k_dual",
    "regular_bimodule_dual",
    "r_dual",
    "twist",
    "hom_space",
    "IsoResult",
    "modules_isomorphic",
    "bimodules_isomorphic",
    "socle_module",
    "quotient_module",
    "DualTwistReport",
    "dual_twist_check",
]


def _comb(F, coeffs, mats, d):
    out = Matrix.zeros(F, d, d)
    for c, M in zip(coeffs, mats):
        if c != F.zero:
            out = out + M.scale(c)
    return out


class _Module:
    side = ""

    def __init__(self, algebra: Algebra, act, name: str = "", check: bool = True):
        self.algebra = algebra
        self.act = [m if isinstance(m, Matrix) else Matrix(algebra.field, m) for m in act]
        if len(self.act) != algebra.dim:
            raise SizeMismatch("one action matrix per basis element is required")
        self.dim = self.act[0].nrows if self.act else 0
        for m in self.act:
            if m.shape != (self.dim, self.dim):
                raise SizeMismatch("action matrices must be square of the module dimension")
        self.name = name
        if check:
            self.validate()

    @property
    def field(self):
        return self.algebra.field

    def action(self, a) -> Matrix:
        return _comb(self.field, a, self.act, self.dim)

    def _law(self, i, j):
        raise NotImplementedError

    def validate(self):
        A = self.algebra
        if self.action(A.one) != Matrix.identity(self.field, self.dim):
            raise AlgebraError(f"{self.side} module: identity does not act trivially")
        prod = A.product_table()
        for i in range(A.dim):
            for j in range(A.dim):
                if self.action(prod[i][j]) != self._law(i, j):
                    raise AlgebraError(f"{self.side} module law fails at ({i},{j})")
        return self

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, over={self.algebra.name!r})"

    def _restricted(self, U: Subspace):
        mats = []
        for M in self.act:
            cols = []
            for u in U.basis:
                v = M.apply(u)
                if v not in U:
                    raise NotSubmodule("subspace is not closed under the action")
                cols.append(U.coordinates(v))
            mats.append(Matrix.from_columns(self.field, cols, U.dim))
        return mats

    def _quotiented(self, U: Subspace):
        F = self.field
        piv = set(U.pivots)
        coords = [c for c in range(self.dim) if c not in piv]
        for M in self.act:
            for u in U.basis:
                if M.apply(u) not in U:
                    raise NotSubmodule("subspace is not closed under the action")
        mats = []
        for M in self.act:
            cols = []
            for c in coords:
                r = U.reduce(M.column(c))
                cols.append(tuple(r[k] for k in coords))
            mats.append(Matrix.from_columns(F, cols, len(coords)))
        return mats

    def submodule(self, U: Subspace):
        return type(self)(self.algebra, self._restricted(U), name=f"sub({self.name})")

    def quotient(self, U: Subspace):
        return type(self)(self.algebra, self._quotiented(U), name=f"{self.name}/U")

    def to_strings(self):
        return [M.to_strings() for M in self.act]


class LeftModule(_Module):
    side = "left"

    def _law(self, i, j):
        return self.act[i] @ self.act[j]


class RightModule(_Module):
    side = "right"

    def _law(self, i, j):
        return self.act[j] @ self.act[i]


class Bimodule:
    """Commuting left and right actions on one space."""

    def __init__(self, left: LeftModule, right: RightModule, name: str = ""):
        if left.algebra is not right.algebra and left.algebra.product_table() != right.algebra.product_table():
            raise SizeMismatch("bimodule sides over different algebras")
        if left.dim != right.dim:
            raise SizeMismatch("bimodule sides of different dimension")
        self.left, self.right, self.name = left, right, name
        self.algebra, self.dim = left.algebra, left.dim
        for a in left.act:
            for b in right.act:
                if a @ b != b @ a:
                    raise AlgebraError("left and right actions do not commute")

    @property
    def field(self):
        return self.algebra.field

    def submodule(self, U: Subspace):
        return Bimodule(self.left.submodule(U), self.right.submodule(U), name=f"sub({self.name})")

    def quotient(self, U: Subspace):
        return Bimodule(self.left.quotient(U), self.right.quotient(U), name=f"{self.name}/U")

    def __repr__(self):
        return f"Bimodule(dim={self.dim}, over={self.algebra.name!r})"


def regular_left(A: Algebra) -> LeftModule:
    return LeftModule(A, A.L, name="R", check=False)


def regular_right(A: Algebra) -> RightModule:
    return RightModule(A, A.R, name="R", check=False)


def regular_bimodule(A: Algebra) -> Bimodule:
    return Bimodule(regular_left(A), regular_right(A), name="R")


def socle_module(A: Algebra, S: Subspace, side: str = "left"):
    """``S`` as a left, right or bi-module (``side`` in left|right|bi)."""
    return {"left": regular_left, "right": regular_right, "bi": regular_bimodule}[side](A).submodule(S)


def quotient_module(A: Algebra, J: Subspace, side: str = "left"):
    """``R/J`` as a left, right or bi-module."""
    return {"left": regular_left, "right": regular_right, "bi": regular_bimodule}[side](A).quotient(J)


def k_dual(X):
    """``Hom_k(X, k)``; functionals are columns and the actions transpose."""
    if isinstance(X, LeftModule):
        return RightModule(X.algebra, [M.T for M in X.act], name=f"{X.name}^", check=False)
    if isinstance(X, RightModule):
        return LeftModule(X.algebra, [M.T for M in X.act], name=f"{X.name}^", check=False)
    if isinstance(X, Bimodule):
        # (r f s)(x) = f(s x r)
        return Bimodule(
            LeftModule(X.algebra, [M.T for M in X.right.act], check=False),
            RightModule(X.algebra, [M.T for M in X.left.act], check=False),
            name=f"{X.name}^",
        )
    raise TypeError("k_dual expects a module")


def regular_bimodule_dual(A: Algebra) -> Bimodule:
    """``Hom_k(R, k)`` with ``(r f)(x) = f(x r)`` and ``(f r)(x) = f(r x)``."""
    return k_dual(regular_bimodule(A))


def hom_space(M, N):
    """Basis of ``Hom(M, N)`` as ``N.dim x M.dim`` matrices.

    Same-side modules, or bimodules (both actions intertwined).
    """
    if type(M) is not type(N):
        raise SizeMismatch("homomorphisms need modules of the same kind")
    F = M.field
    dm, dn = M.dim, N.dim
    if isinstance(M, Bimodule):
        pairs = list(zip(M.left.act, N.left.act)) + list(zip(M.right.act, N.right.act))
    else:
        pairs = list(zip(M.act, N.act))
    nvar = dn * dm
    if nvar == 0:
        return []
    # unknown phi[p][q] at index p*dm + q; equation (phi A - B phi)[p][q] = 0
    rows = []
    zero = F.zero
    for Am, Bn in pairs:
        Ar, Br = Am.rows, Bn.rows
        for p in range(dn):
            for q in range(dm):
                row = [zero] * nvar
                for k in range(dm):
                    a = Ar[k][q]
                    if a != zero:
                        row[p * dm + k] = F.add(row[p * dm + k], a)
                for k in range(dn):
                    b = Br[p][k]
                    if b != zero:
                        row[k * dm + q] = F.sub(row[k * dm + q], b)
                rows.append(tuple(row))
    K = Subspace.kernel_of(Matrix(F, rows, nvar)) if rows else Subspace.full(F, nvar)
    return [Matrix(F, [v[p * dm : (p + 1) * dm] for p in range(dn)], dm) for v in K.basis]


def r_dual(X: LeftModule) -> RightModule:
    """``Hom_R(X, R)`` with ``(alpha r)(x) = alpha(x) r``.

    The intertwiners ``alpha`` (``n x d`` matrices) are kept in ``.maps``.
    """
    A = X.algebra
    maps = hom_space(X, regular_left(A))
    F = A.field
    m = len(maps)
    flat = [tuple(x for row in a.rows for x in row) for a in maps]
    span = Subspace(F, A.dim * X.dim, flat)
    # coordinates in the ``maps`` basis via a solve against the flattened basis
    B = Matrix.from_columns(F, flat, A.dim * X.dim) if m else None
    act = []
    for Ri in A.R:
        cols = []
        for a in maps:
            img = Ri @ a
            v = tuple(x for row in img.rows for x in row)
            if v not in span:  # pragma: no cover - module law
                raise AlgebraError("right action leaves the intertwiner space")
            cols.append(B.solve(v))
        act.append(Matrix.from_columns(F, cols, m) if m else Matrix.zeros(F, 0, 0))
    out = RightModule(A, act, name=f"{X.name}*", check=m > 0)
    out.maps = maps
    return out


def twist(M, sigma: AlgebraMap):
    """``M`` with ``m * r = m sigma(r)``."""
    if not sigma.is_automorphism():
        raise NotAutomorphism("twist needs an algebra automorphism")
    A = M.algebra
    act = [M.action(sigma.image(i)) for i in range(A.dim)]
    return type(M)(A, act, name=f"{M.name}_sigma")


@dataclass(frozen=True)
class IsoResult:
    verdict: str  # "yes" | "no" | "inconclusive"
    map: Matrix | None = None
    reason: str = ""
    oracle: SpanOracleResult | None = dc_field(default=None, repr=False)

    def __bool__(self):
        return self.verdict == "yes"

    def summary(self):
        out = {"verdict": self.verdict, "reason": self.reason}
        if self.map is not None:
            out["map"] = self.map.to_strings()
        if self.oracle is not None:
            out["oracle"] = self.oracle.summary()
        return out


def _iso(M, N, seed, oracle_kw):
    if M.dim != N.dim:
        return IsoResult("no", reason=f"dimensions differ ({M.dim} vs {N.dim})")
    F = M.field
    if M.dim == 0:
        return IsoResult("yes", Matrix.zeros(F, 0, 0), reason="zero modules")
    homs = hom_space(M, N)
    if not homs:
        return IsoResult("no", reason="no nonzero homomorphisms")
    res = nonsingular_in_span(homs, seed=seed, **oracle_kw)
    if res.verdict == FOUND:
        phi = _comb_rect(F, res.coefficients, homs)
        if phi.det() == F.zero:  # pragma: no cover - oracle certified the determinant
            raise AlgebraError("isomorphism witness is singular")
        _check_intertwines(M, N, phi)
        return IsoResult("yes", phi, reason="invertible homomorphism found", oracle=res)
    if res.verdict == NONE_CERTIFIED:
        return IsoResult("no", reason=f"no invertible homomorphism ({res.witness})", oracle=res)
    return IsoResult("inconclusive", reason="sampling found no invertible homomorphism", oracle=res)


def _comb_rect(F, coeffs, mats):
    out = Matrix.zeros(F, mats[0].nrows, mats[0].ncols)
    for c, m in zip(coeffs, mats):
        if c != F.zero:
            out = out + m.scale(c)
    return out


def _check_intertwines(M, N, phi):
    if isinstance(M, Bimodule):
        pairs = list(zip(M.left.act, N.left.act)) + list(zip(M.right.act, N.right.act))
    else:
        pairs = list(zip(M.act, N.act))
    for a, b in pairs:
        if phi @ a != b @ phi:  # pragma: no cover - solved linear system
            raise AlgebraError("homomorphism witness fails to intertwine")


def modules_isomorphic(M, N, seed: int = 0, **oracle_kw) -> IsoResult:
    if isinstance(M, Bimodule) or type(M) is not type(N):
        raise SizeMismatch("modules_isomorphic compares two left or two right modules")
    return _iso(M, N, seed, oracle_kw)


def bimodules_isomorphic(M: Bimodule, N: Bimodule, seed: int = 0, **oracle_kw) -> IsoResult:
    if not (isinstance(M, Bimodule) and isinstance(N, Bimodule)):
        raise SizeMismatch("bimodules_isomorphic compares two bimodules")
    return _iso(M, N, seed, oracle_kw)


@dataclass(frozen=True)
class DualTwistReport:
    hat_map: Matrix
    bijective: bool
    twist_law: bool
    twist_law_sigma: bool
    iso: IsoResult

    @property
    def passed(self):
        return self.bijective and self.twist_law and self.twist_law_sigma and self.iso.verdict == "yes"

    def summary(self):
        return {
            "bijective": self.bijective,
            "twist_law": self.twist_law and self.twist_law_sigma,
            "iso": self.iso.verdict,
            "passed": self.passed,
        }


def dual_twist_check(A: Algebra, lam, sigma: AlgebraMap, X: LeftModule, seed: int = 0, **oracle_kw):
    """Hat map ``alpha -> lam o alpha`` from ``X*`` to ``X^`` and its twist law.

    Checks ``hat(alpha r) = hat(alpha) sigma^-1(r)`` on every basis element.
    """
    from .frobenius import gram

    F = A.field
    if gram(A, lam).det() == F.zero:
        from .errors import DegenerateForm

        raise DegenerateForm("functional is not a Frobenius witness")
    Xs = r_dual(X)
    Xh = k_dual(X)
    lam = tuple(lam)
    cols = []
    for a in Xs.maps:
        # (lam o alpha)(x) = lam^T alpha x
        cols.append(tuple(dot(F, lam, a.column(c)) for c in range(X.dim)))
    Phi = Matrix.from_columns(F, cols, X.dim) if cols else Matrix.zeros(F, X.dim, 0)
    bijective = Phi.is_square() and (Phi.nrows == 0 or Phi.det() != F.zero)
    sinv = sigma.inverse()
    law = all(Phi @ Xs.act[i] == Xh.action(sinv.image(i)) @ Phi for i in range(A.dim))
    law_sigma = all(Phi @ Xs.action(sigma.image(i)) == Xh.act[i] @ Phi for i in range(A.dim))
    iso = modules_isomorphic(Xh, twist(Xs, sigma), seed=seed, **oracle_kw)
    return DualTwistReport(Phi, bijective, law, law_sigma, iso)

