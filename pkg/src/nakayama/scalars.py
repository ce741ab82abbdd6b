"""Restriction of scalars and field-independence experiments.

An algebra ``R`` over ``k1 = k2(t)`` of degree ``d`` is also an algebra over
``k2`` with basis ``e_i t^s`` (small index ``i*d + s``).  This module moves
functionals, automorphisms, subspaces and bimodules between the two
descriptions and checks that Frobenius data computed over either field
agree: the Nakayama automorphism is the same map, and the Frobenius and
symmetric verdicts coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, AlgebraMap, restrict_structure
from .errors import (
    AlgebraError,
    DegenerateWitness,
    FieldTooSmall,
    Inconclusive,
    NotExtensionField,
    SimplesInvalid,
    TheoremViolation,
    ZeroTraceMap,
)
from .fields import ExtensionField
from .frobenius import (
    find_frobenius_functional,
    gram,
    gram_slices,
    is_symmetric,
    nakayama,
)
from .linalg import (
    FOUND,
    Matrix,
    Subspace,
    complement_through,
    dot,
    extend_to_hyperplane_avoiding,
    nonsingular_in_span,
)
from .modrep import (
    Bimodule,
    LeftModule,
    RightModule,
    bimodules_isomorphic,
    hom_space,
    modules_isomorphic,
    quotient_module,
    regular_bimodule_dual,
    socle_module,
)
from .structure import is_local, left_socle, radical, semisimple_quotient

__all__ = [
    "RestrictedAlgebra",
    "restrict_scalars",
    "trace_transfer",
    "TraceTransfer",
    "replay_part2",
    "Part2Replay",
    "independence_experiment",
    "IndependenceReport",
    "verify_simples",
]


class RestrictedAlgebra:
    """A ``k1``-algebra together with its ``k2``-structure."""

    def __init__(self, big: Algebra):
        K = big.field
        if not isinstance(K, ExtensionField):
            raise NotExtensionField(f"{K!r} is not an extension field")
        self.big = big
        self.K = K
        self.d = K.d
        small, self._bridge, self._unbridge = restrict_structure(big)
        self.small = small
        if big.simples:
            small.simples = [self.subspace_down(V) for V in big.simples]
        self.theta_one = self.bridge(tuple(K.mul(K.theta, x) for x in big.one))

    def bridge(self, v):
        return self._bridge(v)

    def unbridge(self, w):
        return self._unbridge(w)

    def validate(self):
        """Check that ``bridge`` is multiplicative on all small basis pairs."""
        self.small.validate()
        S, B = self.small, self.big
        ups = [self.unbridge(S.basis(i)) for i in range(S.dim)]
        for i in range(S.dim):
            for j in range(S.dim):
                if S.mul(S.basis(i), S.basis(j)) != self.bridge(B.mul(ups[i], ups[j])):
                    raise AlgebraError(f"bridge is not multiplicative at ({i},{j})")
        if self.bridge(B.one) != S.one:
            raise AlgebraError("bridge does not match identities")
        return self

    def _scaled(self, x, s):
        K = self.K
        ts = K._basis(s)
        return tuple(K.mul(ts, c) for c in x)

    def subspace_down(self, U: Subspace) -> Subspace:
        """A ``k1``-subspace of the big algebra as a ``k2``-subspace."""
        vecs = [self.bridge(self._scaled(u, s)) for u in U.basis for s in range(self.d)]
        return Subspace(self.K.base, self.small.dim, vecs)

    def map_down(self, sigma: AlgebraMap) -> AlgebraMap:
        """The ``k2``-matrix of a ``k1``-linear map."""
        cols = []
        for i in range(self.big.dim):
            img = sigma.image(i)
            for s in range(self.d):
                cols.append(self.bridge(self._scaled(img, s)))
        return AlgebraMap(self.small, Matrix.from_columns(self.K.base, cols, self.small.dim))

    def matrix_down(self, M: Matrix) -> Matrix:
        """Replace each ``k1`` entry by its ``d x d`` scalar-action block."""
        K, d = self.K, self.d
        rows = []
        for r in M.rows:
            blocks = [K.scalar_action_matrix(x) for x in r]
            for a in range(d):
                rows.append(tuple(b[a][c] for b in blocks for c in range(d)))
        return Matrix(K.base, rows, M.ncols * d)

    def bimodule_down(self, X: Bimodule) -> Bimodule:
        """A ``k1``-bimodule over the big algebra as a ``k2``-bimodule over the small one."""
        K, d = self.K, self.d

        def expand(acts):
            out = []
            for M in acts:
                for s in range(d):
                    out.append(self.matrix_down(M.scale(K._basis(s))))
            return out

        return Bimodule(
            LeftModule(self.small, expand(X.left.act)),
            RightModule(self.small, expand(X.right.act)),
            name=f"{X.name}|k2",
        )


def restrict_scalars(A: Algebra) -> RestrictedAlgebra:
    return RestrictedAlgebra(A).validate()


@dataclass(frozen=True)
class TraceTransfer:
    functional: tuple
    sigma_big: AlgebraMap
    sigma_small: AlgebraMap
    exact: bool


def _trace_values(R: RestrictedAlgebra, Tr):
    K = R.K
    vals = K.default_trace_map() if Tr is None else tuple(K.base.coerce(x) for x in Tr)
    if len(vals) != R.d:
        raise ZeroTraceMap(f"trace map needs {R.d} values")
    if all(v == K.base.zero for v in vals):
        raise ZeroTraceMap("trace map is zero")
    return vals


def trace_transfer(R: RestrictedAlgebra, lam1, Tr=None) -> TraceTransfer:
    """``lam2 = Tr o lam1`` on the small algebra, with ``sigma2 = sigma1`` checked."""
    K, F2 = R.K, R.K.base
    vals = _trace_values(R, Tr)
    lam1 = tuple(K.coerce(x) for x in lam1)

    def tr(x):
        return dot(F2, vals, K.prime_coordinates(x))

    lam2 = []
    for i in range(R.big.dim):
        for s in range(R.d):
            lam2.append(tr(K.mul(K._basis(s), lam1[i])))
    lam2 = tuple(lam2)
    sigma1 = nakayama(R.big, lam1)
    if gram(R.small, lam2).det() == F2.zero:
        raise DegenerateWitness("transferred functional is degenerate")
    if not R.small.largest_left_ideal_in(Subspace.kernel_of(Matrix(F2, [lam2], R.small.dim))).is_zero():
        raise DegenerateWitness("kernel of the transferred functional contains a left ideal")
    sigma2 = nakayama(R.small, lam2)
    down = R.map_down(sigma1)
    return TraceTransfer(lam2, down, sigma2, down.matrix == sigma2.matrix)


def _find_unit_in(A: Algebra, W: Subspace, seed, oracle_kw):
    mats = [A.left_mul(w) for w in W.basis]
    if not mats:
        return None, None
    res = nonsingular_in_span(mats, seed=seed, **oracle_kw)
    if res.verdict != FOUND:
        return None, res
    u = W.vector(res.coefficients)
    return u, res


def _algebra_of_endomorphisms(X):
    """``End(X)`` as a structure-constant algebra on a basis of intertwiners."""
    F = X.field
    homs = hom_space(X, X)
    m = len(homs)
    flat = [tuple(x for row in h.rows for x in row) for h in homs]
    B = Matrix.from_columns(F, flat, X.dim * X.dim)
    sc = []
    for i, a in enumerate(homs):
        for j, b in enumerate(homs):
            c = a @ b
            coords = B.solve(tuple(x for row in c.rows for x in row))
            sc.extend((i, j, k, v) for k, v in enumerate(coords) if v != F.zero)
    return Algebra(F, m, sc, name="End")


def verify_simples(Q: Algebra, simples, seed: int = 0):
    """Check that ``simples`` are simple left ideals of ``Q`` summing directly to ``Q``."""
    if not simples:
        raise SimplesInvalid("no simple left ideals supplied")
    total = 0
    acc = Q.zero_space()
    for V in simples:
        if V.ambient_dim != Q.dim or V.is_zero():
            raise SimplesInvalid("simple left ideal of the wrong shape")
        if not Q.is_left_ideal(V):
            raise SimplesInvalid("supplied subspace is not a left ideal")
        # for a semisimple quotient, V is simple iff End(V) is a division ring
        X = LeftModule(Q, [Matrix.from_columns(Q.field, [V.coordinates(Q.mul(Q.basis(i), v)) for v in V.basis],
                                                V.dim) for i in range(Q.dim)])
        loc = is_local(_algebra_of_endomorphisms(X), seed=seed)
        if loc.verdict == "no":
            raise SimplesInvalid("supplied left ideal is not simple")
        if loc.verdict != "yes":
            raise Inconclusive("could not certify simplicity of a supplied left ideal")
        total += V.dim
        acc = acc + V
    if total != Q.dim or not acc.is_full():
        raise SimplesInvalid("supplied left ideals do not form a direct sum decomposition")


@dataclass
class Part2Replay:
    functional: tuple
    sigma: AlgebraMap
    exact: bool
    steps: dict = dc_field(default_factory=dict)


def _left_ideal_free(A: Algebra, U: Subspace) -> bool:
    return A.largest_left_ideal_in(U).is_zero()


def _complement_within(C: Subspace, D: Subspace) -> Subspace:
    """``C'`` with ``C = D + C'`` direct, for ``D <= C``."""
    vecs, acc = [], D
    for v in C.basis:
        if v not in acc:
            vecs.append(v)
            acc = acc + Subspace(C.field, C.ambient_dim, [v])
    return Subspace(C.field, C.ambient_dim, vecs)


def replay_part2(R: RestrictedAlgebra, lam1, simples=None, seed: int = 0, **oracle_kw) -> Part2Replay:
    """Build a ``k2``-functional from ``lam1`` by the socle/hyperplane route.

    Every intermediate subspace is checked for the property the construction
    relies on; the result satisfies ``sigma2 = sigma1`` exactly or raises
    TheoremViolation.
    """
    A, K = R.small, R.K
    F = A.field
    steps = {}

    def need(cond, what):
        if not cond:
            raise TheoremViolation(f"replay step failed: {what}")

    lam1 = tuple(K.coerce(x) for x in lam1)
    sigma1 = R.map_down(nakayama(R.big, lam1))
    C = A.twisted_commutator_space(sigma1)
    H1 = R.subspace_down(Subspace.kernel_of(Matrix(K, [lam1], R.big.dim)))
    need(H1.contains(C), "C inside ker lam1")
    J = radical(A)
    S = left_socle(A, J)
    Q, pi = semisimple_quotient(A, J)
    simples = list(simples) if simples is not None else list(Q.simples or [])
    verify_simples(Q, simples, seed=seed)
    if F.order is not None and F.order < len(simples):
        raise FieldTooSmall(f"|k2| = {F.order} < {len(simples)} simple left ideals")
    steps.update(radical_dim=J.dim, socle_dim=S.dim, C_dim=C.dim, H1_codim=H1.codim, simples=len(simples))

    iso = modules_isomorphic(socle_module(A, S, "left"), quotient_module(A, J, "left"), seed=seed, **oracle_kw)
    if iso.verdict != "yes":
        raise Inconclusive(f"socle/quotient isomorphism not found ({iso.verdict})")
    Phi = iso.map
    Phi_inv = Phi.inverse()

    def phi(U: Subspace) -> Subspace:
        return Q.span([Phi.apply(S.coordinates(v)) for v in U.basis])

    def phi_inv(W: Subspace) -> Subspace:
        return A.span([S.vector(Phi_inv.apply(w)) for w in W.basis])

    SH1, SC = S & H1, S & C
    P = phi(SH1)
    need(_left_ideal_free(Q, P), "phi(S & H1) holds no left ideal")

    # symmetric k1-hyperplane of Q: the largest theta-stable subspace of ker nu
    comm = Q.commutator_space()
    res = nonsingular_in_span(gram_slices(Q), constraint=comm.annihilator(), seed=seed, **oracle_kw)
    if res.verdict != FOUND:
        raise Inconclusive("no symmetric functional found on the semisimple quotient")
    nu = tuple(res.coefficients)
    theta = pi(R.theta_one)
    rows, x = [], Q.one
    for _ in range(R.d):
        rows.append(tuple(dot(F, nu, Q.mul(x, Q.basis(j))) for j in range(Q.dim)))
        x = Q.mul(x, theta)
    H = Subspace.kernel_of(Matrix(F, rows, Q.dim))
    need(H.contains(comm) and _left_ideal_free(Q, H), "symmetric hyperplane of the quotient")
    need(H.dim == P.dim, "hyperplanes of equal dimension")

    # units u with P u <= H
    annH = H.annihilator()
    eqs = [Q.left_mul(a).T.apply(h) for a in P.basis for h in annH.basis]
    W = Subspace.kernel_of(Matrix(F, eqs, Q.dim)) if eqs else Q.full_space()
    u, ores = _find_unit_in(Q, W, seed, oracle_kw)
    if u is None:
        raise Inconclusive("no unit carrying phi(S & H1) onto H was found")
    uinv = Q.inverse(u)
    need(Q.span([Q.mul(a, u) for a in P.basis]) == H, "H = phi(S & H1) u")

    U = Q.span([Q.mul(a, u) for a in phi(SC).basis]) + comm
    need(H.contains(U) and _left_ideal_free(Q, U), "U inside H without left ideals")
    for V in simples:
        need(not U.contains(V), "no simple left ideal inside U")
    Uprime = extend_to_hyperplane_avoiding(U, simples)
    need(Uprime.codim == 1 and _left_ideal_free(Q, Uprime), "U' hyperplane without left ideals")

    H2p = phi_inv(Q.span([Q.mul(x, uinv) for x in Uprime.basis]))
    need(H2p.contains(SC) and H2p.dim == S.dim - 1, "H2' hyperplane of S containing S & C")
    need(_left_ideal_free(A, H2p), "H2' holds no left ideal")
    Cp = _complement_within(C, SC)
    Sp = complement_through(Cp, S)
    H2 = H2p + Sp
    need(H2.codim == 1 and H2.contains(C) and _left_ideal_free(A, H2), "H2 hyperplane containing C")
    lam2 = H2.annihilator().basis[0]
    sigma2 = nakayama(A, lam2)
    exact = sigma2.matrix == sigma1.matrix
    steps.update(U_dim=U.dim, Uprime_dim=Uprime.dim, H2prime_dim=H2p.dim, Sprime_dim=Sp.dim, H2_dim=H2.dim)
    if not exact:
        raise TheoremViolation("replayed functional gives a different Nakayama automorphism")
    return Part2Replay(lam2, sigma2, exact, steps)


@dataclass
class IndependenceReport:
    frobenius_big: str
    frobenius_small: str
    symmetric_big: str
    symmetric_small: str
    sigma_big: AlgebraMap | None = None
    sigma_small: AlgebraMap | None = None
    exact_match: bool | None = None
    inner_match: str = "not_run"
    part1_exact: bool | None = None
    part2_exact: bool | None = None
    part2_steps: dict = dc_field(default_factory=dict)
    dual_bimodule_iso: str = "not_run"
    violations: list = dc_field(default_factory=list)
    inconclusive: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def require(self):
        if self.violations:
            raise TheoremViolation("; ".join(self.violations))
        return self

    def summary(self) -> dict:
        F = self.sigma_small.algebra.field if self.sigma_small is not None else None
        out = {
            "frobenius": {"big": self.frobenius_big, "small": self.frobenius_small},
            "symmetric": {"big": self.symmetric_big, "small": self.symmetric_small},
            "exact_match": self.exact_match,
            "inner_match": self.inner_match,
            "part1_exact": self.part1_exact,
            "part2_exact": self.part2_exact,
            "part2_steps": self.part2_steps,
            "dual_bimodule_iso": self.dual_bimodule_iso,
            "violations": self.violations,
            "inconclusive": self.inconclusive,
            "status": "THEOREM-VIOLATION" if self.violations else ("inconclusive" if self.inconclusive else "ok"),
        }
        if F is not None:
            out["sigma_big_small_coords"] = self.sigma_big.matrix.to_strings()
            out["sigma_small"] = self.sigma_small.matrix.to_strings()
        return out


def _agree(a, b, what, rep):
    definite = {"frobenius", "not_frobenius", "symmetric", "not_symmetric"}
    if a in definite and b in definite:
        if a != b:
            rep.violations.append(f"{what} verdicts differ: {a} vs {b}")
    else:
        rep.inconclusive.append(f"{what}: {a} / {b}")


def independence_experiment(R: RestrictedAlgebra, seed: int = 0, replay: bool | None = None, **oracle_kw):
    """Compare Frobenius data of ``R`` over ``k1`` and over ``k2``."""
    big, small = R.big, R.small
    c1 = find_frobenius_functional(big, seed=seed, **oracle_kw)
    c2 = find_frobenius_functional(small, seed=seed, **oracle_kw)
    s1 = is_symmetric(big, seed=seed, certificate=c1, **oracle_kw)
    s2 = is_symmetric(small, seed=seed, certificate=c2, **oracle_kw)
    rep = IndependenceReport(c1.verdict, c2.verdict, s1.verdict, s2.verdict)
    _agree(c1.verdict, c2.verdict, "Frobenius", rep)
    _agree(s1.verdict, s2.verdict, "symmetric", rep)
    for side, s in (("big", s1), ("small", s2)):
        if not s.consistent:
            rep.violations.append(f"symmetry routes disagree over the {side} field")
    if not (c1.is_frobenius and c2.is_frobenius):
        return rep
    sig1 = R.map_down(nakayama(big, c1.functional))
    sig2 = nakayama(small, c2.functional)
    rep.sigma_big, rep.sigma_small = sig1, sig2
    rep.exact_match = sig1.matrix == sig2.matrix
    inner = small.is_inner(sig1.compose(sig2.inverse()), seed=seed, **oracle_kw)
    rep.inner_match = {"inner": "yes", "outer": "no"}.get(inner.verdict, "inconclusive")
    if rep.inner_match == "no":
        rep.violations.append("Nakayama automorphisms over the two fields differ by an outer automorphism")
    elif rep.inner_match == "inconclusive":
        rep.inconclusive.append("inner comparison of Nakayama automorphisms")
    tt = trace_transfer(R, c1.functional)
    rep.part1_exact = tt.exact
    if not tt.exact:
        rep.violations.append("trace transfer changed the Nakayama automorphism")
    iso = bimodules_isomorphic(R.bimodule_down(regular_bimodule_dual(big)), regular_bimodule_dual(small),
                               seed=seed, **oracle_kw)
    rep.dual_bimodule_iso = iso.verdict
    if iso.verdict == "no":
        rep.violations.append("k-dual bimodules over the two fields are not isomorphic")
    elif iso.verdict != "yes":
        rep.inconclusive.append("k-dual bimodule comparison")
    if replay is None:
        replay = bool(small.simples)
    if replay:
        try:
            p2 = replay_part2(R, c1.functional, seed=seed, **oracle_kw)
            rep.part2_exact, rep.part2_steps = p2.exact, p2.steps
        except TheoremViolation as exc:
            rep.part2_exact = False
            rep.violations.append(str(exc))
        except (Inconclusive, FieldTooSmall) as exc:
            rep.inconclusive.append(f"socle replay: {exc}")
    return rep
