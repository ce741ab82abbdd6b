"""Frobenius functionals, Nakayama automorphisms and symmetry deciders.

A functional ``lam`` is the coordinate vector ``(lam(e_1), .., lam(e_n))``.
Its Gram matrix is ``G[i][j] = lam(e_i e_j)``, which is linear in ``lam``:
``G(lam) = sum_m lam_m G(delta_m)`` with ``G(delta_m)[i][j] = c_ij^m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, AlgebraMap, InnerResult
from .errors import AlgebraError, DegenerateForm, NotUnit
from .linalg import FOUND, NONE_CERTIFIED, Matrix, SpanOracleResult, Subspace, dot, nonsingular_in_span
from .modrep import IsoResult, bimodules_isomorphic, modules_isomorphic, quotient_module, socle_module
from .structure import analyze_structure, StructureReport

__all__ = [
    "gram",
    "gram_slices",
    "FrobeniusCertificate",
    "find_frobenius_functional",
    "verify_frobenius_witness",
    "nakayama",
    "functional_times_unit",
    "unit_change",
    "frobenius_module_criterion",
    "RouteVerdict",
    "SymmetryReport",
    "is_symmetric",
]


def gram(A: Algebra, lam) -> Matrix:
    """``G[i][j] = lam(e_i e_j)``."""
    F = A.field
    lam = tuple(F.coerce(x) for x in lam)
    prod = A.product_table()
    rows = [[dot(F, prod[i][j], lam) for j in range(A.dim)] for i in range(A.dim)]
    return Matrix(F, rows, A.dim)


def gram_slices(A: Algebra):
    """``G(delta_m)`` for each coordinate functional."""
    F, n = A.field, A.dim
    prod = A.product_table()
    return [Matrix(F, [[prod[i][j][m] for j in range(n)] for i in range(n)], n) for m in range(n)]


def _kernel_of_functional(A: Algebra, lam) -> Subspace:
    return Subspace.kernel_of(Matrix(A.field, [tuple(lam)], A.dim))


def frobenius_module_criterion(A: Algebra, structure: StructureReport | None = None, seed: int = 0, **oracle_kw):
    """``(soc(_R R) ~ _R Rbar, soc(R_R) ~ Rbar_R)`` as two :class:`IsoResult`."""
    st = structure or analyze_structure(A, seed=seed)
    left = modules_isomorphic(
        socle_module(A, st.socle, "left"), quotient_module(A, st.radical, "left"), seed=seed, **oracle_kw
    )
    right = modules_isomorphic(
        socle_module(A, st.right_socle, "right"), quotient_module(A, st.radical, "right"), seed=seed, **oracle_kw
    )
    return left, right


@dataclass(frozen=True)
class FrobeniusCertificate:
    verdict: str  # "frobenius" | "not_frobenius" | "inconclusive"
    functional: tuple | None = None
    determinant: object = None
    reason: str = ""
    oracle: SpanOracleResult | None = dc_field(default=None, repr=False)
    module_check: tuple = dc_field(default=(), repr=False)

    @property
    def is_frobenius(self):
        return self.verdict == "frobenius"

    def summary(self, F) -> dict:
        out = {"verdict": self.verdict, "reason": self.reason}
        if self.functional is not None:
            out["functional"] = [F.format(x) for x in self.functional]
            out["gram_determinant"] = F.format(self.determinant)
        if self.oracle is not None:
            out["oracle"] = self.oracle.summary()
        if self.module_check:
            out["socle_iso_left"] = self.module_check[0].verdict
            out["socle_iso_right"] = self.module_check[1].verdict
        return out


def verify_frobenius_witness(A: Algebra, lam) -> object:
    """Return ``det G(lam)`` after checking the kernel holds no left ideal."""
    F = A.field
    d = gram(A, lam).det()
    if d == F.zero:
        raise DegenerateForm("Gram matrix is singular")
    if not A.largest_left_ideal_in(_kernel_of_functional(A, lam)).is_zero():
        raise AlgebraError("kernel of a nondegenerate functional contains a left ideal")
    return d


def find_frobenius_functional(
    A: Algebra, seed: int = 0, structure: StructureReport | None = None, module_check: bool = True, **oracle_kw
) -> FrobeniusCertificate:
    """Search the Gram span for a nondegenerate functional.

    Positive verdicts are re-verified through the left-ideal criterion and,
    with ``module_check``, compared against the socle/quotient isomorphism
    criterion.  Negative verdicts are certified by the oracle or by a failed
    socle/quotient isomorphism.
    """
    F = A.field
    res = nonsingular_in_span(gram_slices(A), seed=seed, **oracle_kw)
    mod = ()
    if module_check or res.verdict not in (FOUND, NONE_CERTIFIED):
        mod = frobenius_module_criterion(A, structure, seed=seed, **oracle_kw)
    if res.verdict == FOUND:
        lam = tuple(res.coefficients)
        d = verify_frobenius_witness(A, lam)
        if mod and (mod[0].verdict == "no" or mod[1].verdict == "no"):
            raise AlgebraError("Frobenius witness contradicts the socle criterion")
        return FrobeniusCertificate("frobenius", lam, d, "nondegenerate Gram matrix", res, mod)
    if res.verdict == NONE_CERTIFIED:
        if mod and (mod[0].verdict == "yes" and mod[1].verdict == "yes"):
            raise AlgebraError("certified degenerate Gram span contradicts the socle criterion")
        return FrobeniusCertificate(
            "not_frobenius", reason=f"Gram determinant vanishes identically ({res.witness})", oracle=res,
            module_check=mod,
        )
    if mod[0].verdict == "no" or mod[1].verdict == "no":
        return FrobeniusCertificate(
            "not_frobenius", reason="socle is not isomorphic to the semisimple quotient", oracle=res, module_check=mod
        )
    return FrobeniusCertificate("inconclusive", reason="no nondegenerate functional sampled", oracle=res, module_check=mod)


def nakayama(A: Algebra, lam) -> AlgebraMap:
    """``sigma`` with ``lam(r s) = lam(s sigma(r))``, from ``G M = G^T``."""
    F = A.field
    G = gram(A, lam)
    if G.det() == F.zero:
        raise DegenerateForm("functional is degenerate")
    M = G.solve_matrix(G.T)
    sigma = AlgebraMap(A, M)
    prod = A.product_table()
    lam = tuple(F.coerce(x) for x in lam)
    for i in range(A.dim):
        si = sigma.image(i)
        for j in range(A.dim):
            if dot(F, prod[i][j], lam) != dot(F, A.mul(A.basis(j), si), lam):
                raise AlgebraError(f"Nakayama identity fails at ({i},{j})")
    sigma.require_automorphism()
    return sigma


def functional_times_unit(A: Algebra, lam, u):
    """``r -> lam(r u)``."""
    F = A.field
    return tuple(dot(F, lam, A.mul(A.basis(m), u)) for m in range(A.dim))


def unit_change(A: Algebra, sigma: AlgebraMap, u, lam=None) -> AlgebraMap:
    """``r -> u sigma(r) u^-1``; cross-checked against ``nakayama(lam u)``."""
    uinv = A.inverse(u)
    if uinv is None:
        raise NotUnit("element is not a unit")
    new = AlgebraMap(A, A.left_mul(u) @ A.right_mul(uinv) @ sigma.matrix)
    if lam is not None:
        other = nakayama(A, functional_times_unit(A, lam, u))
        if other.matrix != new.matrix:
            raise AlgebraError("unit change disagrees with the Nakayama automorphism of the new functional")
    return new


@dataclass(frozen=True)
class RouteVerdict:
    verdict: str  # "symmetric" | "not_symmetric" | "inconclusive" | "not_applicable"
    reason: str
    advisory: bool = False
    data: dict = dc_field(default_factory=dict)

    @property
    def definite(self):
        return self.verdict in ("symmetric", "not_symmetric") and not self.advisory


@dataclass(frozen=True)
class SymmetryReport:
    routes: dict
    verdict: str
    consistent: bool
    observations: tuple = ()

    def summary(self) -> dict:
        return {
            "verdict": self.verdict,
            "consistent": self.consistent,
            "routes": {
                k: {"verdict": r.verdict, "reason": r.reason, "advisory": r.advisory, **r.data}
                for k, r in sorted(self.routes.items())
            },
            "observations": list(self.observations),
        }


def _route_direct(A, seed, oracle_kw):
    F = A.field
    comm = A.commutator_space()
    res = nonsingular_in_span(gram_slices(A), constraint=comm.annihilator(), seed=seed, **oracle_kw)
    if res.verdict == FOUND:
        lam = tuple(res.coefficients)
        G = gram(A, lam)
        if G != G.T or G.det() == F.zero:  # pragma: no cover - constrained search
            raise AlgebraError("symmetric witness failed verification")
        return RouteVerdict("symmetric", "nondegenerate functional vanishing on [R,R]",
                            data={"functional": [F.format(x) for x in lam]})
    if res.verdict == NONE_CERTIFIED:
        return RouteVerdict("not_symmetric", f"no nondegenerate functional kills [R,R] ({res.witness})")
    return RouteVerdict("inconclusive", "sampling found no symmetric witness", data={"oracle": res.summary()})


def _route_inner(A, cert, seed, oracle_kw):
    if cert.verdict == "not_frobenius":
        return RouteVerdict("not_symmetric", "not Frobenius"), None
    if cert.verdict != "frobenius":
        return RouteVerdict("inconclusive", "Frobenius status unknown"), None
    sigma = nakayama(A, cert.functional)
    inner: InnerResult = A.is_inner(sigma, seed=seed, **oracle_kw)
    F = A.field
    if inner.verdict == "inner":
        return RouteVerdict("symmetric", "Nakayama automorphism is inner",
                            data={"unit": [F.format(x) for x in inner.unit]}), sigma
    if inner.verdict == "outer":
        return RouteVerdict("not_symmetric", "Nakayama automorphism is outer"), sigma
    return RouteVerdict("inconclusive", "inner test inconclusive"), sigma


def _route_local(A, st, cert):
    if st.local.verdict != "yes":
        return RouteVerdict("not_applicable", f"locality: {st.local.verdict}")
    if cert.verdict == "not_frobenius":
        return RouteVerdict("not_symmetric", "local but not Frobenius")
    if cert.verdict != "frobenius":
        return RouteVerdict("inconclusive", "Frobenius status unknown")
    if A.commutator_space().contains(st.socle):
        return RouteVerdict("not_symmetric", "socle lies in [R,R]")
    return RouteVerdict("symmetric", "local Frobenius with socle outside [R,R]")


def _route_bimodule(A, st, seed, oracle_kw):
    advisory = A.field.order is not None
    iso: IsoResult = bimodules_isomorphic(
        socle_module(A, st.socle, "bi"), quotient_module(A, st.radical, "bi"), seed=seed, **oracle_kw
    )
    ideal = A.largest_left_ideal_in(A.commutator_space())
    data = {"socle_bimodule_iso": iso.verdict, "left_ideal_in_commutators_dim": ideal.dim}
    if not ideal.is_zero():
        return RouteVerdict("not_symmetric", "[R,R] contains a nonzero left ideal", advisory, data)
    if iso.verdict == "no":
        return RouteVerdict("not_symmetric", "socle and quotient are not isomorphic bimodules", advisory, data)
    if iso.verdict == "yes":
        return RouteVerdict("symmetric", "socle ~ quotient as bimodules and [R,R] holds no left ideal", advisory, data)
    return RouteVerdict("inconclusive", "bimodule isomorphism test inconclusive", advisory, data)


def is_symmetric(
    A: Algebra,
    seed: int = 0,
    structure: StructureReport | None = None,
    certificate: FrobeniusCertificate | None = None,
    **oracle_kw,
) -> SymmetryReport:
    """Run the four symmetry routes and merge them.

    ``direct``: nondegenerate functional vanishing on ``[R,R]``.
    ``inner``: Nakayama automorphism inner.
    ``local``: for local algebras, Frobenius with socle not inside ``[R,R]``.
    ``bimodule``: socle and quotient isomorphic bimodules and no left ideal in
    ``[R,R]``; advisory over finite fields.
    """
    st = structure or analyze_structure(A, seed=seed)
    cert = certificate or find_frobenius_functional(A, seed=seed, structure=st, **oracle_kw)
    routes = {"direct": _route_direct(A, seed, oracle_kw)}
    routes["inner"], _ = _route_inner(A, cert, seed, oracle_kw)
    routes["local"] = _route_local(A, st, cert)
    routes["bimodule"] = _route_bimodule(A, st, seed, oracle_kw)
    definite = {r.verdict for r in routes.values() if r.definite}
    consistent = len(definite) <= 1
    observations = []
    adv = routes["bimodule"]
    if adv.advisory and adv.verdict in ("symmetric", "not_symmetric") and definite and adv.verdict not in definite:
        observations.append(f"bimodule route over a finite field says {adv.verdict}; definite routes say {sorted(definite)}")
    if not consistent:
        verdict = "inconsistent"
    elif definite:
        verdict = definite.pop()
    else:
        verdict = "inconclusive"
    return SymmetryReport(routes, verdict, consistent, tuple(observations))
