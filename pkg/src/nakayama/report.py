"""Analysis reports and their independent re-verification."""

from __future__ import annotations

import time

from . import __version__
from .algebra import Algebra, AlgebraMap
from .errors import AlgebraError
from .fileio import field_literal
from .frobenius import find_frobenius_functional, gram, is_symmetric, nakayama
from .linalg import Matrix, Subspace
from .structure import analyze_structure, left_socle, radical_index

__all__ = ["analyze", "recheck", "element_string", "has_inconclusive"]


def element_string(A: Algebra, v) -> str:
    """``4*x + 2*y`` style rendering with exact coefficients."""
    F = A.field
    terms = []
    for c, label in zip(v, A.labels):
        if c == F.zero:
            continue
        s = F.format(c)
        terms.append(label if s == "1" else f"{s}*{label}")
    return " + ".join(terms) if terms else "0"


def _sigma_block(A: Algebra, sigma: AlgebraMap, lam) -> dict:
    return {
        "functional": [A.field.format(x) for x in lam],
        "matrix": sigma.matrix.to_strings(),
        "images": {A.labels[i]: element_string(A, sigma.image(i)) for i in range(A.dim)},
        "is_identity": sigma.is_identity(),
    }


def analyze(A: Algebra, seed: int = 0, timing: bool = False, **oracle_kw) -> dict:
    """Full report: structure, Frobenius certificate, Nakayama automorphism, symmetry."""
    F = A.field
    t0 = time.perf_counter()
    st = analyze_structure(A, seed=seed)
    cert = find_frobenius_functional(A, seed=seed, structure=st, **oracle_kw)
    sym = is_symmetric(A, seed=seed, structure=st, certificate=cert, **oracle_kw)
    out = {
        "tool": {"name": "nakayama", "version": __version__},
        "seed": seed,
        "oracle": {k: (str(v) if isinstance(v, float) else v) for k, v in sorted(oracle_kw.items())},
        "algebra": {"name": A.name, "field": field_literal(F), "dimension": A.dim, "basis": list(A.labels)},
        "structure": st.summary(),
        "frobenius": cert.summary(F),
        "symmetry": sym.summary(),
    }
    if cert.is_frobenius:
        # a symmetric witness, when found, gives the identity representative
        sym_lam = sym.routes["direct"].data.get("functional")
        lam = tuple(F.parse(x) for x in sym_lam) if sym_lam else cert.functional
        out["nakayama"] = _sigma_block(A, nakayama(A, lam), lam)
    out["inconclusive"] = has_inconclusive(out)
    if timing:
        out["timing_seconds"] = round(time.perf_counter() - t0, 6)
    return out


def has_inconclusive(report: dict) -> bool:
    if report["frobenius"]["verdict"] == "inconclusive":
        return True
    if report["symmetry"]["verdict"] in ("inconclusive", "inconsistent"):
        return True
    return report["structure"]["local"] == "unknown"


def _parse_vec(F, strings):
    return tuple(F.parse(s) for s in strings)


def recheck(A: Algebra, report: dict) -> list:
    """Re-verify the certificates in ``report`` without redoing any search.

    Returns ``[(check name, passed), ...]``.
    """
    F = A.field
    out = []

    def check(name, fn):
        try:
            out.append((name, bool(fn())))
        except AlgebraError as exc:
            out.append((f"{name} ({type(exc).__name__})", False))

    st = report["structure"]
    J = Subspace(F, A.dim, [_parse_vec(F, v) for v in st["radical"]])
    S = Subspace(F, A.dim, [_parse_vec(F, v) for v in st["socle"]])
    check("radical is a two-sided ideal", lambda: A.is_left_ideal(J) and A.is_right_ideal(J))
    check("radical is nilpotent of the reported index", lambda: radical_index(A, J) == st["radical_index"])
    check("socle annihilated by the radical", lambda: left_socle(A, J) == S)

    fr = report["frobenius"]
    if fr["verdict"] == "frobenius":
        lam = _parse_vec(F, fr["functional"])
        check("Gram determinant matches", lambda: F.format(gram(A, lam).det()) == fr["gram_determinant"])
        check(
            "kernel holds no left ideal",
            lambda: A.largest_left_ideal_in(Subspace.kernel_of(Matrix(F, [lam], A.dim))).is_zero(),
        )
        if "nakayama" in report:
            M = Matrix(F, [_parse_vec(F, r) for r in report["nakayama"]["matrix"]], A.dim)
            sigma = AlgebraMap(A, M)
            nlam = _parse_vec(F, report["nakayama"]["functional"])
            check("Nakayama automorphism is an automorphism", sigma.is_automorphism)

            def identity():
                G = gram(A, nlam)
                return G.det() != F.zero and G @ M == G.T

            check("lam(e_i e_j) = lam(e_j sigma(e_i))", identity)
    routes = report["symmetry"]["routes"]
    direct = routes.get("direct", {})
    if "functional" in direct:
        lam = _parse_vec(F, direct["functional"])

        def sym_ok():
            G = gram(A, lam)
            return G == G.T and G.det() != F.zero

        check("symmetric witness is symmetric and nondegenerate", sym_ok)
    inner = routes.get("inner", {})
    if "unit" in inner and fr["verdict"] == "frobenius":
        u = _parse_vec(F, inner["unit"])

        # the unit conjugates to sigma of the certificate functional
        def inner_ok():
            M = nakayama(A, _parse_vec(F, fr["functional"])).matrix
            uinv = A.inverse(u)
            return uinv is not None and all(
                A.mul(A.mul(uinv, A.basis(i)), u) == M.column(i) for i in range(A.dim)
            )

        check("Nakayama automorphism is conjugation by the reported unit", inner_ok)
    return out
