"""Search a linear span of square matrices for an invertible member.

``det(sum_j t_j M_j)`` is a homogeneous polynomial of degree ``n`` in the
coefficients ``t``.  Positive answers are always exact (the determinant of
the returned combination is nonzero).  Negative answers are certified in
one of two ways when the number of free coefficients ``r`` is at most
``sym_threshold``:

* ``exhaustive`` -- finite field, every projective point of ``k^r`` tried;
* ``symbolic_zero`` -- the dehomogenised polynomial ``P(1, t_2..t_r)`` of
  total degree ``<= n`` vanishes on the principal lattice
  ``{(x_a2, .., x_ar) : a_2 + .. + a_r <= n}`` built from ``n + 1`` distinct
  field elements.  That lattice is unisolvent for polynomials of total
  degree ``<= n``, so ``P`` is identically zero.

Otherwise negative answers are probabilistic, with the Schwartz-Zippel
bound ``(n / |S|) ** trials`` for a sample set ``S``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from ..errors import SizeMismatch
from ..fields import GF, PrimeField
from .matrix import Matrix, det_rows, lin_comb

__all__ = ["SpanOracleResult", "nonsingular_in_span", "FOUND", "NONE_CERTIFIED", "NONE_PROBABILISTIC"]

FOUND = "found"
NONE_CERTIFIED = "none_certified"
NONE_PROBABILISTIC = "none_probabilistic"

DEFAULT_SYM_THRESHOLD = 6
DEFAULT_CONFIDENCE = 2.0**-40
DEFAULT_EVAL_LIMIT = 60000
MAX_TRIALS = 400


@dataclass(frozen=True)
class SpanOracleResult:
    verdict: str
    coefficients: tuple | None = None
    determinant: object = None
    witness: str | None = None
    trials: int = 0
    bound: float | None = None
    evaluations: int = 0
    note: str = ""

    @property
    def found(self) -> bool:
        return self.verdict == FOUND

    @property
    def certified_none(self) -> bool:
        return self.verdict == NONE_CERTIFIED

    def combination(self, mats):
        F = mats[0].field
        n = mats[0].nrows
        rows = _combine(F, [m.rows for m in mats], self.coefficients, n)
        return Matrix(F, rows, n)

    def summary(self) -> dict:
        out = {"verdict": self.verdict, "evaluations": self.evaluations}
        if self.witness:
            out["witness"] = self.witness
        if self.verdict == NONE_PROBABILISTIC:
            out["trials"] = self.trials
            out["bound"] = self.bound
        if self.note:
            out["note"] = self.note
        return out


def _combine(F, mats_rows, coeffs, n):
    add, mul, zero = F.add, F.mul, F.zero
    out = [[zero] * n for _ in range(n)]
    for c, rows in zip(coeffs, mats_rows):
        if c == zero:
            continue
        for i in range(n):
            orow, mrow = out[i], rows[i]
            for j in range(n):
                a = mrow[j]
                if a != zero:
                    orow[j] = add(orow[j], mul(c, a))
    return out


class _Evaluator:
    def __init__(self, F, eff_rows, n):
        self.F, self.eff_rows, self.n = F, eff_rows, n
        self.count = 0

    def __call__(self, t):
        self.count += 1
        return det_rows(self.F, _combine(self.F, self.eff_rows, t, self.n))


def _projective_points(F, r):
    elems = list(F.elements())
    for lead in range(r):
        for tail in itertools.product(elems, repeat=r - lead - 1):
            yield (F.zero,) * lead + (F.one,) + tuple(tail)


def _lattice_points(F, r, n):
    nodes = F.distinct_elements(n + 1)
    m = r - 1

    def rec(prefix, budget):
        if len(prefix) == m:
            yield prefix
            return
        for a in range(budget + 1):
            yield from rec(prefix + (a,), budget - a)

    for idx in rec((), n):
        yield (F.one,) + tuple(nodes[a] for a in idx)


def nonsingular_in_span(
    mats,
    constraint=None,
    seed: int = 0,
    sym_threshold: int = DEFAULT_SYM_THRESHOLD,
    confidence: float = DEFAULT_CONFIDENCE,
    eval_limit: int = DEFAULT_EVAL_LIMIT,
    prefer_basis: bool = True,
) -> SpanOracleResult:
    """Find coefficients ``c`` with ``det(sum c_i mats[i]) != 0``.

    ``constraint`` is an optional :class:`Subspace` of the coefficient space;
    only coefficient vectors inside it are allowed.
    """
    mats = list(mats)
    if constraint is not None and constraint.ambient_dim != len(mats):
        raise SizeMismatch("constraint lives in the wrong coefficient space")
    if not mats:
        return SpanOracleResult(NONE_CERTIFIED, witness="empty")
    F = mats[0].field
    n = mats[0].nrows
    for M in mats:
        if not M.is_square() or M.nrows != n:
            raise SizeMismatch("span oracle needs square matrices of one size")
        if M.field != F:
            raise SizeMismatch("span oracle matrices over different fields")

    m = len(mats)
    if constraint is None:
        gens = [tuple(F.one if i == j else F.zero for i in range(m)) for j in range(m)]
    else:
        gens = list(constraint.basis)
    r = len(gens)
    if r == 0:
        return SpanOracleResult(NONE_CERTIFIED, witness="empty")
    if n == 0:
        return SpanOracleResult(FOUND, coefficients=gens[0], determinant=F.one, evaluations=0)

    mat_rows = [M.rows for M in mats]
    eff_rows = [_combine(F, mat_rows, g, n) for g in gens]
    ev = _Evaluator(F, eff_rows, n)
    rng = random.Random(seed)

    def found(t, d, note=""):
        coeffs = lin_comb(F, t, gens, m)
        return SpanOracleResult(FOUND, coefficients=coeffs, determinant=d, evaluations=ev.count, note=note)

    if prefer_basis:
        for j in range(r):
            t = tuple(F.one if i == j else F.zero for i in range(r))
            d = ev(t)
            if d != F.zero:
                return found(t, d)
        t = (F.one,) * r
        d = ev(t)
        if d != F.zero:
            return found(t, d)

    if F.order is None:
        sample = [F.from_int(i) for i in range(2 * n + 1)]
        draw = lambda: rng.choice(sample)  # noqa: E731
        sample_size = len(sample)
    else:
        draw = lambda: F.random(rng)  # noqa: E731
        sample_size = F.order

    for _ in range(16):
        t = tuple(draw() for _ in range(r))
        d = ev(t)
        if d != F.zero:
            return found(t, d)

    if r <= sym_threshold:
        options = []
        if F.order is not None:
            options.append(((F.order**r - 1) // (F.order - 1), "exhaustive"))
        if F.order is None or F.order >= n + 1:
            options.append((math.comb(n + r - 1, r - 1), "symbolic_zero"))
        options.sort()
        for cost, kind in options:
            if cost > eval_limit:
                continue
            points = _projective_points(F, r) if kind == "exhaustive" else _lattice_points(F, r, n)
            for t in points:
                d = ev(t)
                if d != F.zero:
                    return found(t, d)
            return SpanOracleResult(NONE_CERTIFIED, witness=kind, evaluations=ev.count)

    per_trial = n / sample_size
    if per_trial < 1:
        trials = min(MAX_TRIALS, max(1, math.ceil(math.log(confidence) / math.log(per_trial))))
    else:
        trials = MAX_TRIALS
    for _ in range(trials):
        t = tuple(draw() for _ in range(r))
        d = ev(t)
        if d != F.zero:
            return found(t, d)
    if per_trial < 1:
        return SpanOracleResult(
            NONE_PROBABILISTIC, trials=trials + 16, bound=per_trial**trials, evaluations=ev.count
        )
    return _small_field_evidence(F, eff_rows, n, r, rng, ev, trials + 16, confidence)


def _small_field_evidence(F, eff_rows, n, r, rng, ev, base_trials, confidence):
    # |k| <= n: sample a larger extension of the prime field to bound the
    # probability that the determinant polynomial is identically zero
    if not isinstance(F, PrimeField):
        return SpanOracleResult(
            NONE_PROBABILISTIC,
            trials=base_trials,
            bound=1.0,
            evaluations=ev.count,
            note="field too small for a sampling bound",
        )
    e = 2
    while F.p**e <= 2 * n:
        e += 1
    E = GF(F.p, e)
    lifted = [[[E.from_base(x) for x in row] for row in rows] for rows in eff_rows]
    per_trial = n / E.order
    trials = min(MAX_TRIALS, max(1, math.ceil(math.log(confidence) / math.log(per_trial))))
    for _ in range(trials):
        t = tuple(E.random(rng) for _ in range(r))
        ev.count += 1
        if det_rows(E, _combine(E, lifted, t, n)) != E.zero:
            return SpanOracleResult(
                NONE_PROBABILISTIC,
                trials=base_trials,
                bound=1.0,
                evaluations=ev.count,
                note=f"determinant polynomial is nonzero over GF({F.p}^{e}); no point over the base found",
            )
    return SpanOracleResult(
        NONE_PROBABILISTIC,
        trials=trials,
        bound=per_trial**trials,
        evaluations=ev.count,
        note=f"determinant polynomial sampled over GF({F.p}^{e})",
    )
