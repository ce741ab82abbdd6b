"""Randomised suites for the hyperplane-enlargement and commutator lemmas."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .errors import BadParams, FieldTooSmall
from .fields import GF, Field, parse_field
from .generators import matrix_algebra
from .linalg import Matrix, Subspace, extend_to_hyperplane_avoiding

__all__ = ["SuiteResult", "lemma6_suite", "lemma5_suite", "lemma5_two_element_instance", "trial_rng"]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list = dc_field(default_factory=list)
    expected_failures: int = 0

    def summary(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "expected_failures": self.expected_failures,
            "failures": self.failures,
        }


def trial_rng(seed: int, trial: int) -> random.Random:
    """Per-trial generator derived from the suite seed by counter."""
    return random.Random(f"{seed}:{trial}")


def lemma6_suite(n: int, q: int, trials: int = 100, seed: int = 0) -> SuiteResult:
    """``I + [S,S] = S`` for random principal left ideals ``I`` of ``M_n(GF(q))``."""
    if n not in (2, 3, 4) or q not in (2, 3, 5, 7):
        raise BadParams("lemma6 supports n in {2,3,4} and q in {2,3,5,7}")
    A = matrix_algebra(n, GF(q))
    comm = A.commutator_space()
    res = SuiteResult(f"lemma6 n={n} q={q}")
    for t in range(trials):
        rng = trial_rng(seed, t)
        x = A.random_element(rng)
        while all(c == 0 for c in x):
            x = A.random_element(rng)
        I = A.left_ideal_generated(x)
        if (I + comm).is_full():
            res.passed += 1
        else:
            res.failed += 1
            res.failures.append({"trial": t, "x": [str(c) for c in x]})
    return res


def _random_vector(F: Field, n: int, rng):
    if F.order is None:
        return tuple(F.from_int(rng.randint(-3, 3)) for _ in range(n))
    return tuple(F.random(rng) for _ in range(n))


def _random_decomposition(F, dim, k, rng):
    while True:
        cols = [_random_vector(F, dim, rng) for _ in range(dim)]
        if Matrix.from_columns(F, cols, dim).det() != F.zero:
            break
    cuts = sorted(rng.sample(range(1, dim), k - 1))
    bounds = [0] + cuts + [dim]
    return [Subspace(F, dim, cols[a:b]) for a, b in zip(bounds, bounds[1:])]


def lemma5_suite(field="QQ", dim: int = 6, subspaces: int = 4, trials: int = 200, seed: int = 0) -> SuiteResult:
    """Random instances ``U``, ``V = V_1 + .. + V_k``; check the enlarged hyperplane.

    Instances violating a precondition (some ``V_i`` inside ``U``) are
    skipped.  When ``|k| < k`` a FieldTooSmall outcome is counted as expected.
    """
    F = parse_field(field) if isinstance(field, str) else field
    if dim < 2 or not 1 <= subspaces <= dim:
        raise BadParams("lemma5 needs dim >= 2 and 1 <= subspaces <= dim")
    small = F.order is not None and F.order < subspaces
    res = SuiteResult(f"lemma5 field={field} dim={dim} k={subspaces}")
    for t in range(trials):
        rng = trial_rng(seed, t)
        V = _random_decomposition(F, dim, subspaces, rng)
        U = Subspace(F, dim, [_random_vector(F, dim, rng) for _ in range(rng.randint(0, dim - 2))])
        if any(U.contains(Vi) for Vi in V):
            res.skipped += 1
            continue
        try:
            H = extend_to_hyperplane_avoiding(U, V)
        except FieldTooSmall:
            if small:
                res.expected_failures += 1
            else:
                res.failed += 1
                res.failures.append({"trial": t, "error": "FieldTooSmall"})
            continue
        if H.codim == 1 and H.contains(U) and not any(H.contains(Vi) for Vi in V):
            res.passed += 1
        else:
            res.failed += 1
            res.failures.append({"trial": t, "error": "postcondition"})
    return res


def lemma5_two_element_instance():
    """``U = span{(1,1,1)}`` in ``GF(2)^3`` avoiding the three axes.

    Returns ``(raised FieldTooSmall, number of hyperplanes through U that avoid the axes)``.
    """
    from .linalg import hyperplanes_containing

    F = GF(2)
    U = Subspace(F, 3, [(1, 1, 1)])
    axes = [Subspace(F, 3, [tuple(int(i == j) for i in range(3))]) for j in range(3)]
    valid = sum(1 for H in hyperplanes_containing(U) if not any(H.contains(a) for a in axes))
    try:
        extend_to_hyperplane_avoiding(U, axes)
    except FieldTooSmall:
        return True, valid
    return False, valid

