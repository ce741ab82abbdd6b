"""Enlarging a subspace to a hyperplane that avoids a list of subspaces.

At each step the subspace ``U`` (of codimension >= 2) is enlarged by one
dimension.  Taking two vectors ``c1, c2`` independent modulo ``U``, the
``|k| + 1`` lines ``c1`` and ``c2 + t*c1`` give pairwise distinct
one-dimensional enlargements of ``U``.  An avoided subspace ``V`` not inside
``U`` lies in at most one of them (two would force ``V`` into their
intersection ``U``), so with ``|k| >= len(avoid)`` at least one candidate
is valid and the stream below always terminates with a choice.
"""

from __future__ import annotations

import itertools

from ..errors import AlreadyContains, AmbientMismatch, FieldTooSmall
from .matrix import Matrix
from .subspace import Subspace

__all__ = ["extend_to_hyperplane_avoiding", "hyperplanes_containing", "EXHAUSTIVE_LIMIT"]

# max number of hyperplanes enumerated when the field-size precondition fails
EXHAUSTIVE_LIMIT = 1 << 16


def _avoids(W: Subspace, avoid) -> bool:
    return not any(W.contains(V) for V in avoid)


def _candidates(U: Subspace, count: int):
    F, n = U.field, U.ambient_dim
    comp = U.complement_basis()
    # coordinate vectors first
    for e in comp:
        yield e
    c1, c2 = comp[0], comp[1]
    add, mul = F.add, F.mul
    if F.order is None:
        scalars = [F.from_int(i) for i in range(count + 1)]
    else:
        scalars = list(F.elements())
    for t in scalars:
        yield tuple(add(b, mul(t, a)) for a, b in zip(c1, c2))
    yield c1


def extend_to_hyperplane_avoiding(U: Subspace, avoid, exhaustive: bool = True) -> Subspace:
    """Hyperplane ``U' >= U`` containing none of the subspaces in ``avoid``.

    Raises AlreadyContains when some avoided subspace already lies in ``U``.
    When the field has fewer elements than ``len(avoid)`` the greedy
    guarantee is lost; finite fields are then searched exhaustively
    (bounded by :data:`EXHAUSTIVE_LIMIT`) and FieldTooSmall is raised if no
    valid hyperplane exists or the search is not affordable.
    """
    avoid = list(avoid)
    F, n = U.field, U.ambient_dim
    for V in avoid:
        if V.ambient_dim != n:
            raise AmbientMismatch("avoided subspace in a different ambient space")
        if U.contains(V):
            raise AlreadyContains("an avoided subspace already lies in U")
    if U.codim == 0:
        raise AlreadyContains("U is the whole space")
    if U.codim == 1:
        return U
    if F.order is not None and F.order < len(avoid):
        if not exhaustive:
            raise FieldTooSmall(f"|k| = {F.order} < {len(avoid)} avoided subspaces")
        for H in hyperplanes_containing(U):
            if _avoids(H, avoid):
                return H
        raise FieldTooSmall(
            f"no hyperplane through U avoids all {len(avoid)} subspaces over a field of order {F.order}"
        )
    W = U
    while W.codim > 1:
        for v in _candidates(W, len(avoid)):
            if v in W:
                continue
            cand = W + Subspace(F, n, [v])
            if _avoids(cand, avoid):
                W = cand
                break
        else:  # pragma: no cover - excluded by the counting argument above
            raise FieldTooSmall("candidate stream exhausted")
    return W


def hyperplanes_containing(U: Subspace):
    """All hyperplanes containing ``U`` over a finite field, in a fixed order.

    A hyperplane through ``U`` is the kernel of a nonzero functional that
    vanishes on ``U``; functionals are enumerated projectively.
    """
    F, n = U.field, U.ambient_dim
    if F.order is None:
        raise FieldTooSmall("cannot enumerate hyperplanes over an infinite field")
    ann = U.annihilator()
    r = ann.dim
    total = (F.order**r - 1) // (F.order - 1)
    if total > EXHAUSTIVE_LIMIT:
        raise FieldTooSmall(f"{total} hyperplanes exceed the enumeration limit")
    elems = list(F.elements())
    for lead in range(r):
        for tail in itertools.product(elems, repeat=r - lead - 1):
            coeffs = [F.zero] * lead + [F.one] + list(tail)
            f = ann.vector(coeffs)
            yield Subspace.kernel_of(Matrix(F, [f], n))
