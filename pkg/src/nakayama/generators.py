"""Algebra families used as fixtures and by ``nakayama gen``."""

from __future__ import annotations

import itertools

from .algebra import Algebra
from .errors import BadParams, NotAGroup
from .fields import GF, QQ, Field, parse_field
from .linalg import Subspace

__all__ = [
    "matrix_algebra",
    "truncated_polynomial",
    "exterior_q",
    "group_algebra",
    "cyclic_group_table",
    "upper_triangular",
    "field_algebra",
    "fixture",
    "FIXTURE_NAMES",
    "FAMILIES",
    "generate",
]


def _field(F):
    return parse_field(F) if isinstance(F, str) else F


def matrix_algebra(n: int, F) -> Algebra:
    """``M_n(F)`` on the matrix units ``E_ab`` (index ``a*n + b``); simples are columns."""
    F = _field(F)
    if n < 1:
        raise BadParams("matrix size must be positive")
    idx = lambda a, b: a * n + b  # noqa: E731
    sc = [(idx(a, b), idx(b, c), idx(a, c), F.one) for a in range(n) for b in range(n) for c in range(n)]
    one = [F.zero] * (n * n)
    for a in range(n):
        one[idx(a, a)] = F.one
    labels = [f"E{a + 1}{b + 1}" for a in range(n) for b in range(n)]
    N = n * n
    simples = []
    for col in range(n):
        vecs = [tuple(F.one if k == idx(a, col) else F.zero for k in range(N)) for a in range(n)]
        simples.append(Subspace(F, N, vecs))
    return Algebra(F, N, sc, one=one, labels=labels, simples=simples, name=f"M{n}({F!r})")


def truncated_polynomial(n: int, F) -> Algebra:
    """``F[x]/(x^n)``."""
    F = _field(F)
    if n < 1:
        raise BadParams("truncation degree must be positive")
    sc = [(i, j, i + j, F.one) for i in range(n) for j in range(n) if i + j < n]
    labels = ["1"] + ["x" if i == 1 else f"x^{i}" for i in range(1, n)]
    one = [F.one] + [F.zero] * (n - 1)
    simples = [Subspace(F, n, [tuple(one)])]
    return Algebra(F, n, sc, one=one, labels=labels, simples=simples, name=f"{F!r}[x]/(x^{n})")


def exterior_q(F, q) -> Algebra:
    """``F<x, y>/(x^2, y^2, xy + q yx)`` on the basis ``1, x, y, xy``."""
    F = _field(F)
    q = F.coerce(q)
    if F.is_zero(q):
        raise BadParams("q must be nonzero")
    yx = F.neg(F.inv(q))  # y*x = -q^-1 xy
    one, x, y, xy = 0, 1, 2, 3
    sc = [(one, b, b, F.one) for b in range(4)]
    sc += [(b, one, b, F.one) for b in range(1, 4)]
    sc += [(x, y, xy, F.one), (y, x, xy, yx)]
    unit = (F.one, F.zero, F.zero, F.zero)
    simples = [Subspace(F, 4, [unit])]
    return Algebra(F, 4, sc, one=unit, labels=["1", "x", "y", "xy"], simples=simples,
                   name=f"Lambda_{F.format(q)}({F!r})")


def cyclic_group_table(n: int):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _check_group(table):
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise NotAGroup("Cayley table must be square and nonempty")
    for row in table:
        if sorted(row) != list(range(n)):
            raise NotAGroup("Cayley table rows are not permutations")
    for c in range(n):
        if sorted(table[r][c] for r in range(n)) != list(range(n)):
            raise NotAGroup("Cayley table columns are not permutations")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup(f"Cayley table is not associative at ({a},{b},{c})")
    ids = [e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))]
    if not ids:
        raise NotAGroup("Cayley table has no identity")
    return ids[0]


def group_algebra(table, F, name="G") -> Algebra:
    """Group algebra ``F[G]`` from a Cayley table on ``0..n-1``."""
    F = _field(F)
    e = _check_group(table)
    n = len(table)
    sc = [(a, b, table[a][b], F.one) for a in range(n) for b in range(n)]
    one = [F.one if g == e else F.zero for g in range(n)]
    return Algebra(F, n, sc, one=one, labels=[f"g{g}" for g in range(n)], name=f"{F!r}[{name}]")


def upper_triangular(n: int, F) -> Algebra:
    """Upper-triangular ``n x n`` matrices on ``E_ab`` with ``a <= b``."""
    F = _field(F)
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    pos = {p: i for i, p in enumerate(pairs)}
    sc = []
    for (a, b), i in pos.items():
        for (c, d), j in pos.items():
            if b == c:
                sc.append((i, j, pos[(a, d)], F.one))
    one = [F.one if a == b else F.zero for a, b in pairs]
    labels = [f"e{a + 1}{b + 1}" for a, b in pairs]
    return Algebra(F, len(pairs), sc, one=one, labels=labels, name=f"T{n}({F!r})")


def field_algebra(F) -> Algebra:
    """The field ``F`` as a one-dimensional algebra over itself."""
    F = _field(F)
    return Algebra(F, 1, [(0, 0, 0, F.one)], one=[F.one], labels=["1"],
                   simples=[Subspace(F, 1, [(F.one,)])], name=f"{F!r}")


FIXTURE_NAMES = ("A", "B", "C", "D", "E", "F", "G", "B'")


def fixture(name: str) -> Algebra:
    """Named fixtures (see README)."""
    name = name.upper().removeprefix("FIX-")
    if name == "A":
        return truncated_polynomial(2, QQ)
    if name == "B":
        return exterior_q(GF(7), 3)
    if name == "C":
        return upper_triangular(2, QQ)
    if name == "D":
        return matrix_algebra(2, GF(3))
    if name == "E":
        return field_algebra(GF(2, 2))
    if name == "F":
        return matrix_algebra(2, GF(2, 2))
    if name == "G":
        return exterior_q(QQ, 2)
    if name in ("B'", "BP", "B-PRIME"):
        return exterior_q(GF(7, 2), 3)
    raise BadParams(f"unknown fixture {name!r}")


def _int(params, key, default=None):
    if key not in params:
        if default is None:
            raise BadParams(f"missing parameter {key!r}")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise BadParams(f"parameter {key!r} must be an integer") from None


def generate(family: str, params: dict) -> Algebra:
    """Dispatch for ``nakayama gen``; ``params`` maps names to strings."""
    def field():
        return parse_field(params.get("field", "QQ"))

    if family == "matrix":
        return matrix_algebra(_int(params, "n"), field())
    if family == "trunc_poly":
        return truncated_polynomial(_int(params, "n"), field())
    if family == "exterior_q":
        return exterior_q(field(), params.get("q", "1"))
    if family == "group":
        if "table" in params:
            import json

            table = json.loads(params["table"])
            return group_algebra(table, field())
        n = _int(params, "n")
        return group_algebra(cyclic_group_table(n), field(), name=f"C{n}")
    if family == "triangular":
        return upper_triangular(_int(params, "n"), field())
    if family == "field":
        return field_algebra(field())
    if family == "fixture":
        return fixture(params.get("name", ""))
    if family in ("product", "opposite"):
        parts = [p for p in params.get("of", "").split(";") if p]
        algebras = [_from_spec(p) for p in parts]
        if family == "opposite":
            if len(algebras) != 1:
                raise BadParams("opposite takes exactly one algebra")
            return algebras[0].opposite()
        if len(algebras) < 2:
            raise BadParams("product needs at least two algebras")
        out = algebras[0]
        for B in algebras[1:]:
            out = out.direct_product(B)
        return out
    raise BadParams(f"unknown family {family!r}")


def _from_spec(text: str) -> Algebra:
    # "family:key=val,key=val"
    family, _, rest = text.partition(":")
    params = dict(kv.split("=", 1) for kv in rest.split(",") if kv)
    return generate(family, params)


FAMILIES = ("matrix", "trunc_poly", "exterior_q", "group", "triangular", "field", "fixture", "product", "opposite")

del Field
