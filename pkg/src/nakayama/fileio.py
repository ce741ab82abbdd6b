"""JSON algebra files with exact value strings.

Schema (keys other than ``field``, ``dimension`` and
``structure_constants`` are optional)::

    {
      "field": "GF(7)",
      "dimension": 4,
      "basis_names": ["1", "x", "y", "xy"],
      "structure_constants": [[i, j, m, "value"], ...],
      "one": ["1", "0", "0", "0"],
      "simples": [[["1", "0", "0", "0"]], ...],
      "modules": [{"name": "X", "side": "left", "act": [[["1"]], ...]}]
    }

Field literals: ``QQ``, ``GF(q)``, ``GF(p)[t]/(c0,..,1)``, ``QQ[t]/(c0,..,1)``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import Algebra
from .errors import AlgebraError, SchemaError
from .fields import ExtensionField, Field, PrimeField, RationalField, parse_field
from .linalg import Matrix, Subspace
from .modrep import LeftModule, RightModule

__all__ = ["field_literal", "algebra_to_dict", "algebra_from_dict", "dump_algebra", "load_algebra", "dumps"]


def field_literal(F: Field) -> str:
    if isinstance(F, RationalField):
        return "QQ"
    if isinstance(F, PrimeField):
        return f"GF({F.p})"
    if isinstance(F, ExtensionField):
        return f"{field_literal(F.base)}[t]/({','.join(F.base.format(c) for c in F.modulus)})"
    raise SchemaError(f"no literal for field {F!r}")


def algebra_to_dict(A: Algebra, modules=()) -> dict:
    F = A.field
    out = {
        "field": field_literal(F),
        "dimension": A.dim,
        "basis_names": list(A.labels),
        "structure_constants": [[i, j, m, F.format(c)] for i, j, m, c in A.structure_constants],
        "one": [F.format(x) for x in A.one],
    }
    if A.name:
        out["name"] = A.name
    if A.simples:
        out["simples"] = [V.to_strings() for V in A.simples]
    if modules:
        out["modules"] = [
            {"name": M.name, "side": M.side, "act": [m.to_strings() for m in M.act]} for M in modules
        ]
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def dump_algebra(A: Algebra, path=None, modules=()) -> str:
    text = dumps(algebra_to_dict(A, modules))
    if path is not None:
        Path(path).write_text(text)
    return text


def _where(ctx, key):
    return f"{ctx}: {key}" if ctx else key


def _parse_value(F, s, ctx):
    try:
        return F.parse(str(s))
    except (AlgebraError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{ctx}: cannot parse {s!r} in {F!r} ({exc})") from None


def _index(v, n, ctx):
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise SchemaError(f"{ctx}: index {v!r} out of range 0..{n - 1}")
    return v


def algebra_from_dict(data: dict, ctx: str = ""):
    """``(algebra, modules)``; the algebra is validated."""
    if not isinstance(data, dict):
        raise SchemaError(_where(ctx, "top level must be an object"))
    for key in ("field", "dimension", "structure_constants"):
        if key not in data:
            raise SchemaError(_where(ctx, f"missing key {key!r}"))
    try:
        F = parse_field(data["field"])
    except AlgebraError as exc:
        raise SchemaError(_where(ctx, f"field: {exc}")) from None
    n = data["dimension"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError(_where(ctx, "dimension must be a positive integer"))
    sc = []
    for k, entry in enumerate(data["structure_constants"]):
        where = _where(ctx, f"structure_constants[{k}]")
        if not isinstance(entry, (list, tuple)) or len(entry) != 4:
            raise SchemaError(f"{where}: expected [i, j, m, value]")
        i, j, m = (_index(v, n, where) for v in entry[:3])
        sc.append((i, j, m, _parse_value(F, entry[3], where)))
    one = None
    if data.get("one") is not None:
        if len(data["one"]) != n:
            raise SchemaError(_where(ctx, "one has the wrong length"))
        one = [_parse_value(F, s, _where(ctx, "one")) for s in data["one"]]
    labels = data.get("basis_names")
    if labels is not None and len(labels) != n:
        raise SchemaError(_where(ctx, "basis_names has the wrong length"))
    simples = None
    if data.get("simples"):
        simples = []
        for k, V in enumerate(data["simples"]):
            where = _where(ctx, f"simples[{k}]")
            vecs = []
            for v in V:
                if len(v) != n:
                    raise SchemaError(f"{where}: vector of length {len(v)}")
                vecs.append(tuple(_parse_value(F, s, where) for s in v))
            simples.append(Subspace(F, n, vecs))
    A = Algebra(F, n, sc, one=one, labels=labels, simples=simples, name=data.get("name", ""))
    A.validate()
    modules = []
    for k, spec in enumerate(data.get("modules") or []):
        where = _where(ctx, f"modules[{k}]")
        cls = {"left": LeftModule, "right": RightModule}.get(spec.get("side"))
        if cls is None:
            raise SchemaError(f"{where}: side must be left or right")
        mats = []
        for M in spec.get("act", []):
            mats.append(Matrix(F, [[_parse_value(F, s, where) for s in row] for row in M], len(M[0]) if M else 0))
        try:
            modules.append(cls(A, mats, name=spec.get("name", f"M{k}")))
        except AlgebraError as exc:
            raise SchemaError(f"{where}: {exc}") from None
    return A, modules


def load_algebra(path):
    path = str(path)
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise SchemaError(f"{path}: {exc.strerror}") from None
    return algebra_from_dict(data, ctx=path)
