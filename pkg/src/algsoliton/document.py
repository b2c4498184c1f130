"""JSON input documents: a metric Lie algebra written with 1-based indices.

::

    {"name": "e2", "dim": 3, "parameters": [],
     "brackets": [{"i": 1, "j": 2, "out": {"3": "1"}}, ...],
     "metric": [["1", "0", "0"], ...]}

Scalars are strings in the expression grammar (bare integers are accepted).
Errors name the offending location, e.g. ``brackets[1].out["3"]``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import AlgSolitonError, ParseError
from .exact import Matrix, format_scalar, parse_scalar
from .exact.scalar import substitute
from .geometry import MetricLieAlgebra, make_metric_lie_algebra
from .liealg import make_lie_algebra


class DocumentError(AlgSolitonError, ValueError):
    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


def _scalar(value, where, param, bindings):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(where, f"expected a scalar expression string, got {type(value).__name__}")
    try:
        x = parse_scalar(str(value), param)
    except ParseError as exc:
        raise DocumentError(where, str(exc)) from None
    except ZeroDivisionError as exc:
        raise DocumentError(where, str(exc) or "division by zero") from None
    if param is not None and param in bindings:
        x = substitute(x, param, bindings[param])
    return x


def _require(doc, key, kind, where="document"):
    if key not in doc:
        raise DocumentError(where, f"missing field {key!r}")
    if not isinstance(doc[key], kind) or isinstance(doc[key], bool):
        raise DocumentError(f"{key}", f"expected {kind.__name__ if isinstance(kind, type) else kind}")
    return doc[key]


def document_to_metric(doc: dict, bindings: dict | None = None) -> MetricLieAlgebra:
    """Validate a parsed document; ``bindings`` substitutes rationals for parameters."""
    bindings = bindings or {}
    if not isinstance(doc, dict):
        raise DocumentError("document", "top level must be an object")
    name = doc.get("name", "")
    dim = _require(doc, "dim", int)
    if dim < 1:
        raise DocumentError("dim", "must be positive")
    params = doc.get("parameters", [])
    if not isinstance(params, list) or not all(isinstance(p, str) for p in params):
        raise DocumentError("parameters", "expected a list of names")
    if len(params) > 1:
        raise DocumentError("parameters", "at most one parameter is supported")
    param = params[0] if params else None
    unknown = set(bindings) - set(params)
    if unknown:
        raise DocumentError("parameters", f"--param names {sorted(unknown)} not declared")

    brackets = []
    for n, br in enumerate(_require(doc, "brackets", list)):
        where = f"brackets[{n}]"
        if not isinstance(br, dict):
            raise DocumentError(where, "expected an object")
        idx = []
        for key in ("i", "j"):
            v = br.get(key)
            if not isinstance(v, int) or isinstance(v, bool):
                raise DocumentError(f"{where}.{key}", "expected an integer index")
            if not 1 <= v <= dim:
                raise DocumentError(f"{where}.{key}", f"index {v} outside 1..{dim} (indices are 1-based)")
            idx.append(v - 1)
        out = br.get("out")
        if not isinstance(out, dict):
            raise DocumentError(f"{where}.out", "expected an object mapping index to scalar")
        terms = {}
        for k, v in out.items():
            kw = f'{where}.out["{k}"]'
            try:
                ki = int(k)
            except ValueError:
                raise DocumentError(kw, "keys must be integer indices") from None
            if not 1 <= ki <= dim:
                raise DocumentError(kw, f"index {ki} outside 1..{dim} (indices are 1-based)")
            terms[ki - 1] = _scalar(v, kw, param, bindings)
        brackets.append((idx[0], idx[1], terms))

    rows = _require(doc, "metric", list)
    if len(rows) != dim or not all(isinstance(r, list) and len(r) == dim for r in rows):
        raise DocumentError("metric", f"expected a {dim}x{dim} array")
    g = Matrix([[_scalar(v, f"metric[{i}][{j}]", param, bindings) for j, v in enumerate(row)]
                for i, row in enumerate(rows)])
    names = doc.get("basis")
    try:
        alg = make_lie_algebra(dim, brackets, names)
        free = param if param not in bindings else None
        return make_metric_lie_algebra(alg, g, free, name)
    except AlgSolitonError as exc:
        raise DocumentError("document", f"{type(exc).__name__}: {exc}") from exc


def load_input(path, bindings: dict | None = None) -> MetricLieAlgebra:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    return document_to_metric(doc, bindings)


def metric_to_document(m: MetricLieAlgebra) -> dict:
    brackets = []
    for (i, j), terms in sorted(m.algebra.brackets.items()):
        if i < j:
            brackets.append({"i": i + 1, "j": j + 1,
                             "out": {str(k + 1): format_scalar(c) for k, c in terms}})
    return {
        "name": m.name,
        "dim": m.dim,
        "basis": list(m.algebra.basis_names),
        "parameters": [m.param] if m.param else [],
        "brackets": brackets,
        "metric": [[format_scalar(x) for x in row] for row in m.metric],
    }
