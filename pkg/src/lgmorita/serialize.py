"""JSON documents for every artifact, plus a plain-text rendering.

Polynomials are stored as canonical strings and matrices as row-major lists
of rows.  ``loads(dumps(x)) == x`` for every supported object, and output
is deterministic (no timestamps, fixed key order).
"""

from __future__ import annotations

import json
from typing import Any, Dict

from .errors import DocumentError
from .homotopy import GradedMorphism, Homotopy
from .matrix import PolyMatrix
from .mf import MatrixFactorization
from .morita import LGObject, LGOneMorphism, MoritaContext, Report, make_context
from .ring import Polynomial
from .text import parse_polynomial, print_polynomial

KINDS = ("polynomial", "matrix", "factorization", "morphism", "homotopy", "context", "report")


def matrix_payload(m: PolyMatrix):
    return [[print_polynomial(e) for e in m.row(i)] for i in range(m.rows)]


def _matrix(rows, cols=None) -> PolyMatrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DocumentError("a matrix must be a list of rows")
    if not rows:
        return PolyMatrix(0, cols or 0, [])
    return PolyMatrix.from_rows([[parse_polynomial(str(e)) for e in r] for r in rows])


def factorization_payload(m: MatrixFactorization) -> Dict[str, Any]:
    return {"f": print_polynomial(m.f), "p": matrix_payload(m.p), "q": matrix_payload(m.q)}


def _factorization(d) -> MatrixFactorization:
    try:
        return MatrixFactorization(parse_polynomial(d["f"]), _matrix(d["p"]), _matrix(d["q"]))
    except KeyError as exc:
        raise DocumentError(f"factorization is missing {exc}") from None


def _object_payload(o: LGObject):
    return {"variables": [str(v) for v in o.variables], "polynomial": print_polynomial(o.f)}


def _object(d) -> LGObject:
    return LGObject.of(parse_polynomial(d["polynomial"]), d.get("variables"))


def to_document(obj) -> Dict[str, Any]:
    if isinstance(obj, Polynomial):
        return {"kind": "polynomial", "value": print_polynomial(obj)}
    if isinstance(obj, PolyMatrix):
        return {"kind": "matrix", "rows": obj.rows, "cols": obj.cols, "entries": matrix_payload(obj)}
    if isinstance(obj, MatrixFactorization):
        return {"kind": "factorization", **factorization_payload(obj)}
    if isinstance(obj, GradedMorphism):
        return {
            "kind": "morphism",
            "source": factorization_payload(obj.source),
            "target": factorization_payload(obj.target),
            "even": matrix_payload(obj.even),
            "odd": matrix_payload(obj.odd),
        }
    if isinstance(obj, Homotopy):
        return {
            "kind": "homotopy",
            "source": factorization_payload(obj.source),
            "target": factorization_payload(obj.target),
            "lambda0": matrix_payload(obj.lambda0),
            "lambda1": matrix_payload(obj.lambda1),
        }
    if isinstance(obj, MoritaContext):
        return {
            "kind": "context",
            "f": _object_payload(obj.x.source),
            "g": _object_payload(obj.x.target),
            "x": factorization_payload(obj.x.mf),
            "y": factorization_payload(obj.y.mf),
            "eta": {"even": matrix_payload(obj.eta.even), "odd": matrix_payload(obj.eta.odd)},
            "rho": {"even": matrix_payload(obj.rho.even), "odd": matrix_payload(obj.rho.odd)},
        }
    if isinstance(obj, Report):
        return {
            "kind": "report",
            "name": obj.name,
            "passed": obj.passed,
            "checks": [{"name": n, "passed": ok} for n, ok in obj.checks],
            "details": dict(obj.details),
        }
    raise DocumentError(f"cannot serialize {type(obj).__name__}")


def _morphism_pair(d, source: MatrixFactorization, target: MatrixFactorization):
    if d is None:
        return GradedMorphism.zero(source, target)
    return _matrix(d["even"], source.n), _matrix(d["odd"], source.n)


def from_document(doc: Dict[str, Any]):
    if not isinstance(doc, dict) or doc.get("kind") not in KINDS:
        raise DocumentError(f"unknown document kind {doc.get('kind') if isinstance(doc, dict) else doc!r}")
    kind = doc["kind"]
    if kind == "polynomial":
        return parse_polynomial(doc["value"])
    if kind == "matrix":
        m = _matrix(doc["entries"], doc.get("cols"))
        if m.shape != (doc.get("rows", m.rows), doc.get("cols", m.cols)):
            raise DocumentError("matrix shape does not match its entries")
        return m
    if kind == "factorization":
        return _factorization(doc)
    if kind == "morphism":
        return GradedMorphism(
            _factorization(doc["source"]), _factorization(doc["target"]), _matrix(doc["even"]), _matrix(doc["odd"])
        )
    if kind == "homotopy":
        return Homotopy(
            _factorization(doc["source"]), _factorization(doc["target"]), _matrix(doc["lambda0"]), _matrix(doc["lambda1"])
        )
    if kind == "context":
        f, g = _object(doc["f"]), _object(doc["g"])
        x = LGOneMorphism(f, g, _factorization(doc["x"]))
        y = LGOneMorphism(g, f, _factorization(doc["y"]))
        from .morita import eta_ends, rho_ends

        eta = _morphism_pair(doc.get("eta"), *eta_ends(x, y))
        rho = _morphism_pair(doc.get("rho"), *rho_ends(x, y))
        return make_context(x, y, eta, rho)
    r = Report(doc["name"], [(c["name"], bool(c["passed"])) for c in doc.get("checks", [])], dict(doc.get("details", {})))
    return r


def _format(value, depth: int = 0) -> str:
    # like json.dumps(indent=2) but lists of scalars (matrix rows) stay on one line
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_format(v, depth + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return "[" + ", ".join(json.dumps(v, ensure_ascii=False) for v in value) + "]"
        return "[\n" + ",\n".join(inner + _format(v, depth + 1) for v in value) + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(obj) -> str:
    return _format(to_document(obj)) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def _matrix_text(name: str, m: PolyMatrix) -> str:
    cells = matrix_payload(m)
    width = max((len(c) for r in cells for c in r), default=0)
    lines = [f"{name} ="]
    for r in cells:
        lines.append("  [" + ", ".join(c.rjust(width) for c in r) + "]")
    return "\n".join(lines)


def render_text(obj) -> str:
    if isinstance(obj, Polynomial):
        return print_polynomial(obj) + "\n"
    if isinstance(obj, PolyMatrix):
        return _matrix_text("M", obj) + "\n"
    if isinstance(obj, MatrixFactorization):
        return "\n".join([f"f = {print_polynomial(obj.f)}", f"size = {obj.n}", _matrix_text("P", obj.p), _matrix_text("Q", obj.q)]) + "\n"
    if isinstance(obj, GradedMorphism):
        return "\n".join([_matrix_text("even", obj.even), _matrix_text("odd", obj.odd)]) + "\n"
    if isinstance(obj, Homotopy):
        return "\n".join([_matrix_text("lambda0", obj.lambda0), _matrix_text("lambda1", obj.lambda1)]) + "\n"
    if isinstance(obj, Report):
        lines = [f"{obj.name}: {'PASS' if obj.passed else 'FAIL'}"]
        lines += [f"  [{'pass' if ok else 'FAIL'}] {n}" for n, ok in obj.checks]
        lines += [f"  {k}: {v}" for k, v in obj.details.items()]
        return "\n".join(lines) + "\n"
    if isinstance(obj, MoritaContext):
        return dumps(obj)
    raise DocumentError(f"cannot render {type(obj).__name__}")
