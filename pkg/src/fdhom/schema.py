"""JSON schemas for algebras and modules.

Input algebra files are either quiver presentations or raw multiplication
tables; module files give vertex dimensions plus arrow matrices (quiver
style) or a total dimension plus one matrix per basis label (table style).
Serialisation always emits the canonical table forms, so
serialize(parse(file)) is a fixpoint after one round.

All matrices are row-major lists of rows.  Vertex components of a quiver
module are ordered as the vertices were declared.  For a left module the
matrix of arrow a: s -> t has shape (dim_t, dim_s); for a right module,
(dim_s, dim_t).
"""

import hashlib
import json
from pathlib import Path

from .algebra import Algebra, AlgebraError, Quiver, Relation, build_path_algebra, build_table_algebra
from .catalog import CatalogError, quiver_module, table_module
from .modules import ModuleRep


class SchemaError(ValueError):
    """Malformed input document; the message names the offending field."""


def _need(obj, key, where, types=None):
    if key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    val = obj[key]
    if types is not None and not isinstance(val, types):
        raise SchemaError(f"{where}.{key}: expected {types}, got {type(val).__name__}")
    return val


def load_json(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def parse_algebra(source, base_dir=".") -> Algebra:
    """Algebra from a dict, or from a path to a JSON file."""
    if isinstance(source, (str, Path)):
        path = Path(base_dir) / source if not Path(source).is_absolute() else Path(source)
        return parse_algebra(load_json(path), base_dir=path.parent)
    if not isinstance(source, dict):
        raise SchemaError(f"algebra: expected an object, got {type(source).__name__}")
    kind = _need(source, "kind", "algebra", str)
    p = _need(source, "p", "algebra", int)
    try:
        if kind == "quiver":
            vertices = _need(source, "vertices", "algebra", list)
            arrows_raw = _need(source, "arrows", "algebra", list)
            arrows = []
            for k, a in enumerate(arrows_raw):
                where = f"algebra.arrows[{k}]"
                arrows.append((_need(a, "name", where, str),
                               _need(a, "source", where, str),
                               _need(a, "target", where, str)))
            quiver = Quiver(vertices, arrows)
            rels = []
            for k, rel in enumerate(source.get("relations", [])):
                where = f"algebra.relations[{k}]"
                if not isinstance(rel, list):
                    raise SchemaError(f"{where}: expected a list of terms")
                terms = []
                for t, term in enumerate(rel):
                    terms.append((_need(term, "coeff", f"{where}[{t}]", int),
                                  _need(term, "path", f"{where}[{t}]", list)))
                rels.append(Relation(terms, quiver, p))
            bound = source.get("length_bound", 16)
            return build_path_algebra(quiver, rels, p, length_bound=bound)
        if kind == "table":
            labels = _need(source, "basis", "algebra", list)
            dim = _need(source, "dim", "algebra", int)
            if len(labels) != dim:
                raise SchemaError(f"algebra: dim {dim} but {len(labels)} basis labels")
            products = _need(source, "products", "algebra", list)
            unit = _need(source, "unit", "algebra", list)
            idem = source.get("idempotents")
            return build_table_algebra(p, labels, products, unit, idempotents=idem)
    except (AlgebraError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"algebra: {exc}") from exc
    raise SchemaError(f"algebra.kind: unknown kind {kind!r}")


def parse_module(source, base_dir=".", algebra: Algebra = None) -> ModuleRep:
    """Module from a dict or path; the algebra may be inline or a path."""
    if isinstance(source, (str, Path)):
        path = Path(base_dir) / source if not Path(source).is_absolute() else Path(source)
        return parse_module(load_json(path), base_dir=path.parent, algebra=algebra)
    if not isinstance(source, dict):
        raise SchemaError(f"module: expected an object, got {type(source).__name__}")
    if algebra is None:
        algebra = parse_algebra(_need(source, "algebra", "module"), base_dir=base_dir)
    side = _need(source, "side", "module", str)
    if side not in ("left", "right"):
        raise SchemaError(f"module.side: expected left or right, got {side!r}")
    action = _need(source, "action", "module", dict)
    try:
        if "dims" in source:
            dims = source["dims"]
            if algebra.quiver is None:
                raise SchemaError("module.dims: algebra has no quiver presentation")
            unknown = set(dims) - set(algebra.quiver.vertices)
            if unknown:
                raise SchemaError(f"module.dims: unknown vertices {sorted(unknown)}")
            return quiver_module(algebra, side, dims, action,
                                 name=source.get("name", ""))
        dim = _need(source, "dim", "module", int)
        return table_module(algebra, side, dim, action, name=source.get("name", ""))
    except (CatalogError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"module: {exc}") from exc


def serialize_algebra(alg: Algebra) -> dict:
    """Canonical table form (quiver provenance is input sugar only)."""
    return {
        "kind": "table",
        "p": alg.p,
        "dim": alg.dim,
        "basis": list(alg.labels),
        "unit": alg.unit.tolist(),
        "products": alg.table.tolist(),
        "idempotents": [e.tolist() for e in alg.idempotents],
    }


def serialize_module(m: ModuleRep, inline_algebra=True, algebra_ref=None) -> dict:
    """Canonical table-style module document."""
    out = {
        "algebra": serialize_algebra(m.algebra) if inline_algebra else algebra_ref,
        "side": m.side,
        "dim": m.dim,
        "action": {lbl: m.action[i].tolist() for i, lbl in enumerate(m.algebra.labels)},
    }
    if m.name:
        out["name"] = m.name
    return out


def canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def save_json(obj, path):
    Path(path).write_text(canonical_dumps(obj) + "\n", encoding="utf-8")


def digest(obj) -> str:
    """Order-insensitive content hash of a parsed document."""
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]
