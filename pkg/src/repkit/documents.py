"""JSON documents for groups, representations, group functions and results.

Serialization is canonical: fixed key order, two-space indentation, and
arrays of scalars kept on one line, so that serialize(parse(doc)) is
byte-identical to a canonical input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .decompose import DecompositionResult
from .errors import FieldError, ParseError
from .exactfield import Field, field_from_descriptor
from .group import FiniteGroup, validate_group
from .groupalgebra import GroupFunction
from .linalg import Matrix
from .rep import Character, Representation, character


# ---------------------------------------------------------------------------
# text layer


def _scalar(x) -> bool:
    return x is None or isinstance(x, (str, int, float, bool))


def _emit(obj, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if len(obj) <= 2 and all(_scalar(v) for v in obj.values()):
            body = ", ".join(f"{json.dumps(k, ensure_ascii=False)}: {json.dumps(v, ensure_ascii=False)}" for k, v in obj.items())
            out.append("{" + body + "}")
            return
        out.append("{\n")
        for k, (key, val) in enumerate(obj.items()):
            out.append(f"{inner}{json.dumps(key, ensure_ascii=False)}: ")
            _emit(val, indent + 1, out)
            out.append(",\n" if k < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, list):
        if all(_scalar(v) for v in obj):
            out.append("[" + ", ".join(json.dumps(v, ensure_ascii=False) for v in obj) + "]")
            return
        out.append("[\n")
        for k, val in enumerate(obj):
            out.append(inner)
            _emit(val, indent + 1, out)
            out.append(",\n" if k < len(obj) - 1 else "\n")
        out.append(pad + "]")
    else:
        out.append(json.dumps(obj, ensure_ascii=False))


def dumps(doc: Any) -> str:
    out: list[str] = []
    _emit(doc, 0, out)
    out.append("\n")
    return "".join(out)


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def read_document(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read ({exc.strerror})") from None
    return loads(text, str(path))


def _require(doc: Any, keys: tuple[str, ...], what: str) -> None:
    if not isinstance(doc, dict):
        raise ParseError(f"{what} document must be an object")
    for k in keys:
        if k not in doc:
            raise ParseError(f"{what} document lacks field {k!r}")


# ---------------------------------------------------------------------------
# groups


def group_to_doc(G: FiniteGroup) -> dict:
    return {
        "name": G.name,
        "elements": list(G.labels),
        "identity": G.labels[G.identity],
        "table": [[G.labels[v] for v in row] for row in G.table],
    }


def group_from_doc(doc: Any) -> FiniteGroup:
    """Parse and validate; axiom failures propagate as GroupAxiomError."""
    _require(doc, ("name", "elements", "identity", "table"), "group")
    labels = doc["elements"]
    if not isinstance(labels, list) or not labels or not all(isinstance(x, str) for x in labels):
        raise ParseError("group elements must be a nonempty array of strings")
    index = {}
    for k, lab in enumerate(labels):
        if lab in index:
            raise ParseError(f"duplicate element label {lab!r}")
        index[lab] = k

    def look(lab, where):
        if not isinstance(lab, str) or lab not in index:
            raise ParseError(f"unknown element label {lab!r} in {where}")
        return index[lab]

    e = look(doc["identity"], "identity")
    table = doc["table"]
    n = len(labels)
    if not isinstance(table, list) or len(table) != n:
        raise ParseError(f"table must have {n} rows")
    rows = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"table row {i} must have {n} entries")
        rows.append([look(lab, f"table row {i}") for lab in row])
    name = doc["name"]
    if not isinstance(name, str):
        raise ParseError("group name must be a string")
    return validate_group(labels, rows, e, name)


# ---------------------------------------------------------------------------
# fields, entries, matrices


def field_to_doc(F: Field) -> dict:
    return F.descriptor()


def field_from_doc(doc: Any) -> Field:
    try:
        return field_from_descriptor(doc)
    except FieldError as exc:
        raise ParseError(f"bad field descriptor: {exc}") from None


def matrix_to_doc(M: Matrix) -> list:
    F = M.field
    return [[F.format(a) for a in row] for row in M.raw_rows()]


def _entry(F: Field, obj, where: str):
    if isinstance(obj, int) and not isinstance(obj, bool):
        raise ParseError(f"{where}: entries must be strings, got {obj!r}")
    try:
        return F.parse(obj)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def matrix_from_doc(F: Field, rows: Any, degree: int, where: str = "matrix") -> Matrix:
    if not isinstance(rows, list) or len(rows) != degree:
        raise ParseError(f"{where}: expected {degree} rows")
    data = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != degree:
            raise ParseError(f"{where}: row {i} must have {degree} entries")
        data.append([_entry(F, a, f"{where}[{i}][{j}]") for j, a in enumerate(row)])
    return Matrix._raw(F, data, degree, degree)


# ---------------------------------------------------------------------------
# representations


@dataclass
class RepDocument:
    rep: Representation
    group_ref: str | None = None  # kept so file references survive a round trip


def _group_field(doc: dict, base: Path | None) -> FiniteGroup:
    ref = doc["group"]
    if isinstance(ref, str):
        path = Path(ref) if base is None else base / ref
        return group_from_doc(read_document(path))
    return group_from_doc(ref)


def rep_to_doc(rho: Representation, group_ref: str | None = None) -> dict:
    G = rho.group
    return {
        "group": group_ref if group_ref is not None else group_to_doc(G),
        "field": field_to_doc(rho.field),
        "degree": rho.degree,
        "matrices": {G.labels[x]: matrix_to_doc(M) for x, M in enumerate(rho.matrices)},
    }


def rep_from_doc(doc: Any, base: Path | None = None) -> RepDocument:
    """Parse and validate; the homomorphism law failing raises RepresentationError."""
    _require(doc, ("group", "field", "degree", "matrices"), "representation")
    G = _group_field(doc, base)
    F = field_from_doc(doc["field"])
    d = doc["degree"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError("degree must be a positive integer")
    mats = doc["matrices"]
    if not isinstance(mats, dict):
        raise ParseError("matrices must map element labels to matrices")
    for lab in mats:
        if lab not in G.labels:
            raise ParseError(f"unknown element label {lab!r} in matrices")
    missing = [lab for lab in G.labels if lab not in mats]
    if missing:
        raise ParseError(f"no matrix for element {missing[0]!r}")
    matrices = [matrix_from_doc(F, mats[lab], d, f"matrices[{lab!r}]") for lab in G.labels]
    rho = Representation(G, F, matrices)
    ref = doc["group"] if isinstance(doc["group"], str) else None
    return RepDocument(rho, ref)


def load_rep(path: str | Path) -> RepDocument:
    path = Path(path)
    return rep_from_doc(read_document(path), path.parent)


def load_group(path: str | Path) -> FiniteGroup:
    return group_from_doc(read_document(path))


# ---------------------------------------------------------------------------
# group functions and characters


@dataclass
class FunctionDocument:
    function: GroupFunction
    group_ref: str | None = None


def function_to_doc(f: GroupFunction, group_ref: str | None = None) -> dict:
    F = f.field
    return {
        "group": group_ref if group_ref is not None else group_to_doc(f.group),
        "field": field_to_doc(F),
        "values": {lab: F.format(v) for lab, v in zip(f.group.labels, f.values)},
    }


def function_from_doc(doc: Any, base: Path | None = None) -> FunctionDocument:
    """Labels missing from ``values`` are read as zero."""
    _require(doc, ("group", "field", "values"), "function")
    G = _group_field(doc, base)
    F = field_from_doc(doc["field"])
    vals = doc["values"]
    if not isinstance(vals, dict):
        raise ParseError("values must map element labels to entries")
    raw = [F.zero] * G.order
    for lab, v in vals.items():
        if lab not in G.labels:
            raise ParseError(f"unknown element label {lab!r} in values")
        raw[G.index(lab)] = _entry(F, v, f"values[{lab!r}]")
    ref = doc["group"] if isinstance(doc["group"], str) else None
    return FunctionDocument(GroupFunction._raw(G, F, raw), ref)


def load_function(path: str | Path) -> FunctionDocument:
    path = Path(path)
    return function_from_doc(read_document(path), path.parent)


def character_to_doc(chi: Character) -> dict:
    G, F = chi.group, chi.field
    return {
        "field": field_to_doc(F),
        "values": {lab: F.format(v) for lab, v in zip(G.labels, chi.values)},
        "classes": [
            {"elements": [G.labels[x] for x in cls], "value": F.format(chi.values[cls[0]])}
            for cls in G.conjugacy_classes
        ],
    }


# ---------------------------------------------------------------------------
# decomposition results


def decomposition_to_doc(result: DecompositionResult) -> dict:
    F = result.field_used
    blocks = []
    for blk, tag in zip(result.blocks, result.certificates):
        G = blk.group
        chi = character(blk)
        blocks.append(
            {
                "degree": blk.degree,
                "certificate": tag,
                "character": {lab: F.format(v) for lab, v in zip(G.labels, chi.values)},
                "matrices": {G.labels[x]: matrix_to_doc(M) for x, M in enumerate(blk.matrices)},
            }
        )
    return {
        "field": field_to_doc(F),
        "block_degrees": result.block_degrees,
        "multiplicities": result.multiplicities,
        "iso_groups": [list(g) for g in result.iso_groups],
        "base_change": matrix_to_doc(result.base_change),
        "blocks": blocks,
    }
