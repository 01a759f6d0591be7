"""JSON interchange format (``"format": "fincat/1"``) for categories and reports.

Output is canonical: fixed key order, composition triples sorted, one
morphism or triple per line, so saving is byte-stable and diff-friendly.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

from .core import FinCatError, FinCategory, FunctorData, NatTransformData, StructuralError, validate_category

FORMAT = "fincat/1"


class DocumentError(FinCatError):
    """Malformed document: bad JSON, wrong shape or failed validation."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None, report=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line, self.column, self.report = line, column, report


def category_to_dict(C: FinCategory) -> dict[str, Any]:
    objects: dict[str, Any] = {"count": C.object_count}
    if C.object_names is not None:
        objects["names"] = list(C.object_names)
    morphisms = []
    for f in C.morphisms:
        m: dict[str, Any] = {"id": f, "src": C.src[f], "dst": C.dst[f]}
        if C.morphism_names is not None and C.morphism_names[f] is not None:
            m["name"] = C.morphism_names[f]
        morphisms.append(m)
    triples = sorted([g, f, h] for (g, f), h in C.composition_table().items())
    return {
        "format": FORMAT,
        "objects": objects,
        "morphisms": morphisms,
        "identities": list(C.identities),
        "composition": triples,
    }


def dumps_category(C: FinCategory) -> str:
    doc = category_to_dict(C)
    d = lambda v: json.dumps(v, ensure_ascii=False, separators=(", ", ": "))  # noqa: E731
    lines = ["{", f'  "format": {d(doc["format"])},', f'  "objects": {d(doc["objects"])},']
    lines.append('  "morphisms": [')
    lines.append(",\n".join("    " + d(m) for m in doc["morphisms"]))
    lines.append("  ],")
    lines.append(f'  "identities": {d(doc["identities"])},')
    lines.append('  "composition": [')
    lines.append(",\n".join("    " + d(t) for t in doc["composition"]))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(line for line in lines if line) + "\n"


def save_category(C: FinCategory, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_category(C), encoding="utf-8")


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise DocumentError(message)


def category_from_dict(doc: Any, validate: bool = True) -> FinCategory:
    _need(isinstance(doc, dict), "document must be a JSON object")
    _need(doc.get("format") == FORMAT, f"unsupported format {doc.get('format')!r}, expected {FORMAT!r}")
    objs = doc.get("objects")
    _need(isinstance(objs, dict) and isinstance(objs.get("count"), int), "objects.count must be an integer")
    n = objs["count"]
    names = objs.get("names")
    morphs = doc.get("morphisms")
    _need(isinstance(morphs, list), "morphisms must be a list")
    src, dst, mnames = [], [], []
    for k, m in enumerate(morphs):
        _need(isinstance(m, dict), f"morphism entry {k} must be an object")
        _need(m.get("id") == k, f"morphism entry {k} has id {m.get('id')!r}; ids must be dense and in order")
        _need(isinstance(m.get("src"), int) and isinstance(m.get("dst"), int), f"morphism {k} needs integer src/dst")
        src.append(m["src"])
        dst.append(m["dst"])
        mnames.append(m.get("name"))
    ids = doc.get("identities")
    _need(isinstance(ids, list), "identities must be a list")
    comp = doc.get("composition")
    _need(isinstance(comp, list), "composition must be a list")
    table: dict[tuple[int, int], int] = {}
    for t in comp:
        _need(isinstance(t, list) and len(t) == 3 and all(isinstance(v, int) for v in t),
              f"composition entry {t!r} must be [g, f, composite]")
        g, f, h = t
        _need((g, f) not in table, f"composition pair (g={g}, f={f}) given twice")
        table[g, f] = h
    has_names = any(v is not None for v in mnames)
    try:
        C = FinCategory(n, src, dst, ids, table, object_names=names,
                        morphism_names=mnames if has_names else None)
    except StructuralError as exc:
        raise DocumentError(f"invalid category: {exc}") from None
    if validate:
        rep = validate_category(C, max_failures=20)
        if not rep.ok:
            shown = "; ".join(f"{law} at {w}" for law, w in rep.failures[:5])
            raise DocumentError(f"category fails validation: {shown}", report=rep)
    return C


def loads_category(text: str, validate: bool = True) -> FinCategory:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"parse error: {exc.msg}", exc.lineno, exc.colno) from None
    return category_from_dict(doc, validate)


def load_category(path: Union[str, Path], validate: bool = True) -> FinCategory:
    """Read a category document; raises DocumentError with position or reason."""
    return loads_category(Path(path).read_text(encoding="utf-8"), validate)


def functor_to_dict(F: FunctorData) -> dict:
    return {"object_map": list(F.object_map), "morphism_map": list(F.morphism_map)}


def nat_to_dict(eta: NatTransformData) -> dict:
    return {"components": list(eta.components)}


def dumps_report(report) -> str:
    return json.dumps(report.to_dict(), ensure_ascii=False, indent=2, default=str) + "\n"
