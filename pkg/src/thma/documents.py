"""JSON document formats for categories, functors, covers, surjections
and reports.

Serialization is canonical: sorted keys, compact separators, UTF-8.
Identical inputs therefore produce byte-identical documents, which the
golden-report tests rely on.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .constructions import CoverData
from .core import CatFunctor, FinCat, validate_category
from .simplicial import SimplicialSet


class ParseError(ValueError):
    """Malformed or ill-typed input document."""


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)


def digest(data) -> str:
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


def load_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read ({exc})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: invalid JSON at line {exc.lineno}, "
            f"column {exc.colno}") from exc
    if not isinstance(data, dict) or "format" not in data:
        raise ParseError(f"{path}: missing format field")
    return data


def category_to_doc(C: FinCat) -> dict:
    return {
        "format": "fincat/1",
        "objects": sorted(C.objects),
        "morphisms": [{"id": m, "src": C.src[m], "tgt": C.tgt[m]}
                      for m in sorted(C.morphisms)],
        "identities": {o: C.ident[o] for o in C.objects},
        "composition": sorted([g, f, h] for (g, f), h in C.comp.items()),
    }


def category_from_doc(data: dict, origin: str = "<doc>") -> FinCat:
    if data.get("format") != "fincat/1":
        raise ParseError(f"{origin}: not a category document")
    try:
        objects = tuple(sorted(data["objects"]))
        mor_entries = sorted(data["morphisms"], key=lambda e: e["id"])
        morphisms = tuple(e["id"] for e in mor_entries)
        src = {e["id"]: e["src"] for e in mor_entries}
        tgt = {e["id"]: e["tgt"] for e in mor_entries}
        ident = dict(data["identities"])
        comp = {(g, f): h for g, f, h in data["composition"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{origin}: malformed category document") from exc
    if len(set(objects)) != len(objects) or len(set(morphisms)) != len(morphisms):
        raise ParseError(f"{origin}: duplicate identifiers")
    declared = set(morphisms)
    for g, f, h in data["composition"]:
        if g not in declared or f not in declared or h not in declared:
            raise ParseError(f"{origin}: composition references "
                             f"undeclared morphism in [{g},{f},{h}]")
    return FinCat(objects, morphisms, src, tgt, ident, comp)


def functor_from_doc(data: dict, base_dir: Path,
                     origin: str = "<doc>") -> CatFunctor:
    if data.get("format") != "functor/1":
        raise ParseError(f"{origin}: not a functor document")
    try:
        dom = category_from_doc(load_json(base_dir / data["dom_file"]),
                                str(data["dom_file"]))
        cod = category_from_doc(load_json(base_dir / data["cod_file"]),
                                str(data["cod_file"]))
        obj_map = dict(data["obj_map"])
        mor_map = dict(data["mor_map"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"{origin}: malformed functor document") from exc
    if set(obj_map) != set(dom.objects) or set(mor_map) != set(dom.morphisms):
        raise ParseError(f"{origin}: maps not total on the domain")
    return CatFunctor(dom, cod, obj_map, mor_map)


def functor_to_doc(dom_file: str, cod_file: str, f: CatFunctor) -> dict:
    return {
        "format": "functor/1",
        "dom_file": dom_file,
        "cod_file": cod_file,
        "obj_map": dict(f.obj_map),
        "mor_map": dict(f.mor_map),
    }


def cover_from_doc(data: dict, origin: str = "<doc>") -> CoverData:
    if data.get("format") != "cover/1":
        raise ParseError(f"{origin}: not a cover document")
    try:
        cover = CoverData(tuple(data["base"]),
                          {k: tuple(v) for k, v in data["pieces"].items()})
    except (KeyError, TypeError) as exc:
        raise ParseError(f"{origin}: malformed cover document") from exc
    if not cover.is_cover():
        raise ParseError(f"{origin}: pieces do not cover the base")
    return cover


def cover_to_doc(cover: CoverData) -> dict:
    return {"format": "cover/1", "base": sorted(cover.base),
            "pieces": {k: sorted(v) for k, v in cover.pieces.items()}}


def surjection_from_doc(data: dict, origin: str = "<doc>") -> dict[str, str]:
    if data.get("format") != "surjection/1":
        raise ParseError(f"{origin}: not a surjection document")
    try:
        return dict(data["map"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"{origin}: malformed surjection document") from exc


def render_simplex(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(render_simplex(v) for v in x) + ")"
    return str(x)


def sset_to_doc(X: SimplicialSet) -> dict:
    return {
        "format": "sset/1",
        "truncation": X.trunc,
        "levels": {str(n): sorted(render_simplex(x) for x in X.levels[n])
                   for n in range(X.trunc + 1)},
        "faces": {f"{n},{i}": {render_simplex(x): render_simplex(y)
                               for x, y in X.faces[(n, i)].items()}
                  for n in range(1, X.trunc + 1) for i in range(n + 1)},
        "degeneracies": {f"{n},{i}": {render_simplex(x): render_simplex(y)
                                      for x, y in X.degens[(n, i)].items()}
                         for n in range(X.trunc) for i in range(n + 1)},
        "degenerate": {str(n): sorted(render_simplex(x)
                                      for x in X.levels[n]
                                      if X.is_degenerate(n, x))
                       for n in range(X.trunc + 1)},
    }


def sset_from_doc(data: dict, origin: str = "<doc>") -> SimplicialSet:
    if data.get("format") != "sset/1":
        raise ParseError(f"{origin}: not a simplicial-set document")
    try:
        N = int(data["truncation"])
        levels = tuple(tuple(sorted(data["levels"][str(n)]))
                       for n in range(N + 1))
        faces = {}
        for n in range(1, N + 1):
            for i in range(n + 1):
                faces[(n, i)] = dict(data["faces"][f"{n},{i}"])
        degens = {}
        for n in range(N):
            for i in range(n + 1):
                degens[(n, i)] = dict(data["degeneracies"][f"{n},{i}"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{origin}: malformed simplicial-set "
                         "document") from exc
    return SimplicialSet(N, levels, faces, degens)


def validate_category_doc(data: dict, origin: str = "<doc>"):
    """Parse and run the category axioms; returns (FinCat, report)."""
    C = category_from_doc(data, origin)
    return C, validate_category(C)


def export_dot(C: FinCat) -> str:
    lines = ["digraph category {"]
    for o in C.objects:
        lines.append(f'  "{o}";')
    for m in C.non_identity_morphisms():
        lines.append(f'  "{C.src[m]}" -> "{C.tgt[m]}" [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
