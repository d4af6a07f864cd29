"""File formats (``.bg`` graphs, ``.sqp`` presentations), corpus access and renderings.

Both formats are JSON documents.  Serialization sorts keys and indents by two
spaces, so parse followed by serialize reproduces a canonical file exactly.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .graph import BrauerGraph, EdgeSpec, VertexSpec
from .presentation import IdealData, Quiver
from .strings import Presentation


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _field(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind):
        raise ParseError(f"{where}: field {key!r} has the wrong type")
    return val


def parse_bg(text: str) -> BrauerGraph:
    doc = _load_json(text)
    verts, edges = [], []
    for k, v in enumerate(_field(doc, "vertices", list, "document")):
        where = f"vertices[{k}]"
        mult = _field(v, "multiplicity", int, where)
        order = _field(v, "order", list, where)
        verts.append(VertexSpec(str(_field(v, "id", (str, int), where)), mult, tuple(map(str, order))))
    for k, e in enumerate(_field(doc, "edges", list, "document")):
        where = f"edges[{k}]"
        ends = _field(e, "ends", list, where)
        if len(ends) != 2:
            raise ParseError(f"{where}: an edge has exactly two ends")
        edges.append(EdgeSpec(str(_field(e, "id", (str, int), where)), (str(ends[0]), str(ends[1]))))
    exc = doc.get("exceptional")
    return BrauerGraph(tuple(verts), tuple(edges), None if exc is None else str(exc))


def graph_to_doc(g: BrauerGraph) -> dict:
    doc = {
        "vertices": [{"id": v.id, "multiplicity": v.multiplicity, "order": list(v.order)} for v in g.vertices],
        "edges": [{"id": e.id, "ends": list(e.ends)} for e in g.edges],
    }
    if g.exceptional is not None:
        doc["exceptional"] = g.exceptional
    return doc


def serialize_bg(g: BrauerGraph) -> str:
    return json.dumps(graph_to_doc(g), sort_keys=True, indent=2) + "\n"


def parse_sqp(text: str) -> Presentation:
    doc = _load_json(text)
    vertices = tuple(map(str, _field(doc, "vertices", list, "document")))
    arrows = []
    for k, a in enumerate(_field(doc, "arrows", list, "document")):
        where = f"arrows[{k}]"
        arrows.append(tuple(str(_field(a, key, (str, int), where)) for key in ("id", "source", "target")))
    forbidden = tuple(tuple(map(str, p)) for p in doc.get("forbidden", []))
    return Presentation(vertices, tuple(arrows), forbidden, str(doc.get("name", "")))


def serialize_sqp(p: Presentation) -> str:
    doc = {
        "name": p.name,
        "vertices": list(p.vertices),
        "arrows": [{"id": a, "source": s, "target": t} for a, s, t in p.arrows],
        "forbidden": [list(f) for f in p.forbidden],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def read_graph(path) -> BrauerGraph:
    return parse_bg(Path(path).read_text())


def read_presentation(path) -> Presentation:
    return parse_sqp(Path(path).read_text())


# -- corpus ------------------------------------------------------------------


def corpus_names() -> list[str]:
    return sorted(p.name for p in resources.files("grbrauer.corpus").iterdir()
                  if p.name.endswith((".bg", ".sqp")))


def corpus_path(name: str) -> Path:
    return Path(str(resources.files("grbrauer.corpus").joinpath(name)))


def load_corpus(name: str):
    """A corpus graph (``.bg``) or presentation (``.sqp``); the suffix may be omitted for graphs."""
    if not name.endswith((".bg", ".sqp")):
        name += ".bg"
    text = resources.files("grbrauer.corpus").joinpath(name).read_text()
    return parse_bg(text) if name.endswith(".bg") else parse_sqp(text)


# -- renderings --------------------------------------------------------------


def path_text(p) -> str:
    return " ".join(p)


def quiver_text(q: Quiver, ideal: IdealData | None = None) -> str:
    lines = [f"VERTICES {len(q.vertices)}", f"ARROWS {len(q.arrows)}"]
    lines += [f"{a.id}: {a.source} -> {a.target}" for a in q.arrows]
    if ideal is not None:
        lines.append(f"IDEAL {ideal.variant}")
        lines.append(f"BINOMIALS {len(ideal.binomials)}")
        lines += [f"  [{e}] {path_text(p)} - {path_text(r)}" for p, r, e in ideal.binomials]
        lines.append(f"MONOMIALS {len(ideal.monomials)}")
        lines += [f"  {path_text(m)}" for m in ideal.monomials]
        lines.append("W " + (" ".join(ideal.W) if ideal.W else "-"))
        for e in ideal.W:
            lines.append(f"P {e} {path_text(ideal.P[e])}")
    return "\n".join(lines) + "\n"


def _dot_id(x: str) -> str:
    return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'


def quiver_dot(q: Quiver, name: str = "Q") -> str:
    lines = [f"digraph {_dot_id(name)} {{"]
    lines += [f"  {_dot_id(v)};" for v in q.vertices]
    lines += [f"  {_dot_id(a.source)} -> {_dot_id(a.target)} [label={_dot_id(a.id)}];" for a in q.arrows]
    lines.append("}")
    return "\n".join(lines) + "\n"
