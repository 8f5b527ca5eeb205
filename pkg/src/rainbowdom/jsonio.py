"""JSON interchange formats.

Graph files:    {"name": str|null, "n": int, "edges": [[a, b], ...]}
                with each edge [a, b] satisfying a < b, sorted ascending.
Coloring files: {"k": int, "colors": [[colors of vertex 0], ...]}
                with each color list ascending; [] means uncolored.
Solve results:  {"value": int, "method": str, "witness": <coloring>,
                 "nodes": int, "optimal": bool, "elapsed_ms": int}

These three formats are the only ones the command-line tool reads or
writes; every document is a single line of JSON.
"""

from __future__ import annotations

import json

from .errors import InvalidInput
from .graphs import Graph, build_graph
from .rainbow import ColorAssignment


def graph_to_dict(g: Graph) -> dict:
    return {"name": g.name, "n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(doc) -> Graph:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise InvalidInput("graph document needs 'n' and 'edges'")
    edges = [tuple(e) for e in doc["edges"]]
    return build_graph(int(doc["n"]), edges, doc.get("name"))


def coloring_to_dict(f: ColorAssignment) -> dict:
    return {"k": f.k, "colors": [sorted(cs) for cs in f.colors]}


def coloring_from_dict(doc) -> ColorAssignment:
    if not isinstance(doc, dict) or "k" not in doc or "colors" not in doc:
        raise InvalidInput("coloring document needs 'k' and 'colors'")
    return ColorAssignment(int(doc["k"]), tuple(frozenset(c) for c in doc["colors"]))


def dumps(doc) -> str:
    """One-line JSON with a stable key order (insertion order)."""
    return json.dumps(doc, separators=(", ", ": "))


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not valid JSON: {exc}") from exc
