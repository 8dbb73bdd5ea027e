"""File formats: graph JSON, edge-list text, DOT export, coloring and grid JSON.

Graph JSON is {"n": <int>, "edges": [[u, v], ...]} with u < v sorted
lexicographically; writers always emit the canonical form and parsers reject
self-loops, duplicate edges and out-of-range ids.  A "codec" key written by
the product command is carried through untouched.
"""

from __future__ import annotations

import json

from .graph import Graph


def graph_to_dict(g: Graph, codec: dict | None = None) -> dict:
    d: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if codec is not None:
        d["codec"] = codec
    return d


def graph_from_dict(d: dict) -> Graph:
    if not isinstance(d, dict) or "n" not in d:
        raise ValueError("graph JSON needs an object with an 'n' field")
    n = d["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'n' must be a nonnegative integer")
    edges = d.get("edges", [])
    pairs = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"malformed edge entry {e!r}")
        pairs.append((int(e[0]), int(e[1])))
    return Graph(n, pairs)  # Graph() rejects loops, duplicates, bad ids


def dump_graph(g: Graph, path: str, codec: dict | None = None) -> None:
    with open(path, "w") as f:
        json.dump(graph_to_dict(g, codec), f)
        f.write("\n")


def load_graph(path: str) -> Graph:
    with open(path) as f:
        return graph_from_dict(json.load(f))


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return Graph(n, pairs)


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    lines.extend(f"  {v};" for v in isolated)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def coloring_to_dict(colors) -> dict:
    return {"colors": list(colors)}


def coloring_from_dict(d: dict) -> list[int]:
    if not isinstance(d, dict) or "colors" not in d:
        raise ValueError("coloring JSON needs an object with a 'colors' field")
    colors = [int(c) for c in d["colors"]]
    if any(c < 1 for c in colors):
        raise ValueError("colors are 1-based positive integers")
    return colors


def load_coloring(path: str) -> list[int]:
    with open(path) as f:
        return coloring_from_dict(json.load(f))


def dump_coloring(colors, path: str) -> None:
    with open(path, "w") as f:
        json.dump(coloring_to_dict(colors), f)
        f.write("\n")
