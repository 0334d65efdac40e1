"""Named graphs and hypergraphs used by the CLI (``graph:C5``) and the test suites.

Recognised names:

* ``Cn`` cycle, ``Pn`` path, ``Kn`` / ``K_n`` complete graph (n >= 1)
* ``K222``, ``K2,2,2`` or ``K_{2,2,2}`` complete multipartite graph
* ``Petersen``
* ``bowtie``: two triangles sharing a vertex
* ``triangle-c4``: a triangle and a 4-cycle sharing an edge
* ``two-triangles-d2`` / ``three-triangles-d2``: triangles hung off a
  common centre vertex, pairwise at distance two
* ``cactus-c5-c7``: a 5-cycle and a 7-cycle sharing a vertex
* ``join-m-NAME``: ``m`` independent vertices joined to every vertex of NAME
* ``hyper-123-345-512``: the 3-uniform hypergraph with those edges on 1..5
"""
from __future__ import annotations

import re

from .graphs import Graph, Hypergraph, join


def cycle(n: int, prefix: str = "x") -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    verts = tuple(f"{prefix}{i + 1}" for i in range(n))
    return Graph(verts, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int, prefix: str = "x") -> Graph:
    if n < 2:
        raise ValueError("a path needs at least two vertices")
    verts = tuple(f"{prefix}{i + 1}" for i in range(n))
    return Graph(verts, tuple((i, i + 1) for i in range(n - 1)))


def complete(n: int, prefix: str = "x") -> Graph:
    verts = tuple(f"{prefix}{i + 1}" for i in range(n))
    return Graph(verts, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_multipartite(parts, prefix: str = "x") -> Graph:
    verts, owner = [], []
    for p, size in enumerate(parts):
        if size < 1:
            raise ValueError("parts must be non-empty")
        for _ in range(size):
            owner.append(p)
            verts.append(f"{prefix}{len(verts) + 1}")
    n = len(verts)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if owner[i] != owner[j]]
    return Graph(tuple(verts), tuple(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(tuple(f"x{i + 1}" for i in range(10)), tuple(outer + spokes + inner))


def glue(*graphs_and_names) -> Graph:
    """Union of graphs given with vertex names; shared names are identified."""
    verts, edges = [], set()
    for vs, es in graphs_and_names:
        for v in vs:
            if v not in verts:
                verts.append(v)
        for a, b in es:
            edges.add((a, b))
    return Graph.from_names(verts, sorted(edges))


def bowtie() -> Graph:
    return glue((["a1", "a2", "c"], [("a1", "a2"), ("a2", "c"), ("a1", "c")]),
                (["c", "b1", "b2"], [("c", "b1"), ("b1", "b2"), ("c", "b2")]))


def triangle_c4() -> Graph:
    return glue((["x1", "x2", "x3"], [("x1", "x2"), ("x2", "x3"), ("x1", "x3")]),
                (["x1", "x2", "x4", "x5"], [("x1", "x2"), ("x2", "x4"), ("x4", "x5"), ("x5", "x1")]))


def triangles_at_distance_two(k: int) -> Graph:
    """``k`` triangles each joined by one edge to a centre vertex ``c``."""
    parts = [(["c"], [])]
    for t in range(k):
        a, b, d = f"t{t + 1}a", f"t{t + 1}b", f"t{t + 1}c"
        parts.append(([a, b, d], [(a, b), (b, d), (a, d), (a, "c")]))
    return glue(*parts)


def cactus_c5_c7() -> Graph:
    c5 = [f"p{i}" for i in range(1, 6)]
    c7 = ["p1"] + [f"q{i}" for i in range(2, 8)]
    return glue((c5, [(c5[i], c5[(i + 1) % 5]) for i in range(5)]),
                (c7, [(c7[i], c7[(i + 1) % 7]) for i in range(7)]))


def hyper_123_345_512() -> Hypergraph:
    verts = [f"x{i}" for i in range(1, 6)]
    return Hypergraph.from_names(verts, [("x1", "x2", "x3"), ("x3", "x4", "x5"), ("x5", "x1", "x2")])


_FIXED = {
    "petersen": petersen,
    "bowtie": bowtie,
    "triangle-c4": triangle_c4,
    "two-triangles-d2": lambda: triangles_at_distance_two(2),
    "three-triangles-d2": lambda: triangles_at_distance_two(3),
    "cactus-c5-c7": cactus_c5_c7,
}

_HYPER = {"hyper-123-345-512": hyper_123_345_512}


def builtin_graph(name: str) -> Graph:
    key = name.strip()
    low = key.lower()
    if low in _FIXED:
        return _FIXED[low]()
    m = re.fullmatch(r"join-(\d+)-(.+)", key, flags=re.IGNORECASE)
    if m:
        return join(int(m.group(1)), builtin_graph(m.group(2)))
    m = re.fullmatch(r"[Cc](\d+)", key)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"[Pp](\d+)", key)
    if m:
        return path(int(m.group(1)))
    m = re.fullmatch(r"K_?\{?(\d+(?:,\d+)+)\}?", key)
    if m:
        return complete_multipartite([int(x) for x in m.group(1).split(",")])
    m = re.fullmatch(r"K_\{?(\d+)\}?", key)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"K(\d)", key)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"K(\d{2,})", key)
    if m:
        # digit strings name part sizes, e.g. K222
        return complete_multipartite([int(c) for c in m.group(1)])
    raise KeyError(f"unknown built-in graph {name!r}")


def builtin_hypergraph(name: str) -> Hypergraph:
    low = name.strip().lower()
    if low in _HYPER:
        return _HYPER[low]()
    return Hypergraph.from_graph(builtin_graph(name))


def builtin_names() -> list:
    return sorted(_FIXED) + sorted(_HYPER) + ["Cn", "Pn", "Kn", "K_n", "K222", "K2,2,2", "join-m-NAME"]
