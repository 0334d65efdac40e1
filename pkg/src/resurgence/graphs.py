"""Finite simple graphs and hypergraphs, their ideals and invariants.

Vertices are named strings; internally edges are index tuples into the
vertex list. Exact solvers (colouring, cliques) refuse graphs above
``MAX_EXACT_VERTICES`` vertices.
"""
from __future__ import annotations

import itertools
import warnings
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import networkx as nx

from .ideal import MonomialIdeal, VariableSet, is_squarefree, minimal_primes, minimal_transversals

MAX_EXACT_VERTICES = 24


class SolverLimitExceeded(ValueError):
    """Input exceeds the size guard of an exact solver."""


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple  # sorted (i, j) index pairs with i < j

    def __post_init__(self):
        verts = tuple(self.vertices)
        VariableSet(verts)  # validates names
        n = len(verts)
        es = set()
        for e in self.edges:
            i, j = e
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {e} out of range")
            if i == j:
                raise ValueError("loops are not allowed")
            es.add((min(i, j), max(i, j)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @classmethod
    def from_names(cls, vertices: Sequence[str], edges: Iterable[Sequence[str]]) -> "Graph":
        verts = tuple(vertices)
        pos = {v: i for i, v in enumerate(verts)}
        out = []
        for e in edges:
            a, b = e
            if a not in pos or b not in pos:
                raise ValueError(f"edge {e} uses an unknown vertex")
            out.append((pos[a], pos[b]))
        return cls(verts, tuple(out))

    @property
    def ring(self) -> VariableSet:
        return VariableSet(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def named_edges(self):
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges]

    def adjacency(self) -> list:
        adj = [set() for _ in self.vertices]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def isolated(self) -> list:
        adj = self.adjacency()
        return [self.vertices[i] for i in range(self.n) if not adj[i]]

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())


@dataclass(frozen=True)
class Hypergraph:
    """Simple hypergraph: every edge has at least two vertices, no edge contains another."""

    vertices: tuple
    edges: tuple  # sorted tuples of vertex indices

    def __post_init__(self):
        verts = tuple(self.vertices)
        VariableSet(verts)
        es = set()
        for e in self.edges:
            e = tuple(sorted(set(e)))
            if len(e) < 2:
                raise ValueError("hypergraph edges need at least two vertices")
            if not all(0 <= i < len(verts) for i in e):
                raise ValueError(f"edge {e} out of range")
            es.add(e)
        fs = [frozenset(e) for e in es]
        for a, b in itertools.permutations(fs, 2):
            if a < b:
                raise ValueError("hypergraph edges must not contain one another")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @classmethod
    def from_names(cls, vertices: Sequence[str], edges: Iterable[Sequence[str]]) -> "Hypergraph":
        pos = {v: i for i, v in enumerate(vertices)}
        out = []
        for e in edges:
            if any(v not in pos for v in e):
                raise ValueError(f"edge {e} uses an unknown vertex")
            out.append(tuple(pos[v] for v in e))
        return cls(tuple(vertices), tuple(out))

    @classmethod
    def from_graph(cls, G: Graph) -> "Hypergraph":
        return cls(G.vertices, G.edges)

    @property
    def ring(self) -> VariableSet:
        return VariableSet(self.vertices)

    @property
    def max_edge_size(self) -> int:
        return max(len(e) for e in self.edges)

    def named_edges(self):
        return [tuple(self.vertices[i] for i in e) for e in self.edges]


def _require_no_isolated(G: Graph):
    if not G.edges:
        raise ValueError("graph has no edges")
    iso = G.isolated()
    if iso:
        raise ValueError(f"graph has isolated vertices: {iso}")


def _guard(n: int):
    if n > MAX_EXACT_VERTICES:
        raise SolverLimitExceeded(f"{n} vertices exceeds the exact-solver guard of {MAX_EXACT_VERTICES}")


# --- ideals of graphs -------------------------------------------------------

def edge_ideal(G: Graph) -> MonomialIdeal:
    """Generated by ``x_i x_j`` over the edges."""
    _require_no_isolated(G)
    ring = G.ring
    gens = []
    for i, j in G.edges:
        e = [0] * G.n
        e[i] = e[j] = 1
        gens.append(tuple(e))
    return MonomialIdeal.from_generators(ring, gens)


def minimal_vertex_covers(G: Graph) -> list:
    """Minimal vertex covers as sorted tuples of vertex names."""
    _require_no_isolated(G)
    covers = minimal_transversals([frozenset(e) for e in G.edges])
    return [tuple(G.vertices[i] for i in c) for c in covers]


def cover_ideal(G: Graph) -> MonomialIdeal:
    """Generated by the products over minimal vertex covers."""
    _require_no_isolated(G)
    covers = minimal_transversals([frozenset(e) for e in G.edges])
    gens = []
    for c in covers:
        e = [0] * G.n
        for i in c:
            e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal.from_generators(G.ring, gens)


def cover_ideal_hypergraph(H: Hypergraph) -> MonomialIdeal:
    """Cover ideal of a hypergraph; isolated vertices are rejected."""
    used = {i for e in H.edges for i in e}
    if not H.edges:
        raise ValueError("hypergraph has no edges")
    if len(used) != len(H.vertices):
        missing = [H.vertices[i] for i in range(len(H.vertices)) if i not in used]
        raise ValueError(f"hypergraph has isolated vertices: {missing}")
    covers = minimal_transversals([frozenset(e) for e in H.edges])
    gens = []
    for c in covers:
        e = [0] * len(H.vertices)
        for i in c:
            e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal.from_generators(H.ring, gens)


def hypergraph_of_ideal(I: MonomialIdeal) -> Hypergraph:
    """The hypergraph whose cover ideal is ``I``: edges are the minimal primes."""
    if not is_squarefree(I) or I.is_zero or I.is_unit:
        raise ValueError("need a proper nonzero squarefree monomial ideal")
    primes = minimal_primes(I)
    if any(len(p) < 2 for p in primes):
        raise ValueError("a minimal prime of size one does not give a hypergraph edge")
    return Hypergraph(I.ring.names, primes)


# --- colouring, cliques ----------------------------------------------------

def _k_colourable(n: int, adj: list, k: int, order: list):
    colour = [-1] * n

    def rec(pos: int, used: int):
        if pos == n:
            return True
        v = order[pos]
        forbidden = {colour[u] for u in adj[v] if colour[u] >= 0}
        # symmetry breaking: a fresh colour is only ever the next unused one
        for c in range(min(k, used + 1)):
            if c in forbidden:
                continue
            colour[v] = c
            if rec(pos + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return list(colour) if rec(0, 0) else None


def chromatic_colouring(G: Graph) -> dict:
    """An optimal proper colouring, vertex name -> colour index."""
    _guard(G.n)
    if G.n == 0:
        return {}
    if not G.edges:
        warnings.warn("graph has no edges; chromatic number is 1", stacklevel=2)
        return {v: 0 for v in G.vertices}
    adj = G.adjacency()
    nxg = G.to_networkx()
    greedy = nx.greedy_color(nxg, strategy="DSATUR")
    upper = max(greedy.values()) + 1
    lower = clique_number(G)
    order = sorted(range(G.n), key=lambda v: -len(adj[v]))
    # order vertices so each one after the first touches an earlier one when possible
    seen, bfs = set(), []
    for start in order:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            bfs.append(v)
            for u in sorted(adj[v], key=lambda u: -len(adj[u])):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    for k in range(lower, upper):
        col = _k_colourable(G.n, adj, k, bfs)
        if col is not None:
            return {G.vertices[i]: col[i] for i in range(G.n)}
    return {G.vertices[i]: greedy[i] for i in range(G.n)}


def chromatic_number(G: Graph) -> int:
    col = chromatic_colouring(G)
    return len(set(col.values())) if col else 0


def hypergraph_colouring(H: Hypergraph) -> dict:
    """An optimal colouring with no monochromatic edge."""
    n = len(H.vertices)
    _guard(n)
    if not H.edges:
        warnings.warn("hypergraph has no edges; chromatic number is 1", stacklevel=2)
        return {v: 0 for v in H.vertices}
    edges_at = [[] for _ in range(n)]
    for e in H.edges:
        edges_at[max(e)].append(e)  # checked once its last vertex is coloured
    for k in range(2, n + 1):
        colour = [-1] * n

        def rec(v: int, used: int) -> bool:
            if v == n:
                return True
            for c in range(min(k, used + 1)):
                colour[v] = c
                if all(len({colour[i] for i in e}) > 1 for e in edges_at[v]):
                    if rec(v + 1, max(used, c + 1)):
                        return True
            colour[v] = -1
            return False

        if rec(0, 0):
            return {H.vertices[i]: colour[i] for i in range(n)}
    raise AssertionError("every simple hypergraph is n-colourable")


def hypergraph_chromatic_number(H: Hypergraph) -> int:
    return len(set(hypergraph_colouring(H).values()))


def maximum_clique(G: Graph) -> tuple:
    _guard(G.n)
    if G.n == 0:
        return ()
    best = max(nx.find_cliques(G.to_networkx()), key=lambda c: (len(c), [-x for x in sorted(c)]))
    return tuple(sorted(G.vertices[i] for i in best))


def clique_number(G: Graph) -> int:
    return len(maximum_clique(G))


def independence_number(G: Graph) -> int:
    _guard(G.n)
    if G.n == 0:
        return 0
    comp = nx.complement(G.to_networkx())
    return max(len(c) for c in nx.find_cliques(comp))


# --- structure --------------------------------------------------------------

def is_bipartite(G: Graph):
    """``(True, colouring)`` or ``(False, odd closed walk as vertex names)``."""
    adj = G.adjacency()
    side = [-1] * G.n
    parent = [-1] * G.n
    for root in range(G.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in sorted(adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    return False, _odd_cycle_from_tree(G, parent, u, v)
    return True, {G.vertices[i]: side[i] for i in range(G.n)}


def _odd_cycle_from_tree(G: Graph, parent: list, u: int, v: int) -> list:
    def path_up(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    pu, pv = path_up(u), path_up(v)
    on_pv = set(pv)
    lca = next(x for x in pu if x in on_pv)
    cyc = pu[: pu.index(lca) + 1] + list(reversed(pv[: pv.index(lca)]))
    return [G.vertices[i] for i in cyc]


def verify_bipartite_certificate(G: Graph, bipartite: bool, cert) -> bool:
    if bipartite:
        return all(cert[a] != cert[b] for a, b in G.named_edges())
    walk = list(cert)
    if len(walk) % 2 == 0:
        return False
    named = {frozenset(e) for e in G.named_edges()}
    return all(frozenset((walk[i], walk[(i + 1) % len(walk)])) in named for i in range(len(walk)))


def induced_subgraph(G: Graph, names: Iterable[str]) -> Graph:
    keep = [v for v in G.vertices if v in set(names)]
    unknown = set(names) - set(G.vertices)
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)}")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[a], pos[b]) for a, b in G.named_edges() if a in pos and b in pos]
    return Graph(tuple(keep), tuple(edges))


def _canonical_cycle(cyc: Sequence[int]) -> tuple:
    k = cyc.index(min(cyc))
    rot = list(cyc[k:]) + list(cyc[:k])
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + list(reversed(rot[1:]))
    return tuple(rot)


@lru_cache(maxsize=256)
def _chordless_cycles(G: Graph) -> tuple:
    if G.n > 16:
        raise SolverLimitExceeded("induced cycle enumeration is limited to 16 vertices")
    cycles = {_canonical_cycle(c) for c in nx.chordless_cycles(G.to_networkx()) if len(c) >= 3}
    return tuple(sorted(cycles, key=lambda c: (len(c), c)))


def induced_odd_cycles(G: Graph, length: int | None = None) -> list:
    """Induced odd cycles as vertex-name tuples in canonical rotation."""
    out = []
    for c in _chordless_cycles(G):
        if len(c) % 2 == 1 and (length is None or len(c) == length):
            out.append(tuple(G.vertices[i] for i in c))
    return out


def blocks_and_cut_vertices(G: Graph):
    """Blocks (sorted name tuples) and the sorted list of cut vertices."""
    if not G.is_connected():
        raise ValueError("graph must be connected")
    nxg = G.to_networkx()
    blocks = sorted(tuple(G.vertices[i] for i in sorted(b)) for b in nx.biconnected_components(nxg))
    cuts = sorted(G.vertices[i] for i in nx.articulation_points(nxg))
    return blocks, cuts


def _is_cycle_graph(H: Graph) -> bool:
    return H.n >= 3 and len(H.edges) == H.n and all(len(a) == 2 for a in H.adjacency()) and H.is_connected()


def is_cactus(G: Graph) -> bool:
    """Connected, and every block is an edge or a cycle."""
    if not G.is_connected():
        return False
    blocks, _ = blocks_and_cut_vertices(G)
    for b in blocks:
        H = induced_subgraph(G, b)
        if H.n == 2:
            continue
        if not _is_cycle_graph(H):
            return False
    return True


def _is_clique(adj, vs) -> bool:
    return all(b in adj[a] for a, b in itertools.combinations(vs, 2))


def _components_without(G: Graph, adj, removed: set, within: set) -> list:
    comps, seen = [], set(removed)
    for start in sorted(within - removed):
        if start in seen:
            continue
        comp, stack = set(), [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.add(v)
            for u in adj[v]:
                if u in within and u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def clique_separator_atoms(G: Graph) -> list:
    """Split along clique separators until no piece has one.

    Separators are tried smallest first, ties broken lexicographically on
    vertex indices. Returns atoms as sorted name tuples.
    """
    if not G.is_connected():
        raise ValueError("graph must be connected")
    adj = G.adjacency()
    nxg = G.to_networkx()

    def split(part: frozenset) -> list:
        sub = nxg.subgraph(part)
        cliques = sorted((tuple(sorted(c)) for c in nx.enumerate_all_cliques(sub)), key=lambda c: (len(c), c))
        for c in cliques:
            if len(c) >= len(part) - 1:
                continue
            comps = _components_without(G, adj, set(c), set(part))
            if len(comps) >= 2:
                out = []
                for comp in comps:
                    out.extend(split(frozenset(comp | set(c))))
                return out
        return [part]

    atoms = set(split(frozenset(range(G.n))))
    maximal = [a for a in atoms if not any(a < b for b in atoms)]
    return sorted(tuple(G.vertices[i] for i in sorted(a)) for a in maximal)


def subgraph_distance(G: Graph, A: Iterable[str], B: Iterable[str]) -> float:
    """Least edge-distance from a vertex of ``A`` to a vertex of ``B`` (inf if none)."""
    pos = {v: i for i, v in enumerate(G.vertices)}
    src = {pos[a] for a in A}
    dst = {pos[b] for b in B}
    if not src or not dst:
        raise ValueError("distance needs two nonempty vertex sets")
    if src & dst:
        return 0
    adj = G.adjacency()
    dist = {v: 0 for v in src}
    queue = deque(src)
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                if u in dst:
                    return dist[u]
                queue.append(u)
    return float("inf")


def k_n(G: Graph, n: int) -> int:
    """Most induced ``(2n+1)``-cycles that are pairwise at distance at least 2."""
    cycles = induced_odd_cycles(G, 2 * n + 1)
    if not cycles:
        raise ValueError(f"graph has no induced cycle of length {2 * n + 1}")
    conflict = nx.Graph()
    conflict.add_nodes_from(range(len(cycles)))
    for a, b in itertools.combinations(range(len(cycles)), 2):
        if subgraph_distance(G, cycles[a], cycles[b]) < 2:
            conflict.add_edge(a, b)
    comp = nx.complement(conflict)
    return max(len(c) for c in nx.find_cliques(comp))


def complete_multipartite_parts(G: Graph):
    """Part sizes (descending) if ``G`` is complete multipartite, else None."""
    if G.n == 0:
        return None
    comp = nx.complement(G.to_networkx())
    parts = []
    for c in nx.connected_components(comp):
        sub = comp.subgraph(c)
        if sub.number_of_edges() != len(c) * (len(c) - 1) // 2:
            return None
        parts.append(sorted(c))
    return parts


def join(m: int, H: Graph, prefix: str = "u") -> Graph:
    """``K_m^c * H``: ``m`` independent new vertices joined to every vertex of ``H``."""
    if m < 1:
        raise ValueError("need at least one independent vertex")
    new = tuple(f"{prefix}{i + 1}" for i in range(m))
    clash = set(new) & set(H.vertices)
    if clash:
        raise ValueError(f"vertex names collide: {sorted(clash)}")
    verts = new + H.vertices
    edges = [(i, m + j) for i in range(m) for j in range(H.n)]
    edges += [(m + i, m + j) for i, j in H.edges]
    return Graph(verts, tuple(edges))


# --- classification ---------------------------------------------------------

KINDS = (
    "bipartite",
    "odd_cycle",
    "complete_multipartite",
    "cactus",
    "cliquesum_bipartite_oddcycles",
    "chi_equals_omega",
    "unknown",
)


@dataclass
class GraphClassification:
    """Every recognised family the graph belongs to, most specific first.

    ``kind`` is the first entry of ``kinds``. ``params`` and ``certificates``
    are keyed by kind.
    """

    kinds: tuple
    params: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return self.kinds[0]

    def has(self, kind: str) -> bool:
        return kind in self.kinds


def cliquesum_class_data(G: Graph):
    """Data for graphs glued along cliques from bipartite graphs and odd cycles.

    Returns None when some clique-separator atom is neither bipartite nor an
    odd cycle, or when the graph is bipartite. Otherwise a dict with the
    atoms, the sorted distinct half-lengths ``n_1 < ... < n_r`` of the
    induced odd cycles, and ``k`` (``k_n`` for the smallest length).
    """
    if not G.is_connected() or is_bipartite(G)[0]:
        return None
    atoms = clique_separator_atoms(G)
    for a in atoms:
        H = induced_subgraph(G, a)
        if is_bipartite(H)[0]:
            continue
        if _is_cycle_graph(H) and H.n % 2 == 1:
            continue
        return None
    lengths = sorted({len(c) for c in induced_odd_cycles(G)})
    halves = [(L - 1) // 2 for L in lengths]
    return {
        "atoms": atoms,
        "half_lengths": halves,
        "k": k_n(G, halves[0]),
    }


@lru_cache(maxsize=256)
def classify(G: Graph) -> GraphClassification:
    _require_no_isolated(G)
    if not G.is_connected():
        raise ValueError("classification needs a connected graph")
    kinds, params, certs = [], {}, {}
    bip, cert = is_bipartite(G)
    if bip:
        kinds.append("bipartite")
        certs["bipartite"] = cert
        return GraphClassification(tuple(kinds), params, certs)
    certs["odd_walk"] = cert
    if _is_cycle_graph(G):
        kinds.append("odd_cycle")
        params["odd_cycle"] = {"length": G.n}
        certs["odd_cycle"] = induced_odd_cycles(G)[0]
    parts = complete_multipartite_parts(G)
    if parts is not None:
        kinds.append("complete_multipartite")
        params["complete_multipartite"] = {"parts": sorted((len(p) for p in parts), reverse=True)}
        certs["complete_multipartite"] = [[G.vertices[i] for i in p] for p in parts]
    if is_cactus(G):
        odd = [len(c) for c in induced_odd_cycles(G)]
        kinds.append("cactus")
        params["cactus"] = {"smallest_odd_cycle": min(odd)}
        certs["cactus"] = blocks_and_cut_vertices(G)[0]
    data = cliquesum_class_data(G)
    if data is not None:
        kinds.append("cliquesum_bipartite_oddcycles")
        params["cliquesum_bipartite_oddcycles"] = {
            "half_lengths": data["half_lengths"],
            "r": len(data["half_lengths"]),
            "k": data["k"],
        }
        certs["cliquesum_bipartite_oddcycles"] = data["atoms"]
    if G.n <= MAX_EXACT_VERTICES:
        colouring = chromatic_colouring(G)
        chi = len(set(colouring.values()))
        clique = maximum_clique(G)
        if chi == len(clique):
            kinds.append("chi_equals_omega")
            params["chi_equals_omega"] = {"chi": chi}
            certs["chi_equals_omega"] = {"colouring": colouring, "clique": clique}
    if not kinds:
        kinds.append("unknown")
    return GraphClassification(tuple(kinds), params, certs)


def verify_classification(G: Graph, c: GraphClassification) -> bool:
    """Re-check every certificate in a classification against the graph."""
    named = {frozenset(e) for e in G.named_edges()}
    if c.has("bipartite"):
        return verify_bipartite_certificate(G, True, c.certificates["bipartite"])
    if not verify_bipartite_certificate(G, False, c.certificates["odd_walk"]):
        return False
    if c.has("odd_cycle"):
        cyc = c.certificates["odd_cycle"]
        if len(cyc) != G.n or set(cyc) != set(G.vertices) or len(named) != G.n:
            return False
    if c.has("complete_multipartite"):
        parts = c.certificates["complete_multipartite"]
        where = {v: k for k, p in enumerate(parts) for v in p}
        for a, b in itertools.combinations(G.vertices, 2):
            if (frozenset((a, b)) in named) != (where[a] != where[b]):
                return False
    if c.has("cactus"):
        for b in c.certificates["cactus"]:
            H = induced_subgraph(G, b)
            if H.n != 2 and not _is_cycle_graph(H):
                return False
    if c.has("cliquesum_bipartite_oddcycles"):
        atoms = c.certificates["cliquesum_bipartite_oddcycles"]
        covered = set()
        for a in atoms:
            H = induced_subgraph(G, a)
            if not (is_bipartite(H)[0] or (_is_cycle_graph(H) and H.n % 2 == 1)):
                return False
            covered |= {frozenset(e) for e in H.named_edges()}
        if covered != named:
            return False
    if c.has("chi_equals_omega"):
        col = c.certificates["chi_equals_omega"]["colouring"]
        clique = c.certificates["chi_equals_omega"]["clique"]
        if any(col[a] == col[b] for a, b in G.named_edges()):
            return False
        if any(frozenset(p) not in named for p in itertools.combinations(clique, 2)):
            return False
        if len(set(col.values())) != len(clique):
            return False
    return True
