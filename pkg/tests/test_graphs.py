import pytest
from hypothesis import given

import oracles
from resurgence import catalog
from resurgence.graphs import (
    Graph,
    Hypergraph,
    SolverLimitExceeded,
    blocks_and_cut_vertices,
    chromatic_number,
    classify,
    clique_number,
    clique_separator_atoms,
    complete_multipartite_parts,
    cover_ideal,
    cover_ideal_hypergraph,
    edge_ideal,
    hypergraph_chromatic_number,
    hypergraph_of_ideal,
    independence_number,
    induced_odd_cycles,
    induced_subgraph,
    is_bipartite,
    is_cactus,
    join,
    k_n,
    minimal_vertex_covers,
    subgraph_distance,
    verify_bipartite_certificate,
    verify_classification,
)
from resurgence.ideal import MonomialIdeal, alpha, intersect, minimal_primes, parse_monomial, prime_power
from strategies import graphs

C3, C5, C6, C7 = (catalog.cycle(n) for n in (3, 5, 6, 7))
K222 = catalog.complete_multipartite([2, 2, 2])


def named(*edges):
    verts = sorted({v for e in edges for v in e})
    return Graph.from_names(verts, edges)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(("a", "b"), ((0, 0),))
    with pytest.raises(ValueError):
        Graph(("a", "b"), ((0, 2),))
    with pytest.raises(ValueError):
        Graph.from_names(["a"], [("a", "z")])
    assert Graph(("a", "b"), ((1, 0), (0, 1))).edges == ((0, 1),)


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        Hypergraph(("a", "b", "c"), ((0,),))
    with pytest.raises(ValueError):
        Hypergraph(("a", "b", "c"), ((0, 1), (0, 1, 2)))


def test_minimal_vertex_covers_examples():
    assert minimal_vertex_covers(C3) == [("x1", "x2"), ("x1", "x3"), ("x2", "x3")]
    covers = minimal_vertex_covers(C5)
    assert len(covers) == 5 and all(len(c) == 3 for c in covers)
    assert ("x1", "x2", "x4") in covers
    assert minimal_vertex_covers(named(("x", "y"))) == [("x",), ("y",)]
    with pytest.raises(ValueError):
        minimal_vertex_covers(Graph(("a", "b", "c"), ((0, 1),)))


def test_graph_ideal_examples():
    tri = MonomialIdeal.from_generators(C3.ring, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert cover_ideal(C3) == tri and edge_ideal(C3) == tri
    J = cover_ideal(C5)
    assert len(J) == 5 and all(sum(g) == 3 for g in J)
    with pytest.raises(ValueError):
        edge_ideal(Graph(("a", "b", "c"), ((0, 1),)))


def test_invariant_examples():
    assert chromatic_number(C5) == 3
    assert chromatic_number(catalog.complete(4)) == 4
    assert chromatic_number(catalog.petersen()) == 3
    assert clique_number(C5) == 2 and independence_number(C5) == 2
    assert clique_number(K222) == 3 and independence_number(K222) == 2


def test_hypergraph_chromatic_number():
    assert hypergraph_chromatic_number(catalog.hyper_123_345_512()) == 2
    assert hypergraph_chromatic_number(Hypergraph.from_graph(C5)) == 3


def test_exact_solver_guard():
    big = catalog.cycle(25)
    with pytest.raises(SolverLimitExceeded):
        chromatic_number(big)
    with pytest.raises(SolverLimitExceeded):
        induced_odd_cycles(catalog.cycle(17))


def test_bipartite_examples():
    ok, colouring = is_bipartite(C6)
    assert ok and verify_bipartite_certificate(C6, True, colouring)
    ok, walk = is_bipartite(C5)
    assert not ok and verify_bipartite_certificate(C5, False, walk)
    assert is_bipartite(catalog.path(5))[0]


def test_bipartite_certificate_rejects_bad_walks():
    assert not verify_bipartite_certificate(C5, False, ["x1", "x2", "x3", "x4"])
    assert not verify_bipartite_certificate(C5, False, ["x1", "x2", "x4"])


def test_induced_subgraph_examples():
    assert induced_subgraph(C5, C5.vertices) == C5
    p = induced_subgraph(C5, ["x1", "x2", "x3"])
    assert p.named_edges() == [("x1", "x2"), ("x2", "x3")]
    two = induced_subgraph(C5, ["x1", "x3"])
    assert two.n == 2 and not two.edges
    with pytest.raises(ValueError):
        induced_subgraph(C5, ["x9"])


def test_induced_odd_cycles_examples():
    assert len(induced_odd_cycles(C5)) == 1 and len(induced_odd_cycles(C5)[0]) == 5
    assert induced_odd_cycles(C6) == []
    two = catalog.builtin_graph("two-triangles-d2")
    cycles = induced_odd_cycles(two)
    assert len(cycles) == 2 and all(len(c) == 3 for c in cycles)
    assert induced_odd_cycles(two, 5) == []


def test_blocks_examples():
    blocks, cuts = blocks_and_cut_vertices(catalog.bowtie())
    assert len(blocks) == 2 and cuts == ["c"]
    assert blocks_and_cut_vertices(C5) == ([C5.vertices], [])
    blocks, cuts = blocks_and_cut_vertices(catalog.path(4))
    assert len(blocks) == 3 and cuts == ["x2", "x3"]
    assert is_cactus(catalog.bowtie()) and is_cactus(catalog.cactus_c5_c7())
    assert not is_cactus(catalog.complete(4))


def test_clique_separator_examples():
    diamond = named(("a", "b"), ("b", "c"), ("a", "c"), ("b", "d"), ("c", "d"))
    assert clique_separator_atoms(diamond) == [("a", "b", "c"), ("b", "c", "d")]
    assert clique_separator_atoms(C5) == [C5.vertices]
    pendant = named(("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"))
    assert clique_separator_atoms(pendant) == [("a", "b", "c"), ("c", "d")]


def test_k_n_and_distance_examples():
    assert k_n(C3, 1) == 1
    assert k_n(catalog.bowtie(), 1) == 1
    assert k_n(catalog.builtin_graph("two-triangles-d2"), 1) == 2
    with pytest.raises(ValueError):
        k_n(C6, 1)
    P = catalog.path(3)
    assert subgraph_distance(P, ["x1", "x2"], ["x2"]) == 0
    assert subgraph_distance(P, ["x1"], ["x2"]) == 1
    assert subgraph_distance(P, ["x1"], ["x3"]) == 2
    with pytest.raises(ValueError):
        subgraph_distance(P, [], ["x1"])


def test_classify_examples():
    c = classify(C7)
    assert c.kind == "odd_cycle" and c.params["odd_cycle"]["length"] == 7
    c = classify(K222)
    assert c.has("complete_multipartite") and c.has("chi_equals_omega")
    assert c.params["complete_multipartite"]["parts"] == [2, 2, 2]
    c = classify(catalog.builtin_graph("two-triangles-d2"))
    assert c.params["cliquesum_bipartite_oddcycles"] == {"half_lengths": [1], "r": 1, "k": 2}
    assert classify(C6).kind == "bipartite"
    assert classify(catalog.petersen()).kind == "unknown"
    with pytest.raises(ValueError):
        classify(Graph(("a", "b", "c", "d"), ((0, 1), (2, 3))))


def test_join_and_multipartite_parts():
    G = join(2, catalog.cycle(4))
    assert G.n == 6 and len(G.edges) == 4 + 8
    assert sorted(map(len, complete_multipartite_parts(G))) == [2, 2, 2]
    assert complete_multipartite_parts(C5) is None
    with pytest.raises(ValueError):
        join(1, Graph.from_names(["u1", "v"], [("u1", "v")]))


def test_hypergraph_of_ideal_examples():
    H = hypergraph_of_ideal(cover_ideal(C5))
    assert H == Hypergraph.from_graph(C5)
    R = C3.ring
    with pytest.raises(ValueError):
        hypergraph_of_ideal(MonomialIdeal.from_generators(R, [parse_monomial(R, "x1")]))
    Hx = catalog.hyper_123_345_512()
    assert hypergraph_of_ideal(cover_ideal_hypergraph(Hx)) == Hx


# --- properties ---------------------------------------------------------------

@given(graphs())
def test_covers_match_oracle(G):
    expected = [tuple(G.vertices[i] for i in c) for c in oracles.vertex_covers(G.n, G.edges)]
    assert sorted(minimal_vertex_covers(G)) == sorted(expected)


@given(graphs())
def test_alexander_duality(G):
    J, I = cover_ideal(G), edge_ideal(G)
    edge_primes = [prime_power(G.ring, e, 1) for e in G.edges]
    total = edge_primes[0]
    for P in edge_primes[1:]:
        total = intersect(total, P)
    assert total == J
    assert sorted(minimal_primes(I)) == sorted(tuple(i for i, x in enumerate(g) if x) for g in J)


@given(graphs(max_n=7))
def test_invariants_match_oracle(G):
    assert chromatic_number(G) == oracles.chromatic(G.n, G.edges)
    assert clique_number(G) == oracles.clique(G.n, G.edges)
    assert independence_number(G) == oracles.independence(G.n, G.edges)
    assert alpha(cover_ideal(G)) == G.n - independence_number(G)


@given(graphs())
def test_bipartite_certificate_always_verifies(G):
    ok, cert = is_bipartite(G)
    assert verify_bipartite_certificate(G, ok, cert)
    assert ok == (oracles.chromatic(G.n, G.edges) <= 2)


@given(graphs(min_n=3, max_n=7, connected=True))
def test_classification_certificates_verify(G):
    assert verify_classification(G, classify(G))


@given(graphs(min_n=3, max_n=7, connected=True))
def test_atoms_cover_every_edge(G):
    atoms = clique_separator_atoms(G)
    covered = set()
    for a in atoms:
        covered |= {frozenset(e) for e in induced_subgraph(G, a).named_edges()}
    assert covered == {frozenset(e) for e in G.named_edges()}
