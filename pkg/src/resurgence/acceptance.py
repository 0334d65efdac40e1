"""The acceptance criteria as runnable checks.

Each check returns a ``Criterion``; ``run_all`` runs them in order. The CLI
``verify-suite`` verb and ``tests/test_acceptance.py`` both use this module.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from . import catalog
from .containment import check_containment, sweep
from .graphs import (
    Graph,
    Hypergraph,
    chromatic_number,
    clique_separator_atoms,
    cover_ideal,
    cover_ideal_hypergraph,
    edge_ideal,
    induced_subgraph,
    is_bipartite,
)
from .ideal import (
    MonomialIdeal,
    contains_monomial,
    embed,
    intersect,
    member_of_power,
    power,
)
from .resurgence import (
    SumPart,
    cover_chi_containment_suite,
    exact_cover_resurgence,
    exact_edge_resurgence,
    gen_ghm_bound,
    disjoint_sum_rho,
    hypergraph_containment_suite,
    hypergraph_rho_a_upper,
    verify_witness,
)
from .symbolic import edge_alpha_formula, symbolic_power, waldschmidt


@dataclass
class Criterion:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        num = f"{self.number:>2}" if self.number else " -"
        return f"[{mark}] {num} {self.name}: {self.detail} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"name": f"{self.number} {self.name}", "passed": self.passed, "detail": self.detail}


def small_graphs(max_vertices: int = 6):
    """Every graph on at most ``max_vertices`` vertices without isolated vertices, one per isomorphism class."""
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() > max_vertices or g.number_of_edges() == 0:
            continue
        if any(d == 0 for _, d in g.degree()):
            continue
        names = [f"x{i + 1}" for i in range(g.number_of_nodes())]
        yield Graph.from_names(names, [(names[a], names[b]) for a, b in g.edges()])


def odd_cycle_exactness(s_max: int = 8) -> tuple:
    notes, ok = [], True
    for L, expected in ((3, Fraction(4, 3)), (5, Fraction(6, 5)), (7, Fraction(8, 7))):
        G = catalog.cycle(L)
        rep = exact_cover_resurgence(G)
        good = (rep.rho.exact == expected and rep.rho_a.exact == expected
                and rep.rho.headline_tag() == "odd-cycle theorem")
        sw = sweep(cover_ideal(G), s_max, s_max, graph=G)
        above = [(c.s, c.t) for c in sw.failures if c.ratio > expected]
        good &= not above and not sw.truncated
        ok &= good
        notes.append(f"C{L}: {rep.rho} ({rep.rho.headline_tag()}), sweep max {sw.lower}")
    return ok, "; ".join(notes)


def odd_cycle_family() -> tuple:
    notes, ok = [], True
    for L, (a, b) in ((3, (4, 3)), (5, (6, 5))):
        G = catalog.cycle(L)
        for t in (1, 2):
            res = check_containment(cover_ideal(G), a * t, b * t, graph=G)
            ok &= res.holds is True
            notes.append(f"C{L} ({a * t},{b * t}) {res.holds}")
    return ok, ", ".join(notes)


def chi_suite() -> tuple:
    count, bad = 0, []
    for G in small_graphs(6):
        if not G.is_connected() or is_bipartite(G)[0]:
            continue
        count += 1
        chi = chromatic_number(G)
        for e in cover_chi_containment_suite(G, 1, [chi, chi + 1]):
            if not e.ok:
                bad.append((G.named_edges(), e.family, e.r))
    return not bad, f"{count} graphs, {len(bad)} failures"


def bipartite_equivalence(s_max: int = 4) -> tuple:
    count, bad = 0, []
    for G in small_graphs(6):
        count += 1
        equal = all(symbolic_power(K, s) == power(K, s)
                    for K in (edge_ideal(G), cover_ideal(G)) for s in range(2, s_max + 1))
        if equal != is_bipartite(G)[0]:
            bad.append(G.named_edges())
    return not bad, f"{count} graphs, {len(bad)} mismatches"


def _atom_ideals(G: Graph):
    atoms = clique_separator_atoms(G)
    return [embed(cover_ideal(induced_subgraph(G, a)), G.ring) for a in atoms]


def clique_sum_identities() -> tuple:
    ok, notes = True, []
    for name in ("bowtie", "triangle-c4"):
        G = catalog.builtin_graph(name)
        parts = _atom_ideals(G)
        J = cover_ideal(G)
        for e in range(1, 4):
            ordinary = parts[0] if e == 1 else power(parts[0], e)
            symb = symbolic_power(parts[0], e)
            for P in parts[1:]:
                ordinary = intersect(ordinary, power(P, e))
                symb = intersect(symb, symbolic_power(P, e))
            ok &= power(J, e) == ordinary and symbolic_power(J, e) == symb
        notes.append(f"{name}: {len(parts)} atoms")
    rep = exact_cover_resurgence(catalog.bowtie())
    tags = rep.rho.tags()
    ok &= rep.rho.exact == Fraction(4, 3) and "clique-sum theorem" in tags and "cactus theorem" in tags
    notes.append(f"bowtie rho {rep.rho} via {', '.join(sorted(set(tags)))}")
    return ok, "; ".join(notes)


def waldschmidt_values() -> tuple:
    C5 = catalog.cycle(5)
    J, I = cover_ideal(C5), edge_ideal(C5)
    wj = waldschmidt(J, "generic", s_max=6)
    wi = waldschmidt(I, "generic", s_max=9)
    ok = wj.upper == Fraction(5, 2) == Fraction(wj.samples[2], 2)
    ok &= wi.upper == Fraction(5, 3)
    alphas = {s: wi.samples[s] for s in range(1, 10)}
    ok &= all(a == 2 * s - s // 3 == edge_alpha_formula(C5, s) for s, a in alphas.items())
    ok &= waldschmidt(J, "cover").exact == Fraction(5, 2)
    ok &= waldschmidt(I, "edge-class", C5).exact == Fraction(5, 3)
    return ok, f"J(C5) {wj.upper}, I(C5) {wi.upper}, alpha(I^(s)) {list(alphas.values())}"


def edge_class() -> tuple:
    r2 = exact_edge_resurgence(catalog.builtin_graph("two-triangles-d2"))
    r3 = exact_edge_resurgence(catalog.builtin_graph("three-triangles-d2"))
    w = [x for x in r2.witnesses if (x.s, x.t) == (4, 3)]
    ok = r2.rho.exact == Fraction(4, 3) and r2.rho_a.exact == Fraction(4, 3)
    ok &= bool(w) and verify_witness(r2.ideal, 4, 3, w[0].monomial)
    ok &= sum(w[0].monomial) == 6 if w else False
    ok &= r3.rho.exact == Fraction(3, 2) and r3.rho_a.exact == Fraction(4, 3)
    return ok, f"k=2: rho {r2.rho}, rho_a {r2.rho_a}; k=3: rho {r3.rho}, rho_a {r3.rho_a}"


def ghm() -> tuple:
    C5 = catalog.cycle(5)
    m = MonomialIdeal.prime(C5.ring, range(5))
    a = gen_ghm_bound(edge_ideal(C5), 3, m, 1)
    b = gen_ghm_bound(cover_ideal(C5), 2, m, 2)
    ok = all(r.bound == Fraction(6, 5) and r.lower_containment[0] and r.upper_containment[0] for r in (a, b))
    return ok, f"I(C5): {a.bound}, J(C5): {b.bound}"


def sum_formula_check() -> tuple:
    G1, G2 = catalog.cycle(3, "x"), catalog.cycle(3, "y")
    parts = [SumPart(cover_ideal(G), exact_cover_resurgence(G), cover_graph=G) for G in (G1, G2)]
    rep = disjoint_sum_rho(parts)
    ps = [p for p in rep.rho.provenance if p.tag == "sum witness"]
    p_values = dict(ps[0].inputs)["p"] if ps else None
    w = [x for x in rep.witnesses if (x.s, x.t) == (4, 3)]
    ok = rep.rho.exact == Fraction(4, 3) and p_values == [2, 2]
    ok &= bool(w) and verify_witness(rep.ideal, 4, 3, w[0].monomial)
    return ok, f"rho {rep.rho}, p {p_values}, witness (4,3) {'verified' if w else 'missing'}"


def engine_equivalence(samples: int = 50, seed: int = 20240601) -> tuple:
    rng = random.Random(seed)
    discrepancies = checked = 0
    made = 0
    while made < samples:
        n = rng.randint(2, 7)
        g = nx.gnp_random_graph(n, rng.uniform(0.3, 0.8), seed=rng.randrange(2**31))
        if not nx.is_connected(g):
            continue
        made += 1
        names = [f"x{i + 1}" for i in range(n)]
        G = Graph.from_names(names, [(names[a], names[b]) for a, b in g.edges()])
        for K in (edge_ideal(G), cover_ideal(G)):
            for s in (1, 2, 3):
                checked += 1
                if symbolic_power(K, s, "enumerate") != symbolic_power(K, s, "intersect"):
                    discrepancies += 1
            monos = list(symbolic_power(K, 3).generators)
            monos += [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(10)]
            for t in (1, 2, 3):
                P = power(K, t)
                for m in monos:
                    checked += 1
                    if member_of_power(K, m, t) != contains_monomial(P, m):
                        discrepancies += 1
    return discrepancies == 0, f"{samples} graphs, {checked} comparisons, {discrepancies} discrepancies"


def _brute_chi(H: Hypergraph) -> int:
    for k in range(1, len(H.vertices) + 1):
        for col in itertools.product(range(k), repeat=len(H.vertices)):
            if all(len({col[v] for v in e}) > 1 for e in H.edges):
                return k
    raise AssertionError("unreachable")


def hypergraph_bound() -> tuple:
    ok, notes = True, []
    for H in (Hypergraph.from_graph(catalog.cycle(5)), catalog.hyper_123_345_512()):
        chi = _brute_chi(H)
        h = max(len(e) for e in H.edges)
        bound = hypergraph_rho_a_upper(H)
        suite = hypergraph_containment_suite(H, [chi])
        ok &= bound == h - Fraction(1, chi) and all(e.result.holds is True for e in suite)
        notes.append(f"h={h} chi={chi} bound {bound}")
    return ok, "; ".join(notes)


CRITERIA = (
    (1, "odd-cycle cover exactness", odd_cycle_exactness),
    (2, "odd-cycle containment family", odd_cycle_family),
    (3, "chi-bound containment suite", chi_suite),
    (4, "bipartite equivalence", bipartite_equivalence),
    (5, "clique-sum identities", clique_sum_identities),
    (6, "Waldschmidt values", waldschmidt_values),
    (7, "edge-ideal class", edge_class),
    (8, "two-degree Rees bound", ghm),
    (9, "sum formula", sum_formula_check),
    (10, "engine oracle equivalence", engine_equivalence),
    (11, "hypergraph bound", hypergraph_bound),
)


def run_criterion(number: int) -> Criterion:
    for num, name, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            try:
                passed, detail = fn()
            except Exception as e:  # a crash is a failure, reported with its cause
                passed, detail = False, f"error: {type(e).__name__}: {e}"
            return Criterion(num, name, bool(passed), detail, time.perf_counter() - t0)
    raise KeyError(f"no criterion {number}")


def run_all(numbers=None) -> list:
    return [run_criterion(n) for n, _, _ in CRITERIA if numbers is None or n in numbers]
