"""Resurgence reports: exact values by graph class, certified bounds, and
the product, sum, colon and restriction rules.

Every number in a report carries a provenance entry naming the result it
comes from and the inputs it was evaluated on. Witnesses are re-verified
before they are recorded.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from . import kernels
from .containment import ContainmentResult, check_containment, ideal_containment, least_noneq_power, sweep
from .graphs import (
    Graph,
    Hypergraph,
    chromatic_number,
    classify,
    clique_number,
    cliquesum_class_data,
    cover_ideal,
    cover_ideal_hypergraph,
    edge_ideal,
    hypergraph_chromatic_number,
    independence_number,
    induced_odd_cycles,
    induced_subgraph,
    is_bipartite,
    join,
    k_n,
    subgraph_distance,
)
from .ideal import (
    MonomialIdeal,
    VariableSet,
    alpha,
    big_height,
    colon,
    contains_monomial,
    embed,
    format_monomial,
    ideal_sum,
    is_squarefree,
    member_of_power,
    power,
    product,
)
from .symbolic import (
    Jn_ideal,
    cover_symbolic_fast,
    symbolic_member,
    symbolic_power,
    symbolic_spec,
    waldschmidt,
)


class InconsistencyError(AssertionError):
    """Two certified bounds crossed: a bug, never a mathematical outcome."""


def fmt(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class Provenance:
    value: Fraction
    tag: str
    bound: str  # "exact", "lower" or "upper"
    inputs: tuple = ()

    def to_json(self) -> dict:
        return {"value": fmt(self.value), "tag": self.tag, "bound": self.bound,
                "inputs": {k: _jsonable(v) for k, v in self.inputs}}


def _jsonable(v):
    if isinstance(v, Fraction):
        return fmt(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


class Estimate:
    """A value known exactly or up to an interval, with its justification."""

    def __init__(self):
        self.lower: Fraction | None = None
        self.upper: Fraction | None = None
        self.provenance: list = []

    def add(self, value, tag: str, bound: str, **inputs) -> "Estimate":
        value = Fraction(value)
        if bound not in ("exact", "lower", "upper"):
            raise ValueError(f"unknown bound kind {bound!r}")
        self.provenance.append(Provenance(value, tag, bound, tuple(sorted(inputs.items()))))
        if bound in ("exact", "lower"):
            self.lower = value if self.lower is None else max(self.lower, value)
        if bound in ("exact", "upper"):
            self.upper = value if self.upper is None else min(self.upper, value)
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise InconsistencyError(f"{tag} gives {value}, crossing [{self.lower}, {self.upper}]")
        return self

    @property
    def exact(self) -> Fraction | None:
        if self.lower is not None and self.lower == self.upper:
            return self.lower
        return None

    def tags(self) -> list:
        return [p.tag for p in self.provenance]

    def headline_tag(self) -> str | None:
        """Tag of the first exact entry, if any."""
        for p in self.provenance:
            if p.bound == "exact":
                return p.tag
        return None

    def __str__(self):
        if self.exact is not None:
            return fmt(self.exact)
        lo = "?" if self.lower is None else fmt(self.lower)
        hi = "?" if self.upper is None else fmt(self.upper)
        return f"[{lo}, {hi}]"

    def to_json(self) -> dict:
        out = {}
        if self.exact is not None:
            out["exact"] = fmt(self.exact)
        else:
            out["interval"] = [None if self.lower is None else fmt(self.lower),
                               None if self.upper is None else fmt(self.upper)]
        out["provenance"] = [p.to_json() for p in self.provenance]
        return out


@dataclass(frozen=True)
class Witness:
    """A monomial in ``I^(s)`` but not in ``I^t``."""

    s: int
    t: int
    monomial: tuple
    verified: bool

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.s, self.t)


def verify_witness(I: MonomialIdeal, s: int, t: int, m) -> bool:
    """Re-check ``m`` in ``I^(s)`` and outside ``I^t`` from scratch."""
    return symbolic_member(symbolic_spec(I, s), tuple(m)) and not member_of_power(I, tuple(m), t)


def make_witness(I: MonomialIdeal, s: int, t: int, m) -> Witness:
    w = Witness(s, t, tuple(m), verify_witness(I, s, t, m))
    if not w.verified:
        raise InconsistencyError(f"claimed witness at ({s}, {t}) does not verify")
    return w


@dataclass
class ResurgenceReport:
    ideal: MonomialIdeal
    description: str
    rho: Estimate = field(default_factory=Estimate)
    rho_a: Estimate = field(default_factory=Estimate)
    witnesses: list = field(default_factory=list)
    containments: list = field(default_factory=list)  # (s, t, holds)
    flags: list = field(default_factory=list)
    truncated: bool = False

    def add_witness(self, w: Witness):
        if w not in self.witnesses:
            self.witnesses.append(w)
            self.witnesses.sort(key=lambda x: (x.s, x.t, x.monomial))

    def finalize(self) -> "ResurgenceReport":
        """Apply ``rho_a <= rho`` both ways and check every invariant."""
        if self.rho_a.lower is not None and (self.rho.lower is None or self.rho_a.lower > self.rho.lower):
            self.rho.add(self.rho_a.lower, "asymptotic resurgence is a lower bound", "lower")
        if self.rho.upper is not None and (self.rho_a.upper is None or self.rho.upper < self.rho_a.upper):
            self.rho_a.add(self.rho.upper, "bounded by the resurgence", "upper")
        for w in self.witnesses:
            if not w.verified:
                raise InconsistencyError(f"unverified witness at ({w.s}, {w.t})")
            if self.rho.upper is not None and w.ratio > self.rho.upper:
                raise InconsistencyError(f"witness ratio {w.ratio} exceeds upper bound {self.rho.upper}")
        self.containments = sorted(set(self.containments))
        return self

    def to_json(self) -> dict:
        ring = self.ideal.ring
        return {
            "ideal": {"variables": list(ring.names),
                      "generators": [format_monomial(ring, g) for g in self.ideal.generators]},
            "description": self.description,
            "rho": self.rho.to_json(),
            "rho_a": self.rho_a.to_json(),
            "witnesses": [{"s": w.s, "t": w.t, "monomial": format_monomial(ring, w.monomial)}
                          for w in self.witnesses],
            "containments": [{"s": s, "t": t, "holds": h} for s, t, h in self.containments],
            "flags": list(self.flags),
            "truncated": self.truncated,
        }


# --- simple bounds ---------------------------------------------------------

def _waldschmidt_for(I: MonomialIdeal, graph: Graph | None):
    if graph is not None and I == cover_ideal(graph):
        return waldschmidt(I, "cover", s_max=2)
    if graph is not None and I == edge_ideal(graph) and cliquesum_class_data(graph) is not None:
        return waldschmidt(I, "edge-class", graph, s_max=4)
    return waldschmidt(I, "generic", s_max=4)


def rho_alpha_lower(I: MonomialIdeal, graph: Graph | None = None) -> Fraction:
    """``alpha(I) / alpha_hat(I)``, a lower bound for the asymptotic resurgence.

    With ``graph`` given and ``I`` its cover ideal, or its edge ideal in the
    clique-sum class, the Waldschmidt constant is exact. Otherwise the
    sampled upper bound on it is used, which still yields a valid bound.
    """
    est = _waldschmidt_for(I, graph)
    return Fraction(alpha(I)) / est.upper


def _require_graph(G: Graph):
    if G.isolated():
        raise ValueError("graph has isolated vertices")
    if not G.is_connected():
        raise ValueError("graph must be connected")


def cover_upper_chi(G: Graph) -> Fraction:
    """``2 - 2/chi(G)``, an upper bound for the cover ideal's resurgence."""
    _require_graph(G)
    return 2 - Fraction(2, chromatic_number(G))


def hypergraph_rho_a_upper(H: Hypergraph) -> Fraction:
    """``h - 1/chi(H)`` with ``h`` the big height of the cover ideal."""
    J = cover_ideal_hypergraph(H)
    return big_height(J) - Fraction(1, hypergraph_chromatic_number(H))


@dataclass
class SuiteEntry:
    family: str
    r: int
    s: int
    t: int
    in_hypothesis: bool
    result: ContainmentResult

    @property
    def ok(self) -> bool:
        """In-hypothesis entries must hold; the rest are informational."""
        return (not self.in_hypothesis) or self.result.holds is True


def hypergraph_containment_suite(H: Hypergraph, r_values=None) -> list:
    """Check ``J(H)^(rh - h)`` inside ``J(H)^r``; in hypothesis for ``r >= chi(H)``."""
    J = cover_ideal_hypergraph(H)
    h = big_height(J)
    chi = hypergraph_chromatic_number(H)
    if r_values is None:
        r_values = [chi, chi + 1]
    out = []
    for r in r_values:
        s = r * h - h
        if s < 1:
            continue
        res = check_containment(J, s, r)
        out.append(SuiteEntry("rh-h", r, s, r, r >= chi, res))
    return out


def cover_chi_containment_suite(G: Graph, c: int = 1, r_values=None) -> list:
    """Both families ``J^(2r-2c) in J^r`` (``r >= c chi``) and
    ``J^(2r-2c-1) in J^r`` (``r >= c chi + 1``)."""
    if c < 1:
        raise ValueError("c must be at least 1")
    if G.isolated():
        raise ValueError("graph has isolated vertices")
    chi = chromatic_number(G)
    J = cover_ideal(G)
    if r_values is None:
        r_values = [c * chi, c * chi + 1]
    out = []
    for r in r_values:
        for family, s, threshold in (("2r-2c", 2 * r - 2 * c, c * chi), ("2r-2c-1", 2 * r - 2 * c - 1, c * chi + 1)):
            if s < 1:
                continue
            res = check_containment(J, s, r, graph=G)
            out.append(SuiteEntry(family, r, s, r, r >= threshold, res))
    return out


# --- the generalised bound with a two-degree symbolic Rees algebra ----------

@dataclass
class GhmResult:
    bound: Fraction | None
    lower_containment: tuple  # (holds, witness) for P I^(n) in I^n
    upper_containment: tuple  # (holds, witness) for I^(n) in P^k I^(n-1)
    rees_checked_to: int
    rees_failure: int | None
    flags: list = field(default_factory=list)


def gen_ghm_bound(I: MonomialIdeal, n: int, P: MonomialIdeal, k: int, a_max: int | None = None) -> GhmResult:
    """Upper bound ``(nk+n)/(nk+n-1)`` when ``P I^(n) in I^n`` and ``I^(n) in P^k I^(n-1)``.

    The two containments are machine-checked. The bound also needs the
    symbolic Rees algebra to be generated in degrees 1 and ``n``; that is
    not decidable here, so it is checked as ``I^(a) = (I^(n))^q I^r`` for
    ``a <= a_max`` and recorded as an assumption flag.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if P.ring != I.ring:
        raise ValueError("P must live in the ring of I")
    if a_max is None:
        a_max = 2 * n + 1
    Sn = symbolic_power(I, n)
    first = ideal_containment(power(I, n), product(P, Sn))
    below = symbolic_power(I, n - 1) if n > 1 else MonomialIdeal.unit(I.ring)
    second = ideal_containment(product(power(P, k), below), Sn)
    rees_failure = None
    for a in range(1, a_max + 1):
        q, r = divmod(a, n)
        gen = MonomialIdeal.unit(I.ring)
        if q:
            gen = power(Sn, q)
        if r:
            gen = product(gen, power(I, r))
        if gen != symbolic_power(I, a):
            rees_failure = a
            break
    flags = [f"assumes the symbolic Rees algebra is generated in degrees 1 and {n}; "
             f"consequence checked for a <= {a_max}"]
    bound = None
    if first[0] and second[0] and rees_failure is None:
        bound = Fraction(n * k + n, n * k + n - 1)
    if rees_failure is not None:
        flags.append(f"degree-{n} generation fails at a = {rees_failure}")
    return GhmResult(bound, first, second, a_max, rees_failure, flags)


# --- sweeps into reports ------------------------------------------------------

def _record_sweep(report: ResurgenceReport, I: MonomialIdeal, box, graph: Graph | None = None, threads: int = 1):
    res = sweep(I, box[0], box[1], graph=graph, threads=threads)
    for (s, t), cell in res.cells.items():
        if cell.holds is not None:
            report.containments.append((s, t, cell.holds))
    # tightest failure per s
    for s in range(1, box[0] + 1):
        fails = [c for (s2, _), c in res.cells.items() if s2 == s and c.holds is False]
        if fails:
            c = min(fails, key=lambda x: x.t)
            report.add_witness(make_witness(I, c.s, c.t, c.witness))
    if res.truncated:
        report.truncated = True
        report.flags.append("sweep truncated by the membership node budget")
    if res.lower is not None and res.lower > 1:
        best = res.best_failure()
        report.rho.add(res.lower, "sweep witness", "lower", s=best.s, t=best.t, box=list(box))
    return res


# --- cover ideals ---------------------------------------------------------------

_COVER_TAGS = {
    "bipartite": "bipartite theorem",
    "odd_cycle": "odd-cycle theorem",
    "complete_multipartite": "complete multipartite theorem",
    "chi_equals_omega": "chi-equals-omega theorem",
    "cliquesum_bipartite_oddcycles": "clique-sum theorem",
    "cactus": "cactus theorem",
}
_COVER_ORDER = ("bipartite", "odd_cycle", "complete_multipartite", "chi_equals_omega", "clique-sum", "cactus")


def _components(G: Graph) -> list:
    comps = sorted(sorted(c) for c in nx.connected_components(G.to_networkx()))
    return [induced_subgraph(G, [G.vertices[i] for i in c]) for c in comps]


def _cover_exact_values(G: Graph, threads: int) -> list:
    """All exact values available for a connected graph, in dispatch order."""
    from .graphs import clique_separator_atoms

    c = classify(G)
    found = []
    if c.has("bipartite"):
        found.append(("bipartite", Fraction(1), Fraction(1), {}))
        return found
    if c.has("odd_cycle"):
        L = c.params["odd_cycle"]["length"]
        n = (L - 1) // 2
        v = Fraction(2 * n + 2, 2 * n + 1)
        found.append(("odd_cycle", v, v, {"n": n}))
    if c.has("complete_multipartite"):
        k = len(c.params["complete_multipartite"]["parts"])
        v = 2 - Fraction(2, k)
        found.append(("complete_multipartite", v, v, {"parts": k}))
    if c.has("chi_equals_omega"):
        w = c.params["chi_equals_omega"]["chi"]
        v = 2 - Fraction(2, w)
        found.append(("chi_equals_omega", v, v, {"omega": w}))
    atoms = clique_separator_atoms(G)
    if len(atoms) > 1:
        subs = [exact_cover_resurgence(induced_subgraph(G, a), threads=threads) for a in atoms]
        if all(r.rho.exact is not None and r.rho_a.exact is not None for r in subs):
            found.append(("clique-sum", max(r.rho.exact for r in subs), max(r.rho_a.exact for r in subs),
                          {"atoms": [list(a) for a in atoms]}))
    if c.has("cactus"):
        m = c.params["cactus"]["smallest_odd_cycle"]
        v = Fraction(m + 1, m)
        found.append(("cactus", v, v, {"smallest_odd_cycle": m}))
    return found


def exact_cover_resurgence(G: Graph, sweep_box=None, threads: int = 1) -> ResurgenceReport:
    """Resurgence and asymptotic resurgence of the cover ideal ``J(G)``.

    Every applicable exact rule is evaluated and they must agree; the first
    in dispatch order is the headline. Without a rule the result is an
    interval between the clique, independence and alpha-ratio lower bounds
    and ``2 - 2/chi``. ``sweep_box=None`` sweeps a ``4 x 4`` box only when
    no exact rule applies.
    """
    if G.isolated():
        raise ValueError("graph has isolated vertices")
    J = cover_ideal(G)
    report = ResurgenceReport(J, f"cover ideal of a graph on {G.n} vertices")
    report.rho.add(2, "big-height containment", "upper", big_height=2)
    if not G.is_connected():
        parts = [exact_cover_resurgence(H, sweep_box, threads) for H in _components(G)]
        merged = disjoint_product_rho(parts, ideal=J, description=report.description)
        return merged
    found = _cover_exact_values(G, threads)
    if found:
        head = found[0]
        for name, rho, rho_a, inputs in found:
            tag = _COVER_TAGS.get(name, "clique-sum theorem" if name == "clique-sum" else name)
            report.rho.add(rho, tag, "exact", **inputs)
            report.rho_a.add(rho_a, tag, "exact", **inputs)
        report.flags.append(f"dispatch: {head[0]}")
        if sweep_box is not None:
            _record_sweep(report, J, sweep_box, G, threads)
        return report.finalize()
    chi = chromatic_number(G)
    omega = clique_number(G)
    indep = independence_number(G)
    upper = 2 - Fraction(2, chi)
    for est in (report.rho, report.rho_a):
        est.add(upper, "chi upper bound", "upper", chi=chi)
        est.add(2 - Fraction(2, omega), "clique lower bound", "lower", omega=omega)
        est.add(2 - Fraction(2 * indep, G.n), "independence lower bound", "lower", independence=indep, n=G.n)
        est.add(rho_alpha_lower(J, G), "alpha ratio", "lower")
    _record_sweep(report, J, sweep_box or (4, 4), G, threads)
    return report.finalize()


# --- edge ideals -------------------------------------------------------------------

def _distant_cycles(G: Graph, n: int, k: int) -> list:
    """``k`` induced ``(2n+1)``-cycles pairwise at distance at least two."""
    cycles = induced_odd_cycles(G, 2 * n + 1)
    for combo in itertools.combinations(cycles, k):
        if all(subgraph_distance(G, a, b) >= 2
               for a, b in itertools.combinations(combo, 2)):
            return list(combo)
    raise InconsistencyError("no family of distant cycles of the computed size")


def exact_edge_resurgence(G: Graph, sweep_box=None, threads: int = 1) -> ResurgenceReport:
    """Resurgence and asymptotic resurgence of the edge ideal ``I(G)``.

    Exact for bipartite graphs and for the clique-sum class (the resurgence
    needs a single odd-cycle length). Otherwise the interval has upper end
    2, the only upper bound known for edge ideals.
    """
    if G.isolated():
        raise ValueError("graph has isolated vertices")
    I = edge_ideal(G)
    report = ResurgenceReport(I, f"edge ideal of a graph on {G.n} vertices")
    if not G.is_connected():
        comps = _components(G)
        parts = [SumPart(edge_ideal(H), exact_edge_resurgence(H, sweep_box, threads), edge_graph=H) for H in comps]
        out = disjoint_sum_rho(parts, ideal=I, description=report.description)
        if out.rho.exact is None and (out.rho.upper is None or out.rho.upper > 2):
            out.rho.add(2, "literature", "upper")
        return out.finalize()
    if is_bipartite(G)[0]:
        report.rho.add(1, "bipartite theorem", "exact")
        report.rho_a.add(1, "bipartite theorem", "exact")
        if sweep_box is not None:
            _record_sweep(report, I, sweep_box, None, threads)
        return report.finalize()
    data = cliquesum_class_data(G)
    if data is not None:
        halves = data["half_lengths"]
        n1 = halves[0]
        report.rho_a.add(Fraction(2 * n1 + 2, 2 * n1 + 1), "edge-class asymptotic theorem", "exact", n1=n1)
        if len(halves) == 1:
            n, k = n1, data["k"]
            value = Fraction(k * n + k, k * n + 1) if k >= 2 else Fraction(2 * n + 2, 2 * n + 1)
            report.rho.add(value, "edge-class resurgence theorem", "exact", n=n, k=k)
            cycles = _distant_cycles(G, n, k)
            u = tuple(map(sum, zip(*(G.ring.product_of(c) for c in cycles))))
            report.add_witness(make_witness(I, k * (n + 1), k * n + 1, u))
            report.containments.append((k * (n + 1), k * n + 1, False))
        else:
            report.rho.add(2, "literature", "upper")
            report.flags.append("several odd-cycle lengths: resurgence known only as an interval")
            _record_sweep(report, I, sweep_box or (4, 4), None, threads)
            return report.finalize()
        if sweep_box is not None:
            _record_sweep(report, I, sweep_box, None, threads)
        return report.finalize()
    report.rho.add(2, "literature", "upper")
    report.rho_a.add(rho_alpha_lower(I, G), "alpha ratio", "lower")
    n_small = min(len(c) for c in induced_odd_cycles(G)) // 2
    sub = Fraction(2 * n_small + 2, 2 * n_small + 1)
    report.rho_a.add(sub, "restriction monotonicity", "lower", smallest_odd_cycle=2 * n_small + 1)
    report.rho.add(sub, "restriction monotonicity", "lower", smallest_odd_cycle=2 * n_small + 1)
    _record_sweep(report, I, sweep_box or (4, 4), None, threads)
    return report.finalize()


def generic_resurgence(I: MonomialIdeal, sweep_box=(4, 4), threads: int = 1) -> ResurgenceReport:
    """Bounds for an arbitrary squarefree ideal: sweep and alpha ratio below, big height above."""
    if not is_squarefree(I) or I.is_unit or I.is_zero:
        raise ValueError("need a proper nonzero squarefree ideal")
    report = ResurgenceReport(I, "squarefree monomial ideal")
    h = big_height(I)
    report.rho.add(h, "big-height containment", "upper", big_height=h)
    report.rho_a.add(rho_alpha_lower(I), "alpha ratio", "lower")
    _record_sweep(report, I, sweep_box, None, threads)
    return report.finalize()


# --- products and sums in disjoint variables ------------------------------------------

def _combined_ring(ideals) -> VariableSet:
    names = [n for I in ideals for n in I.ring.names]
    if len(set(names)) != len(names):
        raise ValueError("ideals must use pairwise disjoint variables")
    return VariableSet(tuple(names))


def rename(I: MonomialIdeal, suffix: str) -> MonomialIdeal:
    ring = VariableSet(tuple(n + suffix for n in I.ring.names))
    return MonomialIdeal(ring, I.generators)


def disjoint_sum(ideals) -> tuple:
    """The sum in the union of the rings, and each summand embedded there."""
    ring = _combined_ring(ideals)
    parts = [embed(I, ring) for I in ideals]
    total = MonomialIdeal.zero(ring)
    for P in parts:
        total = ideal_sum(total, P)
    return total, parts


def disjoint_product(ideals) -> tuple:
    ring = _combined_ring(ideals)
    parts = [embed(I, ring) for I in ideals]
    total = MonomialIdeal.unit(ring)
    for P in parts:
        total = product(total, P)
    return total, parts


def _lift(m, source: VariableSet, target: VariableSet) -> tuple:
    e = [0] * len(target)
    for name, p in zip(source.names, m):
        e[target.index(name)] = p
    return tuple(e)


def disjoint_product_rho(reports: list, ideal: MonomialIdeal | None = None, description: str = "") -> ResurgenceReport:
    """Product of ideals in disjoint variables: both invariants are the max."""
    if not reports:
        raise ValueError("need at least one report")
    if ideal is None:
        ideal, _ = disjoint_product([r.ideal for r in reports])
    out = ResurgenceReport(ideal, description or "product in disjoint variables")
    for attr in ("rho", "rho_a"):
        ests = [getattr(r, attr) for r in reports]
        target = getattr(out, attr)
        if all(e.lower is not None for e in ests):
            target.add(max(e.lower for e in ests), "product max rule",
                       "exact" if all(e.exact is not None for e in ests) else "lower")
        if all(e.upper is not None for e in ests) and any(e.exact is None for e in ests):
            target.add(max(e.upper for e in ests), "product max rule", "upper")
    # f in I^(s) \ I^t gives f g in (IJ)^(s) \ (IJ)^t for g a generator of J^(s) of least degree
    for i, r in enumerate(reports):
        for w in r.witnesses:
            m = list(_lift(w.monomial, r.ideal.ring, ideal.ring))
            for j, other in enumerate(reports):
                if j == i:
                    continue
                g = min(symbolic_power(other.ideal, w.s).generators, key=lambda x: (sum(x), x))
                for k, v in zip(_lift(g, other.ideal.ring, ideal.ring), range(len(m))):
                    m[v] += k
            out.add_witness(make_witness(ideal, w.s, w.t, m))
    for r in reports:
        out.flags.extend(r.flags)
        out.truncated |= r.truncated
    return out.finalize()


@dataclass
class SumPart:
    """A summand: its ideal, its report, and the graph it came from, if any."""

    ideal: MonomialIdeal
    report: ResurgenceReport
    cover_graph: Graph | None = None
    edge_graph: Graph | None = None

    def equal_powers_known(self) -> bool:
        """Symbolic and ordinary powers agree for all exponents by a theorem."""
        g = self.cover_graph or self.edge_graph
        return g is not None and is_bipartite(g)[0]


def sum_formula(ps) -> Fraction:
    """``max (p_1+..+p_r)/(p_1+..+p_r-r+1)`` over ``2 <= r <= k``, ``p`` sorted ascending."""
    ps = sorted(ps)
    if len(ps) < 2:
        raise ValueError("the formula needs at least two parts")
    best = None
    for r in range(2, len(ps) + 1):
        total = sum(ps[:r])
        v = Fraction(total, total - r + 1)
        best = v if best is None else max(best, v)
    return best


def power_profile(G: Graph, a_max: int, budget: int | None = None) -> list:
    """``B[a]``: the largest ``t`` with ``J(G)^(a)`` inside ``J(G)^t``, for ``a <= a_max``.

    A truncated membership search counts as a failure, so each entry is at
    worst an underestimate.
    """
    J = cover_ideal(G)
    B = [0]
    for a in range(1, a_max + 1):
        S = cover_symbolic_fast(G, a)
        t = max(B[-1], 1)
        while check_containment(J, a, t + 1, symbolic=S, budget=budget).holds is True:
            t += 1
        B.append(t)
    return B


def _profile_lower(B: list, window: int, a_top: int) -> list:
    """Lower bounds ``L[a] <= B(a)`` up to ``a_top`` from splitting off even exponents.

    For a cover ideal ``J^(a) = J^(2j) J^(a-2j)`` whenever ``2j <= a``, so
    ``B(a) >= B(2j) + B(a - 2j)``.
    """
    L = list(B[: a_top + 1])
    for a in range(len(L), a_top + 1):
        L.append(max(B[2 * j] + L[a - 2 * j] for j in range(1, min(window, a // 2) + 1)))
    return L


@dataclass
class ProfileBound:
    upper: Fraction | None
    slopes: list
    offsets: list
    checked_to: int


def cover_sum_profile_bound(graphs: list, window: int = 4, horizon: int = 64, budget: int | None = None) -> ProfileBound:
    """Upper bound for the resurgence of a sum of graph cover ideals in disjoint variables.

    A product of monomials from different summands lies in the ``t``-th
    power of the sum iff the powers reached by the factors add up to
    ``t``. So the sum's ``s``-th symbolic power sits inside its ``m(s)``-th
    power, ``m(s)`` the least total of ``B_i(a_i)`` over splittings of
    ``s``, and every failure has ``t > m(s)``. Exponents up to ``horizon``
    are checked directly; beyond it each ``B_i`` grows at least linearly
    with slope ``mu_i`` up to an offset ``E_i``, which bounds the tail.
    """
    profiles, slopes, offsets = [], [], []
    for G in graphs:
        B = power_profile(G, 2 * window, budget)
        L = _profile_lower(B, window, horizon)
        ratios = [(Fraction(B[2 * j], 2 * j), j) for j in range(1, window + 1)]
        mu, _ = max(ratios, key=lambda x: (x[0], -x[1]))
        jstar = min(j for r, j in ratios if r == mu)
        E = max(mu * a - L[a] for a in range(0, 2 * jstar))
        profiles.append(L)
        slopes.append(mu)
        offsets.append(E)
    # m[s] = least sum of L_i(a_i) over splittings of s
    m = profiles[0][:]
    for L in profiles[1:]:
        m = [min(m[b] + L[s - b] for b in range(s + 1)) for s in range(horizon + 1)]
    finite = max(Fraction(s, m[s] + 1) for s in range(1, horizon + 1))
    mu_min, e_sum = min(slopes), sum(offsets)
    if e_sum <= 1:
        tail = 1 / mu_min
    else:
        denom = mu_min * (horizon + 1) - e_sum + 1
        tail = Fraction(horizon + 1) / denom if denom > 0 else None
    upper = None if tail is None else max(finite, tail)
    return ProfileBound(upper, slopes, offsets, horizon)


def _failure_candidates(part: SumPart, s_cap: int) -> list:
    """``(p, r, f)`` with ``f`` in ``I^(p)`` but not ``I^r``, least ``r`` per ``p``."""
    I = part.ideal
    out = []
    for p in range(1, s_cap + 1):
        S = cover_symbolic_fast(part.cover_graph, p) if part.cover_graph is not None else symbolic_power(I, p)
        for r in range(1, p + 2):
            res = check_containment(I, p, r, symbolic=S)
            if res.holds is False:
                out.append((p, r, res.witness))
                break
            if res.truncated:
                break
    return out


def disjoint_sum_rho(parts: list, ideal: MonomialIdeal | None = None, description: str = "",
                     s_max: int = 6, window: int = 4) -> ResurgenceReport:
    """Resurgence of a sum of ideals in pairwise disjoint variables.

    Parts whose symbolic and ordinary powers agree are dropped (for
    bipartite graphs this is a theorem; otherwise it rests on the search up
    to ``s_max`` and is flagged). If every remaining part has resurgence
    exactly 1 the closed formula in the least exponents ``p_i`` applies.
    Otherwise the result combines product witnesses of part failures below
    with the sum-of-resurgences bound and, for cover ideals, the profile
    bound above.
    """
    if not parts:
        raise ValueError("need at least one part")
    if ideal is None:
        ideal, _ = disjoint_sum([p.ideal for p in parts])
    out = ResurgenceReport(ideal, description or "sum in disjoint variables")
    kept, ps = [], []
    for part in parts:
        if part.equal_powers_known():
            out.flags.append(f"dropped a part with equal powers ({part.report.description})")
            continue
        p = least_noneq_power(part.ideal, s_max)
        if p is None:
            out.flags.append(f"dropped a part whose powers agree up to {s_max} (bound-dependent)")
            continue
        kept.append(part)
        ps.append(p)
    for part in parts:
        out.truncated |= part.report.truncated
    if not kept:
        out.rho.add(1, "sum: equal-power parts dropped", "exact")
        out.rho_a.add(1, "sum: equal-power parts dropped", "exact")
        return out.finalize()
    if len(kept) == 1:
        only = kept[0].report
        for attr in ("rho", "rho_a"):
            src, dst = getattr(only, attr), getattr(out, attr)
            if src.exact is not None:
                dst.add(src.exact, "sum: equal-power parts dropped", "exact")
            else:
                if src.lower is not None:
                    dst.add(src.lower, "sum: equal-power parts dropped", "lower")
                if src.upper is not None:
                    dst.add(src.upper, "sum: equal-power parts dropped", "upper")
        for w in only.witnesses:
            out.add_witness(make_witness(ideal, w.s, w.t, _lift(w.monomial, kept[0].ideal.ring, ideal.ring)))
        return out.finalize()
    rhos = [p.report.rho for p in kept]
    if all(r.exact == 1 for r in rhos):
        out.rho.add(sum_formula(ps), "sum formula", "exact", p=sorted(ps))
    else:
        if all(r.upper is not None for r in rhos):
            out.rho.add(sum(r.upper for r in rhos), "sum-of-resurgences bound", "upper")
        out.rho.add(max(r.lower for r in rhos), "sum: part failures lift", "lower")
        if all(p.cover_graph is not None for p in kept):
            pb = cover_sum_profile_bound([p.cover_graph for p in kept], window)
            if pb.upper is not None:
                out.rho.add(pb.upper, "sum profile bound", "upper", slopes=pb.slopes, offsets=pb.offsets,
                            horizon=pb.checked_to, window=window)
    # product witnesses: part failures (p_i, r_i) give a failure at (sum p, sum r - k + 1)
    cands = [_failure_candidates(p, s_max) for p in kept]
    best = None
    for choice in itertools.product(*[[None] + c for c in cands]):
        used = [(i, c) for i, c in enumerate(choice) if c is not None]
        if not used:
            continue
        s = sum(c[0] for _, c in used)
        t = sum(c[1] for _, c in used) - len(used) + 1
        key = (Fraction(s, t), -s)
        if best is None or key > best[0]:
            best = (key, s, t, used)
    _, s, t, used = best
    f = [0] * len(ideal.ring)
    for i, c in used:
        for j, v in enumerate(_lift(c[2], kept[i].ideal.ring, ideal.ring)):
            f[j] += v
    w = make_witness(ideal, s, t, f)
    out.add_witness(w)
    out.containments.append((s, t, False))
    out.rho.add(w.ratio, "sum witness", "lower", s=s, t=t, p=sorted(ps))
    lowers = [p.report.rho_a.lower for p in kept]
    if all(x is not None for x in lowers):
        out.rho_a.add(max(lowers), "sum: part failures lift", "lower")
    out.flags.append(f"least exponents with symbolic != ordinary: {sorted(ps)}")
    return out.finalize()


# --- structural checks -------------------------------------------------------------------

def tech3_containment_check(G: Graph, n: int, b: int) -> ContainmentResult:
    """``J_n(G)^b`` inside ``I(G)^(bn + ceil((b - k)/2))`` for ``b > k = k_n(G)``."""
    data = cliquesum_class_data(G)
    if data is None or data["half_lengths"] != [n]:
        raise ValueError("graph must be in the clique-sum class with a single odd-cycle length 2n+1")
    k = k_n(G, n)
    if b <= k:
        raise ValueError(f"b = {b} is not above k_n(G) = {k}")
    I = edge_ideal(G)
    t = b * n + math.ceil((b - k) / 2)
    for g in power(Jn_ideal(G, n), b).generators:
        if not member_of_power(I, g, t):
            return ContainmentResult(b, t, False, g)
    return ContainmentResult(b, t, True)


@dataclass
class TransportVerdict:
    ok: bool
    lifted: int
    failures: list  # (s, t) cells whose witness did not lift


def _transport(sub: MonomialIdeal, parent: MonomialIdeal, box, lift) -> TransportVerdict:
    res = sweep(sub, box[0], box[1])
    bad, lifted = [], 0
    for cell in res.failures:
        m = lift(cell.s, cell.witness)
        if verify_witness(parent, cell.s, cell.t, m):
            lifted += 1
        else:
            bad.append((cell.s, cell.t))
    return TransportVerdict(not bad, lifted, bad)


def colon_monotonicity_check(I: MonomialIdeal, m, box=(4, 4)) -> TransportVerdict:
    """Failures of ``I : m`` lift to failures of ``I`` as ``w m^s``."""
    if not all(x <= 1 for x in m) or contains_monomial(I, m):
        raise ValueError("m must be squarefree and outside I")
    J = colon(I, m)
    return _transport(J, I, box, lambda s, w: tuple(a + s * b for a, b in zip(w, m)))


def restriction_monotonicity_check(G: Graph, A, kind: str = "edge", box=(4, 4)) -> TransportVerdict:
    """Failures on the subgraph induced by ``A`` lift to the whole graph.

    Edge ideals: a witness is reused as is. Cover ideals: it is multiplied
    by ``x_U^s`` for ``U`` the vertices outside ``A``.
    """
    H = induced_subgraph(G, A)
    if not H.edges:
        raise ValueError("the subset induces no edges")
    if kind == "edge":
        sub = embed(edge_ideal(H), G.ring)
        return _transport(sub, edge_ideal(G), box, lambda s, w: w)
    if kind == "cover":
        if H.isolated():
            raise ValueError("the induced subgraph has isolated vertices")
        sub = embed(cover_ideal(H), G.ring)
        outside = G.ring.product_of(v for v in G.vertices if v not in set(A))
        if colon(cover_ideal(G), outside) != sub:
            raise InconsistencyError("cover ideal colon does not match the restriction")
        return _transport(sub, cover_ideal(G), box, lambda s, w: tuple(a + s * b for a, b in zip(w, outside)))
    raise ValueError("kind must be 'edge' or 'cover'")


@dataclass
class CharacterizationVerdict:
    rho: Fraction
    alpha_ratio: Fraction
    condition: bool

    @property
    def consistent(self) -> bool:
        """The ratio attains the resurgence exactly when the condition holds."""
        return (self.rho == self.alpha_ratio) == self.condition


def join_characterization_check(m: int, H: Graph) -> CharacterizationVerdict:
    """``m`` independent vertices joined to a bipartite ``H``: equality iff ``m = alpha(J(H)) = n/2``."""
    if m < 1 or not H.edges or H.isolated() or not is_bipartite(H)[0]:
        raise ValueError("need m >= 1 and a bipartite H without isolated vertices")
    G = join(m, H)
    rep = exact_cover_resurgence(G)
    if rep.rho.exact is None:
        raise InconsistencyError("join of this shape should have an exact resurgence")
    cond = m == alpha(cover_ideal(H)) and 2 * m == H.n
    return CharacterizationVerdict(rep.rho.exact, rho_alpha_lower(cover_ideal(G), G), cond)


def multipartite_characterization_check(parts) -> CharacterizationVerdict:
    """Complete multipartite graphs: equality iff all parts have the same size."""
    from .catalog import complete_multipartite

    if len(parts) < 3:
        raise ValueError("need at least three parts")
    G = complete_multipartite(parts)
    rep = exact_cover_resurgence(G)
    return CharacterizationVerdict(rep.rho.exact, rho_alpha_lower(cover_ideal(G), G), len(set(parts)) == 1)
