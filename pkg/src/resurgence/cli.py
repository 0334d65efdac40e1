"""Command-line interface.

    resurgence VERB INPUT [options]

INPUT is ``graph:NAME`` / ``hypergraph:NAME`` for a built-in object, or a
path to a graph, hypergraph or ideal file. Graph inputs need ``--cover``
or ``--edge`` wherever an ideal is required.

Exit codes: 0 success, 1 a verification failed (verify-suite), 2 bad
input or options, 3 a membership search hit its node budget.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import acceptance, catalog, kernels
from .containment import check_containment, default_threads, sweep
from .formats import FormatError, format_ideal, parse_graph, parse_hypergraph, parse_ideal, read_text
from .graphs import (
    Graph,
    Hypergraph,
    SolverLimitExceeded,
    chromatic_number,
    classify,
    clique_number,
    cover_ideal,
    cover_ideal_hypergraph,
    edge_ideal,
    hypergraph_chromatic_number,
    independence_number,
    induced_odd_cycles,
    is_bipartite,
    k_n,
)
from .ideal import MonomialIdeal, alpha, big_height, format_monomial, is_squarefree, minimal_primes
from .resurgence import (
    InconsistencyError,
    cover_chi_containment_suite,
    exact_cover_resurgence,
    exact_edge_resurgence,
    generic_resurgence,
    hypergraph_rho_a_upper,
)
from .symbolic import symbolic_power

VERBS = ("invariants", "ideal", "symbolic", "containment", "sweep", "resurgence", "verify-suite")

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_TRUNCATED = 0, 1, 2, 3


class InputError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="resurgence", description="Symbolic powers, containments and resurgence "
                                "of squarefree monomial ideals from graphs and hypergraphs.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", nargs="?", help="graph:NAME, hypergraph:NAME, or a file path")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--cover", action="store_true", help="use the cover ideal of the graph")
    kind.add_argument("--edge", action="store_true", help="use the edge ideal of the graph")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s-max", type=int)
    p.add_argument("--t-max", type=int)
    p.add_argument("--c", type=int, help="run the chromatic containment suite with this c (invariants)")
    p.add_argument("--n", type=int, help="report k_n and induced (2n+1)-cycles (invariants)")
    p.add_argument("--certify", action="store_true", help="emit a membership certificate (containment)")
    p.add_argument("--cross-check", action="store_true", help="run both symbolic-power engines and compare")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--threads", type=int, default=None, help="worker processes for sweeps")
    return p


def validate(args) -> None:
    """Reject incompatible options before any computation."""
    v = args.verb
    if v != "verify-suite" and not args.input:
        raise InputError(f"{v} needs an input")
    if v in ("symbolic", "containment") and args.s is None:
        raise InputError(f"{v} needs --s")
    if v == "containment" and args.t is None:
        raise InputError("containment needs --t")
    if v not in ("symbolic", "containment") and args.s is not None:
        raise InputError("--s only applies to symbolic and containment")
    if v != "containment" and args.t is not None:
        raise InputError("--t only applies to containment")
    if v not in ("sweep", "resurgence") and (args.s_max is not None or args.t_max is not None):
        raise InputError("--s-max/--t-max only apply to sweep and resurgence")
    if v != "invariants" and (args.c is not None or args.n is not None):
        raise InputError("--c/--n only apply to invariants")
    if args.certify and v != "containment":
        raise InputError("--certify only applies to containment")
    if args.cross_check and v not in ("symbolic", "containment", "sweep"):
        raise InputError("--cross-check only applies to symbolic, containment and sweep")
    if v == "invariants" and (args.cover or args.edge):
        raise InputError("invariants takes a graph, not an ideal choice")
    for name in ("s", "t", "s_max", "t_max", "c", "n", "threads"):
        val = getattr(args, name)
        if val is not None and val < 1:
            raise InputError(f"--{name.replace('_', '-')} must be positive")


def load(spec: str):
    """A Graph, Hypergraph or MonomialIdeal from an input argument."""
    try:
        if spec.startswith("graph:"):
            return catalog.builtin_graph(spec[6:])
        if spec.startswith("hypergraph:"):
            return catalog.builtin_hypergraph(spec[11:])
    except (KeyError, ValueError) as e:
        raise InputError(str(e)) from None
    text = read_text(spec)
    head = text.lstrip()
    if head.startswith("{") or head.lower().startswith("vertices:") or "\nedge:" in text:
        try:
            return parse_graph(text)
        except FormatError:
            return parse_hypergraph(text)
    return parse_ideal(text)


def resolve_ideal(obj, args) -> tuple:
    """``(ideal, graph or None, hypergraph or None)`` for the verbs that need an ideal."""
    if isinstance(obj, MonomialIdeal):
        if args.cover or args.edge:
            raise InputError("--cover/--edge need a graph input")
        return obj, None, None
    if isinstance(obj, Hypergraph):
        if args.edge:
            raise InputError("hypergraphs only support --cover")
        return cover_ideal_hypergraph(obj), None, obj
    if args.cover:
        return cover_ideal(obj), obj, None
    if args.edge:
        return edge_ideal(obj), obj, None
    raise InputError("graph input needs --cover or --edge")


def _ideal_json(I: MonomialIdeal) -> dict:
    return {"variables": list(I.ring.names), "generators": [format_monomial(I.ring, g) for g in I.generators]}


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_invariants(args, obj) -> int:
    if isinstance(obj, Hypergraph):
        data = {"vertices": list(obj.vertices), "edges": [list(e) for e in obj.named_edges()],
                "chromatic_number": hypergraph_chromatic_number(obj), "clique_number": None,
                "independence_number": None, "bipartite": None, "kinds": []}
        _emit(args, data, f"hypergraph: {len(obj.vertices)} vertices, {len(obj.edges)} edges, "
                          f"chromatic number {data['chromatic_number']}")
        return EXIT_OK
    if not isinstance(obj, Graph):
        raise InputError("invariants needs a graph")
    G = obj
    bip, _ = is_bipartite(G)
    kinds = list(classify(G).kinds) if G.is_connected() and not G.isolated() else []
    data = {"vertices": list(G.vertices), "edges": [list(e) for e in G.named_edges()],
            "chromatic_number": chromatic_number(G), "clique_number": clique_number(G),
            "independence_number": independence_number(G), "bipartite": bip, "kinds": kinds}
    lines = [f"vertices {G.n}, edges {len(G.edges)}",
             f"chromatic number {data['chromatic_number']}, clique number {data['clique_number']}, "
             f"independence number {data['independence_number']}",
             f"bipartite: {bip}", f"classes: {', '.join(kinds) or 'n/a'}"]
    if args.n is not None:
        cycles = induced_odd_cycles(G, 2 * args.n + 1)
        data["induced_cycles"] = [list(c) for c in cycles]
        data["k_n"] = k_n(G, args.n) if cycles else 0
        lines.append(f"induced {2 * args.n + 1}-cycles: {len(cycles)}, k_{args.n} = {data['k_n']}")
    if args.c is not None:
        suite = cover_chi_containment_suite(G, args.c)
        data["chi_suite"] = [{"family": e.family, "r": e.r, "s": e.s, "t": e.t,
                              "in_hypothesis": e.in_hypothesis, "holds": e.result.holds} for e in suite]
        for e in suite:
            lines.append(f"J^({e.s}) in J^{e.t} [{e.family}, r={e.r}"
                         f"{'' if e.in_hypothesis else ', outside hypothesis'}]: {e.result.holds}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_ideal(args, obj) -> int:
    I, _, _ = resolve_ideal(obj, args)
    sqf = is_squarefree(I)
    data = {"ideal": _ideal_json(I), "alpha": None if I.is_zero else alpha(I), "squarefree": sqf}
    text = format_ideal(I).rstrip()
    if sqf and not I.is_unit and not I.is_zero:
        primes = minimal_primes(I)
        data["minimal_primes"] = [[I.ring.names[i] for i in p] for p in primes]
        data["big_height"] = big_height(I)
        text += f"\n# alpha {data['alpha']}, {len(primes)} minimal primes, big height {data['big_height']}"
    _emit(args, data, text)
    return EXIT_OK


def _engine(args) -> str:
    return "cross-check" if args.cross_check else "intersect"


def cmd_symbolic(args, obj) -> int:
    I, _, _ = resolve_ideal(obj, args)
    S = symbolic_power(I, args.s, _engine(args))
    data = {"s": args.s, "ideal": _ideal_json(I), "symbolic": _ideal_json(S), "alpha": alpha(S)}
    _emit(args, data, format_ideal(S).rstrip() + f"\n# {len(S)} generators, alpha {alpha(S)}")
    return EXIT_OK


def cmd_containment(args, obj) -> int:
    I, G, _ = resolve_ideal(obj, args)
    symb = symbolic_power(I, args.s, "cross-check") if args.cross_check else None
    res = check_containment(I, args.s, args.t, certify=args.certify, graph=G if args.cover else None,
                            symbolic=symb)
    ring = I.ring
    cert = None
    if res.certificate is not None:
        cert = {format_monomial(ring, g): [format_monomial(ring, f) for f in c] for g, c in res.certificate.items()}
    data = {"s": args.s, "t": args.t, "holds": res.holds, "truncated": res.truncated,
            "witness": None if res.witness is None else format_monomial(ring, res.witness), "certificate": cert}
    lines = [f"I^({args.s}) in I^{args.t}: " + {True: "holds", False: "fails", None: "unknown (truncated)"}[res.holds]]
    if res.witness is not None:
        lines.append(f"witness: {data['witness']}")
    if cert:
        for g, c in cert.items():
            lines.append(f"{g} <- " + " * ".join(f"({x})" for x in c))
    _emit(args, data, "\n".join(lines))
    return EXIT_TRUNCATED if res.truncated else EXIT_OK


def cmd_sweep(args, obj) -> int:
    I, G, _ = resolve_ideal(obj, args)
    s_max, t_max = args.s_max or 10, args.t_max or 8
    if args.cross_check:
        for s in range(1, s_max + 1):
            symbolic_power(I, s, "cross-check")
    res = sweep(I, s_max, t_max, graph=G if args.cover else None, threads=args.threads or default_threads())
    cells = [{"s": s, "t": t, "holds": c.holds} for (s, t), c in sorted(res.cells.items())]
    data = {"s_max": s_max, "t_max": t_max, "cells": cells, "truncated": res.truncated,
            "lower": None if res.lower is None else str(res.lower),
            "failures": [{"s": c.s, "t": c.t, "witness": format_monomial(I.ring, c.witness)}
                         for c in sorted(res.failures, key=lambda c: (c.s, c.t))]}
    lines = [f"{len(res.failures)} failures in the box s <= {s_max}, t <= {t_max}"]
    lines += [f"  ({f['s']}, {f['t']}): {f['witness']}" for f in data["failures"] if Fraction(f["s"], f["t"]) > 1]
    lines.append(f"largest failing ratio: {data['lower']}")
    _emit(args, data, "\n".join(lines))
    return EXIT_TRUNCATED if res.truncated else EXIT_OK


def render_report(rep) -> str:
    lines = [rep.description, f"rho   = {rep.rho}", f"rho_a = {rep.rho_a}"]
    for label, est in (("rho", rep.rho), ("rho_a", rep.rho_a)):
        for p in est.provenance:
            lines.append(f"  {label} {p.bound} {p.value}: {p.tag}")
    for w in rep.witnesses:
        lines.append(f"  witness ({w.s}, {w.t}): {format_monomial(rep.ideal.ring, w.monomial)}")
    lines += [f"  note: {f}" for f in rep.flags]
    return "\n".join(lines)


def cmd_resurgence(args, obj) -> int:
    I, G, H = resolve_ideal(obj, args)
    box = None
    if args.s_max is not None or args.t_max is not None:
        box = (args.s_max or 4, args.t_max or args.s_max or 4)
    threads = args.threads or 1
    if G is not None and args.cover:
        rep = exact_cover_resurgence(G, box, threads)
    elif G is not None:
        rep = exact_edge_resurgence(G, box, threads)
    else:
        rep = generic_resurgence(I, box or (4, 4), threads)
        if H is not None:
            rep.rho_a.add(hypergraph_rho_a_upper(H), "hypergraph chromatic bound", "upper")
            rep.finalize()
    _emit(args, rep.to_json(), render_report(rep))
    return EXIT_TRUNCATED if rep.truncated else EXIT_OK


def corpus_checks(directory: Path) -> list:
    """For every graph file: parse round-trip and sweep lower bound below the theorem upper bound."""
    from .formats import format_graph

    out = []
    for path in sorted(directory.glob("*.graph")):
        G = parse_graph(path.read_text())
        ok = parse_graph(format_graph(G)) == G
        detail = "round-trip"
        if G.is_connected() and not G.isolated():
            rep = exact_cover_resurgence(G, (4, 4))
            ok &= rep.rho.upper is not None and all(w.ratio <= rep.rho.upper for w in rep.witnesses)
            detail = f"cover rho {rep.rho}"
        out.append(acceptance.Criterion(0, f"corpus {path.name}", ok, detail))
    return out


def cmd_verify_suite(args) -> int:
    results = acceptance.run_all()
    if args.input:
        d = Path(args.input)
        if not d.is_dir():
            raise InputError(f"{d} is not a directory")
        results += corpus_checks(d)
    passed = all(r.passed for r in results)
    data = {"criteria": [r.to_json() for r in results], "passed": passed}
    _emit(args, data, "\n".join(r.line() for r in results))
    return EXIT_OK if passed else EXIT_VERIFY


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    try:
        validate(args)
        kernels.node_budget()
        if args.verb == "verify-suite":
            return cmd_verify_suite(args)
        obj = load(args.input)
        handler = {"invariants": cmd_invariants, "ideal": cmd_ideal, "symbolic": cmd_symbolic,
                   "containment": cmd_containment, "sweep": cmd_sweep, "resurgence": cmd_resurgence}[args.verb]
        return handler(args, obj)
    except (InputError, FormatError, SolverLimitExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
