"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]

Each workload runs once per backend to check the outputs agree, then is
timed with ``timeit``. Reports the best time per backend and the speedup.
"""
from __future__ import annotations

import argparse
import json
import timeit

from resurgence import catalog
from resurgence.graphs import cover_ideal, edge_ideal
from resurgence.ideal import minimal_primes, power
from resurgence.kernels import available_backends
from resurgence.symbolic import cover_symbolic_fast


def workloads():
    """(name, callable taking a backend module) pairs."""
    c7 = catalog.cycle(7)
    J7 = cover_ideal(c7)
    S8 = cover_symbolic_fast(c7, 8)
    I_pet = edge_ideal(catalog.petersen())
    P4 = list(power(I_pet, 3).generators) + list(power(I_pet, 2).generators)
    J_k222 = cover_ideal(catalog.builtin_graph("K222"))
    primes_c7 = [list(p) for p in minimal_primes(edge_ideal(c7))]
    primes_k222 = [list(p) for p in minimal_primes(J_k222)]

    def membership(k):
        budget = 10**7
        return [k.member_of_power(J7.generators, g, 7, budget) for g in S8.generators]

    def minimal(k):
        return k.minimalize(P4 * 2)

    def products(k):
        return k.product_min(list(J7.generators), list(power(J7, 3).generators))

    def intersections(k):
        return k.intersect_min(list(power(J7, 2).generators), list(S8.generators))

    def enumeration(k):
        return (k.enumerate_symbolic(7, primes_c7, 5), k.enumerate_symbolic(6, primes_k222, 4))

    return [("member_of_power", membership), ("minimalize", minimal), ("product_min", products),
            ("intersect_min", intersections), ("enumerate_symbolic", enumeration)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    backends = available_backends()
    rows = []
    for name, fn in workloads():
        outputs = {b: fn(m) for b, m in backends.items()}
        first = next(iter(outputs.values()))
        if any(o != first for o in outputs.values()):
            raise SystemExit(f"backends disagree on {name}")
        times = {b: min(timeit.repeat(lambda m=m: fn(m), number=1, repeat=args.repeat)) for b, m in backends.items()}
        row = {"workload": name, **{f"{b}_s": t for b, t in times.items()}}
        if "cython" in times:
            row["speedup"] = times["python"] / times["cython"]
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    if "cython" not in backends:
        print("compiled kernels unavailable; timing the pure-Python backend only")
    print(f"{'workload':<20} {'python':>10} {'cython':>10} {'speedup':>8}")
    for r in rows:
        cy = f"{r['cython_s']:.4f}" if "cython_s" in r else "-"
        sp = f"{r['speedup']:.1f}x" if "speedup" in r else "-"
        print(f"{r['workload']:<20} {r['python_s']:>10.4f} {cy:>10} {sp:>8}")


if __name__ == "__main__":
    main()
