"""Deciding ``I^(s) ⊆ I^t`` with witnesses, and sweeping a box of ``(s, t)``."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .graphs import Graph, cover_ideal
from .ideal import MonomialIdeal, alpha, power, power_certificate
from .symbolic import cover_symbolic_fast, symbolic_power


@dataclass
class ContainmentResult:
    """Outcome of ``I^(s) ⊆ I^t``.

    ``holds`` is None only when the membership search hit its node budget
    (``truncated``). On failure ``witness`` is the first generator of the
    symbolic power, in sorted order, outside ``I^t``. With ``certify`` the
    ``certificate`` maps every generator to ``t`` generators of ``I`` whose
    product divides it.
    """

    s: int
    t: int
    holds: bool | None
    witness: tuple | None = None
    certificate: dict | None = None
    truncated: bool = False

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.s, self.t)


def _symbolic(I: MonomialIdeal, s: int, engine: str, graph: Graph | None) -> MonomialIdeal:
    if graph is not None:
        return cover_symbolic_fast(graph, s)
    return symbolic_power(I, s, engine)


def check_containment(I: MonomialIdeal, s: int, t: int, certify: bool = False, engine: str = "intersect",
                      graph: Graph | None = None, budget: int | None = None, symbolic: MonomialIdeal | None = None) -> ContainmentResult:
    """Decide ``I^(s) ⊆ I^t`` generator by generator.

    ``graph`` switches to the cover-ideal fast path (``I`` must then be its
    cover ideal); ``symbolic`` supplies a precomputed symbolic power.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if graph is not None and cover_ideal(graph) != I:
        raise ValueError("ideal is not the cover ideal of the given graph")
    S = symbolic if symbolic is not None else _symbolic(I, s, engine, graph)
    a = alpha(I)
    cert = {} if certify else None
    for g in S.generators:
        if sum(g) < t * a:
            return ContainmentResult(s, t, False, g)
        try:
            c = power_certificate(I, g, t, budget)
        except kernels.BudgetExceeded:
            return ContainmentResult(s, t, None, None, None, truncated=True)
        if c is None:
            return ContainmentResult(s, t, False, g)
        if certify:
            cert[g] = c
    return ContainmentResult(s, t, True, None, cert)


def ideal_containment(big: MonomialIdeal, small: MonomialIdeal):
    """``(True, None)`` if ``small ⊆ big``, else ``(False, first generator outside)``."""
    for g in small.generators:
        if not any(all(x <= y for x, y in zip(h, g)) for h in big.generators):
            return False, g
    return True, None


@dataclass
class SweepResult:
    s_max: int
    t_max: int
    cells: dict = field(default_factory=dict)  # (s, t) -> ContainmentResult
    truncated: bool = False

    @property
    def failures(self) -> list:
        return [r for r in self.cells.values() if r.holds is False]

    @property
    def lower(self) -> Fraction | None:
        """Largest ``s/t`` over failed cells: a lower bound for the resurgence."""
        ratios = [r.ratio for r in self.failures]
        return max(ratios) if ratios else None

    def best_failure(self) -> ContainmentResult | None:
        fails = self.failures
        if not fails:
            return None
        return max(fails, key=lambda r: (r.ratio, -r.s))


def _sweep_row(args):
    I, s, t_max, engine, graph, budget = args
    S = _symbolic(I, s, engine, graph)
    row = {}
    top = min(s, t_max)
    for t in range(1, top + 1):
        res = check_containment(I, s, t, engine=engine, budget=budget, symbolic=S)
        row[t] = res
        if res.truncated:
            break
        if res.holds is False:
            # I^t shrinks as t grows, so the same witness fails every larger t
            for t2 in range(t + 1, top + 1):
                if power_certificate(I, res.witness, t2, budget) is not None:
                    raise AssertionError(f"containment monotonicity violated at ({s}, {t2})")
                row[t2] = ContainmentResult(s, t2, False, res.witness)
            break
    return s, row


def default_threads() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:  # pragma: no cover
        return os.cpu_count() or 1


def sweep(I: MonomialIdeal, s_max: int = 10, t_max: int = 8, engine: str = "intersect",
          graph: Graph | None = None, threads: int = 1, budget: int | None = None) -> SweepResult:
    """Check every ``1 <= t <= s <= s_max`` with ``t <= t_max``.

    Per ``s``, ``t`` increases until the first failure; larger ``t`` then
    fail with the same witness, which is re-verified. Results do not depend
    on ``threads``.
    """
    if s_max < 1 or t_max < 1:
        raise ValueError("sweep box must be non-empty")
    if graph is not None and cover_ideal(graph) != I:
        raise ValueError("ideal is not the cover ideal of the given graph")
    if budget is None:
        budget = kernels.node_budget()
    jobs = [(I, s, t_max, engine, graph, budget) for s in range(1, s_max + 1)]
    out = SweepResult(s_max, t_max)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_sweep_row, jobs))
    else:
        rows = [_sweep_row(j) for j in jobs]
    for s, row in sorted(rows, key=lambda r: r[0]):
        for t, res in row.items():
            out.cells[(s, t)] = res
            if res.truncated:
                out.truncated = True
    return out


def least_noneq_power(I: MonomialIdeal, s_max: int = 6) -> int | None:
    """Least ``p <= s_max`` with ``I^(p) != I^p``; None if they agree throughout."""
    for p in range(2, s_max + 1):
        if symbolic_power(I, p) != power(I, p):
            return p
    return None
