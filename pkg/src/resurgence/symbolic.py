"""Symbolic powers of squarefree monomial ideals and Waldschmidt constants.

For a squarefree ideal ``I`` with minimal primes ``P_1..P_r`` the ``s``-th
symbolic power is the intersection of the ``P_i^s``. Two independent
engines compute its generators:

* ``enumerate``: walks the lattice of exponent vectors whose coordinate sum
  over every prime is at least ``s``, keeping the minimal ones;
* ``intersect``: intersects the prime powers pairwise through lcms.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce

from . import kernels
from .graphs import (
    Graph,
    cliquesum_class_data,
    cover_ideal,
    edge_ideal,
    induced_odd_cycles,
    is_bipartite,
)
from .ideal import (
    MonomialIdeal,
    alpha,
    big_height,
    ideal_sum,
    intersect,
    is_squarefree,
    minimal_primes,
    power,
    prime_power,
    product,
)

ENGINES = ("intersect", "enumerate", "cross-check")


class EngineMismatch(AssertionError):
    """The two symbolic-power engines disagreed."""


class ClassPreconditionError(ValueError):
    """The graph is outside the family a closed form needs."""


@dataclass(frozen=True)
class SymbolicPowerSpec:
    base: MonomialIdeal
    primes: tuple
    s: int


def symbolic_spec(I: MonomialIdeal, s: int) -> SymbolicPowerSpec:
    if s < 1:
        raise ValueError("symbolic power exponent must be at least 1")
    if not is_squarefree(I):
        raise ValueError("symbolic powers are implemented for squarefree ideals only")
    return SymbolicPowerSpec(I, minimal_primes(I), s)


def symbolic_member(spec: SymbolicPowerSpec, m) -> bool:
    """``m`` lies in the symbolic power iff its weight on every prime is at least ``s``."""
    if len(m) != len(spec.base.ring):
        raise ValueError("monomial does not match the ring")
    if spec.base.is_zero:
        return False
    return all(sum(m[i] for i in P) >= spec.s for P in spec.primes)


def _by_enumeration(I: MonomialIdeal, primes, s) -> MonomialIdeal:
    gens = kernels.enumerate_symbolic(len(I.ring), list(primes), s)
    return MonomialIdeal(I.ring, tuple(gens))


def _by_intersection(I: MonomialIdeal, primes, s) -> MonomialIdeal:
    pieces = [prime_power(I.ring, P, s) for P in sorted(primes, key=len)]
    return reduce(intersect, pieces)


@lru_cache(maxsize=1024)
def symbolic_power(I: MonomialIdeal, s: int, engine: str = "intersect") -> MonomialIdeal:
    """Minimal generators of ``I^(s)``; ``engine='cross-check'`` runs both and compares."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    spec = symbolic_spec(I, s)
    if I.is_zero or I.is_unit:
        return I
    if engine == "enumerate":
        return _by_enumeration(I, spec.primes, s)
    if engine == "intersect":
        return _by_intersection(I, spec.primes, s)
    a = _by_enumeration(I, spec.primes, s)
    b = _by_intersection(I, spec.primes, s)
    if a != b:
        raise EngineMismatch(f"engines disagree on the symbolic power {s} of {I}")
    return a


def cover_symbolic_fast(G: Graph, s: int) -> MonomialIdeal:
    """``J(G)^(s)`` from ``J^(2)`` alone: ``(J^(2))^q`` times ``J`` when ``s`` is odd."""
    if s < 1:
        raise ValueError("symbolic power exponent must be at least 1")
    J = cover_ideal(G)
    if s == 1:
        return J
    J2 = symbolic_power(J, 2)
    q, r = divmod(s, 2)
    out = power(J2, q)
    return product(out, J) if r else out


def Jn_ideal(G: Graph, n: int) -> MonomialIdeal:
    """Generated by the vertex products of the induced ``(2n+1)``-cycles."""
    cycles = induced_odd_cycles(G, 2 * n + 1)
    if not cycles:
        raise ValueError(f"graph has no induced cycle of length {2 * n + 1}")
    ring = G.ring
    return MonomialIdeal.from_generators(ring, [ring.product_of(c) for c in cycles])


def _class_data(G: Graph) -> dict:
    data = cliquesum_class_data(G)
    if data is None:
        raise ClassPreconditionError(
            "graph is not a connected, non-bipartite clique-sum of bipartite graphs and odd cycles"
        )
    return data


def edge_symbolic_decomposition(G: Graph, s: int) -> MonomialIdeal:
    """``I(G)^(s)`` as the sum of ``I^t J_{n_1}^{a_1} ... J_{n_r}^{a_r}``.

    The sum runs over ``s = t + sum (n_i + 1) a_i``. Only valid for the
    clique-sum class checked by ``cliquesum_class_data``.
    """
    if s < 1:
        raise ValueError("symbolic power exponent must be at least 1")
    data = _class_data(G)
    I = edge_ideal(G)
    halves = data["half_lengths"]
    Js = [Jn_ideal(G, n) for n in halves]
    unit = MonomialIdeal.unit(I.ring)

    def pw(K, e):
        return unit if e == 0 else power(K, e)

    total = MonomialIdeal.zero(I.ring)
    ranges = [range(0, s // (n + 1) + 1) for n in halves]
    for a in itertools.product(*ranges):
        used = sum((n + 1) * ai for n, ai in zip(halves, a))
        if used > s:
            continue
        term = pw(I, s - used)
        for J, ai in zip(Js, a):
            term = product(term, pw(J, ai))
        total = ideal_sum(total, term)
    return total


def edge_alpha_formula(G: Graph, s: int) -> int:
    """``2s - floor(s / (n_1 + 1))`` for the clique-sum class."""
    n1 = _class_data(G)["half_lengths"][0]
    return 2 * s - s // (n1 + 1)


def alpha_symbolic(I: MonomialIdeal, s: int, graph: Graph | None = None, engine: str = "intersect") -> int:
    """``alpha(I^(s))`` from the generators.

    When ``graph`` is given and ``I`` is its edge ideal in the clique-sum
    class, the value is also checked against the closed form.
    """
    value = alpha(symbolic_power(I, s, engine))
    if graph is not None and cliquesum_class_data(graph) is not None and I == edge_ideal(graph):
        expected = edge_alpha_formula(graph, s)
        if value != expected:
            raise AssertionError(f"initial degree {value} disagrees with closed form {expected}")
    return value


@dataclass
class WaldschmidtEstimate:
    """Bounds on ``lim alpha(I^(s)) / s``.

    ``upper`` is the least sampled ratio (valid by subadditivity); ``lower``
    is a certified bound. ``exact`` is set only when a structural result
    pins the value down.
    """

    lower: Fraction
    upper: Fraction
    exact: Fraction | None = None
    samples: dict = field(default_factory=dict)  # s -> alpha(I^(s))
    method: str = ""

    def __post_init__(self):
        if self.lower > self.upper:
            raise AssertionError(f"Waldschmidt bounds crossed: {self.lower} > {self.upper}")
        if self.exact is not None and not (self.lower == self.upper == self.exact):
            raise AssertionError("an exact Waldschmidt value must equal both bounds")


def _samples(I: MonomialIdeal, s_max: int) -> dict:
    return {s: alpha(symbolic_power(I, s)) for s in range(1, s_max + 1)}


def waldschmidt(I: MonomialIdeal, mode: str = "generic", graph: Graph | None = None, s_max: int = 6) -> WaldschmidtEstimate:
    """Waldschmidt constant of ``I``.

    Modes:

    * ``cover``: ``I`` is a graph cover ideal, so the value is
      ``alpha(I^(2)) / 2`` exactly (the symbolic Rees algebra is generated
      in degree two).
    * ``edge-class``: ``graph`` is in the clique-sum class and ``I`` its
      edge ideal; the value is ``(2 n_1 + 1) / (n_1 + 1)``.
    * ``generic``: sampled upper bound and the certified lower bound
      ``alpha(I) / big_height(I)``; never claims exactness.
    """
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    if mode == "cover":
        samples = _samples(I, max(s_max, 2))
        value = Fraction(samples[2], 2)
        if min(Fraction(a, s) for s, a in samples.items()) < value:
            raise AssertionError("a sample undercuts the degree-two value; ideal is not a graph cover ideal")
        return WaldschmidtEstimate(value, value, value, samples, "cover: alpha(I^(2))/2")
    if mode == "edge-class":
        if graph is None:
            raise ValueError("edge-class mode needs the graph")
        if I != edge_ideal(graph):
            raise ValueError("ideal is not the edge ideal of the given graph")
        n1 = _class_data(graph)["half_lengths"][0]
        value = Fraction(2 * n1 + 1, n1 + 1)
        samples = _samples(I, s_max)
        if min(Fraction(a, s) for s, a in samples.items()) < value:
            raise AssertionError("a sample undercuts the closed-form Waldschmidt constant")
        return WaldschmidtEstimate(value, value, value, samples, "edge-class closed form")
    if mode != "generic":
        raise ValueError(f"unknown mode {mode!r}")
    samples = _samples(I, s_max)
    upper = min(Fraction(a, s) for s, a in samples.items())
    # I^(hs) lies in I^s, so alpha(I^(hs)) >= s alpha(I)
    lower = Fraction(alpha(I), big_height(I))
    return WaldschmidtEstimate(lower, upper, None, samples, "generic: sampled upper, big-height lower")


def fractional_chromatic_for_class(G: Graph) -> Fraction:
    """``2 + 1/n_1`` for the clique-sum class; bipartite input is rejected."""
    if is_bipartite(G)[0]:
        raise ClassPreconditionError("bipartite graphs are outside the formula's range")
    n1 = _class_data(G)["half_lengths"][0]
    return 2 + Fraction(1, n1)
