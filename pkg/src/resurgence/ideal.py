"""Monomial ideals in a polynomial ring over a field.

Monomials are exponent tuples aligned with a ``VariableSet``. Ideals are
immutable and always stored through their minimal generators sorted
lexicographically, so structural equality is ideal equality.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import kernels

Monomial = tuple  # tuple[int, ...]

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_'.]*$")


@dataclass(frozen=True)
class VariableSet:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not isinstance(n, str) or not _NAME_RE.match(n):
                raise ValueError(f"invalid variable name {n!r}")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def monomial(self, powers: Mapping[str, int]) -> Monomial:
        e = [0] * len(self.names)
        for name, p in powers.items():
            if p < 0:
                raise ValueError("negative exponent")
            e[self.index(name)] += p
        return tuple(e)

    def product_of(self, names: Iterable[str]) -> Monomial:
        """Squarefree monomial on the given variables."""
        e = [0] * len(self.names)
        for name in names:
            e[self.index(name)] = 1
        return tuple(e)


def format_monomial(ring: VariableSet, m: Monomial) -> str:
    parts = []
    for name, p in zip(ring.names, m):
        if p == 1:
            parts.append(name)
        elif p > 1:
            parts.append(f"{name}^{p}")
    return " ".join(parts) if parts else "1"


def parse_monomial(ring: VariableSet, text: str) -> Monomial:
    text = text.strip()
    e = [0] * len(ring)
    if text == "1":
        return tuple(e)
    for tok in text.replace("*", " ").split():
        name, _, p = tok.partition("^")
        power = int(p) if p else 1
        if power < 0:
            raise ValueError(f"negative exponent in {tok!r}")
        e[ring.index(name)] += power
    return tuple(e)


@dataclass(frozen=True, eq=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The zero ideal has no generators; the unit ideal has the single
    generator ``1`` and reports ``is_unit``. Build instances through
    ``from_generators`` so minimality and ordering hold.
    """

    ring: VariableSet
    generators: tuple
    _hash: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.ring, self.generators)))

    def __hash__(self):
        return self._hash

    @classmethod
    def from_generators(cls, ring: VariableSet, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        n = len(ring)
        clean = []
        for g in gens:
            g = tuple(int(x) for x in g)
            if len(g) != n:
                raise ValueError(f"monomial {g} does not match {n} variables")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")
            clean.append(g)
        return cls(ring, tuple(kernels.minimalize(clean)))

    @classmethod
    def zero(cls, ring: VariableSet) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: VariableSet) -> "MonomialIdeal":
        return cls(ring, ((0,) * len(ring),))

    @classmethod
    def prime(cls, ring: VariableSet, variables: Iterable[int]) -> "MonomialIdeal":
        """The ideal generated by the listed variable indices."""
        gens = []
        for i in variables:
            e = [0] * len(ring)
            e[i] = 1
            gens.append(tuple(e))
        return cls.from_generators(ring, gens)

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not any(self.generators[0])

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m) -> bool:
        return contains_monomial(self, m)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(self.ring, g) for g in self.generators) + ")"


def minimalize(gens: Iterable[Monomial]) -> list:
    return kernels.minimalize(list(gens))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings; embed one first")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal.from_generators(I.ring, I.generators + J.generators)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, tuple(kernels.product_min(I.generators, J.generators)))


@lru_cache(maxsize=512)
def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """Ordinary power ``I^t`` for ``t >= 1``."""
    if t < 1:
        raise ValueError("power exponent must be at least 1")
    if t == 1:
        return I
    return product(power(I, t - 1), I)


def embed(I: MonomialIdeal, target: VariableSet, mapping: Mapping[str, str] | None = None) -> MonomialIdeal:
    """Extend ``I`` to a larger ring along an injective renaming of variables.

    Without ``mapping`` each variable goes to the target variable of the
    same name.
    """
    mapping = dict(mapping or {n: n for n in I.ring.names})
    if set(mapping) != set(I.ring.names):
        raise ValueError("mapping must cover every source variable")
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise ValueError("variable mapping is not injective")
    pos = [target.index(mapping[n]) for n in I.ring.names]
    gens = []
    for g in I.generators:
        e = [0] * len(target)
        for i, p in zip(pos, g):
            e[i] = p
        gens.append(tuple(e))
    return MonomialIdeal(target, tuple(sorted(gens)))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, tuple(kernels.intersect_min(I.generators, J.generators)))


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``I : m``, generated by ``u / gcd(u, m)`` over generators ``u``."""
    if len(m) != len(I.ring):
        raise ValueError("monomial does not match the ring")
    return MonomialIdeal.from_generators(
        I.ring, [tuple(max(a - b, 0) for a, b in zip(u, m)) for u in I.generators]
    )


def contains_monomial(I: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != len(I.ring):
        raise ValueError("monomial does not match the ring")
    return any(divides(g, m) for g in I.generators)


def alpha(I: MonomialIdeal) -> int:
    """Least degree of a nonzero element."""
    if I.is_zero:
        raise ValueError("the zero ideal has no initial degree")
    return min(sum(g) for g in I.generators)


def power_certificate(I: MonomialIdeal, m: Monomial, t: int, budget: int | None = None):
    """Generators ``g_1..g_t`` of ``I`` (with repetition) whose product divides ``m``.

    Returns None when ``m`` is not in ``I^t``. Raises
    ``kernels.BudgetExceeded`` if the search outgrows its node budget.
    """
    if len(m) != len(I.ring):
        raise ValueError("monomial does not match the ring")
    if t < 0:
        raise ValueError("negative power")
    if t == 0:
        return ()
    if I.is_zero:
        return None
    if sum(m) < t * alpha(I):
        return None
    if budget is None:
        budget = kernels.node_budget()
    idx = kernels.member_of_power(I.generators, tuple(m), t, budget)
    if idx is None:
        return None
    return tuple(I.generators[i] for i in idx)


def member_of_power(I: MonomialIdeal, m: Monomial, t: int, budget: int | None = None) -> bool:
    return power_certificate(I, m, t, budget) is not None


def verify_power_certificate(I: MonomialIdeal, m: Monomial, t: int, cert) -> bool:
    """Independent re-check of a certificate from ``power_certificate``."""
    if cert is None or len(cert) != t:
        return False
    if any(g not in I.generators for g in cert):
        return False
    total = [0] * len(I.ring)
    for g in cert:
        for i, p in enumerate(g):
            total[i] += p
    return divides(tuple(total), m)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when ``J`` is contained in ``I``."""
    _same_ring(I, J)
    return all(contains_monomial(I, g) for g in J.generators)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.ring == J.ring and I.generators == J.generators


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(p <= 1 for g in I.generators for p in g)


def lcm_of_generators(I: MonomialIdeal) -> Monomial:
    if I.is_zero:
        raise ValueError("the zero ideal has no generators")
    return tuple(max(col) for col in zip(*I.generators))


def minimal_transversals(sets: Sequence[frozenset]) -> list:
    """Inclusion-minimal sets meeting every member of ``sets``.

    Branches on an element of a smallest unmet set, then discards
    non-minimal results. Returned as sorted tuples, sorted.
    """
    sets = [frozenset(s) for s in sets]
    if any(not s for s in sets):
        return []
    found = set()

    def rec(chosen: frozenset, remaining: list):
        if not remaining:
            found.add(chosen)
            return
        pivot = min(remaining, key=lambda s: (len(s), sorted(s)))
        for x in sorted(pivot):
            rec(chosen | {x}, [s for s in remaining if x not in s])

    rec(frozenset(), sets)
    ordered = sorted(found, key=len)
    minimal = []
    for c in ordered:
        if not any(m <= c for m in minimal):
            minimal.append(c)
    return sorted(tuple(sorted(c)) for c in minimal)


@lru_cache(maxsize=512)
def minimal_primes(I: MonomialIdeal) -> tuple:
    """Minimal primes of a squarefree monomial ideal as tuples of variable indices.

    The unit ideal has none; the zero ideal has the single prime ``()``.
    """
    if not is_squarefree(I):
        raise ValueError("minimal primes are only computed for squarefree ideals")
    if I.is_unit:
        return ()
    supports = [frozenset(i for i, p in enumerate(g) if p) for g in I.generators]
    return tuple(minimal_transversals(supports))


def big_height(I: MonomialIdeal) -> int:
    primes = minimal_primes(I)
    if not primes:
        raise ValueError("the unit ideal has no minimal primes")
    return max(len(p) for p in primes)


def prime_power(ring: VariableSet, prime: Sequence[int], s: int) -> MonomialIdeal:
    """Generators of ``P^s`` for the prime on the given variable indices."""
    P = MonomialIdeal.prime(ring, prime)
    return power(P, s)
