import itertools
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

import oracles
from resurgence import kernels
from resurgence.kernels import BudgetExceeded, available_backends

BACKENDS = available_backends()
backend_params = pytest.mark.parametrize("name", sorted(BACKENDS))


def gens_strategy(n, max_exp=2, max_size=6):
    return st.lists(st.tuples(*[st.integers(0, max_exp)] * n), min_size=1, max_size=max_size)


@st.composite
def gen_lists(draw):
    n = draw(st.integers(1, 4))
    return n, draw(gens_strategy(n))


def test_active_backend_is_listed():
    assert kernels.BACKEND in BACKENDS


@backend_params
@given(gen_lists())
def test_minimalize_matches_oracle(name, data):
    _, gens = data
    assert BACKENDS[name].minimalize(gens) == oracles.minimal(gens)


@backend_params
@given(gen_lists(), st.data())
def test_product_and_intersection_match_oracle(name, data, more):
    n, a = data
    b = more.draw(gens_strategy(n))
    k = BACKENDS[name]
    a, b = oracles.minimal(a), oracles.minimal(b)
    prods = [tuple(x + y for x, y in zip(g, h)) for g in a for h in b]
    lcms = [tuple(max(x, y) for x, y in zip(g, h)) for g in a for h in b]
    assert k.product_min(a, b) == oracles.minimal(prods)
    assert k.intersect_min(a, b) == oracles.minimal(lcms)


@backend_params
@given(gen_lists(), st.data())
def test_member_of_power_matches_oracle(name, data, more):
    n, gens = data
    gens = oracles.minimal(gens)
    t = more.draw(st.integers(1, 3))
    m = more.draw(st.tuples(*[st.integers(0, 5)] * n))
    got = BACKENDS[name].member_of_power(gens, m, t, 10**6)
    assert (got is not None) == oracles.in_power(gens, m, t)
    if got is not None:
        assert len(got) == t
        total = tuple(map(sum, zip(*(gens[i] for i in got))))
        assert oracles.divides(total, m)


@backend_params
def test_member_of_power_zero_power_and_empty(name):
    k = BACKENDS[name]
    assert k.member_of_power([(1, 0)], (0, 0), 0, 10) == ()
    assert k.member_of_power([], (3, 3), 1, 10) is None


@backend_params
def test_budget_exceeded(name):
    # many interchangeable generators need far more than five search nodes
    gens = [tuple(1 if j in c else 0 for j in range(8)) for c in itertools.combinations(range(8), 4)]
    with pytest.raises(BudgetExceeded):
        BACKENDS[name].member_of_power(gens, (5, 5, 5, 5, 4, 4, 0, 0), 7, 5)


@backend_params
@pytest.mark.parametrize("primes,n,s", [
    ([[0, 1], [1, 2], [0, 2]], 3, 3),
    ([[0, 2], [1, 3], [0, 1, 4]], 5, 2),
    ([[0], [1, 2]], 3, 4),
])
def test_enumerate_symbolic_matches_oracle(name, primes, n, s):
    members = [m for m in itertools.product(range(s + 1), repeat=n)
               if all(sum(m[i] for i in P) >= s for P in primes)]
    assert sorted(BACKENDS[name].enumerate_symbolic(n, primes, s)) == oracles.minimal(members)


def test_node_budget_env(monkeypatch):
    monkeypatch.setenv("RESURGENCE_NODE_BUDGET", "123")
    assert kernels.node_budget() == 123
    monkeypatch.setenv("RESURGENCE_NODE_BUDGET", "lots")
    with pytest.raises(ValueError):
        kernels.node_budget()
    monkeypatch.setenv("RESURGENCE_NODE_BUDGET", "0")
    with pytest.raises(ValueError):
        kernels.node_budget()
    monkeypatch.delenv("RESURGENCE_NODE_BUDGET")
    assert kernels.node_budget() == kernels.DEFAULT_NODE_BUDGET


def test_pure_python_fallback_selected_at_import():
    code = "from resurgence import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, RESURGENCE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
