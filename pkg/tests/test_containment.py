from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from resurgence import catalog
from resurgence.containment import check_containment, least_noneq_power, sweep
from resurgence.graphs import cover_ideal, edge_ideal
from resurgence.ideal import verify_power_certificate
from resurgence.kernels import BudgetExceeded
from resurgence.symbolic import symbolic_member, symbolic_power, symbolic_spec
from strategies import graphs, ideals

C3, C5, C6 = catalog.cycle(3), catalog.cycle(5), catalog.cycle(6)
TWO = catalog.builtin_graph("two-triangles-d2")


def test_cover_c5_square_fails_with_full_product():
    J = cover_ideal(C5)
    res = check_containment(J, 2, 2)
    assert res.holds is False and res.witness == (1, 1, 1, 1, 1)
    assert symbolic_member(symbolic_spec(J, 2), res.witness)
    assert not oracles.in_power(J.generators, res.witness, 2)


def test_cover_c5_six_five_holds_with_certificate():
    J = cover_ideal(C5)
    res = check_containment(J, 6, 5, certify=True, graph=C5)
    assert res.holds is True and not res.truncated
    S = symbolic_power(J, 6)
    assert set(res.certificate) == set(S.generators)
    assert all(verify_power_certificate(J, g, 5, c) for g, c in res.certificate.items())


def test_two_triangles_edge_four_three_fails():
    I = edge_ideal(TWO)
    res = check_containment(I, 4, 3)
    assert res.holds is False
    assert symbolic_member(symbolic_spec(I, 4), res.witness)
    assert not oracles.in_power(I.generators, res.witness, 3)
    # the product of the two triangles is one such witness
    u = TWO.ring.product_of(["t1a", "t1b", "t1c", "t2a", "t2b", "t2c"])
    assert symbolic_member(symbolic_spec(I, 4), u) and not oracles.in_power(I.generators, u, 3)


def test_graph_fast_path_requires_matching_ideal():
    with pytest.raises(ValueError):
        check_containment(edge_ideal(C5), 2, 2, graph=C5)
    with pytest.raises(ValueError):
        check_containment(edge_ideal(C5), 0, 1)


def test_truncated_check():
    J = cover_ideal(catalog.builtin_graph("K222"))
    res = check_containment(J, 6, 4, budget=1)
    assert res.truncated and res.holds is None


def test_sweep_bipartite_has_no_real_failures():
    res = sweep(cover_ideal(C6), 6, 6, graph=C6)
    assert not [c for c in res.failures if c.s > c.t]


def test_sweep_triangle_cover():
    res = sweep(cover_ideal(C3), 8, 8, graph=C3)
    assert (2, 2) in {(c.s, c.t) for c in res.failures}
    assert all(c.ratio <= Fraction(4, 3) for c in res.failures)
    # the exact value is a supremum; within this box the brute-force oracle tops out at 6/5
    assert res.lower == Fraction(6, 5)


def test_sweep_c5_edge():
    res = sweep(edge_ideal(C5), 9, 8)
    assert (3, 3) in {(c.s, c.t) for c in res.failures}
    assert all(c.ratio <= Fraction(6, 5) for c in res.failures)


def test_sweep_is_monotone_in_t():
    res = sweep(cover_ideal(C5), 6, 6, graph=C5)
    for (s, t), cell in res.cells.items():
        if cell.holds is False and (s, t + 1) in res.cells:
            assert res.cells[(s, t + 1)].holds is False


def test_sweep_independent_of_threads():
    I = edge_ideal(C5)
    one = sweep(I, 5, 5, threads=1)
    two = sweep(I, 5, 5, threads=2)
    assert {k: (v.holds, v.witness) for k, v in one.cells.items()} == \
           {k: (v.holds, v.witness) for k, v in two.cells.items()}


def test_sweep_rejects_empty_box():
    with pytest.raises(ValueError):
        sweep(edge_ideal(C5), 0, 3)


def test_least_noneq_power_examples():
    assert least_noneq_power(cover_ideal(C3)) == 2
    assert least_noneq_power(edge_ideal(C5)) == 3
    assert least_noneq_power(cover_ideal(C6)) is None


# --- properties ---------------------------------------------------------------

@given(ideals(n=3, squarefree=True), st.integers(1, 3), st.integers(1, 3))
def test_containment_matches_oracle(I, s, t):
    if I.is_unit:
        return
    res = check_containment(I, s, t, certify=True)
    S = oracles.symbolic_gens(list(I.generators), s)
    expected = all(oracles.in_power(I.generators, g, t) for g in S)
    assert res.holds is expected
    if expected:
        assert all(verify_power_certificate(I, g, t, c) for g, c in res.certificate.items())
    else:
        assert symbolic_member(symbolic_spec(I, s), res.witness)
        assert not oracles.in_power(I.generators, res.witness, t)


@given(graphs(max_n=5))
def test_sweep_witnesses_verify(G):
    for I, graph in ((edge_ideal(G), None), (cover_ideal(G), G)):
        res = sweep(I, 4, 4, graph=graph)
        for c in res.failures:
            assert symbolic_member(symbolic_spec(I, c.s), c.witness)
            assert not oracles.in_power(I.generators, c.witness, c.t)


def test_budget_exception_type_is_runtime_error():
    assert issubclass(BudgetExceeded, RuntimeError)
