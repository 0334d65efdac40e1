import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from resurgence import catalog
from resurgence.graphs import cover_ideal, edge_ideal
from resurgence.ideal import (
    MonomialIdeal,
    VariableSet,
    alpha,
    big_height,
    colon,
    contains_ideal,
    contains_monomial,
    embed,
    equals,
    format_monomial,
    ideal_sum,
    intersect,
    is_squarefree,
    lcm_of_generators,
    member_of_power,
    minimal_primes,
    parse_monomial,
    power,
    power_certificate,
    product,
    verify_power_certificate,
)
from strategies import ideals, monomials, ring

R3 = ring(3)
R5 = ring(5)


def ideal(r, *texts):
    return MonomialIdeal.from_generators(r, [parse_monomial(r, t) for t in texts])


def test_variable_set_validation():
    with pytest.raises(ValueError):
        VariableSet(("x1", "x1"))
    with pytest.raises(ValueError):
        VariableSet(("bad name",))
    assert len(R3) == 3 and R3.index("x2") == 1
    with pytest.raises(KeyError):
        R3.index("y")


def test_monomial_text_round_trip():
    m = (2, 0, 1)
    assert format_monomial(R3, m) == "x1^2 x3"
    assert parse_monomial(R3, "x1^2 x3") == m
    assert parse_monomial(R3, "x1*x1*x3") == m
    assert format_monomial(R3, (0, 0, 0)) == "1"


def test_minimalize_examples():
    assert ideal(R3, "x1", "x1 x2").generators == ((1, 0, 0),)
    assert MonomialIdeal.from_generators(R3, []).is_zero
    assert ideal(R3, "x1 x2", "x2 x3", "x1 x2 x3") == ideal(R3, "x1 x2", "x2 x3")
    with pytest.raises(ValueError):
        MonomialIdeal.from_generators(R3, [(1, 0)])
    with pytest.raises(ValueError):
        MonomialIdeal.from_generators(R3, [(1, -1, 0)])


def test_sum_product_power_examples():
    assert ideal_sum(ideal(R3, "x1"), ideal(R3, "x2")) == ideal(R3, "x1", "x2")
    I = ideal(R3, "x1 x2", "x2 x3")
    assert power(I, 2) == ideal(R3, "x1^2 x2^2", "x1 x2^2 x3", "x2^2 x3^2")
    assert power(I, 1) == I
    assert product(I, MonomialIdeal.zero(R3)).is_zero
    with pytest.raises(ValueError):
        power(I, 0)


def test_embed_examples():
    R = VariableSet(("x1", "y1"))
    assert embed(ideal(ring(1), "x1"), R).generators == ((1, 0),)
    Ry = VariableSet(("y1", "y2"))
    big = VariableSet(("x1", "y1", "y2"))
    assert embed(ideal(Ry, "y1 y2"), big).generators == ((0, 1, 1),)
    with pytest.raises(ValueError):
        embed(ideal(Ry, "y1"), big, {"y1": "x1", "y2": "x1"})


def test_intersect_examples():
    assert intersect(ideal(R3, "x1"), ideal(R3, "x2")) == ideal(R3, "x1 x2")
    assert intersect(ideal(R3, "x1", "x2"), ideal(R3, "x2", "x3")) == ideal(R3, "x2", "x1 x3")
    I = ideal(R3, "x1 x2", "x3^2")
    assert intersect(I, MonomialIdeal.unit(R3)) == I
    with pytest.raises(ValueError):
        intersect(I, ideal(R5, "x1"))


def test_colon_examples():
    assert colon(ideal(R3, "x1 x2", "x2 x3"), parse_monomial(R3, "x2")) == ideal(R3, "x1", "x3")
    I = ideal(R3, "x1 x2", "x3^2")
    assert colon(I, (0, 0, 0)) == I


def test_colon_of_cover_ideal_by_brute_force():
    J = cover_ideal(catalog.cycle(5))
    x5 = parse_monomial(R5, "x5")
    got = colon(J, x5)
    # {w : w x5 in J} over exponent vectors bounded by 1
    members = [w for w in itertools.product(range(2), repeat=5)
               if oracles.in_ideal(J.generators, tuple(a + b for a, b in zip(w, x5)))]
    assert list(got.generators) == oracles.minimal(members)
    # the covers containing x5 shrink to covers of the remaining path edges x1x2, x2x3, x3x4
    path_covers = ideal(R5, "x1 x3", "x2 x3", "x2 x4")
    assert got == path_covers


def test_contains_monomial_examples():
    assert contains_monomial(ideal(R3, "x1 x2"), (1, 1, 1))
    assert not contains_monomial(ideal(R3, "x1 x2"), (1, 0, 0))
    assert not contains_monomial(MonomialIdeal.zero(R3), (5, 5, 5))


def test_member_of_power_examples():
    I = ideal(R3, "x1 x2", "x2 x3")
    cert = power_certificate(I, (1, 2, 1), 2)
    assert sorted(cert) == sorted([(1, 1, 0), (0, 1, 1)])
    assert verify_power_certificate(I, (1, 2, 1), 2, cert)
    assert not member_of_power(edge_ideal(catalog.cycle(5)), (1, 1, 1, 1, 1), 3)
    J = cover_ideal(catalog.cycle(5))
    assert member_of_power(J, (2, 1, 1, 1, 1), 2)


def test_verify_certificate_rejects_bad_input():
    I = ideal(R3, "x1 x2", "x2 x3")
    assert not verify_power_certificate(I, (1, 2, 1), 2, None)
    assert not verify_power_certificate(I, (1, 2, 1), 2, [(1, 1, 0)])
    assert not verify_power_certificate(I, (1, 1, 1), 2, [(1, 1, 0), (0, 1, 1)])


def test_containment_and_equality_examples():
    I = ideal(R3, "x1 x2", "x2 x3")
    assert contains_ideal(I, power(I, 2))
    redundant = MonomialIdeal.from_generators(R3, list(I.generators) + [(1, 1, 1)])
    assert equals(I, redundant)
    assert not contains_ideal(ideal(R3, "x1"), ideal(R3, "x2"))


def test_alpha_examples():
    C5 = catalog.cycle(5)
    assert alpha(cover_ideal(C5)) == 3
    assert alpha(edge_ideal(C5)) == 2
    assert alpha(power(edge_ideal(C5), 3)) == 6
    with pytest.raises(ValueError):
        alpha(MonomialIdeal.zero(R3))


def test_squarefree_and_lcm_examples():
    J = cover_ideal(catalog.cycle(5))
    assert lcm_of_generators(J) == (1, 1, 1, 1, 1)
    assert is_squarefree(J)
    assert not is_squarefree(power(cover_ideal(catalog.cycle(3)), 2))
    with pytest.raises(ValueError):
        lcm_of_generators(MonomialIdeal.zero(R3))


def test_minimal_primes_examples():
    C3 = catalog.cycle(3)
    assert sorted(minimal_primes(edge_ideal(C3))) == [(0, 1), (0, 2), (1, 2)]
    C5 = catalog.cycle(5)
    assert sorted(minimal_primes(cover_ideal(C5))) == sorted(C5.edges)
    assert minimal_primes(ideal(R3, "x1")) == ((0,),)
    with pytest.raises(ValueError):
        minimal_primes(ideal(R3, "x1^2"))


def test_big_height_examples():
    assert big_height(cover_ideal(catalog.cycle(5))) == 2
    assert big_height(edge_ideal(catalog.cycle(5))) == 3
    assert big_height(edge_ideal(catalog.complete(4))) == 3


# --- properties ---------------------------------------------------------------

@given(ideals())
def test_generators_are_minimal(I):
    assert list(I.generators) == oracles.minimal(I.generators)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(ideals(n), ideals(n))))
def test_intersection_is_set_intersection(pair):
    I, J = pair
    K = intersect(I, J)
    n = len(I.ring)
    for m in itertools.product(range(4), repeat=n):
        assert contains_monomial(K, m) == (contains_monomial(I, m) and contains_monomial(J, m))


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(ideals(n), monomials(n, 2))))
def test_colon_matches_definition(pair):
    I, m = pair
    K = colon(I, m)
    n = len(I.ring)
    for w in itertools.product(range(4), repeat=n):
        inside = contains_monomial(I, tuple(a + b for a, b in zip(w, m)))
        assert contains_monomial(K, w) == inside


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(ideals(n), monomials(n, 4), st.integers(1, 3))))
def test_member_of_power_matches_oracle(triple):
    I, m, t = triple
    got = power_certificate(I, m, t)
    assert (got is not None) == oracles.in_power(I.generators, m, t)
    assert contains_monomial(power(I, t), m) == (got is not None)
    if got is not None:
        assert verify_power_certificate(I, m, t, got)


@given(ideals(), st.integers(1, 3))
def test_power_matches_oracle_and_alpha_scales(I, t):
    P = power(I, t)
    assert list(P.generators) == oracles.power_gens(I.generators, t)
    assert alpha(P) == t * alpha(I)


@given(ideals())
def test_minimalize_is_idempotent(I):
    again = MonomialIdeal.from_generators(I.ring, I.generators)
    assert again == I


@given(ideals(n=3), ideals(n=2))
def test_disjoint_product_is_intersection(I, J):
    a = VariableSet(("a1", "a2", "a3"))
    b = VariableSet(("b1", "b2"))
    I = MonomialIdeal.from_generators(a, I.generators)
    J = MonomialIdeal.from_generators(b, J.generators)
    big = VariableSet(a.names + b.names)
    Ie, Je = embed(I, big), embed(J, big)
    assert product(Ie, Je) == intersect(Ie, Je)


@given(ideals(squarefree=True))
def test_minimal_primes_match_oracle(I):
    if I.is_unit:
        return
    assert sorted(minimal_primes(I)) == oracles.transversal_primes(list(I.generators))
