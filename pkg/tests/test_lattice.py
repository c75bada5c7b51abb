import random

import pytest
from hypothesis import given, strategies as st

from rsm import oracle
from rsm.compact import CompactLattice
from rsm.errors import LatticeOverflow
from rsm.lattice import count_members, enumerate_members, expand_graph, gamma, is_member
from rsm.randgen import element_names, random_function, random_lattice
from rsm.submod import ExplicitFunction, to_lattice

SINGLE = to_lattice(ExplicitFunction.of("ab", [{"a"}]))
CHAIN = CompactLattice.create("abc", {"a"}, [{"b"}, {"c"}], set(), [(1, 2), (2, 0)])


def test_membership_examples():
    assert is_member(SINGLE, {"a"})
    assert not is_member(SINGLE, set())
    assert not is_member(CHAIN, {"a", "b"})
    assert is_member(CHAIN, {"a", "c"})
    assert is_member(CHAIN, {"a", "b", "c"})


@pytest.mark.parametrize("b", [0, 1, 2, 5])
def test_path_has_prefix_members(b):
    V = element_names(b + 1)
    L = CompactLattice.create(V, {V[0]}, [{v} for v in V[1:]], set(), [(j, j - 1) for j in range(1, b + 1)])
    members = enumerate_members(L)
    assert len(members) == b + 1 == count_members(L)
    assert sorted(map(len, members)) == list(range(1, b + 2))


@pytest.mark.parametrize("b", [0, 1, 2, 3, 4])
def test_antichain_count(b):
    V = element_names(b)
    L = CompactLattice.create(V, set(), [{v} for v in V], set(), [])
    assert count_members(L) == 2 ** b == len(enumerate_members(L))


def test_enumeration_cap():
    V = element_names(6)
    L = CompactLattice.create(V, set(), [{v} for v in V], set(), [])
    with pytest.raises(LatticeOverflow):
        enumerate_members(L, cap=10)
    assert count_members(L, cap=10) is None


def test_expand_graph_rules():
    L = CompactLattice.create("abc", {"a"}, [], {"c", "b"}, [])
    pairs = {(u, v) for u, v, _ in expand_graph(L).graph.edges}
    assert {((0, "a"), "s"), ("s", (0, "a")), ((0, "c"), "t"), ("t", (0, "c"))} <= pairs
    L = CompactLattice.create("xy", set(), [{"x", "y"}], set(), [])
    pairs = {(u, v) for u, v, _ in expand_graph(L).graph.edges}
    assert pairs == {((0, "x"), (0, "y")), ((0, "y"), (0, "x"))}
    L = CompactLattice.create("abc", {"a", "b"}, [{"c"}], set(), [])
    pairs = {(u, v) for u, v, _ in expand_graph(L).graph.edges}
    assert {((0, "c"), (0, "a")), ((0, "c"), (0, "b"))} <= pairs


def test_gamma_examples():
    L = to_lattice(ExplicitFunction.of("a", [set(), {"a"}]))
    assert gamma(L, {"a"}) == (0, {"a"})
    L = to_lattice(ExplicitFunction.of("ab", [{"a", "b"}]))
    assert gamma(L, set()) == (2, {"a", "b"})


@given(st.integers(0, 10**6), st.integers(0, 7))
def test_membership_matches_literal_oracle(seed, n):
    V = element_names(n)
    L = random_lattice(random.Random(seed), V)
    members = set(int(m) for m in oracle.lattice_member_masks(L, V))
    assert {oracle.mask_of(Y, V) for Y in enumerate_members(L)} == members
    for mask in range(1 << n):
        assert is_member(L, oracle.set_of(mask, V)) == (mask in members)


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_expansion_cut_zero_iff_member(seed, n):
    V = element_names(n)
    L = to_lattice(random_function(random.Random(seed), V))
    g = expand_graph(L).graph
    for mask in range(1 << n):
        X = oracle.set_of(mask, V)
        assert (g.cut_value({"s"} | {(0, v) for v in X}) == 0) == is_member(L, X)


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_gamma_matches_enumeration(seed, n):
    V = element_names(n)
    rng = random.Random(seed)
    L = to_lattice(random_function(rng, V))
    members = enumerate_members(L)
    Z = frozenset(v for v in V if rng.random() < 0.5)
    dist, Y = gamma(L, Z)
    assert dist == min(len(Z ^ M) for M in members)
    assert is_member(L, Y) and len(Z ^ Y) == dist


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_gamma_triangle_and_nearest(seed, n):
    V = element_names(n)
    rng = random.Random(seed)
    L = to_lattice(random_function(rng, V))
    Z = frozenset(v for v in V if rng.random() < 0.5)
    dist, Y = gamma(L, Z)
    assert gamma(L, Y) == (0, Y)
    assert all(dist <= len(Z ^ M) for M in enumerate_members(L))
