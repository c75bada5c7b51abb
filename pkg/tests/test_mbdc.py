import itertools
import random

import pytest
from hypothesis import given, strategies as st

from rsm.flow import DiGraph
from rsm.lattice import enumerate_members
from rsm.randgen import element_names, random_instance, random_mbdc
from rsm.solvers import (Instance, MbdcInstance, build_mbdc, eliminate_forbidden, solve_brute, solve_d0,
                         solve_fpt_kd, solve_mbdc)
from rsm.solvers.poly import STAR
from rsm.submod import ExplicitFunction


def cut_sides(m):
    inner = [v for v in m.graph.vertices if v not in (m.s, m.t)]
    for r in range(len(inner) + 1):
        for side in itertools.combinations(inner, r):
            yield frozenset((m.s, *side))


def brute_mbdc(m):
    return any(m.is_solution(X) for X in cut_sides(m))


def test_build_sizes():
    V = "abc"
    inst = Instance.create(V, [ExplicitFunction.of(V, [{"a"}]), ExplicitFunction.of(V, [set(), {"b"}])], 1)
    m = build_mbdc(inst)
    assert len(m.graph.vertices) == 11
    assert all(len(cls) == 2 * len(V) for cls in m.classes)
    assert m.budgets == (1, 1)


def test_forbidden_copies_follow_budget():
    g = DiGraph.build("sat", [("s", "a", 1), ("a", "t", 1)])
    m = MbdcInstance(g, "s", "t", (frozenset({0, 1}),), (2,), frozenset({0}))
    out = eliminate_forbidden(m)
    assert len(out.graph.edges) == 4 and len(out.classes[0]) == 4 and not out.forbidden


def test_unclassified_forbidden_gets_own_class():
    g = DiGraph.build("sat", [("s", "a", 1), ("a", "t", 1)])
    m = MbdcInstance(g, "s", "t", (frozenset({1}),), (0,), frozenset({0}))
    out = eliminate_forbidden(m)
    assert out.budgets == (0, 1) and len(out.classes[1]) == 2


def test_no_forbidden_is_identity():
    g = DiGraph.build("sat", [("s", "a", 1)])
    m = MbdcInstance(g, "s", "t", (frozenset({0}),), (1,))
    assert eliminate_forbidden(m) is m


def test_slack_budgets():
    g = DiGraph.build("sabt", [("s", "a", 1), ("a", "t", 1), ("s", "b", 1), ("b", "t", 1)])
    m = MbdcInstance(g, "s", "t", (frozenset(range(4)),), (4,))
    assert m.is_solution(solve_mbdc(m).members)


def test_unavoidable_edge():
    g = DiGraph.build("st", [("s", "t", 1)])
    assert solve_mbdc(MbdcInstance(g, "s", "t", (frozenset({0}),), (0,))) is None


def test_free_edges_are_unconstrained():
    g = DiGraph.build("st", [("s", "t", 1)])
    assert solve_mbdc(MbdcInstance(g, "s", "t", (frozenset(),), (0,))) is not None


@given(st.integers(0, 10**6))
def test_build_round_trip(seed):
    rng = random.Random(seed)
    inst = random_instance(rng, n_max=3, k_max=2, d_max=2)
    m = build_mbdc(inst)
    cut_patterns = set()
    for X in cut_sides(m):
        used, bad = m.usage(X)
        if not bad:
            cut_patterns.add(tuple(used))
    members = [enumerate_members(L) for L in inst.lattices]
    set_patterns = set()
    for r in range(len(inst.universe) + 1):
        for X in itertools.combinations(inst.universe, r):
            X = frozenset(X)
            for Ys in itertools.product(*members):
                set_patterns.add(tuple(len(X ^ Y) for Y in Ys))
    assert cut_patterns == set_patterns


@given(st.integers(0, 10**6))
def test_solve_mbdc_matches_enumeration(seed):
    m = random_mbdc(random.Random(seed), n_max=8)
    expected = brute_mbdc(m)
    flat = eliminate_forbidden(m)
    assert brute_mbdc(flat) == expected
    for inst in (m, flat):
        got = solve_mbdc(inst)
        assert (got is not None) == expected
        if got is not None:
            assert m.is_solution(got.members)


@given(st.integers(0, 10**6))
def test_fpt_matches_d0_at_zero(seed):
    inst = random_instance(random.Random(seed), n_max=6, d_max=0)
    assert (solve_fpt_kd(inst) is None) == (solve_d0(inst) is None) == (solve_brute(inst) is None)


def test_fpt_two_unique_minimizers():
    V = "abcd"
    inst = Instance.create(V, [ExplicitFunction.of(V, [V]), ExplicitFunction.of(V, [[]])], 2)
    sol = solve_fpt_kd(inst)
    assert sol is not None and [w.distance for w in sol.witnesses] == [2, 2]
