import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from rsm import oracle
from rsm.errors import ValidationError
from rsm.lattice import count_members
from rsm.reductions import (Formula1in3, MulticoloredGraph, RSepInstance, UndirectedGraph,
                            balancedcut_to_rsm, is_rsep_solution, mcc_to_rsm, most_balanced_cut,
                            mostbalanced_to_perfect, pad_graph, pad_rsep_threshold, padded_certificate,
                            perfectly_balanced_cut, random_formula, random_graph, random_planted_mcc,
                            rsep_dist, rsep_solve_brute, rsep_to_rsm, sat1in3_to_rsep, sat_brute,
                            sat_certificate)
from rsm.reductions.rsep import family_distance
from rsm.solvers import solve_brute, verify


@pytest.mark.parametrize("X,S,expected", [
    ({"s"}, {"s", "a"}, 1),
    ({"a"}, {"a", "b"}, 1),
    ({"a"}, {"s", "t"}, math.inf),
    ({"s", "a"}, {"a", "t"}, 1),
])
def test_rsep_dist(X, S, expected):
    assert rsep_dist(X, S, "s", "t") == expected


def test_rsep_brute_examples():
    r = RSepInstance.create("sta", "s", "t", [[{"s", "a"}]], 0)
    assert rsep_solve_brute(r) == {"s", "a"}
    r = RSepInstance.create("sta", "s", "t", [[{"s", "t"}]], 0)
    assert rsep_solve_brute(r) is None
    assert solve_brute(rsep_to_rsm(r)) is None


def test_rsep_validation():
    with pytest.raises(ValidationError):
        RSepInstance.create("sa", "s", "t", [], 0)
    with pytest.raises(ValidationError):
        RSepInstance.create("sta", "s", "t", [[{"a"}, {"a", "s"}]], 0)


def test_rsep_to_rsm_minimizers():
    r = RSepInstance.create("stab", "s", "t", [[{"s", "a"}, {"b", "t"}]], 0)
    inst = rsep_to_rsm(r)
    got = set(oracle.brute_minimizers(inst.functions[0], inst.universe))
    assert got == {frozenset({"a"})}


def test_empty_families_always_feasible():
    r = RSepInstance.create("stab", "s", "t", [[], []], 0)
    inst = rsep_to_rsm(r)
    assert all(len(oracle.brute_minimizers(f, inst.universe)) == 4 for f in inst.functions)
    assert solve_brute(inst) is not None


def test_sat_gadget_counts():
    phi = Formula1in3(("x", "y", "z"), ((("x", True), ("y", True), ("z", True)),))
    r = sat1in3_to_rsep(phi)
    assert len(r.universe) == 12 and len(r.families) == 9 and r.d == 1
    X = sat_certificate(phi, {"x": True, "y": False, "z": False})
    assert all(family_distance(X, fam, "s", "t") <= 1 for fam in r.families)


def test_unsatisfiable_formula():
    lits = [("x", True), ("y", True), ("z", True)]
    clauses = (tuple(lits), (("x", False), ("y", False), ("z", False)))
    phi = Formula1in3(("x", "y", "z"), clauses)
    assert sat_brute(phi) is None
    assert rsep_solve_brute(sat1in3_to_rsep(phi)) is None


@given(st.integers(0, 10**6))
def test_sat_chain(seed):
    rng = random.Random(seed)
    phi = random_formula(rng, 3, rng.randint(0, 2))
    r = sat1in3_to_rsep(phi)
    assignment = sat_brute(phi)
    assert (rsep_solve_brute(r) is not None) == (assignment is not None)
    if assignment is not None:
        assert is_rsep_solution(r, sat_certificate(phi, assignment))


def test_padding_sizes():
    r = RSepInstance.create("sta", "s", "t", [[{"a"}]], 1)
    p = pad_rsep_threshold(r, 1)
    assert len(p.universe) == 5
    assert all(len(fam[-1]) == 1 for fam in p.families[:1])
    with pytest.raises(ValidationError):
        pad_rsep_threshold(r, 0)
    with pytest.raises(ValidationError):
        pad_rsep_threshold(RSepInstance.create("sta", "s", "t", [], 2), 3)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("d", [2, 3])
def test_padding_preserves_solvability(seed, d):
    rng = random.Random(seed)
    phi = random_formula(rng, 3, rng.randint(1, 2))
    r = sat1in3_to_rsep(phi)
    p = pad_rsep_threshold(r, d)
    assert (rsep_solve_brute(r) is None) == (rsep_solve_brute(p) is None)
    assignment = sat_brute(phi)
    if assignment is not None:
        assert is_rsep_solution(p, padded_certificate(sat_certificate(phi, assignment), d))


def cycle4():
    return UndirectedGraph(("s", "a", "t", "b"), (("s", "a"), ("a", "t"), ("t", "b"), ("b", "s")))


def test_balanced_cycle():
    G = cycle4()
    assert perfectly_balanced_cut(G) is not None
    assert solve_brute(balancedcut_to_rsm(G)) is not None


def test_balanced_single_edge():
    G = UndirectedGraph(("s", "t"), (("s", "t"),))
    inst = balancedcut_to_rsm(G)
    assert inst.d == 0 and inst.universe == ()
    assert solve_brute(inst) is not None


def test_balanced_odd_rejected():
    with pytest.raises(ValidationError):
        balancedcut_to_rsm(UndirectedGraph(("s", "t", "a"), ()))


def test_mostbalanced_padding():
    G = cycle4()
    assert mostbalanced_to_perfect(G, 2) == G
    assert len(mostbalanced_to_perfect(G, 1).vertices) == 6
    assert mostbalanced_to_perfect(G, 3) is None


@given(st.integers(0, 10**6), st.integers(1, 2))
def test_mostbalanced_equivalence(seed, ell):
    G = random_graph(random.Random(seed), 2)
    padded = mostbalanced_to_perfect(G, ell)
    assert (most_balanced_cut(G, ell) is None) == (perfectly_balanced_cut(padded) is None)


@given(st.integers(0, 10**6), st.sampled_from([0, 2, 4]))
def test_balanced_equivalence(seed, n):
    G = random_graph(random.Random(seed), n)
    assert (perfectly_balanced_cut(G) is None) == (solve_brute(balancedcut_to_rsm(G)) is None)


def test_mcc_validation():
    with pytest.raises(ValidationError):
        MulticoloredGraph((("a",), ("a",)), ())
    with pytest.raises(ValidationError):
        MulticoloredGraph((("a", "b"), ("c",)), (("a", "b"),))


def test_mcc_padding_equalizes():
    G = MulticoloredGraph((("a",), ("b", "c"), ("d",)), (("a", "b"), ("a", "c"), ("b", "d")))
    P = pad_graph(G)
    assert {len(c) for c in P.classes} == {P.n}
    assert {len(es) for es in P.pairs.values()} == {P.m} == {2}


@pytest.mark.parametrize("seed", range(3))
def test_mcc_shape_and_certificate(seed):
    rng = random.Random(seed)
    G, clique = random_planted_mcc(rng, 3, 2, 2)
    inst, X = mcc_to_rsm(G, clique)
    P = pad_graph(G)
    size = 3 * P.n + 3 * P.m
    assert inst.k == 5 + 4 * 3 + 4 * 3 + 3 * 2 == 35
    assert len(inst.universe) == 6 * size and inst.d == 2 * size
    counts = [count_members(L) for L in inst.lattices]
    assert all(c is not None and c <= len(inst.universe) for c in counts)
    assert sorted(set(counts)) == sorted({1, P.n, P.m})
    assert verify(inst, X)[0]


def test_mcc_rejects_non_clique():
    G = MulticoloredGraph((("a",), ("b",), ("c",)), (("a", "b"), ("b", "c")))
    with pytest.raises(ValidationError):
        mcc_to_rsm(G, ["a", "b", "c"])


@pytest.mark.parametrize("seed", range(4))
def test_incidency_excess_depends_on_degree(seed):
    # A clique vertex with several neighbours in the paired class pushes the
    # certificate past the threshold by deg - 1 (or a cheaper non-clique prefix).
    G, clique = random_planted_mcc(random.Random(seed), 3, 3, 3, isolate_clique=False)
    inst, X = mcc_to_rsm(G, clique)
    P = pad_graph(G)
    _, dists = verify(inst, X)
    col = G.color()
    picked = {col[v]: v for v in clique}
    ordered = [(i, j) for i in range(3) for j in range(3) if i != j]
    for (i, j), dist in zip(ordered, dists[29:]):
        pair = P.pairs[(min(i, j), max(i, j))]
        side = 0 if i < j else 1
        deg = {v: sum(e[side] == v for e in pair) for v in P.classes[i]}
        sigma = picked[i]
        expected = min([deg[sigma] - 1] + [deg[v] + 3 for v in P.classes[i] if v != sigma])
        assert dist - inst.d == expected
