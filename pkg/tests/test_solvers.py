import itertools
import random

import pytest
from hypothesis import given, strategies as st

from rsm.errors import CapExceeded, ValidationError
from rsm.randgen import element_names, random_instance
from rsm.solvers import (Instance, certify, check_solution, closest_string, dispatch, midpoint,
                         smallest_threshold, solve_brute, solve_d0, solve_enumerative, solve_fpt_kd,
                         solve_k2, solve_via_anchors, verify)
from rsm.submod import ExplicitFunction


def unique(universe, *sets, d=0):
    return Instance.create(universe, [ExplicitFunction.of(universe, [Y]) for Y in sets], d)


FOUR = "abcd"


def test_verify_examples():
    assert verify(unique("a", {"a"}), {"a"}) == (True, [0])
    assert verify(unique("ab", {"a"}, {"b"}), {"a"}) == (False, [0, 2])


def test_verify_rejects_foreign_set():
    with pytest.raises(ValidationError):
        verify(unique("a", {"a"}), {"z"})


def test_instance_validation():
    f = ExplicitFunction.of("a", [set()])
    with pytest.raises(ValidationError):
        Instance.create("a", [f], -1)
    with pytest.raises(ValidationError):
        Instance.create("ab", [f], 0)
    with pytest.raises(ValidationError):
        Instance.create("a", [f], 0, [0, 1])


def test_brute_examples():
    assert solve_brute(unique("a", {"a"}, set(), d=1)).X == set()
    sol = solve_brute(unique(FOUR, set(FOUR), set(), d=2))
    assert len(sol.X) == 2 and check_solution(unique(FOUR, set(FOUR), set(), d=2), sol)
    assert solve_brute(unique(FOUR, set(FOUR), set(), d=1)) is None


def test_d0_examples():
    assert solve_d0(unique("ab", {"a"}, {"a"})).X == {"a"}
    assert solve_d0(unique("ab", {"a"}, {"b"})) is None
    inst = Instance.create("ab", [ExplicitFunction.of("ab", [set(), {"a"}]),
                                  ExplicitFunction.of("ab", [{"a"}, {"a", "b"}])], 0)
    assert solve_d0(inst).X == {"a"}


def test_midpoint_examples():
    assert midpoint({"a"}, {"a"}, 0, 0) == {"a"}
    assert midpoint(set("abc"), set(), 1, 1) is None
    assert midpoint(set(FOUR), set(), 2, 2) == {"a", "b"}


@pytest.mark.parametrize("d1,d2", [(0, 4), (1, 3), (3, 1), (2, 2), (4, 5)])
def test_midpoint_unequal_budgets(d1, d2):
    Y1, Y2 = set("abcd"), set()
    X = midpoint(Y1, Y2, d1, d2)
    assert X is not None and len(X ^ Y1) <= d1 and len(X ^ Y2) <= d2


def test_k2_examples():
    sol = solve_k2(unique("ab", {"a"}, {"a"}))
    assert sol.X == {"a"}
    assert solve_k2(unique(FOUR, set(FOUR), set(), d=1)) is None
    assert solve_fpt_kd(unique(FOUR, set(FOUR), set(), d=2)) is not None


def test_closest_string_examples():
    assert closest_string([frozenset(), frozenset("ab")], [1, 1]) in ({"a"}, {"b"})
    assert closest_string([frozenset("ab")], [0]) == {"a", "b"}
    # the empty set is one away from each singleton
    assert closest_string([frozenset("a"), frozenset("b"), frozenset("c")], [1, 1, 1]) == set()
    assert closest_string([frozenset("a"), frozenset("b"), frozenset("c")], [0, 1, 1]) is None


@given(st.integers(0, 10**6))
def test_closest_string_matches_brute(seed):
    rng = random.Random(seed)
    V = element_names(rng.randint(1, 7))
    centers = [frozenset(v for v in V if rng.random() < 0.5) for _ in range(rng.randint(1, 4))]
    radii = [rng.randint(0, 3) for _ in centers]
    got = closest_string(centers, radii)
    exists = any(all(len(frozenset(X) ^ c) <= r for c, r in zip(centers, radii))
                 for n in range(len(V) + 1) for X in itertools.combinations(V, n))
    assert (got is not None) == exists
    if got is not None:
        assert all(len(got ^ c) <= r for c, r in zip(centers, radii))


def test_enumerative_cap():
    with pytest.raises(CapExceeded):
        f = ExplicitFunction.of("a", [set(), {"a"}])
        solve_enumerative(Instance.create("a", [f, f], 1), cap=2)


def test_dispatch_routes():
    assert dispatch(unique("ab", {"a"}, {"a"}, set()))[1] == "d0"
    assert dispatch(unique("ab", {"a"}, {"b"}, d=1))[1] == "k2"
    assert dispatch(Instance.create("a", [], 0)) [1] == "trivial"
    assert dispatch(unique("ab", {"a"}, d=1))[1] == "minimize"
    with pytest.raises(ValidationError):
        dispatch(unique("ab", {"a"}, d=1), "d0")
    with pytest.raises(ValidationError):
        dispatch(unique("ab", {"a"}, {"a"}, {"b"}, d=1), "k2")
    with pytest.raises(ValidationError):
        dispatch(unique("ab", {"a"}), "nope")


def test_smallest_threshold():
    d, sol = smallest_threshold(unique(FOUR, set(FOUR), set()))
    assert d == 2 and sol is not None


@given(st.integers(0, 10**6), st.booleans())
def test_solvers_agree_with_brute(seed, per_function):
    inst = random_instance(random.Random(seed), n_max=6, k_max=4, d_max=3, per_function=per_function)
    expected = solve_brute(inst) is not None
    for solver in (solve_fpt_kd, solve_via_anchors, solve_enumerative):
        sol = solver(inst)
        assert (sol is not None) == expected
        if sol is not None:
            assert check_solution(inst, sol) and verify(inst, sol.X)[0]
    if inst.k == 2:
        assert (solve_k2(inst) is not None) == expected
    if not any(inst.thresholds):
        assert (solve_d0(inst) is not None) == expected


@given(st.integers(0, 10**6))
def test_certify_agrees_with_verify(seed):
    rng = random.Random(seed)
    inst = random_instance(rng, n_max=6)
    X = frozenset(v for v in inst.universe if rng.random() < 0.5)
    sol = certify(inst, X)
    assert (sol is not None) == verify(inst, X)[0]
    if sol is not None:
        assert check_solution(inst, sol)


@given(st.integers(0, 10**6))
def test_verify_monotone_in_d(seed):
    rng = random.Random(seed)
    inst = random_instance(rng, n_max=6, d_max=2)
    X = frozenset(v for v in inst.universe if rng.random() < 0.5)
    looser = Instance(inst.universe, inst.functions, inst.d + 1)
    if verify(inst, X)[0]:
        assert verify(looser, X)[0]
    if solve_brute(inst) is not None:
        assert solve_brute(looser) is not None
