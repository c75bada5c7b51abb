"""Polynomial-time cases: all thresholds zero, and two functions."""

from __future__ import annotations

from ..flow import INF, DiGraph, min_cut
from ..lattice import SINK, SOURCE, structural_edges
from .instance import Instance, Solution

STAR = "*"


def solve_d0(inst: Instance) -> Solution | None:
    """Common member of every lattice, or ``None``.

    Glue every expansion to a shared star copy with hard links in both
    directions; a common member exists iff ``t`` stays unreachable from ``s``.
    The reachable closure is the smallest common member.
    """
    if inst.k == 0:
        return Solution.build(frozenset(), [])
    vertices = [SOURCE, SINK, *((STAR, v) for v in inst.universe)]
    edges = []
    for i, L in enumerate(inst.lattices, start=1):
        vertices += [(i, v) for v in inst.universe]
        edges += [(u, w, INF) for u, w in structural_edges(L, i)]
        for v in inst.universe:
            edges += [((STAR, v), (i, v), INF), ((i, v), (STAR, v), INF)]
    g = DiGraph(tuple(vertices), tuple(edges))
    reach = g.reachable([SOURCE])
    if SINK in reach:
        return None
    X = frozenset(v for v in inst.universe if (STAR, v) in reach)
    return Solution.build(X, [X] * inst.k)


def midpoint(Y1, Y2, d1: int, d2: int):
    """A set within ``d1`` of ``Y1`` and ``d2`` of ``Y2``, or ``None``.

    Starts from the common part plus the first half (canonical order) of each
    one-sided difference, then shifts elements of the symmetric difference
    toward whichever side is over budget.
    """
    Y1, Y2 = frozenset(Y1), frozenset(Y2)
    only1 = sorted(Y1 - Y2)
    only2 = sorted(Y2 - Y1)
    if len(only1) + len(only2) > d1 + d2:
        return None
    X = set(Y1 & Y2) | set(only1[: len(only1) // 2]) | set(only2[: len(only2) // 2])
    diff = sorted(Y1 ^ Y2)
    for target, budget in ((Y1, d1), (Y2, d2)):
        for v in diff:
            if len(X ^ target) <= budget:
                break
            if (v in X) != (v in target):
                X ^= {v}
    X = frozenset(X)
    assert len(X ^ Y1) <= d1 and len(X ^ Y2) <= d2
    return X


def solve_k2(inst: Instance) -> Solution | None:
    """Two functions: one min cut over both expansions joined by unit links."""
    if inst.k != 2:
        raise ValueError("solve_k2 needs exactly two functions")
    d1, d2 = inst.thresholds
    vertices = [SOURCE, SINK]
    edges = []
    for i, L in enumerate(inst.lattices, start=1):
        vertices += [(i, v) for v in inst.universe]
        edges += [(u, w, INF) for u, w in structural_edges(L, i)]
    for v in inst.universe:
        edges += [((1, v), (2, v), 1), ((2, v), (1, v), 1)]
    cut = min_cut(DiGraph(tuple(vertices), tuple(edges)), SOURCE, SINK)
    if cut.value > d1 + d2:
        return None
    Y1 = frozenset(v for v in inst.universe if (1, v) in cut.members)
    Y2 = frozenset(v for v in inst.universe if (2, v) in cut.members)
    return Solution.build(midpoint(Y1, Y2, d1, d2), [Y1, Y2])
