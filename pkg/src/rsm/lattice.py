"""Queries on compact lattices: membership, enumeration, expansion, distance."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .compact import CompactLattice
from .errors import LatticeOverflow, ValidationError
from .flow import INF, DiGraph, min_cut

SOURCE = "s"
SINK = "t"

DEFAULT_MEMBER_CAP = 10**6


def is_member(L: CompactLattice, Y) -> bool:
    Y = frozenset(Y)
    if not L.u0 <= Y or Y & L.uinf or not Y <= frozenset(L.universe):
        return False
    chosen = [True] + [False] * L.b
    for j, blk in enumerate(L.blocks, start=1):
        inside = blk & Y
        if inside:
            if inside != blk:
                return False
            chosen[j] = True
    return all(chosen[c] for a, c in L.dag if chosen[a])


def _decision_order(L: CompactLattice) -> list[int]:
    """Block indices ordered so that every successor comes first."""
    succ = L.successors()
    order: list[int] = []
    state = [0] * (L.b + 1)
    for root in range(1, L.b + 1):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            u, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                order.append(u)
            elif w != 0 and not state[w]:
                state[w] = 1
                stack.append((w, iter(succ[w])))
    return order


def enumerate_members(L: CompactLattice, cap: int = DEFAULT_MEMBER_CAP) -> list[frozenset]:
    """All members of ``L`` by depth-first search over DAG-closed block sets.

    Blocks are decided successors-first, so "include" is allowed only when
    every successor is already included and no branch ever dead-ends.  The
    output order is deterministic (exclude before include).  Raises
    :class:`LatticeOverflow` once more than ``cap`` members exist.
    """
    if cap < 1:
        raise ValidationError("cap must be at least 1")
    order = _decision_order(L)
    succ = L.successors()
    chosen = [True] + [False] * L.b
    out: list[frozenset] = []

    def rec(i: int, acc: frozenset):
        if i == len(order):
            out.append(acc)
            if len(out) > cap:
                raise LatticeOverflow(
                    f"lattice has more than {cap} members", {"member_cap": (cap, len(out))}
                )
            return
        j = order[i]
        rec(i + 1, acc)
        if all(chosen[c] for c in succ[j]):
            chosen[j] = True
            rec(i + 1, acc | L.blocks[j - 1])
            chosen[j] = False

    rec(0, L.u0)
    return out


def count_members(L: CompactLattice, cap: int = DEFAULT_MEMBER_CAP) -> int | None:
    """Member count, or ``None`` when it exceeds ``cap``."""
    try:
        return len(enumerate_members(L, cap))
    except LatticeOverflow:
        return None


@dataclass(frozen=True)
class ExpandedGraph:
    """The clique expansion of a compact lattice: one vertex copy per element."""

    graph: DiGraph
    back: dict  # copy vertex -> ground element
    copy: dict  # ground element -> copy vertex


def structural_edges(L: CompactLattice, tag=0):
    """Yield the (tail, head) pairs of the expansion, copies named ``(tag, v)``."""
    parts = [L.u0, *L.blocks, L.uinf]
    for part in parts:
        members = sorted(part, key=str)
        for u in members:
            for v in members:
                if u != v:
                    yield (tag, u), (tag, v)
    for a, c in L.dag:
        for u in sorted(L.part(a), key=str):
            for v in sorted(L.part(c), key=str):
                yield (tag, u), (tag, v)
    for u in sorted(L.u0, key=str):
        yield (tag, u), SOURCE
        yield SOURCE, (tag, u)
    for u in sorted(L.uinf, key=str):
        yield (tag, u), SINK
        yield SINK, (tag, u)


@lru_cache(maxsize=4096)
def expand_graph(L: CompactLattice, tag=0) -> ExpandedGraph:
    """Expand every DAG node into a complete digraph on copies of its elements.

    Every structural edge gets cost ``INF``: a copy set ``X`` has no leaving
    edge exactly when ``X`` is a member.
    """
    copy = {v: (tag, v) for v in L.universe}
    vertices = (SOURCE, SINK, *copy.values())
    edges = tuple((u, v, INF) for u, v in structural_edges(L, tag))
    return ExpandedGraph(DiGraph(vertices, edges), {c: v for v, c in copy.items()}, copy)


def gamma(L: CompactLattice, Z) -> tuple[int, frozenset]:
    """Hamming distance from ``Z`` to the nearest member, with a witness.

    One min cut on the expansion plus unit penalties: ``s -> v`` for
    ``v in Z`` (paid when ``v`` is left out) and ``v -> t`` for ``v`` not in
    ``Z`` (paid when ``v`` is taken).  The minimal min cut fixes the witness.
    """
    Z = frozenset(Z)
    ex = expand_graph(L)
    extra = []
    for v in L.universe:
        c = ex.copy[v]
        extra.append((SOURCE, c, 1) if v in Z else (c, SINK, 1))
    g = DiGraph(ex.graph.vertices, ex.graph.edges + tuple(extra))
    cut = min_cut(g, SOURCE, SINK)
    nearest = frozenset(ex.back[c] for c in cut.members if c in ex.back)
    return int(cut.value), nearest
