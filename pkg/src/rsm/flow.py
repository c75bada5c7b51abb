"""Directed cut graphs, exact maximum flow, and min-cut lattice condensation.

Costs are exact: ``int`` or ``fractions.Fraction``, with :data:`INF` as the
only non-finite value.  Flow amounts are always finite, so ``INF`` only ever
meets finite numbers in ``INF - x`` (which stays ``INF``) and in comparisons,
both of which are exact.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Hashable, Iterable

from . import stats
from .compact import CompactLattice
from .errors import InfiniteCutError, ValidationError

INF = math.inf


def as_cost(value):
    """Coerce ``value`` to an exact cost (int, Fraction or INF)."""
    if isinstance(value, bool):
        raise ValidationError(f"invalid cost {value!r}")
    if isinstance(value, int):
        c = value
    elif isinstance(value, Fraction):
        c = value.numerator if value.denominator == 1 else value
    elif isinstance(value, float):
        if math.isinf(value) and value > 0:
            return INF
        if math.isnan(value):
            raise ValidationError("NaN cost")
        c = Fraction(repr(value))
    elif isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "+inf", "infinity"):
            return INF
        try:
            c = Fraction(text)
        except ValueError:
            raise ValidationError(f"invalid cost {value!r}") from None
    else:
        raise ValidationError(f"invalid cost {value!r}")
    if isinstance(c, Fraction) and c.denominator == 1:
        c = c.numerator
    if c < 0:
        raise ValidationError(f"negative cost {value!r}")
    return c


def is_inf(c) -> bool:
    return c == INF


@dataclass(frozen=True)
class DiGraph:
    """Immutable weighted digraph; parallel edges are allowed."""

    vertices: tuple
    edges: tuple  # of (tail, head, cost)

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValidationError("duplicate vertex id")
        for u, v, c in self.edges:
            if u not in vs or v not in vs:
                raise ValidationError(f"edge {(u, v)} has an endpoint outside the vertex set")
            if u == v:
                raise ValidationError(f"self-loop at {u!r}")
            if not (c == INF or c >= 0):
                raise ValidationError(f"negative cost on edge {(u, v)}")

    @classmethod
    def build(cls, vertices: Iterable[Hashable], edges: Iterable) -> "DiGraph":
        return cls(tuple(vertices), tuple((u, v, as_cost(c)) for u, v, c in edges))

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> dict:
        out = {v: [] for v in self.vertices}
        for u, v, c in self.edges:
            out[u].append((v, c))
        return out

    def cut_value(self, members) -> object:
        """Total cost of edges leaving ``members``."""
        total = 0
        for u, v, c in self.edges:
            if u in members and v not in members:
                if c == INF:
                    return INF
                total += c
        return total

    def reachable(self, sources) -> set:
        seen = set(sources)
        queue = deque(seen)
        adj = self.adjacency
        while queue:
            u = queue.popleft()
            for v, c in adj[u]:
                if v not in seen and c != 0:
                    seen.add(v)
                    queue.append(v)
        return seen


@dataclass(frozen=True)
class CutSide:
    members: frozenset
    value: object


class _Network:
    """Arc-list residual network used by :func:`max_flow`."""

    def __init__(self, g: DiGraph):
        self.n = len(g.vertices)
        self.head: list[int] = []
        self.cap: list = []
        self.adj: list[list[int]] = [[] for _ in range(self.n)]
        idx = g.index
        for u, v, c in g.edges:
            if c == 0:
                continue
            a = len(self.head)
            self.head += [idx[v], idx[u]]
            self.cap += [c, 0]
            self.adj[idx[u]].append(a)
            self.adj[idx[v]].append(a + 1)

    def levels(self, s: int, t: int):
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                w = self.head[a]
                if level[w] < 0 and self.cap[a] > 0:
                    level[w] = level[u] + 1
                    queue.append(w)
        return level

    def blocking_flow(self, s: int, t: int, level: list[int]):
        """Push a blocking flow in the level graph; returns its value."""
        ptr = [0] * self.n
        total = 0
        while True:
            # iterative DFS for one augmenting path
            path: list[int] = []
            u = s
            while u != t:
                adj = self.adj[u]
                while ptr[u] < len(adj):
                    a = adj[ptr[u]]
                    w = self.head[a]
                    if self.cap[a] > 0 and level[w] == level[u] + 1:
                        break
                    ptr[u] += 1
                if ptr[u] == len(adj):
                    if u == s:
                        return total
                    level[u] = -1  # dead end
                    a = path.pop()
                    u = self.head[a ^ 1]
                    ptr[u] += 1
                    continue
                a = adj[ptr[u]]
                path.append(a)
                u = self.head[a]
            push = min(self.cap[a] for a in path)
            if push == INF:
                return INF
            for a in path:
                self.cap[a] -= push
                self.cap[a ^ 1] += push
            total += push

    def run(self, s: int, t: int):
        flow = 0
        while True:
            level = self.levels(s, t)
            if level[t] < 0:
                return flow
            pushed = self.blocking_flow(s, t, level)
            if pushed == INF:
                return INF
            flow += pushed


def max_flow(g: DiGraph, s, t):
    """Maximum (s,t)-flow by blocking flows (Dinic).

    Returns ``(value, residual)`` where ``residual`` is a :class:`DiGraph`
    holding one edge per arc with positive residual capacity.  An infinite
    value means every (s,t)-cut is infinite.
    """
    if s not in g.index or t not in g.index:
        raise ValidationError("source or sink missing from graph")
    if s == t:
        raise ValidationError("source and sink must differ")
    stats.bump("flow_calls")
    net = _Network(g)
    value = net.run(g.index[s], g.index[t])
    verts = g.vertices
    res_edges = []
    for a, h in enumerate(net.head):
        if net.cap[a] > 0:
            res_edges.append((verts[net.head[a ^ 1]], verts[h], net.cap[a]))
    return value, DiGraph(verts, tuple(res_edges))


def min_cut(g: DiGraph, s, t) -> CutSide:
    """Minimal minimum (s,t)-cut: everything reachable from ``s`` in the residual."""
    value, residual = max_flow(g, s, t)
    if value == INF:
        raise InfiniteCutError("no finite (s,t)-cut")
    return CutSide(frozenset(residual.reachable([s])), value)


def _reverse_reachable(g: DiGraph, target) -> set:
    back = {v: [] for v in g.vertices}
    for u, v, c in g.edges:
        if c != 0:
            back[v].append(u)
    seen = {target}
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for u in back[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def _scc(vertices, succ) -> dict:
    """Tarjan's strongly connected components; returns vertex -> component id."""
    index: dict = {}
    low: dict = {}
    comp: dict = {}
    on_stack: set = set()
    stack: list = []
    counter = 0
    ncomp = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            w = next(it, None)
            if w is not None:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def residual_condensation(g: DiGraph, residual: DiGraph, s, t, universe=None) -> CompactLattice:
    """Compact representation of all minimum (s,t)-cuts of ``g``.

    ``residual`` must come from a finite maximum flow on ``g``.  The ground
    set is ``universe`` (default: every vertex except ``s`` and ``t``, in
    graph order).  Members of the returned lattice are the vertex sets ``X``
    such that ``X + {s}`` is a minimum cut.
    """
    if universe is None:
        universe = tuple(v for v in g.vertices if v not in (s, t))
    src_side = residual.reachable([s])
    if t in src_side:
        raise InfiniteCutError("residual graph still has an augmenting path")
    sink_side = _reverse_reachable(residual, t)
    u0 = frozenset(v for v in universe if v in src_side)
    uinf = frozenset(v for v in universe if v in sink_side)
    rest = [v for v in universe if v not in src_side and v not in sink_side]
    rest_set = set(rest)
    succ = {v: [] for v in rest}
    for u, v, c in residual.edges:
        if u in rest_set and v in rest_set and c != 0:
            succ[u].append(v)
    comp = _scc(rest, succ)
    groups: dict = {}
    for v in rest:
        groups.setdefault(comp[v], set()).add(v)
    ids = sorted(groups)
    pos = {cid: i + 1 for i, cid in enumerate(ids)}
    edges = set()
    for u, v, c in residual.edges:
        if u not in rest_set or c == 0:
            continue
        if v in rest_set:
            if comp[u] != comp[v]:
                edges.add((pos[comp[u]], pos[comp[v]]))
        elif v in src_side:
            edges.add((pos[comp[u]], 0))
    return CompactLattice.create(universe, u0, [groups[c] for c in ids], uinf, edges)
