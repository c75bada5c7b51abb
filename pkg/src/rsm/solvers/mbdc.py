"""Multi-budgeted directed cut: construction, forbidden-edge elimination, search.

An instance asks for an (s,t)-cut ``X`` crossing at most ``budgets[i]`` edges
of each class and no forbidden edge.  Edges outside every class and outside
the forbidden set are unconstrained.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .. import stats
from ..errors import InfiniteCutError, ValidationError
from ..flow import INF, CutSide, DiGraph, min_cut
from ..lattice import SINK, SOURCE, structural_edges
from .instance import Instance, Solution, check_solution
from .poly import STAR


@dataclass(frozen=True)
class MbdcInstance:
    graph: DiGraph
    s: object
    t: object
    classes: tuple  # of frozensets of edge indices
    budgets: tuple
    forbidden: frozenset = frozenset()

    def __post_init__(self):
        m = len(self.graph.edges)
        if len(self.classes) != len(self.budgets):
            raise ValidationError("one budget per edge class is required")
        seen: set = set()
        for cls in self.classes:
            if seen & cls:
                raise ValidationError("edge classes must be pairwise disjoint")
            seen |= cls
        if any(not 0 <= e < m for e in seen | self.forbidden):
            raise ValidationError("edge index out of range")
        if any(not isinstance(b, int) or b < 0 for b in self.budgets):
            raise ValidationError("budgets must be non-negative integers")
        if self.s == self.t or self.s not in self.graph.index or self.t not in self.graph.index:
            raise ValidationError("s and t must be distinct graph vertices")

    def class_of(self) -> dict:
        return {e: i for i, cls in enumerate(self.classes) for e in cls}

    def usage(self, X) -> tuple[list[int], bool]:
        """Per-class crossing counts of ``X`` and whether a forbidden edge crosses."""
        owner = self.class_of()
        used = [0] * len(self.classes)
        bad = False
        for e, (u, v, _) in enumerate(self.graph.edges):
            if u in X and v not in X:
                if e in self.forbidden:
                    bad = True
                if e in owner:
                    used[owner[e]] += 1
        return used, bad

    def is_solution(self, X) -> bool:
        X = frozenset(X)
        if self.s not in X or self.t in X:
            return False
        used, bad = self.usage(X)
        return not bad and all(u <= b for u, b in zip(used, self.budgets))


def build_mbdc(inst: Instance) -> MbdcInstance:
    """Copies ``(i, v)`` per function, star copies ``('*', v)``, shared ``s`` and ``t``.

    Expansion edges are forbidden; class ``i`` holds the links between each
    star copy and its copy in expansion ``i``, in both directions.
    """
    vertices = [SOURCE, SINK, *((STAR, v) for v in inst.universe)]
    edges = []
    forbidden = set()
    classes = []
    for i, L in enumerate(inst.lattices, start=1):
        vertices += [(i, v) for v in inst.universe]
        for u, w in structural_edges(L, i):
            forbidden.add(len(edges))
            edges.append((u, w, 1))
        cls = set()
        for v in inst.universe:
            cls |= {len(edges), len(edges) + 1}
            edges += [((STAR, v), (i, v), 1), ((i, v), (STAR, v), 1)]
        classes.append(frozenset(cls))
    g = DiGraph(tuple(vertices), tuple(edges))
    return MbdcInstance(g, SOURCE, SINK, tuple(classes), tuple(inst.thresholds), frozenset(forbidden))


def eliminate_forbidden(m: MbdcInstance) -> MbdcInstance:
    """Replace forbidden edges by enough parallel copies to make them uncuttable.

    A forbidden edge of class ``i`` gets ``budgets[i] + 1`` copies in that
    class; unclassified forbidden edges get two copies each in a new class
    with budget 1.
    """
    if not m.forbidden:
        return m
    owner = m.class_of()
    k = len(m.classes)
    leftover = any(e not in owner for e in m.forbidden)
    new_classes = [set() for _ in range(k + int(leftover))]
    edges = []
    for e, edge in enumerate(m.graph.edges):
        c = owner.get(e, k if e in m.forbidden else None)
        if e in m.forbidden:
            copies = m.budgets[c] + 1 if c < k else 2
        else:
            copies = 1
        for _ in range(copies):
            if c is not None:
                new_classes[c].add(len(edges))
            edges.append(edge)
    budgets = m.budgets + ((1,) if leftover else ())
    g = DiGraph(m.graph.vertices, tuple(edges))
    return MbdcInstance(g, m.s, m.t, tuple(frozenset(c) for c in new_classes), budgets, frozenset())


class _PairView:
    """Edges aggregated by ordered vertex pair; free edges dropped."""

    def __init__(self, m: MbdcInstance):
        owner = m.class_of()
        k = len(m.classes)
        counts: dict = {}
        blocked: set = set()
        for e, (u, v, _) in enumerate(m.graph.edges):
            if e in m.forbidden:
                blocked.add((u, v))
                counts.setdefault((u, v), [0] * k)
            elif e in owner:
                counts.setdefault((u, v), [0] * k)[owner[e]] += 1
        self.counts = {p: tuple(c) for p, c in counts.items()}
        self.blocked = blocked
        self.pairs = sorted(self.counts, key=lambda p: (m.graph.index[p[0]], m.graph.index[p[1]]))
        self.out: dict = {v: [] for v in m.graph.vertices}
        for p in self.pairs:
            self.out[p[0]].append(p)


def solve_mbdc(m: MbdcInstance) -> CutSide | None:
    """Find a budget-respecting cut by branching on shortest s-t paths.

    A node holds the pairs already cut, the budgets left, and pairs that
    must stay uncut.  It is pruned when a max-flow lower bound on the
    remaining cut exceeds the budget left; it succeeds when the minimal
    minimum cut of the remaining graph fits the budgets.  Otherwise a
    shortest path is taken and branch ``j`` cuts its ``j``-th pair while
    protecting the pairs before it, so branches never overlap.
    """
    view = _PairView(m)
    verts = m.graph.vertices

    def weight(p, rem, protected):
        if p in view.blocked or p in protected:
            return INF
        cnt = view.counts[p]
        if any(c > r for c, r in zip(cnt, rem)):
            return INF
        return sum(cnt)

    def node(rem: tuple, deleted: frozenset, protected: frozenset):
        stats.bump("branch_nodes")
        live = [p for p in view.pairs if p not in deleted]
        edges = tuple((u, v, weight((u, v), rem, protected)) for u, v in live)
        g = DiGraph(verts, edges)
        try:
            cut = min_cut(g, m.s, m.t)
        except InfiniteCutError:
            return None
        if cut.value > sum(rem):
            return None
        X = cut.members
        used = [0] * len(rem)
        for u, v in live:
            if u in X and v not in X:
                for i, c in enumerate(view.counts[(u, v)]):
                    used[i] += c
        if all(a <= r for a, r in zip(used, rem)):
            return X
        path = _shortest_path(view, deleted, m.s, m.t)
        for j, p in enumerate(path):
            if weight(p, rem, protected) == INF:
                continue
            cnt = view.counts[p]
            found = node(tuple(r - c for r, c in zip(rem, cnt)), deleted | {p},
                         protected | frozenset(path[:j]))
            if found is not None:
                return found
        return None

    X = node(tuple(m.budgets), frozenset(), frozenset())
    if X is None:
        return None
    X = frozenset(X)
    used, _ = m.usage(X)
    assert m.is_solution(X)
    return CutSide(X, sum(used))


def _shortest_path(view: _PairView, deleted, s, t) -> list:
    prev = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for p in view.out[u]:
            if p not in deleted and p[1] not in prev:
                prev[p[1]] = p
                queue.append(p[1])
    path = []
    v = t
    while prev.get(v) is not None:
        p = prev[v]
        path.append(p)
        v = p[0]
    return path[::-1]


def solve_fpt_kd(inst: Instance) -> Solution | None:
    """Reduce to a budgeted cut over star and expansion copies, then map back."""
    if inst.k == 0:
        return Solution.build(frozenset(), [])
    m = build_mbdc(inst)
    cut = solve_mbdc(eliminate_forbidden(m))
    if cut is None:
        return None
    X = frozenset(v for v in inst.universe if (STAR, v) in cut.members)
    Ys = [frozenset(v for v in inst.universe if (i, v) in cut.members)
          for i in range(1, inst.k + 1)]
    sol = Solution.build(X, Ys)
    if not check_solution(inst, sol):
        raise AssertionError("budgeted cut did not map back to a valid solution")
    return sol
