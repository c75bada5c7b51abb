"""Balanced minimum cuts and their reduction to three functions."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .. import oracle
from ..errors import ValidationError
from ..solvers.instance import Instance
from ..submod import CutFunction, ExplicitFunction


@dataclass(frozen=True)
class UndirectedGraph:
    vertices: tuple  # includes s and t
    edges: tuple  # of 2-tuples
    s: str = "s"
    t: str = "t"

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices) or self.s not in vs or self.t not in vs or self.s == self.t:
            raise ValidationError("vertices must be unique and contain distinct s and t")
        for u, v in self.edges:
            if u not in vs or v not in vs or u == v:
                raise ValidationError(f"bad edge {(u, v)}")

    @property
    def inner(self) -> tuple:
        return tuple(sorted(v for v in self.vertices if v not in (self.s, self.t)))

    def cut_size(self, side) -> int:
        return sum((u in side) != (v in side) for u, v in self.edges)


def random_graph(rng: random.Random, n_inner: int, p: float = 0.5) -> UndirectedGraph:
    verts = ("s", "t", *(f"g{i}" for i in range(n_inner)))
    edges = tuple((u, v) for u, v in itertools.combinations(verts, 2) if rng.random() < p)
    return UndirectedGraph(verts, edges)


def _min_cuts(G: UndirectedGraph):
    """Every minimum (s,t)-cut side (containing ``s``), by enumeration."""
    inner = G.inner
    oracle.check_limit(len(inner), what="cut enumeration")
    sides = []
    for mask in range(1 << len(inner)):
        side = {G.s} | {v for i, v in enumerate(inner) if mask >> i & 1}
        sides.append((G.cut_size(side), frozenset(side)))
    best = min(c for c, _ in sides)
    return [X for c, X in sides if c == best]


def perfectly_balanced_cut(G: UndirectedGraph):
    """A minimum cut side holding exactly half the vertices, or ``None``."""
    if len(G.vertices) % 2:
        return None
    half = len(G.vertices) // 2
    return next((X for X in _min_cuts(G) if len(X) == half), None)


def most_balanced_cut(G: UndirectedGraph, ell: int):
    """A minimum cut side with at least ``ell`` vertices on each side, or ``None``."""
    total = len(G.vertices)
    return next((X for X in _min_cuts(G) if min(len(X), total - len(X)) >= ell), None)


def mostbalanced_to_perfect(G: UndirectedGraph, ell: int):
    """Pad with ``|V| - 2 ell`` isolated vertices; ``None`` marks ``ell > |V|/2``."""
    total = len(G.vertices)
    if 2 * ell > total:
        return None
    extra = []
    i = 0
    while len(extra) < total - 2 * ell:
        name = f"iso:{i:03d}"
        if name not in G.vertices:
            extra.append(name)
        i += 1
    return UndirectedGraph(G.vertices + tuple(extra), G.edges, G.s, G.t)


def balancedcut_to_rsm(G: UndirectedGraph) -> Instance:
    """Two unique-minimizer functions ``V + R`` and ``R`` plus the cut function of ``G'``.

    ``G'`` adds ``|V|/2`` new vertices ``R``, each joined to ``t``; the
    threshold is ``|V|/2``.
    """
    inner = G.inner
    if len(inner) % 2:
        raise ValidationError("the number of non-terminal vertices must be even")
    n = len(inner) // 2
    R = []
    i = 0
    while len(R) < n:
        name = f"rb:{i:03d}"
        if name not in G.vertices:
            R.append(name)
        i += 1
    universe = tuple(inner) + tuple(R)
    rename = {G.s: "s", G.t: "t"}
    edges = []
    for u, v in G.edges:
        u, v = rename.get(u, u), rename.get(v, v)
        edges += [(u, v, 1), (v, u, 1)]
    for r in R:
        edges += [(r, "t", 1), ("t", r, 1)]
    f1 = ExplicitFunction.of(universe, [universe])
    f2 = ExplicitFunction.of(universe, [R])
    f3 = CutFunction.from_edges(universe, edges)
    return Instance.create(universe, [f1, f2, f3], n)
