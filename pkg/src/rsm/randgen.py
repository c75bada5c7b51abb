"""Seeded random generators for functions, instances and MBDC graphs."""

from __future__ import annotations

import random

from .compact import CompactLattice
from .flow import INF
from .submod import CutFunction, ExplicitFunction, LatticeFunction

def element_names(n: int) -> tuple:
    return tuple(f"v{i}" for i in range(n))


def random_cut(rng: random.Random, universe, density=0.35, max_cost=5, inf_rate=0.1) -> CutFunction:
    verts = ["s", "t", *universe]
    edges = []
    for u in verts:
        for v in verts:
            if u == v or u == "t" or v == "s":
                continue
            if rng.random() < density:
                c = INF if rng.random() < inf_rate else rng.randint(0, max_cost)
                edges.append((u, v, c))
    # keep at least one finite cut: never put INF on s->t
    edges = [(u, v, c) for u, v, c in edges if not (u == "s" and v == "t" and c == INF)]
    return CutFunction.from_edges(universe, edges)


def finite_random_cut(rng: random.Random, universe, **kw) -> CutFunction:
    """Resample until the function has a finite minimum."""
    from .submod import to_lattice
    from .errors import InfiniteCutError
    while True:
        f = random_cut(rng, universe, **kw)
        try:
            to_lattice(f)
            return f
        except InfiniteCutError:
            continue


def random_lattice(rng: random.Random, universe, p_edge=0.3) -> CompactLattice:
    labels = [rng.randrange(-1, 4) for _ in universe]  # -1: Uinf, 0: U0
    u0 = {v for v, l in zip(universe, labels) if l == 0}
    uinf = {v for v, l in zip(universe, labels) if l == -1}
    groups: dict = {}
    for v, l in zip(universe, labels):
        if l > 0:
            groups.setdefault(l, set()).add(v)
    blocks = [groups[k] for k in sorted(groups)]
    edges = set()
    for a in range(1, len(blocks) + 1):
        for c in range(0, a):
            if rng.random() < p_edge:
                edges.add((a, c))
    return CompactLattice.create(universe, u0, blocks, uinf, edges)


def random_explicit(rng: random.Random, universe) -> ExplicitFunction:
    from .lattice import enumerate_members
    return ExplicitFunction.of(universe, enumerate_members(random_lattice(rng, universe)))


def random_function(rng: random.Random, universe, kind=None):
    kind = kind or rng.choice(("cut", "explicit", "lattice"))
    if kind == "cut":
        return finite_random_cut(rng, universe)
    if kind == "explicit":
        return random_explicit(rng, universe)
    return LatticeFunction(random_lattice(rng, universe))


def random_instance(rng: random.Random, n_max=8, k_max=4, d_max=3, per_function=False, kinds=None):
    from .solvers.instance import Instance
    n = rng.randint(1, n_max)
    k = rng.randint(1, k_max)
    universe = element_names(n)
    fs = [random_function(rng, universe, rng.choice(kinds) if kinds else None) for _ in range(k)]
    d = rng.randint(0, d_max)
    per = tuple(rng.randint(0, d) for _ in range(k)) if per_function else None
    return Instance.create(universe, fs, d, per)


def random_mbdc(rng: random.Random, n_max=10, k_max=3, budget_max=2, forbidden_rate=0.15):
    from .solvers.mbdc import MbdcInstance
    from .flow import DiGraph
    n = rng.randint(2, n_max)
    verts = ["s", "t", *(f"u{i}" for i in range(n - 2))]
    k = rng.randint(1, k_max)
    edges = []
    for u in verts:
        for v in verts:
            if u != v and rng.random() < 0.3:
                edges.append((u, v, 1))
    g = DiGraph.build(verts, edges)
    classes = [set() for _ in range(k)]
    forbidden = set()
    for e in range(len(edges)):
        r = rng.random()
        if r < forbidden_rate:
            forbidden.add(e)
            if rng.random() < 0.5:
                classes[rng.randrange(k)].add(e)
        elif r < 0.9:
            classes[rng.randrange(k)].add(e)
    budgets = tuple(rng.randint(0, budget_max) for _ in range(k))
    return MbdcInstance(g, "s", "t", tuple(frozenset(c) for c in classes), budgets, frozenset(forbidden))
