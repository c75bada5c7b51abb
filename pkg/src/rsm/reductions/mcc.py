"""Multicolored clique to many functions with path-shaped minimizer lattices."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from ..compact import CompactLattice
from ..errors import ValidationError
from ..solvers.instance import Instance
from ..submod import ExplicitFunction, LatticeFunction


@dataclass(frozen=True)
class MulticoloredGraph:
    classes: tuple  # of tuples of vertex names
    edges: tuple  # of (u, v)

    def __post_init__(self):
        color = {}
        for i, cls in enumerate(self.classes):
            for v in cls:
                if v in color:
                    raise ValidationError(f"vertex {v!r} appears twice")
                color[v] = i
        for u, v in self.edges:
            if u not in color or v not in color:
                raise ValidationError(f"edge {(u, v)} has an unknown endpoint")
            if color[u] == color[v]:
                raise ValidationError("edges must join different classes")

    @property
    def k(self) -> int:
        return len(self.classes)

    def color(self) -> dict:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def pair_edges(self) -> dict:
        """``(i, j) -> edges`` with ``i < j``, oriented from class ``i`` to ``j``."""
        col = self.color()
        out = {p: [] for p in itertools.combinations(range(self.k), 2)}
        for u, v in self.edges:
            if col[u] > col[v]:
                u, v = v, u
            out[(col[u], col[v])].append((u, v))
        return out

    def is_clique(self, chosen) -> bool:
        chosen = list(chosen)
        col = self.color()
        if sorted(col[v] for v in chosen) != list(range(self.k)):
            return False
        es = {frozenset(e) for e in self.edges}
        return all(frozenset((a, b)) in es for a, b in itertools.combinations(chosen, 2))


def random_planted_mcc(rng: random.Random, k: int = 3, n: int = 3, m: int = 3, isolate_clique: bool = True):
    """Graph with ``n`` vertices per class, ``m`` edges per class pair and a planted clique.

    With ``isolate_clique`` the extra edges avoid the clique vertices, so each
    of them has exactly one neighbour in every other class.  The gadget
    certificate is within the threshold only in that case: an incidency
    gadget charges ``deg - 1`` extra for a clique vertex with ``deg``
    neighbours in the paired class.
    """
    if m < 1 or m > n * n:
        raise ValidationError("need 1 <= m <= n*n edges per class pair")
    if isolate_clique and m - 1 > (n - 1) ** 2:
        raise ValidationError("need m - 1 <= (n-1)^2 extra edges away from the clique")
    classes = tuple(tuple(f"c{i}v{h}" for h in range(n)) for i in range(k))
    clique = [rng.choice(cls) for cls in classes]
    edges = []
    for i, j in itertools.combinations(range(k), 2):
        chosen = {(clique[i], clique[j])}
        pool = [(a, b) for a in classes[i] for b in classes[j] if (a, b) not in chosen
                and not (isolate_clique and (a == clique[i] or b == clique[j]))]
        chosen |= set(rng.sample(pool, m - 1))
        edges += sorted(chosen)
    return MulticoloredGraph(classes, tuple(edges)), tuple(clique)


@dataclass(frozen=True)
class PaddedGraph:
    classes: tuple  # per class, vertex names in index order (index h = position + 1)
    pairs: dict  # (i, j) -> list of (u, v), index order
    n: int
    m: int


def _lengths(k, n, m):
    kp = k + k * (k - 1) // 2
    half = k * n + (k * (k - 1) // 2) * m
    return {
        "sel_v": half - n - 2 * kp + 2,
        "path_v": half - n - 2 * kp + 3,
        "sel_e": half - m - 2 * kp + 2,
        "path_e": half - m - 2 * kp + 3,
        "inc": half - m - n - 2 * kp + 6,
    }


def pad_graph(G: MulticoloredGraph) -> PaddedGraph:
    """Equalize class sizes and pair sizes.

    Short edge sets get matching edges on new vertices first, then classes
    get isolated vertices up to a common size.  Further isolated vertices are
    added while any prefix length used by the gadgets would be negative.
    """
    if G.k < 2:
        raise ValidationError("need at least two classes")
    classes = [list(cls) for cls in G.classes]
    pairs = {p: list(es) for p, es in G.pair_edges().items()}
    m = max(1, max(len(es) for es in pairs.values()))
    counter = itertools.count()
    taken = {v for cls in classes for v in cls}

    def fresh(i):
        while True:
            name = f"pad:{i}:{next(counter):03d}"
            if name not in taken:
                taken.add(name)
                return name

    for (i, j), es in pairs.items():
        while len(es) < m:
            a, b = fresh(i), fresh(j)
            classes[i].append(a)
            classes[j].append(b)
            es.append((a, b))
    n = max(len(cls) for cls in classes)
    while min(_lengths(G.k, n, m).values()) < 0:
        n += 1
    for i, cls in enumerate(classes):
        while len(cls) < n:
            cls.append(fresh(i))
    return PaddedGraph(tuple(tuple(c) for c in classes), pairs, n, m)


def _path(universe, u0, blocks, uinf) -> LatticeFunction:
    """Lattice whose members are ``u0``, ``u0 + blocks[0]``, ... (prefixes)."""
    edges = [(j, j - 1) for j in range(1, len(blocks) + 1)]
    return LatticeFunction(CompactLattice.create(universe, u0, blocks, uinf, edges))


def mcc_to_rsm(G: MulticoloredGraph, with_certificate_for=None):
    """Build the gadget instance; optionally also the set certifying a given clique.

    Returns the instance, or ``(instance, X)`` when a clique is passed.
    """
    P = pad_graph(G)
    k, n, m = G.k, P.n, P.m
    size = k * n + len(P.pairs) * m  # |V| + |E|
    w = len(str(max(size, n, m)))
    vp = {(i, h): f"v+:{i + 1}:{h:0{w}d}" for i in range(k) for h in range(1, n + 1)}
    vm = {(i, h): f"v-:{i + 1}:{h:0{w}d}" for i in range(k) for h in range(1, n + 1)}
    ep = {(p, h): f"e+:{p[0] + 1}-{p[1] + 1}:{h:0{w}d}" for p in P.pairs for h in range(1, m + 1)}
    em = {(p, h): f"e-:{p[0] + 1}-{p[1] + 1}:{h:0{w}d}" for p in P.pairs for h in range(1, m + 1)}
    R = [f"r:{x:0{w}d}" for x in range(1, size + 1)]
    Rp = [f"rp:{x:0{w}d}" for x in range(1, size + 1)]
    D = {f"d:{x:0{w}d}" for x in range(1, size + 1)}
    Dp = {f"dp:{x:0{w}d}" for x in range(1, size + 1)}
    Vp, Vm, Ep, Em = set(vp.values()), set(vm.values()), set(ep.values()), set(em.values())
    universe = tuple(sorted(Vp | Vm | Ep | Em | set(R) | set(Rp) | D | Dp))
    Rs = set(R)
    half = size
    kp = k + len(P.pairs)
    L = _lengths(k, n, m)

    def Vi(sign, i):
        src = vp if sign == "+" else vm
        return {src[(i, h)] for h in range(1, n + 1)}

    def Eij(sign, p):
        src = ep if sign == "+" else em
        return {src[(p, h)] for h in range(1, m + 1)}

    def Rp_prefix(length):
        return set(Rp[:length])

    funcs = []

    def unique(Y):
        funcs.append(ExplicitFunction.of(universe, [Y]))

    unique(Rs | Vp | Vm | Ep | Em | D | Dp)
    unique(Rs)
    unique(Rs | set(Rp) | Vp | Vm | Ep | Em | D)
    unique(Rs | set(Rp) | D)
    unique(set(R[:kp]) | (set(Rp) - Rp_prefix(kp)) | Vm | Em | D)

    for i in range(k):
        pre2, pre3 = Rp_prefix(L["sel_v"]), Rp_prefix(L["path_v"])
        unique(pre2 | Vi("+", i) | Vm | Em | D)
        unique(pre2 | (Vm - Vi("-", i)) | Em | D)
        base = pre3 | (Vm - Vi("-", i)) | Em | D
        tail = Rs | (set(Rp) - pre3) | (Vp - Vi("+", i)) | Ep | Dp
        funcs.append(_path(universe, base | {vp[(i, 1)]},
                           [{vp[(i, h)], vm[(i, h - 1)]} for h in range(2, n + 1)],
                           tail | {vm[(i, n)]}))
        funcs.append(_path(universe, base | {vp[(i, n)]},
                           [{vp[(i, h)], vm[(i, h + 1)]} for h in range(n - 1, 0, -1)],
                           tail | {vm[(i, 1)]}))

    for p in P.pairs:
        pre2, pre3 = Rp_prefix(L["sel_e"]), Rp_prefix(L["path_e"])
        unique(pre2 | Eij("+", p) | Vm | Em | D)
        unique(pre2 | Vm | (Em - Eij("-", p)) | D)
        base = pre3 | Vm | (Em - Eij("-", p)) | D
        tail = Rs | (set(Rp) - pre3) | Vp | (Ep - Eij("+", p)) | Dp
        funcs.append(_path(universe, base | {ep[(p, 1)]},
                           [{ep[(p, h)], em[(p, h - 1)]} for h in range(2, m + 1)],
                           tail | {em[(p, m)]}))
        funcs.append(_path(universe, base | {ep[(p, m)]},
                           [{ep[(p, h)], em[(p, h + 1)]} for h in range(m - 1, 0, -1)],
                           tail | {em[(p, 1)]}))

    index = [{v: h for h, v in enumerate(cls, start=1)} for cls in P.classes]
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            p = (min(i, j), max(i, j))
            side = 0 if i < j else 1
            incident = {h: (set(), set()) for h in range(1, n + 1)}
            for h_e, e in enumerate(P.pairs[p], start=1):
                h_v = index[i][e[side]]
                incident[h_v][0].add(ep[(p, h_e)])
                incident[h_v][1].add(em[(p, h_e)])
            pre = Rp_prefix(L["inc"])
            base = pre | (Vm - Vi("-", i)) | (Em - Eij("-", p)) | D
            tail = Rs | (set(Rp) - pre) | (Vp - Vi("+", i)) | (Ep - Eij("+", p)) | Dp
            blocks = [{vp[(i, h)], vm[(i, h - 1)]} | incident[h][0] | incident[h - 1][1]
                      for h in range(2, n + 1)]
            funcs.append(_path(universe, base | {vp[(i, 1)]} | incident[1][0], blocks,
                               tail | {vm[(i, n)]} | incident[n][1]))

    inst = Instance.create(universe, funcs, 2 * half)
    if with_certificate_for is None:
        return inst
    clique = list(with_certificate_for)
    if not G.is_clique(clique):
        raise ValidationError("certificate vertices do not form a multicolored clique")
    col = G.color()
    picked = {col[v]: v for v in clique}
    Kp = {vp[(i, index[i][picked[i]])] for i in range(k)}
    Km = {vm[(i, index[i][picked[i]])] for i in range(k)}
    EKp, EKm = set(), set()
    for p, es in P.pairs.items():
        for h, (u, v) in enumerate(es, start=1):
            if picked[p[0]] == u and picked[p[1]] == v:
                EKp.add(ep[(p, h)])
                EKm.add(em[(p, h)])
    X = (Rs | D | Vm | Em | Kp | EKp) - (Km | EKm)
    return inst, frozenset(X)


def random_mcc(rng: random.Random, k: int = 3, n: int = 3, m: int = 3) -> MulticoloredGraph:
    """Graph with ``m`` uniformly random edges per class pair; no clique is planted."""
    if m < 0 or m > n * n:
        raise ValidationError("need 0 <= m <= n*n edges per class pair")
    classes = tuple(tuple(f"c{i}v{h}" for h in range(n)) for i in range(k))
    edges = []
    for i, j in itertools.combinations(range(k), 2):
        pool = [(a, b) for a in classes[i] for b in classes[j]]
        edges += sorted(rng.sample(pool, m))
    return MulticoloredGraph(classes, tuple(edges))
