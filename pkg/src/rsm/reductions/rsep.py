"""Robust separation: distances, brute force, and the reduction to cut functions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import oracle
from ..errors import ValidationError
from ..flow import INF
from ..solvers.instance import Instance
from ..submod import CutFunction, ExplicitFunction


@dataclass(frozen=True)
class RSepInstance:
    """Universe with terminals ``s``/``t``, families of disjoint sets, threshold ``d``."""

    universe: tuple
    s: str
    t: str
    families: tuple  # of tuples of frozensets
    d: int

    def __post_init__(self):
        ground = set(self.universe)
        if len(ground) != len(self.universe):
            raise ValidationError("duplicate element in universe")
        if self.s not in ground or self.t not in ground or self.s == self.t:
            raise ValidationError("s and t must be distinct universe elements")
        if self.d < 0:
            raise ValidationError("threshold must be non-negative")
        for fam in self.families:
            seen: set = set()
            for S in fam:
                if not S <= ground:
                    raise ValidationError("family set leaves the universe")
                if seen & S:
                    raise ValidationError("sets within a family must be pairwise disjoint")
                seen |= S

    @classmethod
    def create(cls, universe, s, t, families, d) -> "RSepInstance":
        fams = tuple(tuple(frozenset(S) for S in fam) for fam in families)
        return cls(tuple(universe), s, t, fams, int(d))

    @property
    def inner(self) -> tuple:
        """Universe without the terminals, in canonical order."""
        return tuple(sorted(v for v in self.universe if v not in (self.s, self.t)))


def rsep_dist(X, S, s, t):
    X, S = frozenset(X), frozenset(S)
    if s in S and t in S:
        return math.inf
    if s in S:
        return len(S - X)
    if t in S:
        return len(S & X)
    return min(len(S - X), len(S & X))


def family_distance(X, family, s, t):
    return sum(rsep_dist(X, S, s, t) for S in family)


def is_rsep_solution(r: RSepInstance, X) -> bool:
    X = frozenset(X)
    return (r.s in X and r.t not in X
            and all(family_distance(X, fam, r.s, r.t) <= r.d for fam in r.families))


def rsep_solve_brute(r: RSepInstance, limit: int | None = None):
    """First separating set in mask order over the non-terminal elements, or ``None``."""
    order = r.inner
    n = len(order)
    oracle.check_limit(n, limit)
    pos = {v: i for i, v in enumerate(order)}
    masks = oracle.all_masks(n)
    ok = np.ones(len(masks), dtype=bool)
    for fam in r.families:
        total = np.zeros(len(masks), dtype=np.int64)
        for S in fam:
            if r.s in S and r.t in S:
                return None
            inside = np.zeros(len(masks), dtype=np.int64)
            for v in S:
                if v in pos:
                    inside += (masks >> pos[v]) & 1
            if r.s in S:
                inside += 1
            size = len(S)
            if r.s in S:
                total += size - inside
            elif r.t in S:
                total += inside
            else:
                total += np.minimum(inside, size - inside)
        ok &= total <= r.d
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    return oracle.set_of(int(hits[0]), order) | {r.s}


def infeasible_instance(d: int) -> Instance:
    """Two unique minimizers at distance ``2d + 1``: never solvable."""
    dummies = [f"x:{i:03d}" for i in range(2 * d + 1)]
    return Instance.create(dummies, [ExplicitFunction.of(dummies, [[]]),
                                     ExplicitFunction.of(dummies, [dummies])], d)


def rsep_to_rsm(r: RSepInstance) -> Instance:
    """One cut function per family: hard cliques on every family set."""
    if any(r.s in S and r.t in S for fam in r.families for S in fam):
        return infeasible_instance(r.d)
    rename = {r.s: "s", r.t: "t"}
    inner = r.inner
    functions = []
    for fam in r.families:
        edges = []
        for S in fam:
            members = sorted(rename.get(v, v) for v in S)
            edges += [(u, v, INF) for u in members for v in members if u != v]
        functions.append(CutFunction.from_edges(inner, edges))
    return Instance.create(inner, functions, r.d)


def pad_rsep_threshold(r: RSepInstance, target_d: int) -> RSepInstance:
    """Raise the threshold from 1 to ``target_d`` with dummy elements.

    ``2 * target_d`` dummies ``D`` are added; a fixed ``2 * target_d - 1``
    of them form an extra set in every family, and two new families hold
    ``D + {s}`` and ``D + {t}``.
    """
    if r.d != 1:
        raise ValidationError("threshold padding starts from an instance with d = 1")
    if target_d < 1:
        raise ValidationError("target threshold must be at least 1")
    used = set(r.universe)
    D = [f"dummy:{i:03d}" for i in range(2 * target_d)]
    if used & set(D):
        raise ValidationError("dummy names collide with the universe")
    hat = frozenset(D[: 2 * target_d - 1])
    families = [tuple(fam) + (hat,) for fam in r.families]
    families.append((frozenset(D) | {r.s},))
    families.append((frozenset(D) | {r.t},))
    return RSepInstance.create(tuple(r.universe) + tuple(D), r.s, r.t, families, target_d)


def padded_certificate(X, target_d: int) -> frozenset:
    """Lift a separating set of the ``d = 1`` instance through :func:`pad_rsep_threshold`."""
    return frozenset(X) | {f"dummy:{i:03d}" for i in range(target_d)}
