"""Closest-set search and the solver that tries every tuple of minimizers."""

from __future__ import annotations

import math

import numpy as np

from .. import stats
from ..errors import CapExceeded
from ..lattice import DEFAULT_MEMBER_CAP, enumerate_members
from .instance import Instance, Solution

ENUM_POSITIONS = 20


def closest_string(centers, radii):
    """A set within ``radii[i]`` of every ``centers[i]``, or ``None``.

    Only positions where the centers disagree matter.  Small cases are
    enumerated with numpy; otherwise a search tree starts at the first center
    and flips one of ``r_i + 1`` disagreeing positions of a violated center,
    to depth ``radii[0]``.
    """
    centers = [frozenset(c) for c in centers]
    radii = list(radii)
    if not centers:
        raise ValueError("closest_string needs at least one center")
    common = frozenset.intersection(*centers)
    positions = sorted(frozenset.union(*centers) - common)
    tree_estimate = (max(radii) + 1) ** min(radii[0], len(positions))
    if len(positions) <= ENUM_POSITIONS and (1 << len(positions)) <= tree_estimate:
        return _enumerate(centers, radii, common, positions)
    return _search(centers, radii)


def _enumerate(centers, radii, common, positions):
    m = len(positions)
    masks = np.arange(1 << m, dtype=np.int64)
    ok = np.ones(len(masks), dtype=bool)
    pos = {v: i for i, v in enumerate(positions)}
    for c, r in zip(centers, radii):
        cm = sum(1 << pos[v] for v in c if v in pos)
        x = masks ^ cm
        dist = np.zeros(len(masks), dtype=np.int64)
        for i in range(m):
            dist += (x >> i) & 1
        ok &= dist <= r
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    x = int(hits[0])
    return common | frozenset(v for i, v in enumerate(positions) if x >> i & 1)


def _search(centers, radii):
    def rec(cand: frozenset, left: int):
        stats.bump("branch_nodes")
        bad = next((i for i, (c, r) in enumerate(zip(centers, radii)) if len(cand ^ c) > r), None)
        if bad is None:
            return cand
        if left == 0:
            return None
        diff = sorted(cand ^ centers[bad])
        if len(diff) > radii[bad] + left:
            return None
        for v in diff[: radii[bad] + 1]:
            found = rec(cand ^ {v}, left - 1)
            if found is not None:
                return found
        return None

    return rec(centers[0], radii[0])


def solve_enumerative(inst: Instance, cap: int = DEFAULT_MEMBER_CAP) -> Solution | None:
    """Try tuples of minimizers, one per function, and solve each as a closest set.

    Tuples are built one function at a time; a prefix is abandoned as soon
    as its own closest-set problem has no answer, which never skips a
    feasible full tuple.
    """
    if inst.k == 0:
        return Solution.build(frozenset(), [])
    members = [enumerate_members(L, cap) for L in inst.lattices]
    product = math.prod(len(m) for m in members)
    if product > cap:
        raise CapExceeded(f"{product} minimizer tuples exceed the product cap {cap}",
                          {"product_cap": (cap, product)})
    th = inst.thresholds

    def rec(prefix: list):
        j = len(prefix)
        if j and closest_string(prefix, th[:j]) is None:
            return None
        if j == inst.k:
            return prefix
        for Y in members[j]:
            if any(len(Y ^ P) > th[j] + th[i] for i, P in enumerate(prefix)):
                continue
            found = rec(prefix + [Y])
            if found is not None:
                return found
        return None

    chosen = rec([])
    if chosen is None:
        return None
    return Solution.build(closest_string(chosen, th), chosen)
