"""Exhaustive reference solver built only on :mod:`rsm.oracle`."""

from __future__ import annotations

import numpy as np

from .. import oracle
from .instance import Instance, Solution


def solve_brute(inst: Instance, limit: int | None = None) -> Solution | None:
    """First feasible ``X`` in mask order (element ``i`` of the sorted universe is bit ``i``)."""
    order = inst.universe
    n = len(order)
    oracle.check_limit(n, limit)
    if inst.k == 0:
        return Solution.build(frozenset(), [])
    ok = np.ones(1 << n, dtype=bool)
    witness = []
    for f, d in zip(inst.functions, inst.thresholds):
        dist, wit = oracle.distance_to_family(n, oracle.member_masks(f, order))
        ok &= dist <= d
        witness.append(wit)
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    x = int(hits[0])
    return Solution.build(oracle.set_of(x, order), [oracle.set_of(int(w[x]), order) for w in witness])


def brute_anchored(inst: Instance, anchor, d0: int, limit: int | None = None) -> Solution | None:
    """First ``X`` in mask order within ``d0`` of ``anchor`` that solves ``inst``."""
    order = inst.universe
    n = len(order)
    oracle.check_limit(n, limit)
    masks = oracle.all_masks(n)
    a = oracle.mask_of(anchor, order)
    flips = np.zeros(len(masks), dtype=np.int64)
    for i in range(n):
        flips += ((masks ^ a) >> i) & 1
    ok = flips <= d0
    witness = []
    for f, d in zip(inst.functions, inst.thresholds):
        dist, wit = oracle.distance_to_family(n, oracle.member_masks(f, order))
        ok &= dist <= d
        witness.append(wit)
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    x = int(hits[0])
    return Solution.build(oracle.set_of(x, order), [oracle.set_of(int(w[x]), order) for w in witness])
