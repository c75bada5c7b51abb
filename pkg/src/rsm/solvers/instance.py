"""Problem instances, solutions, and the verifier."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..errors import ValidationError
from ..lattice import gamma, is_member
from ..submod import check_universe, to_lattice


@dataclass(frozen=True)
class Instance:
    """``k`` functions over a shared ground set and per-function thresholds."""

    universe: tuple
    functions: tuple
    d: int
    per_function_d: tuple | None = None

    def __post_init__(self):
        check_universe(self.universe)
        if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 0:
            raise ValidationError("threshold d must be a non-negative integer")
        ground = set(self.universe)
        for i, f in enumerate(self.functions):
            if set(f.universe) != ground:
                raise ValidationError(f"function {i} is defined over a different ground set")
        if self.per_function_d is not None:
            if len(self.per_function_d) != len(self.functions):
                raise ValidationError("per_function_d must have one entry per function")
            if any(not isinstance(x, int) or x < 0 for x in self.per_function_d):
                raise ValidationError("per-function thresholds must be non-negative integers")

    @classmethod
    def create(cls, universe, functions, d, per_function_d=None) -> "Instance":
        per = None if per_function_d is None else tuple(int(x) for x in per_function_d)
        return cls(tuple(sorted(universe)), tuple(functions), int(d), per)

    @property
    def k(self) -> int:
        return len(self.functions)

    @property
    def thresholds(self) -> tuple:
        return self.per_function_d if self.per_function_d is not None else (self.d,) * self.k

    @cached_property
    def lattices(self) -> tuple:
        return tuple(to_lattice(f) for f in self.functions)

    def restrict(self, indices) -> "Instance":
        """Sub-instance on the chosen functions, keeping their thresholds."""
        idx = list(indices)
        th = self.thresholds
        sub = Instance(self.universe, tuple(self.functions[i] for i in idx), self.d,
                       tuple(th[i] for i in idx))
        if "lattices" in self.__dict__:
            sub.__dict__["lattices"] = tuple(self.lattices[i] for i in idx)
        return sub


@dataclass(frozen=True)
class Witness:
    Y: frozenset
    distance: int


@dataclass(frozen=True)
class Solution:
    X: frozenset
    witnesses: tuple  # of Witness, one per function

    @classmethod
    def build(cls, X, members) -> "Solution":
        X = frozenset(X)
        return cls(X, tuple(Witness(frozenset(Y), len(X ^ frozenset(Y))) for Y in members))


def nearest_members(inst: Instance, X):
    return [gamma(L, X) for L in inst.lattices]


def verify(inst: Instance, X) -> tuple[bool, list[int]]:
    """``ok`` iff every function has a minimizer within its threshold of ``X``."""
    X = frozenset(X)
    if not X <= frozenset(inst.universe):
        raise ValidationError("X is not a subset of the universe")
    dists = [g for g, _ in nearest_members(inst, X)]
    return all(g <= d for g, d in zip(dists, inst.thresholds)), dists


def certify(inst: Instance, X) -> Solution | None:
    """Solution with nearest-member witnesses, or ``None`` if ``X`` fails."""
    X = frozenset(X)
    found = nearest_members(inst, X)
    if any(g > d for (g, _), d in zip(found, inst.thresholds)):
        return None
    return Solution.build(X, [Y for _, Y in found])


def check_solution(inst: Instance, sol: Solution) -> bool:
    """Independent check of a solution's own witnesses."""
    if len(sol.witnesses) != inst.k:
        return False
    for L, w, d in zip(inst.lattices, sol.witnesses, inst.thresholds):
        if not is_member(L, w.Y) or len(sol.X ^ w.Y) != w.distance or w.distance > d:
            return False
    return True
