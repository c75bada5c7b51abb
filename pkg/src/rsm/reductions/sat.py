"""1-in-3 satisfiability and its reduction to robust separation with ``d = 1``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from ..errors import ValidationError
from .rsep import RSepInstance


@dataclass(frozen=True)
class Formula1in3:
    """Clauses of three literals; a literal is ``(variable, positive)``."""

    variables: tuple
    clauses: tuple

    def __post_init__(self):
        names = set(self.variables)
        if len(names) != len(self.variables):
            raise ValidationError("duplicate variable")
        for clause in self.clauses:
            if len(clause) != 3 or len(set(clause)) != 3:
                raise ValidationError("each clause needs exactly three distinct literals")
            if any(v not in names for v, _ in clause):
                raise ValidationError("clause uses an undeclared variable")

    def valid(self, assignment: dict) -> bool:
        return all(sum(assignment[v] == pos for v, pos in c) == 1 for c in self.clauses)


def lit_name(var: str, positive: bool) -> str:
    return f"lit:{'+' if positive else '-'}{var}"


def sat_brute(phi: Formula1in3):
    """First valid assignment in lexicographic order (False before True), or ``None``."""
    for values in itertools.product((False, True), repeat=len(phi.variables)):
        assignment = dict(zip(phi.variables, values))
        if phi.valid(assignment):
            return assignment
    return None


def random_formula(rng: random.Random, n_vars: int, n_clauses: int) -> Formula1in3:
    if n_vars < 3:
        raise ValidationError("clauses use three distinct variables, so at least three are needed")
    variables = tuple(f"x{i}" for i in range(1, n_vars + 1))
    clauses = []
    for _ in range(n_clauses):
        vs = rng.sample(variables, 3)
        clauses.append(tuple((v, rng.random() < 0.5) for v in vs))
    return Formula1in3(variables, tuple(clauses))


def sat1in3_to_rsep(phi: Formula1in3) -> RSepInstance:
    """Families per variable (two) and per clause (three), threshold 1."""
    m = len(phi.clauses)
    R = [f"r:{j}:{q}" for j in range(1, m + 1) for q in (1, 2, 3)]
    Z = [f"z:{j}" for j in range(1, m + 1)]
    lits = [lit_name(v, p) for v in phi.variables for p in (True, False)]
    universe = ("s", "t", *lits, *R, *Z)
    families = []
    for v in phi.variables:
        pos, neg = lit_name(v, True), lit_name(v, False)
        families.append([{"s", pos, neg, *R}])
        families.append([{pos, neg, "t"}])
    for j, clause in enumerate(phi.clauses, start=1):
        l1, l2, l3 = (lit_name(v, p) for v, p in clause)
        families.append([{l1, l2, l3, "t"}])
        families.append([{l1, f"z:{j}"}, {l2, f"r:{j}:2"}])
        families.append([{f"r:{j}:1", f"z:{j}"}, {l3, f"r:{j}:3"}])
    return RSepInstance.create(universe, "s", "t", families, 1)


def sat_certificate(phi: Formula1in3, assignment: dict) -> frozenset:
    """The separating set induced by a valid assignment."""
    m = len(phi.clauses)
    X = {"s"} | {f"r:{j}:{q}" for j in range(1, m + 1) for q in (1, 2, 3)}
    for v in phi.variables:
        X.add(lit_name(v, assignment[v]))
    for j, clause in enumerate(phi.clauses, start=1):
        v, p = clause[2]
        if assignment[v] != p:
            X.add(f"z:{j}")
    return frozenset(X)
