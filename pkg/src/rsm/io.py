"""JSON instance files and result reports.

Everything written here is canonical: keys sorted, every set emitted as a
sorted list, so dumping a loaded file is a byte-stable fixed point.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .compact import CompactLattice
from .errors import RSMError, ValidationError
from .flow import INF, as_cost
from .solvers.instance import Instance, Solution
from .submod import CutFunction, ExplicitFunction, LatticeFunction

KINDS = ("cut", "explicit", "lattice")


def _cost_out(c):
    if c == INF:
        return "inf"
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return int(c)


def _cost_key(c):
    return (1, 0) if c == INF else (0, c)


def _names(value, what) -> list:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ValidationError(f"{what} must be an array of strings")
    return value


def _field(obj, key, what):
    if not isinstance(obj, dict) or key not in obj:
        raise ValidationError(f"{what} is missing field {key!r}")
    return obj[key]


def function_to_dict(f) -> dict:
    if isinstance(f, CutFunction):
        edges = sorted(f.graph.edges, key=lambda e: (e[0], e[1], _cost_key(e[2])))
        return {"kind": "cut", "edges": [[u, v, _cost_out(c)] for u, v, c in edges]}
    if isinstance(f, ExplicitFunction):
        fam = sorted((sorted(Y) for Y in f.family), key=lambda Y: (len(Y), Y))
        return {"kind": "explicit", "minimizers": fam}
    return {"kind": "lattice", **lattice_to_dict(f.lattice)}


def lattice_to_dict(L: CompactLattice) -> dict:
    return {
        "U0": sorted(L.u0),
        "Uinf": sorted(L.uinf),
        "blocks": [sorted(bk) for bk in L.blocks],
        "dag_edges": [list(e) for e in L.dag],
    }


def function_from_dict(obj, universe, where="function") -> object:
    kind = _field(obj, "kind", where)
    if kind not in KINDS:
        raise ValidationError(f"{where}: kind must be one of {', '.join(KINDS)}, got {kind!r}")
    if kind == "cut":
        edges = _field(obj, "edges", where)
        if not isinstance(edges, list):
            raise ValidationError(f"{where}: edges must be an array")
        parsed = []
        for e in edges:
            if not isinstance(e, list) or len(e) != 3:
                raise ValidationError(f"{where}: each edge must be [tail, head, cost]")
            u, v, c = e
            if not isinstance(u, str) or not isinstance(v, str):
                raise ValidationError(f"{where}: edge endpoints must be strings")
            parsed.append((u, v, as_cost(c)))
        return CutFunction.from_edges(universe, parsed)
    if kind == "explicit":
        fam = _field(obj, "minimizers", where)
        if not isinstance(fam, list):
            raise ValidationError(f"{where}: minimizers must be an array of arrays")
        return ExplicitFunction.of(universe, [_names(Y, f"{where}: minimizer") for Y in fam])
    u0 = _names(_field(obj, "U0", where), f"{where}: U0")
    uinf = _names(_field(obj, "Uinf", where), f"{where}: Uinf")
    blocks = _field(obj, "blocks", where)
    if not isinstance(blocks, list):
        raise ValidationError(f"{where}: blocks must be an array of arrays")
    blocks = [_names(bk, f"{where}: block") for bk in blocks]
    dag = _field(obj, "dag_edges", where)
    if not isinstance(dag, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(type(x) is int for x in e) for e in dag):
        raise ValidationError(f"{where}: dag_edges must be an array of [from, to] integer pairs")
    return LatticeFunction(CompactLattice.create(universe, u0, blocks, uinf, dag))


def instance_to_dict(inst: Instance) -> dict:
    out = {
        "universe": sorted(inst.universe),
        "d": inst.d,
        "functions": [function_to_dict(f) for f in inst.functions],
    }
    if inst.per_function_d is not None:
        out["per_function_d"] = list(inst.per_function_d)
    return out


def instance_from_dict(obj) -> Instance:
    if not isinstance(obj, dict):
        raise ValidationError("instance file must hold a JSON object")
    universe = sorted(_names(_field(obj, "universe", "instance"), "universe"))
    d = _field(obj, "d", "instance")
    if type(d) is not int or d < 0:
        raise ValidationError("threshold d must be a non-negative integer")
    per = obj.get("per_function_d")
    if per is not None and (not isinstance(per, list) or not all(type(x) is int for x in per)):
        raise ValidationError("per_function_d must be an array of integers")
    funcs = _field(obj, "functions", "instance")
    if not isinstance(funcs, list):
        raise ValidationError("functions must be an array")
    functions = [function_from_dict(f, universe, f"function {i}") for i, f in enumerate(funcs)]
    return Instance.create(universe, functions, d, per)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def dumps_instance(inst: Instance) -> str:
    return dumps(instance_to_dict(inst))


def loads_instance(text: str) -> Instance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from None
    return instance_from_dict(obj)


def load_instance(path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise RSMError(f"cannot read {path}: {exc.strerror}") from None
    return loads_instance(text)


def save_instance(inst: Instance, path) -> None:
    Path(path).write_text(dumps_instance(inst))


def solution_report(sol: Solution | None, algorithm: str, stats: dict) -> dict:
    report = {"feasible": sol is not None, "algorithm": algorithm, "stats": stats}
    if sol is not None:
        report["X"] = sorted(sol.X)
        report["witnesses"] = [{"Y": sorted(w.Y), "distance": w.distance} for w in sol.witnesses]
    return report


def parse_set(text: str, universe=None) -> frozenset:
    """A set given as a JSON array, or ``@path`` to a file holding one (or ``{"X": [...]}``)."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise RSMError(f"cannot read {text[1:]}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON set: {exc}") from None
    if isinstance(obj, dict):
        obj = _field(obj, "X", "set file")
    X = frozenset(_names(obj, "X"))
    if universe is not None and not X <= frozenset(universe):
        raise ValidationError(f"X is not a subset of the universe: {sorted(X - set(universe))}")
    return X
