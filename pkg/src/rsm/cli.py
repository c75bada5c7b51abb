"""Command-line entry point: ``rsm solve|verify|lattice|gen|oracle``.

Exit codes: 0 success (feasible / verified), 1 infeasible, 2 error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import io, stats
from .errors import CapExceeded, RSMError
from .lattice import DEFAULT_MEMBER_CAP, count_members
from .reductions import (balancedcut_to_rsm, is_rsep_solution, mcc_to_rsm, pad_rsep_threshold,
                         padded_certificate, random_formula, random_graph, random_mcc,
                         random_planted_mcc, rsep_to_rsm, sat1in3_to_rsep, sat_brute, sat_certificate)
from .solvers import STRATEGIES, dispatch, solve_brute, verify
from .submod import to_lattice

OK, INFEASIBLE, ERROR = 0, 1, 2


def _print_report(report: dict, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(io.dumps(report))
        return
    print(f"feasible: {'yes' if report['feasible'] else 'no'}")
    print(f"algorithm: {report['algorithm']}")
    if report["feasible"]:
        print(f"X: {json.dumps(report['X'])}")
        for i, w in enumerate(report["witnesses"]):
            print(f"  f{i}: distance {w['distance']}, Y = {json.dumps(w['Y'])}")
    st = report["stats"]
    print(f"stats: flow_calls={st['flow_calls']} branch_nodes={st['branch_nodes']} "
          f"wall_time={st['wall_time']}s")


def cmd_solve(args) -> int:
    inst = io.load_instance(args.instance)
    with stats.collect() as st:
        sol, name = dispatch(inst, args.algo)
    _print_report(io.solution_report(sol, name, st.as_dict()), args.json)
    return OK if sol is not None else INFEASIBLE


def cmd_oracle(args) -> int:
    inst = io.load_instance(args.instance)
    with stats.collect() as st:
        sol = solve_brute(inst)
    _print_report(io.solution_report(sol, "brute", st.as_dict()), args.json)
    return OK if sol is not None else INFEASIBLE


def cmd_verify(args) -> int:
    inst = io.load_instance(args.instance)
    X = io.parse_set(args.X, inst.universe)
    ok, dists = verify(inst, X)
    sys.stdout.write(io.dumps({"ok": ok, "distances": dists, "thresholds": list(inst.thresholds)}))
    return OK if ok else INFEASIBLE


def _lattice_text(i: int, kind: str, dump: dict) -> str:
    lines = [f"function {i} ({kind})", f"U0: {' '.join(dump['U0']) or '-'}"]
    for j, bk in enumerate(dump["blocks"], start=1):
        lines.append(f"U{j}: {' '.join(bk)}")
    lines.append(f"Uinf: {' '.join(dump['Uinf']) or '-'}")
    lines.append("dag: " + (", ".join(f"{a}->{c}" for a, c in dump["dag_edges"]) or "-"))
    count = dump["members"]
    lines.append(f"members: {count if count is not None else f'more than {DEFAULT_MEMBER_CAP}'}")
    return "\n".join(lines) + "\n"


def cmd_lattice(args) -> int:
    inst = io.load_instance(args.instance)
    indices = range(inst.k) if args.index is None else [args.index]
    for i in indices:
        if not 0 <= i < inst.k:
            raise RSMError(f"function index {i} out of range: instance has {inst.k} functions")
    out = []
    for i in indices:
        L = to_lattice(inst.functions[i])
        dump = {"index": i, "kind": inst.functions[i].kind, **io.lattice_to_dict(L),
                "members": count_members(L, DEFAULT_MEMBER_CAP)}
        out.append(dump)
    if args.json:
        sys.stdout.write(io.dumps(out if args.index is None else out[0]))
    else:
        sys.stdout.write("".join(_lattice_text(o["index"], o["kind"], o) for o in out))
    return OK


def _generate(args):
    """Return ``(instance, certificate or None)``."""
    rng = random.Random(args.seed)
    if args.kind in ("sat1in3", "rsep"):
        phi = random_formula(rng, args.vars, args.clauses)
        r = sat1in3_to_rsep(phi)
        assignment = sat_brute(phi)
        X = None if assignment is None else sat_certificate(phi, assignment)
        if args.kind == "rsep":
            r = pad_rsep_threshold(r, args.d)
            X = None if X is None else padded_certificate(X, args.d)
        if X is not None:
            assert is_rsep_solution(r, X)
            X = X - {r.s}
        return rsep_to_rsm(r), X
    if args.kind == "balanced-cut":
        inst = balancedcut_to_rsm(random_graph(rng, args.n, args.p))
        sol = solve_brute(inst)
        return inst, None if sol is None else sol.X
    if args.planted:
        G, clique = random_planted_mcc(rng, args.k, args.n, args.m)
        return mcc_to_rsm(G, clique)
    return mcc_to_rsm(random_mcc(rng, args.k, args.n, args.m)), None


def cmd_gen(args) -> int:
    inst, X = _generate(args)
    text = io.dumps_instance(inst)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.with_certificate:
        if not args.output:
            raise RSMError("--with-certificate needs -o, the certificate goes next to the instance")
        path = certificate_path(args.output)
        if X is None:
            print(f"no certificate known for this instance; {path} not written", file=sys.stderr)
        else:
            Path(path).write_text(io.dumps({"X": sorted(X)}))
    return OK


def certificate_path(output) -> Path:
    p = Path(output)
    return p.with_name(p.stem + ".cert.json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsm", description="Robust submodular minimization toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--algo", choices=STRATEGIES, default="auto")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a candidate set against an instance")
    p.add_argument("instance")
    p.add_argument("X", help='JSON array such as \'["a","b"]\', or @file')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", help="print the compact minimizer lattice of each function")
    p.add_argument("instance")
    p.add_argument("--index", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("oracle", help="solve by exhaustive search (small instances only)")
    p.add_argument("instance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance from a hardness reduction")
    p.add_argument("kind", choices=("sat1in3", "rsep", "balanced-cut", "mcc"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vars", type=int, default=3, help="variables (sat1in3, rsep)")
    p.add_argument("--clauses", type=int, default=2, help="clauses (sat1in3, rsep)")
    p.add_argument("--d", type=int, default=2, help="padded threshold (rsep)")
    p.add_argument("--n", type=int, default=None,
                   help="inner vertices (balanced-cut, default 4) or class size (mcc, default 3)")
    p.add_argument("--p", type=float, default=0.5, help="edge probability (balanced-cut)")
    p.add_argument("--k", type=int, default=3, help="classes (mcc)")
    p.add_argument("--m", type=int, default=2, help="edges per class pair (mcc)")
    p.add_argument("--planted", action="store_true", help="plant a multicolored clique (mcc)")
    p.add_argument("-o", "--output")
    p.add_argument("--with-certificate", action="store_true",
                   help="also write a known solution to <output stem>.cert.json")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n", 0) is None:
        args.n = 4 if args.kind == "balanced-cut" else 3
    try:
        return args.func(args)
    except CapExceeded as exc:
        caps = ", ".join(f"{name}={val}" for name, val in sorted(exc.caps.items()))
        print(f"rsm: error: cap exceeded: {exc} ({caps})", file=sys.stderr)
    except RSMError as exc:
        print(f"rsm: error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return ERROR


if __name__ == "__main__":
    sys.exit(main())
