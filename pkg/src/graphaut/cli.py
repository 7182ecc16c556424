"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 invalid graph input, 3 negative
verification or comparison result, 4 budget exceeded.  Every payload
can be wrapped in a JSON envelope with --json; --stable drops wall
times so identical inputs give byte-identical output.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from .catalog import catalog as load_catalog, catalog_names
from . import gencycles as gc
from .cutspectrum import edge_weights, fingerprint_equal
from .cycles import enumerate_isometric_cycles
from .graph import BudgetExceededError, Graph, GraphError, export_graph, parse_graph, parse_graph_json
from .oracle import enumerate_automorphisms
from .orbits import verify_permutation, weight_classes
from .perms import cayley_table, cycle_notation, group_closure, parse_permutation

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_GRAPH = 2
EXIT_NEGATIVE = 3
EXIT_BUDGET = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--name", help="catalog graph name")
    p.add_argument("--graph", help="edge-list (or .json) graph file")
    p.add_argument("--json", action="store_true", help="wrap output in a JSON report")
    p.add_argument("--stable", action="store_true", help="byte-reproducible output")
    p.add_argument("--threads", type=int, default=1,
                   help="parallelism cap (runs are sequential and deterministic)")


def _load_graph(args) -> Graph:
    if bool(args.name) == bool(args.graph):
        raise UsageError("exactly one of --name or --graph is required")
    if args.name:
        return load_catalog(args.name)
    with open(args.graph, "r", encoding="utf-8") as fh:
        text = fh.read()
    if args.graph.endswith(".json"):
        return parse_graph_json(text)
    return parse_graph(text, name=args.graph)


class UsageError(Exception):
    pass


def _emit(args, command: str, graph_label: str, parameters: dict, result,
          text_lines: list[str], started: float) -> None:
    if args.json:
        report = {"command": command, "graph": graph_label, "parameters": parameters,
                  "result": result}
        if not args.stable:
            report["wall_ms"] = round((time.monotonic() - started) * 1000.0, 3)
        print(json.dumps(report, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- subcommand bodies ------------------------------------------------------


def _cmd_catalog(args, started) -> int:
    if not args.name and not args.graph:
        names = list(catalog_names())
        _emit(args, "catalog", "", {}, names, names, started)
        return EXIT_OK
    g = _load_graph(args)
    text = export_graph(g, args.format)
    _emit(args, "catalog", g.name, {"format": args.format},
          {"n": g.n, "m": g.m, "text": text}, [text.rstrip("\n")], started)
    return EXIT_OK


def _cmd_invariants(args, started) -> int:
    g = _load_graph(args)
    wt = edge_weights(g)
    payload = {
        "edge_weights": list(wt.edge_weights),
        "vertex_weights": list(wt.vertex_weights),
        "edge_fingerprint": list(wt.edge_fingerprint),
        "vertex_fingerprint": list(wt.vertex_fingerprint),
    }
    lines = [json.dumps(payload, sort_keys=True)]
    _emit(args, "invariants", g.name, {}, payload, lines, started)
    return EXIT_OK


def _cmd_isocycles(args, started) -> int:
    g = _load_graph(args)
    iso = enumerate_isometric_cycles(g)
    if args.count_only:
        _emit(args, "isocycles", g.name, {"count_only": True}, iso.count,
              [str(iso.count)], started)
        return EXIT_OK
    payload = [{"edges": list(c.edges.indices()), "vertices": list(c.vertices)}
               for c in iso]
    _emit(args, "isocycles", g.name, {}, payload, [json.dumps(payload)], started)
    return EXIT_OK


def _cmd_gencycles(args, started) -> int:
    g = _load_graph(args)
    iso = enumerate_isometric_cycles(g)
    params = {"k": args.k, "len": args.len, "max_subset": args.max_subset,
              "full_dihedral": args.full_dihedral}
    if args.k:
        configs, gens = gc.enumerate_cycle_covers(g, iso, args.k, args.len,
                                                  full_dihedral=args.full_dihedral)
        payload = {
            "configurations": len(configs),
            "generating": len(gens),
            "cycles": [{"edges": list(q.cycle.edges.indices()),
                        "vertices": list(q.cycle.vertices),
                        "producers": [list(s) for s in q.producers]} for q in gens],
        }
        lines = [f"configurations: {len(configs)}", f"generating cycles: {len(gens)}"]
        lines += [f"  {list(q.cycle.edges.indices())}" for q in gens]
    else:
        gens = gc.candidate_generating_cycles(g, iso=iso, max_subset=args.max_subset)
        payload = {
            "generating": len(gens),
            "cycles": [{"edges": list(q.cycle.edges.indices()),
                        "vertices": list(q.cycle.vertices),
                        "producers": [list(s) for s in q.producers]} for q in gens],
        }
        lines = [f"candidate generating cycles: {len(gens)}"]
        lines += [f"  {list(q.cycle.edges.indices())}" for q in gens]
    _emit(args, "gencycles", g.name, params, payload, lines, started)
    return EXIT_OK


def _cmd_orbits(args, started) -> int:
    g = _load_graph(args)
    part = weight_classes(g)
    payload = [{"weight": c.weight, "degree": c.degree, "vertices": list(c.vertices)}
               for c in part]
    _emit(args, "orbits", g.name, {}, payload, [json.dumps(payload)], started)
    return EXIT_OK


def _cmd_aut(args, started) -> int:
    g = _load_graph(args)
    if args.method == "oracle":
        res = enumerate_automorphisms(g, cap=args.cap)
        payload = {
            "order": res.order,
            "truncated": res.truncated,
            "orbits": [list(c.vertices) for c in res.orbits],
        }
        lines = [f"order: {res.order}",
                 "orbits: " + " ".join(str(set(c.vertices)) for c in res.orbits)]
        if args.full:
            payload["elements"] = [cycle_notation(p, include_fixed=True) for p in res.group]
            lines += [cycle_notation(p, include_fixed=True) for p in res.group]
        _emit(args, "aut", g.name, {"method": "oracle"}, payload, lines, started)
        return EXIT_OK
    spec = gc.automorphisms_from_generating_cycles(g, max_subset=args.max_subset)
    if spec.distinct:
        closure = group_closure(list(spec.distinct))
        closure_order = closure.order
        elements = closure.elements
    else:
        closure_order = 1
        elements = ()
    payload = {
        "raw_count": spec.raw_count,
        "distinct": len(spec.distinct),
        "closure_order": closure_order,
        "by_length": {str(k): list(v) for k, v in spec.by_length.items()},
    }
    lines = [f"raw extensions: {spec.raw_count}",
             f"distinct automorphisms: {len(spec.distinct)}",
             f"closure order: {closure_order}"]
    if args.full:
        payload["elements"] = [cycle_notation(p, include_fixed=True) for p in elements]
        lines += [cycle_notation(p, include_fixed=True) for p in elements]
    _emit(args, "aut", g.name, {"method": "spectral", "max_subset": args.max_subset},
          payload, lines, started)
    return EXIT_OK


def _cmd_cayley(args, started) -> int:
    g = _load_graph(args)
    res = enumerate_automorphisms(g)
    table = cayley_table(res.group, cap=args.cap)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            for row in table.cells:
                writer.writerow(row)
        legend_path = args.out + ".legend"
        with open(legend_path, "w", encoding="utf-8") as fh:
            for i, p in enumerate(res.group):
                fh.write(f"{i},{cycle_notation(p, include_fixed=True)}\n")
        lines = [f"wrote {args.out} and {legend_path} (order {table.order})"]
    else:
        lines = [" ".join(str(x) for x in row) for row in table.cells]
    payload = {"order": table.order}
    _emit(args, "cayley", g.name, {"out": args.out}, payload, lines, started)
    return EXIT_OK


def _cmd_verify(args, started) -> int:
    g = _load_graph(args)
    try:
        p = parse_permutation(args.perm, g.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = verify_permutation(g, p)
    payload = {"permutation": cycle_notation(p, include_fixed=True), "valid": ok}
    lines = [f"{cycle_notation(p, include_fixed=True)}: "
             + ("automorphism" if ok else "not an automorphism")]
    _emit(args, "verify", g.name, {"perm": args.perm}, payload, lines, started)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_compare(args, started) -> int:
    def load(spec: str) -> Graph:
        if spec in catalog_names():
            return load_catalog(spec)
        with open(spec, "r", encoding="utf-8") as fh:
            text = fh.read()
        if spec.endswith(".json"):
            return parse_graph_json(text)
        return parse_graph(text, name=spec)

    ga, gb = load(args.a), load(args.b)
    wa, wb = edge_weights(ga), edge_weights(gb)
    same = fingerprint_equal(wa, wb)
    payload = {"a": ga.name, "b": gb.name, "fingerprints_equal": same}
    lines = ["fingerprints equal (isomorphism not excluded)" if same
             else "fingerprints differ"]
    _emit(args, "compare", f"{ga.name},{gb.name}", {}, payload, lines, started)
    return EXIT_OK if same else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="graphaut",
                  description="Automorphism groups of nonseparable graphs via "
                              "cut weights, isometric cycles and dihedral "
                              "generating cycles.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or print built-in graphs")
    _add_graph_args(p)
    p.add_argument("--format", choices=("edge-list", "json", "dot"), default="edge-list")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("invariants", help="edge/vertex weights and fingerprints")
    _add_graph_args(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("isocycles", help="isometric cycles in canonical order")
    _add_graph_args(p)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_isocycles)

    p = sub.add_parser("gencycles", help="generating cycles (covers or ring sums)")
    _add_graph_args(p)
    p.add_argument("--k", type=int, default=0, help="cover-rule subset size")
    p.add_argument("--len", type=int, default=0, help="isometric cycle length filter")
    p.add_argument("--max-subset", type=int, default=6, dest="max_subset")
    p.add_argument("--full-dihedral", action="store_true", dest="full_dihedral",
                   help="keep only fully symmetric spanning cycles")
    p.set_defaults(func=_cmd_gencycles)

    p = sub.add_parser("orbits", help="weight classes (candidate orbits)")
    _add_graph_args(p)
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("aut", help="automorphism group, spectral or oracle")
    _add_graph_args(p)
    p.add_argument("--method", choices=("spectral", "oracle"), default="oracle")
    p.add_argument("--full", action="store_true", help="print every element")
    p.add_argument("--max-subset", type=int, default=6, dest="max_subset")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("cayley", help="Cayley table of the automorphism group")
    _add_graph_args(p)
    p.add_argument("--out", help="CSV output path (a .legend file sits next to it)")
    p.add_argument("--cap", type=int, default=10**4)
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("verify", help="check one permutation")
    _add_graph_args(p)
    p.add_argument("--perm", required=True, help="image list '2,1,...' or cycles '(1 2)'")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compare", help="compare two graphs' fingerprints")
    p.add_argument("--a", required=True, help="catalog name or file")
    p.add_argument("--b", required=True, help="catalog name or file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--stable", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_compare)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    started = time.monotonic()
    try:
        return args.func(args, started)
    except UsageError as exc:
        print(f"graphaut: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"graphaut: invalid graph: {exc}", file=sys.stderr)
        return EXIT_BAD_GRAPH
    except FileNotFoundError as exc:
        print(f"graphaut: invalid graph: {exc}", file=sys.stderr)
        return EXIT_BAD_GRAPH
    except BudgetExceededError as exc:
        print(f"graphaut: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    raise SystemExit(main())
