"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid graph, 3 guard exceeded,
4 crosscheck mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import BUNDLED_GRAPHS, __version__, load_bundled
from .covers import brute_count, combined_counts, enumerate_min_covers
from .edge_ideal import (
    gamma_oracle,
    hilbert_oracle_table,
    sdefect_oracle,
    symbolic_power_formula,
    symbolic_power_oracle,
)
from .errors import GraphError, InsufficientData, TooLarge
from .graph import MarkedGraph, closed_nbhd_condition, cycle_params, parse_graph
from .hilbert import gamma_closed, hilbert_closed
from .limits import Guards
from .monomials import contains
from .quasipoly import fit
from .sdefect import sdefect_closed

EXIT_OK, EXIT_USAGE, EXIT_GRAPH, EXIT_GUARD, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- loading


def load_graph(source: str) -> MarkedGraph:
    """A path to a graph JSON file, or the name of a bundled graph."""
    path = Path(source)
    if path.is_file():
        return parse_graph(path.read_text())
    if source in BUNDLED_GRAPHS:
        return load_bundled(source)
    raise UsageError(f"cannot read graph {source!r}: no such file or bundled graph")


def _guards(args) -> Guards:
    return Guards(
        cover_max_vertices=args.max_cover_vertices,
        oracle_max_vertices=args.max_oracle_vertices,
        oracle_max_s=args.max_oracle_s,
        brute_max_edges=args.max_brute_edges,
        max_enumeration=args.max_enumeration,
    )


def _mono_str(g: MarkedGraph, m) -> str:
    parts = []
    for v, e in zip(g.all_vertices, m):
        if e == 1:
            parts.append(f"x{v}")
        elif e > 1:
            parts.append(f"x{v}^{e}")
    return "*".join(parts) or "1"


# ---------------------------------------------------------------- commands


def cmd_validate(g, args, guards):
    p = cycle_params(g)
    row = {
        "valid": True,
        "n": p.n,
        "cycle_length": g.cycle_length,
        "l": p.l,
        "m": p.m,
        "roots": list(p.roots),
        "root_degrees": list(p.root_degrees),
        "u": list(p.u),
        "unicyclic": g.unicyclic,
        "closed_nbhd_condition": closed_nbhd_condition(g),
        "vertices": len(g.all_vertices),
        "edges": len(g.edges),
    }
    return row, [row]


def cmd_covers(g, args, guards):
    rows = []
    for c in enumerate_min_covers(g):
        rows.append({
            "kind": c.kind.value,
            "base_vertex": c.base_vertex,
            "edges": sorted(g.edge_label(e) for e in c.edges),
            "attached_edge": g.edge_label(c.attached_edge) if c.attached_edge else None,
        })
    return {"covers": rows}, rows


def cmd_counts(g, args, guards):
    table = combined_counts(cycle_params(g))
    rows = []
    for size in table.sizes():
        row = {
            "size": size,
            "d_prime": table.d_prime.get(size, 0),
            "d_double_prime": table.d_double_prime.get(size, 0),
            "d": table.d[size],
        }
        if args.oracle:
            row["brute"] = brute_count(g, size, guards)
        rows.append(row)
    return {"n": table.n, "l": table.l, "counts": rows}, rows


def cmd_sdefect(g, args, guards):
    p = cycle_params(g)
    table = combined_counts(p)
    rows = []
    for s in range(1, args.smax + 1):
        rep = sdefect_closed(p, table, s)
        row = {
            "s": s,
            "k": rep.k,
            "r": rep.r,
            "script_g": rep.script_g_value,
            "sdefect": rep.sdefect,
            "terms": list(rep.terms),
        }
        if args.oracle:
            row["oracle"] = sdefect_oracle(g, s, guards)
        rows.append(row)
    return {"sdefect": rows}, rows


def cmd_symbolic(g, args, guards):
    dec = symbolic_power_formula(g, args.s, guards)
    rows = []
    for u in dec.total.gens:
        sources = [t for t, J in dec.summands if contains(J, u)]
        rows.append({"generator": _mono_str(g, u), "degree": u.degree, "summands": sources})
    doc = {"s": dec.s, "k": dec.k, "r": dec.r, "count": len(dec.total), "generators": rows}
    if args.oracle:
        doc["oracle_equal"] = symbolic_power_oracle(g, args.s, guards) == dec.total
    return doc, rows


def cmd_hilbert(g, args, guards):
    s = args.s
    cond = closed_nbhd_condition(g)
    doc = {"s": s, "k": s // (g.n + 1), "condition_holds": cond}
    dmax = 2 * s
    closed = None
    if cond:
        t = hilbert_closed(cycle_params(g), s, True)
        closed = {d: t(d) for d in range(dmax + 1)}
        doc["support"] = list(t.support)
    oracle = hilbert_oracle_table(g, s, dmax, guards) if (args.oracle or not cond) else None
    doc["source"] = "closed" if closed is not None and oracle is None else ("oracle" if closed is None else "both")
    rows = []
    for d in range(dmax + 1):
        row = {"d": d}
        if closed is not None:
            row["closed"] = closed[d]
        if oracle is not None:
            row["oracle"] = oracle[d]
        rows.append(row)
    doc["values"] = rows
    return doc, rows


def _svalues(args, g):
    if args.s is not None:
        return [args.s]
    return list(range(1, args.smax + 1))


def cmd_gamma(g, args, guards):
    p = cycle_params(g)
    cond = closed_nbhd_condition(g)
    rows = []
    for s in _svalues(args, g):
        k = s // (g.n + 1)
        row = {"s": s, "k": k, "closed": gamma_closed(p, s, cond)}
        if args.oracle:
            gmax = args.gamma_max if args.gamma_max is not None else 2 * k + 2
            row["gamma_max"] = gmax
            row["oracle"] = gamma_oracle(g, s, gmax, guards)
        rows.append(row)
    return {"condition_holds": cond, "gamma": rows}, rows


def cmd_quasipoly(g, args, guards):
    p = cycle_params(g)
    table = combined_counts(p)
    period = g.n + 1
    smax = args.smax if args.smax is not None else 10 * period + g.n
    values = [(s, sdefect_closed(p, table, s).sdefect) for s in range(1, smax + 1)]
    q = fit(values, period)
    doc = q.to_json()
    rows = [
        {"r": r, "poly": q.pretty(r), "coeffs": row["coeffs"], "valid_from_k": row["valid_from_k"]}
        for r, row in enumerate(doc["residues"])
    ]
    return doc, rows


# ---------------------------------------------------------------- crosscheck


def _first_difference(a, b):
    """Smallest-degree monomial lying in exactly one of two generator sets."""
    diff = set(a.gens) ^ set(b.gens)
    return min(diff, key=lambda m: (m.degree, tuple(m)))


def _check_one(g: MarkedGraph, check: str, s: int, guards: Guards) -> dict | None:
    """Run one comparison; ``None`` when the pair agrees."""
    p = cycle_params(g)
    if check == "symbolic":
        formula = symbolic_power_formula(g, s, guards).total
        oracle = symbolic_power_oracle(g, s, guards)
        if formula == oracle:
            return None
        witness = _first_difference(formula, oracle)
        side = "formula" if witness in formula.gens else "oracle"
        return {"expected": len(oracle), "got": len(formula), "witness": _mono_str(g, witness), "only_in": side}
    if check == "counts":
        table = combined_counts(p)
        closed, brute = table.d[s], brute_count(g, s, guards)
        return None if closed == brute else {"expected": brute, "got": closed}
    if check == "sdefect":
        closed = sdefect_closed(p, combined_counts(p), s).sdefect
        oracle = sdefect_oracle(g, s, guards)
        return None if closed == oracle else {"expected": oracle, "got": closed}
    if check == "hilbert":
        t = hilbert_closed(p, s, True)
        oracle = hilbert_oracle_table(g, s, 2 * s, guards)
        for d in range(2 * s + 1):
            if t(d) != oracle[d]:
                return {"degree": d, "expected": oracle[d], "got": t(d)}
        return None
    if check == "gamma":
        k = s // (g.n + 1)
        closed = gamma_closed(p, s, closed_nbhd_condition(g))
        oracle = gamma_oracle(g, s, 2 * k + 2, guards)
        return None if closed == oracle else {"expected": oracle, "got": closed}
    raise ValueError(check)


def _task(payload):
    text, check, s, guards = payload
    return _check_one(parse_graph(text), check, s, guards)


def crosscheck_tasks(g: MarkedGraph, smax: int) -> list[tuple[str, int]]:
    table = combined_counts(cycle_params(g))
    tasks = [("counts", size) for size in table.sizes()]
    for s in range(1, smax + 1):
        tasks += [("symbolic", s), ("sdefect", s), ("gamma", s)]
        if closed_nbhd_condition(g):
            tasks.append(("hilbert", s))
    return tasks


def crosscheck(g: MarkedGraph, smax: int, guards: Guards, jobs: int = 1) -> dict:
    """Compare every closed form with its oracle up to ``smax``."""
    tasks = crosscheck_tasks(g, smax)
    if jobs > 1:
        from .graph import serialize_graph

        text = serialize_graph(g)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_task, [(text, c, s, guards) for c, s in tasks]))
    else:
        results = [_check_one(g, c, s, guards) for c, s in tasks]
    mismatches = []
    for (check, s), res in zip(tasks, results):
        if res is not None:
            key = "size" if check == "counts" else "s"
            mismatches.append({"check": check, key: s, **res})
    order = {"counts": 0, "symbolic": 1, "sdefect": 2, "hilbert": 3, "gamma": 4}
    mismatches.sort(key=lambda m: (m.get("s", m.get("size")), order[m["check"]]))
    summary = {}
    for check, _ in tasks:
        summary[check] = summary.get(check, 0) + 1
    doc = {
        "smax": smax,
        "condition_holds": closed_nbhd_condition(g),
        "checks_run": summary,
        "mismatches": mismatches,
        "ok": not mismatches,
    }
    if mismatches:
        doc["counterexample"] = mismatches[0]
    return doc


def cmd_crosscheck(g, args, guards):
    smax = args.smax if args.smax is not None else 2 * (g.n + 1) + 1
    doc = crosscheck(g, smax, guards, args.jobs)
    rows = [{k: v for k, v in m.items()} for m in doc["mismatches"]] or [{"ok": True}]
    return doc, rows


COMMANDS = {
    "validate": (cmd_validate, "check a graph and print its cycle parameters"),
    "covers": (cmd_covers, "list the minimum edge covers of the cycle"),
    "counts": (cmd_counts, "edge-subset counts d', d'', d by size"),
    "sdefect": (cmd_sdefect, "symbolic defects for s = 1..smax"),
    "symbolic": (cmd_symbolic, "minimal generators of the s-th symbolic power"),
    "hilbert": (cmd_hilbert, "Hilbert function of I^(s)/I^s in degrees 0..2s"),
    "gamma": (cmd_gamma, "least power of the maximal ideal killing I^(s)/I^s"),
    "quasipoly": (cmd_quasipoly, "fit the symbolic-defect quasi-polynomial"),
    "crosscheck": (cmd_crosscheck, "compare every closed form with its oracle"),
}

NEEDS_S = {"symbolic", "hilbert"}
NEEDS_SMAX = {"sdefect"}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symdefect", description="Symbolic defects of edge ideals of unicyclic graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    defaults = Guards()
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--graph", required=True, help="graph JSON file or bundled name (" + ", ".join(BUNDLED_GRAPHS) + ")")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", help="write the report here instead of stdout")
        if name in ("symbolic", "hilbert", "gamma"):
            sp.add_argument("--s", type=int)
        if name in ("sdefect", "gamma", "quasipoly", "crosscheck"):
            sp.add_argument("--smax", type=int)
        if name in ("counts", "sdefect", "symbolic", "hilbert", "gamma"):
            sp.add_argument("--oracle", action="store_true", help="add the brute-force column")
        if name == "gamma":
            sp.add_argument("--gamma-max", type=int, help="search bound for the oracle (default 2k+2)")
        if name == "crosscheck":
            sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        g = sp.add_argument_group("guards")
        g.add_argument("--max-cover-vertices", type=int, default=defaults.cover_max_vertices)
        g.add_argument("--max-oracle-vertices", type=int, default=defaults.oracle_max_vertices)
        g.add_argument("--max-oracle-s", type=int, default=defaults.oracle_max_s)
        g.add_argument("--max-brute-edges", type=int, default=defaults.brute_max_edges)
        g.add_argument("--max-enumeration", type=int, default=defaults.max_enumeration)
    return parser


def _check_args(parser, args) -> None:
    sub = args.command
    s, smax = getattr(args, "s", None), getattr(args, "smax", None)
    if sub in NEEDS_S and s is None:
        parser.error(f"{sub} requires --s")
    if sub in NEEDS_SMAX and smax is None:
        parser.error(f"{sub} requires --smax")
    if sub == "gamma" and (s is None) == (smax is None):
        parser.error("gamma takes exactly one of --s and --smax")
    for flag, value in (("--s", s), ("--smax", smax)):
        if value is not None and value < 1:
            parser.error(f"{flag} must be a positive integer")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")


def render(doc, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    fields: list[str] = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: " ".join(map(str, v)) if isinstance(v, list) else ("" if v is None else v) for k, v in row.items()})
    return buf.getvalue()


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_args(parser, args)
    handler = COMMANDS[args.command][0]
    try:
        g = load_graph(args.graph)
        doc, rows = handler(g, args, _guards(args))
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except InsufficientData as exc:
        return _fail(EXIT_USAGE, type(exc).__name__, str(exc))
    except GraphError as exc:
        return _fail(EXIT_GRAPH, type(exc).__name__, str(exc))
    except TooLarge as exc:
        return _fail(EXIT_GUARD, "TooLarge", str(exc))
    text = render(doc, rows, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.command == "crosscheck" and not doc["ok"]:
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
