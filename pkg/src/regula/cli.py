"""Command-line entry point: ``regula <subcommand> ...``.

Exit codes: 0 answered, 1 verification failure or condition violation,
2 usage or parse error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .coloring import ColoringSpec, FactorWitness, verify_coloring, verify_factor
from .conditions import check_conditions, hunt, reduction_shape, seven_graphs_search
from .constructions import FAMILIES, FamilyParams, build_family
from .decompose import (Colorable, Decider, NonColorable, Leaf, decide_31, dump_certificate,
                        load_certificate, verify_certificate, certificate_to_obj)
from .enumeration import EnumSpec, enumerate_bounded, enumerate_regular, iter_regular
from .errors import RegulaError
from .formats import (format_coloring, format_factor, format_graph, open_text, parse_coloring,
                      parse_factor, read_graph, read_graphs)
from .graph import Pseudograph, canonical_form
from .solver import (TUTTE_CAP, SearchBudget, Status, even_t_factor, find_3_regular_subgraph,
                     perfect_matching, solve_coloring, solve_factor, tutte_violator)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3
SCHEMA = 1


class Output:
    """Human text or JSON lines (with a schema header) on stdout."""

    def __init__(self, structured: bool, command: str, stream=None):
        self.structured = structured
        self.command = command
        self.stream = stream or sys.stdout
        self._header = False

    def record(self, obj: dict, text: str | None = None):
        if self.structured:
            if not self._header:
                self._emit(json.dumps({"schema": SCHEMA, "command": self.command}))
                self._header = True
            self._emit(json.dumps(obj, sort_keys=True))
        elif text is not None:
            self.stream.write(text if text.endswith("\n") else text + "\n")

    def _emit(self, line):
        self.stream.write(line + "\n")


def _budget(args) -> SearchBudget:
    return SearchBudget(args.node_limit, args.time_limit)


def _status_code(statuses) -> int:
    return EXIT_EXHAUSTED if Status.EXHAUSTED in statuses else EXIT_OK


def _graph_obj(g: Pseudograph) -> dict:
    return {"n": g.vertex_count, "edges": [list(e) for e in g.edges]}


def _map(fn, items, jobs):
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# ---------------------------------------------------------------------------
# solver commands


def cmd_solve(args, out):
    spec = ColoringSpec(args.r, args.t, args.ordered, args.max_colors)
    statuses = []
    for i, g in enumerate(read_graphs(args.file)):
        res = solve_coloring(g, spec, _budget(args))
        statuses.append(res.status)
        text = str(res.status)
        obj = {"index": i, "status": str(res.status), "nodes": res.nodes}
        if res.sat:
            text += "\n" + format_coloring(res.witness.colors)
            obj["coloring"] = list(res.witness.colors)
        out.record(obj, text)
    return _status_code(statuses)


def cmd_factor(args, out):
    statuses = []
    for i, g in enumerate(read_graphs(args.file)):
        res = solve_factor(g, {args.a, args.b}, _budget(args))
        statuses.append(res.status)
        obj = {"index": i, "status": str(res.status), "nodes": res.nodes}
        text = str(res.status)
        if res.sat:
            obj["edges"] = sorted(res.witness.edge_ids)
            text += "\n" + format_factor(res.witness.edge_ids)
        out.record(obj, text)
    return _status_code(statuses)


def cmd_matching(args, out):
    for i, g in enumerate(read_graphs(args.file)):
        res = perfect_matching(g)
        obj = {"index": i, "status": str(res.status)}
        text = str(res.status)
        if res.sat:
            obj["edges"] = sorted(res.witness.edge_ids)
            text += "\n" + format_factor(res.witness.edge_ids)
        elif g.vertex_count <= TUTTE_CAP:
            S = sorted(tutte_violator(g))
            obj["tutte_set"] = S
            text += f"\n# tutte set: {' '.join(map(str, S)) or '(empty)'}"
        out.record(obj, text)
    return EXIT_OK


def cmd_tfactor(args, out):
    for i, g in enumerate(read_graphs(args.file)):
        w = even_t_factor(g, args.t)
        out.record({"index": i, "status": "SAT", "edges": sorted(w.edge_ids)},
                   "SAT\n" + format_factor(w.edge_ids))
    return EXIT_OK


def cmd_cubic(args, out):
    for i, g in enumerate(read_graphs(args.file)):
        sub = find_3_regular_subgraph(g)
        if sub is None:
            out.record({"index": i, "found": False}, "NONE")
            continue
        verts = sorted(sub.vertices)
        out.record({"index": i, "found": True, "vertices": verts, "edges": sorted(sub.edge_ids)},
                   f"FOUND vertices {' '.join(map(str, verts))}\n" + format_factor(sub.edge_ids))
    return EXIT_OK


# ---------------------------------------------------------------------------
# decision procedure and verification


def _tree_text(tree, depth=0):
    pad = "  " * depth
    if isinstance(tree, Leaf):
        return [f"{pad}leaf double-cycle n={tree.n}"]
    lines = [f"{pad}adhesion e_left={tree.e_left} e_right={tree.e_right}"]
    return lines + _tree_text(tree.left, depth + 1) + _tree_text(tree.right, depth + 1)


def cmd_decide31(args, out):
    graphs = read_graphs(args.file)
    if args.emit_certificate and len(graphs) != 1:
        raise RegulaError("--emit-certificate needs exactly one input graph")
    decider = Decider()
    for i, g in enumerate(graphs):
        cert = decide_31(g, decider)
        if isinstance(cert, NonColorable):
            text = "NonColorable\n" + "\n".join(_tree_text(cert.tree.root))
        else:
            text = "Colorable\n" + format_coloring(cert.coloring.colors)
        out.record({"index": i, "certificate": certificate_to_obj(cert)}, text)
        if args.emit_certificate:
            _write_text(args.emit_certificate, dump_certificate(cert))
    return EXIT_OK


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _read_text(path):
    fh = open_text(path)
    try:
        return fh.read()
    finally:
        if fh is not sys.stdin:
            fh.close()


def cmd_verify(args, out):
    g = read_graph(args.graph)
    text = _read_text(args.witness)
    if args.kind == "coloring":
        if args.t is None:
            raise RegulaError("verify --kind coloring needs --t")
        r = args.r if args.r is not None else (g.degrees[0] if g.vertex_count else 0)
        spec = ColoringSpec(r, args.t, args.ordered, args.max_colors)
        verdict = verify_coloring(g, parse_coloring(text), spec)
    elif args.kind == "factor":
        if args.a is None:
            raise RegulaError("verify --kind factor needs --a (and optionally --b)")
        degrees = {args.a} if args.b is None else {args.a, args.b}
        verdict = verify_factor(g, FactorWitness.of(parse_factor(text), degrees))
    else:
        verdict = verify_certificate(g, load_certificate(text))
    out.record({"ok": verdict.ok, "reason": verdict.reason}, str(verdict))
    return EXIT_OK if verdict.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# generation and enumeration


def cmd_generate(args, out):
    g = build_family(FamilyParams(args.family, args.n, args.r, args.t, args.seed))
    out.record({"graph": _graph_obj(g)}, format_graph(g))
    return EXIT_OK


def _emit_graphs(graphs, args, out):
    if args.count:
        out.record({"count": len(graphs)}, str(len(graphs)))
        return EXIT_OK
    if out.structured:
        for g in graphs:
            out.record({"graph": _graph_obj(g)})
    else:
        out.stream.write("\n".join(format_graph(g) for g in graphs))
    return EXIT_OK


def cmd_enumerate(args, out):
    spec = EnumSpec(args.r, args.n, args.connected, args.max_multiplicity, args.max_loops)
    return _emit_graphs(enumerate_regular(spec), args, out)


def cmd_enumerate_bounded(args, out):
    graphs = enumerate_bounded(args.n, args.max_degree, args.min_edges, args.max_edges,
                               args.connected, args.max_multiplicity, args.max_loops)
    return _emit_graphs(graphs, args, out)


# ---------------------------------------------------------------------------
# conditions


def cmd_check_minimal(args, out):
    code = EXIT_OK
    for i, g in enumerate(read_graphs(args.file)):
        report = check_conditions(g, args.mode)
        entries = []
        lines = [f"mode {report.mode}"]
        for e in report.entries:
            item = {"name": e.name, "verdict": e.verdict}
            line = f"{e.verdict:9} {e.name}"
            if e.witness is not None:
                item["witness"] = e.witness.to_obj()
                line += f"  vertices={list(e.witness.vertices)} edges={list(e.witness.edges)}"
            if e.detail and not e.violated:
                line += f"  ({e.detail})"
            entries.append(item)
            lines.append(line)
        lines.append(f"{len(report.violations)} violation(s)")
        out.record({"index": i, "mode": report.mode, "entries": entries}, "\n".join(lines))
        if report.violations:
            code = EXIT_FAIL
    return code


def cmd_seven_graphs(args, out):
    graphs = seven_graphs_search()
    ok = True
    if args.emit:
        Path(args.emit).mkdir(parents=True, exist_ok=True)
    for i, h in enumerate(graphs):
        shape = reduction_shape(h)
        ok &= h.m == 8 and shape is not None
        obj = {"index": i, "graph": _graph_obj(h), "edges": h.m, "shape": None}
        text = f"# graph {i}: {h.m} edges"
        if shape is not None:
            obj["shape"] = {"matching": sorted(shape.matching), "u": shape.u, "v": shape.v, "edge": shape.edge}
            text += f"; matching {sorted(shape.matching)} u={shape.u} v={shape.v} e={shape.edge}"
        out.record(obj, text + "\n" + format_graph(h))
        if args.emit:
            (Path(args.emit) / f"seven-{i}.txt").write_text(format_graph(h), encoding="utf-8")
    out.record({"count": len(graphs)}, f"{len(graphs)} graphs")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_hunt(args, out):
    counts = Counter()
    for rec in hunt(args.mode, args.r, args.t, args.n_max, _budget(args), args.minimal_only,
                    args.n_min, args.jobs):
        label = "skipped" if rec.status is None else str(rec.status)
        counts[label] += 1
        if rec.status in (Status.UNSAT, Status.EXHAUSTED) or out.structured:
            out.record({"n": rec.n, "index": rec.index, "status": label, "violations": list(rec.violations),
                        "graph": _graph_obj(rec.graph)},
                       f"{label} n={rec.n} #{rec.index} violations={list(rec.violations)}\n{format_graph(rec.graph)}")
    summary = dict(sorted(counts.items()))
    out.record({"summary": summary}, " ".join(f"{k}={v}" for k, v in summary.items()) or "no graphs")
    return EXIT_EXHAUSTED if counts["EXHAUSTED"] else EXIT_OK


def _cross_one(job):
    g, r, t = job
    if (r, t) == (4, 1):
        solver = solve_coloring(g, ColoringSpec(4, 1)).status
        cert = decide_31(g)
        other = Status.SAT if isinstance(cert, Colorable) else Status.UNSAT
        return solver, other, bool(verify_certificate(g, cert))
    solver = solve_coloring(g, ColoringSpec(r, t, max_colors=2)).status
    other = solve_factor(g, {r - t, t}).status
    return solver, other, True


def cmd_crosscheck(args, out):
    graphs = list(iter_regular(args.r, args.n_max, True, args.n_min))
    results = _map(_cross_one, [(g, args.r, args.t) for g in graphs], args.jobs)
    counts = Counter()
    bad = []
    for g, (a, b, cert_ok) in zip(graphs, results):
        counts[str(a)] += 1
        if a != b or not cert_ok or Status.EXHAUSTED in (a, b):
            bad.append((g, a, b, cert_ok))
    what = "decide31" if (args.r, args.t) == (4, 1) else "factor"
    for g, a, b, cert_ok in bad:
        code = canonical_form(g).hex()
        out.record({"disagreement": code, "solver": str(a), what: str(b), "certificate_ok": cert_ok},
                   f"DISAGREE code={code} solver={a} {what}={b} certificate_ok={cert_ok}\n{format_graph(g)}")
    summary = {"graphs": len(graphs), "disagreements": len(bad), **dict(sorted(counts.items()))}
    out.record({"summary": summary}, " ".join(f"{k}={v}" for k, v in summary.items()))
    return EXIT_FAIL if bad else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _jobs_default():
    try:
        return max(1, int(os.environ.get("REGULA_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--structured", action="store_true", help="emit JSON lines with a schema header")
    common.add_argument("--jobs", type=int, default=_jobs_default(), help="worker processes (default $REGULA_JOBS or 1)")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--node-limit", type=int)
    budget.add_argument("--time-limit", type=float)

    p = argparse.ArgumentParser(prog="regula", description="Regular pseudograph colorings and factors.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *parents, **kw):
        sp = sub.add_parser(name, parents=[common, *parents], **kw)
        sp.set_defaults(func=fn)
        return sp

    sp = add("solve", cmd_solve, budget, help="decide (r-t,t)-colorability")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--ordered", action="store_true")
    sp.add_argument("--max-colors", type=int)
    sp.add_argument("file", nargs="?", default="-")

    sp = add("factor", cmd_factor, budget, help="decide {a,b}-factor existence")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("file", nargs="?", default="-")

    sp = add("matching", cmd_matching, help="perfect matching or a Tutte set")
    sp.add_argument("file", nargs="?", default="-")

    sp = add("tfactor", cmd_tfactor, help="constructive t-factor of an even-regular graph")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("file", nargs="?", default="-")

    sp = add("cubic-subgraph", cmd_cubic, help="search for a 3-regular subgraph")
    sp.add_argument("file", nargs="?", default="-")

    sp = add("decide31", cmd_decide31, help="certified (3,1)-colorability of a 4-regular graph")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--emit-certificate", metavar="OUT")

    sp = add("verify", cmd_verify, help="check a coloring, factor or certificate")
    sp.add_argument("--kind", choices=("coloring", "factor", "certificate"), required=True)
    sp.add_argument("--r", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--ordered", action="store_true")
    sp.add_argument("--max-colors", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("graph")
    sp.add_argument("witness")

    sp = add("generate", cmd_generate, help="build a named graph family")
    sp.add_argument("family", choices=sorted(FAMILIES))
    for flag in ("--n", "--r", "--t", "--seed"):
        sp.add_argument(flag, type=int)

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--connected", action="store_true")
    caps.add_argument("--count", action="store_true")
    caps.add_argument("--max-multiplicity", type=int)
    caps.add_argument("--max-loops", type=int)

    sp = add("enumerate", cmd_enumerate, caps, help="all r-regular pseudographs on n vertices")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("enumerate-bounded", cmd_enumerate_bounded, caps, help="pseudographs with bounded degree")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--min-edges", type=int, default=0)
    sp.add_argument("--max-edges", type=int)

    sp = add("check-minimal", cmd_check_minimal, help="necessary conditions for minimal counterexamples")
    sp.add_argument("--mode", choices=("coloring", "factor"), required=True)
    sp.add_argument("file", nargs="?", default="-")

    sp = add("seven-graphs", cmd_seven_graphs, help="the 4-vertex dense-subgraph search")
    sp.add_argument("--emit", metavar="DIR")

    sp = add("hunt", cmd_hunt, budget, help="solve every connected r-regular graph up to n-max")
    sp.add_argument("--mode", choices=("coloring", "factor"), required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--minimal-only", action="store_true")

    sp = add("crosscheck", cmd_crosscheck, help="cross-validate solvers over an enumeration")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--n-min", type=int, default=1)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Output(args.structured, args.command)
    try:
        return args.func(args, out)
    except (RegulaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
