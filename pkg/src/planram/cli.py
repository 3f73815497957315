"""Command line front end.

Subcommands:
  enumerate                stream graphs or triangulations
  verify pr-upper|pr-lower|delta|fact|lemmas
                           emit certificates as canonical JSON
  construct seed|grow|witness
                           seed graphs, grown embeddings, witness traces
  dual                     vertex-edge dual of piped embeddings
  identity                 triangle-edge identity residual of piped embeddings
  stats                    degree sequence, triangle-free edge count, faces

Graphs are read from stdin in graph6 (text lines) or planar_code (binary,
">>planar_code<<" header), auto-detected.  Exit codes: 0 all verified,
1 any refuted, 2 any infeasible, 64 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__, errors
from .canon import canonical_form
from .construct import (
    SEED_NAMES,
    build_delta_witness,
    build_ramsey_lower_witness,
    resolve_seed,
)
from .formats import (
    from_graph6,
    from_planar_code,
    rotation_to_graph,
    to_graph6,
    to_planar_code,
)
from .graphs import DegreeSequence
from .planarity import (
    PlaneEmbedding,
    edge_identity_residual,
    embed,
    gamma,
    vertex_edge_dual,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INFEASIBLE = 2
EXIT_USAGE = 64


def _read_embeddings():
    """Parse stdin as planar_code or graph6 into a list of embeddings."""
    data = sys.stdin.buffer.read()
    if data.startswith(b">>planar_code<<"):
        return [
            PlaneEmbedding(rotation_to_graph(rot), rot)
            for rot in from_planar_code(data)
        ]
    out = []
    for line in data.decode().split():
        if line:
            out.append(embed(from_graph6(line)))
    return out


def _read_inputs():
    """Like _read_embeddings, but tolerates disconnected graph6 input.

    Returns (graph, embedding-or-None) pairs; the embedding is None when
    the graph has no single plane embedding (disconnected).
    """
    data = sys.stdin.buffer.read()
    if data.startswith(b">>planar_code<<"):
        pairs = []
        for rot in from_planar_code(data):
            e = PlaneEmbedding(rotation_to_graph(rot), rot)
            pairs.append((e.base, e))
        return pairs
    out = []
    for line in data.decode().split():
        if not line:
            continue
        g = from_graph6(line)
        try:
            out.append((g, embed(g)))
        except errors.Disconnected:
            out.append((g, None))
    return out


def _write_graphs(graphs, fmt, out):
    graphs = sorted(graphs, key=lambda g: canonical_form(g).form)
    if fmt == "planar_code":
        out.buffer.write(to_planar_code([embed(g).rotation for g in graphs]))
    else:
        for g in graphs:
            out.write(to_graph6(g) + "\n")


def _open_out(path):
    return open(path, "w") if path else sys.stdout


def _budget(args):
    if args.budget_nodes is not None:
        return args.budget_nodes
    env = os.environ.get("PLANRAM_BUDGET_NODES")
    return int(env) if env else None


def _emit_certs(certs, args):
    out = _open_out(args.out)
    try:
        for c in certs:
            out.write(c.to_json() + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    verdicts = {c.verdict for c in certs}
    if "refuted" in verdicts:
        return EXIT_REFUTED
    if "infeasible" in verdicts:
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_enumerate(args):
    from .enumeration import (
        EnumerationTask,
        enumerate_c4free_planar,
        enumerate_triangulations,
    )

    graphs = []
    for index in range(args.workers):
        task = EnumerationTask(
            n=args.n,
            mode=args.mode,
            min_degree=args.min_degree,
            maximal_only=args.maximal_only,
            split=(index, args.workers),
        )
        if args.mode == "triangulation":
            result = enumerate_triangulations(task, _budget(args))
        else:
            result = enumerate_c4free_planar(task, _budget(args))
        graphs.extend(result.graphs)
    out = _open_out(args.out)
    try:
        _write_graphs(graphs, args.format, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_verify(args):
    from . import ramsey

    budget = _budget(args)
    if args.claim == "pr-upper":
        certs = [ramsey.verify_pr_upper(args.wheel, args.host,
                                        args.workers, budget)]
    elif args.claim == "pr-lower":
        certs = [ramsey.verify_pr_lower(args.wheel)]
    elif args.claim == "delta":
        certs = [ramsey.verify_delta(args.n, args.workers, budget)]
    elif args.claim == "fact":
        certs = [ramsey.check_fact(args.id, args.long_running,
                                   args.workers, budget)]
    else:
        certs = [ramsey.lemma_property_suite(args.n, args.workers, budget)]
    return _emit_certs(certs, args)


def cmd_construct(args):
    if args.what == "seed":
        e = resolve_seed(args.name)
        graphs = [e.base]
        trace = None
    elif args.what == "grow":
        trace = build_delta_witness(args.n)
        graphs = [trace.embedding.base]
    else:  # witness
        graphs = [build_ramsey_lower_witness(args.wheel)]
        trace = None
    out = _open_out(args.out)
    try:
        if trace is not None and args.format == "trace":
            out.write(f"seed {trace.seed}\n")
            for op in trace.ops:
                out.write(" ".join(str(x) for x in op) + "\n")
        else:
            _write_graphs(graphs, args.format, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_dual(args):
    duals = [vertex_edge_dual(e) for e in _read_embeddings()]
    out = _open_out(args.out)
    try:
        for d in duals:
            out.write(to_graph6(d) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_identity(args):
    status = EXIT_OK
    out = _open_out(args.out)
    try:
        for e in _read_embeddings():
            try:
                r = edge_identity_residual(e)
            except errors.PlanramError as exc:
                out.write(f"error {type(exc).__name__}\n")
                status = EXIT_REFUTED
                continue
            out.write(f"{r}\n")
            if r != 0:
                status = EXIT_REFUTED
    finally:
        if out is not sys.stdout:
            out.close()
    return status


def cmd_stats(args):
    out = _open_out(args.out)
    try:
        for g, e in _read_inputs():
            if e is not None:
                census = {}
                for f in e.faces:
                    census[f.length] = census.get(f.length, 0) + 1
                faces = " ".join(
                    f"{k}:{census[k]}" for k in sorted(census)
                )
            else:
                faces = "-"  # disconnected: no single plane embedding
            out.write(
                f"n={g.n} eps={g.edge_count} degrees={DegreeSequence.of(g)} "
                f"tau={gamma(g).tau} faces={faces}\n"
            )
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="planram", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--budget-nodes", type=int, default=None)
        sp.add_argument("--out", default=None)

    e = sub.add_parser("enumerate", help="stream graph classes")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--mode", choices=["c4free_planar", "triangulation"],
                   default="c4free_planar")
    e.add_argument("--min-degree", type=int, default=0)
    e.add_argument("--maximal-only", action="store_true")
    e.add_argument("--format", choices=["graph6", "planar_code"],
                   default="graph6")
    common(e)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="emit certificates")
    vsub = v.add_subparsers(dest="claim", required=True)
    vu = vsub.add_parser("pr-upper")
    vu.add_argument("--wheel", type=int, required=True)
    vu.add_argument("--host", type=int, required=True)
    vl = vsub.add_parser("pr-lower")
    vl.add_argument("--wheel", type=int, required=True)
    vd = vsub.add_parser("delta")
    vd.add_argument("--n", type=int, required=True)
    vf = vsub.add_parser("fact")
    vf.add_argument("--id", required=True,
                    choices=["fact1", "fact2", "fact3",
                             "fact1_property", "fact2_property"])
    vf.add_argument("--long-running", action="store_true")
    vm = vsub.add_parser("lemmas")
    vm.add_argument("--n", type=int, default=11)
    for sp in (vu, vl, vd, vf, vm):
        common(sp)
        sp.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="seed graphs and witnesses")
    csub = c.add_subparsers(dest="what", required=True)
    cs = csub.add_parser("seed")
    cs.add_argument("--name", required=True,
                    help="one of " + ", ".join(SEED_NAMES) + ", or cycleN")
    cg = csub.add_parser("grow")
    cg.add_argument("--n", type=int, required=True)
    cw = csub.add_parser("witness")
    cw.add_argument("--wheel", type=int, required=True)
    for sp in (cs, cg, cw):
        sp.add_argument("--format",
                        choices=["graph6", "planar_code", "trace"],
                        default="graph6")
        common(sp)
        sp.set_defaults(func=cmd_construct)

    for name, func in [("dual", cmd_dual), ("identity", cmd_identity),
                       ("stats", cmd_stats)]:
        sp = sub.add_parser(name)
        common(sp)
        sp.set_defaults(func=func)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to the documented code
        if exc.code not in (0, None):
            raise SystemExit(EXIT_USAGE)
        raise
    try:
        return args.func(args)
    except errors.InfeasibleScale:
        print("infeasible: search budget exceeded", file=sys.stderr)
        return EXIT_INFEASIBLE
    except errors.PlanramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
