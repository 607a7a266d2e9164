"""Command-line front end.

Exit codes: 0 for a positive result (feasible / valid / found / generated),
1 for a conclusive negative one (infeasible / invalid / unreachable), 2 for
usage, parse, precondition, or resource errors (including an exhausted
oracle budget).  Results go to stdout, diagnostics to stderr; ``--json``
switches stdout to a single JSON document.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .changeability import classify
from .core import (
    GraphError,
    TemporalEdge,
    TemporalGraph,
    align_names,
    difference,
    find_bridges,
    validate_sequence,
)
from .formats import (
    ParseError,
    TG_VERSION,
    TGS_VERSION,
    VC_VERSION,
    format_sequence,
    format_vc,
    load_sequence,
    load_temporal_graph,
    parse_edge_list,
    parse_vc,
    save_sequence,
    save_temporal_graph,
)
from .hardness import VCInstance, build_reduction, cover_to_sequence
from .oracle import OracleBudget, generate_random_instance, oracle_shortest_sequence
from .planner import Feasible, Infeasible, feasible, plan
from .reachability import compute_cross, reachability_partition


def _emit(args, doc: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(doc))
    elif plain:
        print(plain, end="" if plain.endswith("\n") else "\n")


def _edge_doc(g: TemporalGraph, e: TemporalEdge) -> dict:
    return {"u": g.name(e.u), "v": g.name(e.v), "t": e.t}


def _edge_str(g: TemporalGraph, e: TemporalEdge) -> str:
    return f"{g.name(e.u)} {g.name(e.v)} {e.t}"


def _load_pair(args) -> tuple[TemporalGraph, TemporalGraph]:
    g1 = load_temporal_graph(args.g1)
    g2 = align_names(load_temporal_graph(args.g2), g1)
    return g1, g2


def _witness_lines(g: TemporalGraph, out: Infeasible) -> str:
    if out.reason == "pair_counts":
        return "infeasible\nwitness pair-counts"
    return f"infeasible\nwitness {_edge_str(g, out.witness)}"


def _witness_doc(g: TemporalGraph, out: Infeasible) -> dict:
    return {
        "reason": out.reason,
        "witness": _edge_doc(g, out.witness) if out.witness else None,
    }


def cmd_check(args) -> int:
    g1, g2 = _load_pair(args)
    ok, out = feasible(g1, g2)
    if ok:
        _emit(args, {"command": "check", "feasible": True, "reason": None, "witness": None}, "feasible")
        return 0
    _emit(
        args,
        {"command": "check", "feasible": False, **_witness_doc(g1, out)},
        _witness_lines(g1, out),
    )
    return 1


def cmd_plan(args) -> int:
    g1, g2 = _load_pair(args)
    outcome = plan(g1, g2)
    if isinstance(outcome, Infeasible):
        _emit(
            args,
            {"command": "plan", "feasible": False, **_witness_doc(g1, outcome)},
            _witness_lines(g1, outcome),
        )
        return 1
    assert isinstance(outcome, Feasible)
    text = format_sequence(outcome.sequence, g1)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        plain = f"plan length {len(outcome.sequence)} phases {outcome.phases}"
    else:
        plain = text
    doc = {
        "command": "plan",
        "feasible": True,
        "length": len(outcome.sequence),
        "phases": outcome.phases,
        "ops": [
            {
                "u": g1.name(op.u),
                "v": g1.name(op.v),
                "from_t": op.from_time,
                "to_t": op.to_time,
            }
            for op in outcome.sequence
        ],
    }
    _emit(args, doc, plain)
    return 0


def cmd_validate(args) -> int:
    g1, g2 = _load_pair(args)
    seq = load_sequence(args.seq, g1)
    report = validate_sequence(g1, seq, g2)
    doc = {
        "command": "validate",
        "ok": report.ok,
        "length": report.length,
        "failed_step": report.failed_step,
        "failure": report.failure,
        "final_matches": report.final_matches,
    }
    if report.ok:
        _emit(args, doc, f"valid length {report.length}")
        return 0
    if report.failed_step is not None:
        plain = f"invalid step {report.failed_step} {report.failure}"
    else:
        plain = "invalid final-mismatch"
    _emit(args, doc, plain)
    return 1


def cmd_classify(args) -> int:
    g = load_temporal_graph(args.g)
    table = classify(g)
    lines = []
    edges_doc = []
    for e in g.sorted_edges():
        level = table.levels.get(e)
        ref = table.back_refs.get(e)
        via = f"{g.name(ref.u)},{g.name(ref.v)},{ref.t}" if ref else "-"
        level_str = "unchangeable" if level is None else str(level)
        lines.append(f"{_edge_str(g, e)} level={level_str} via={via}")
        edges_doc.append(
            {
                **_edge_doc(g, e),
                "level": level,
                "via": _edge_doc(g, ref) if ref else None,
            }
        )
    doc = {"command": "classify", "edges": edges_doc}
    if args.dump_cross:
        cross = compute_cross(g)
        crossing_of: dict[TemporalEdge, list[TemporalEdge]] = {}
        for e, bridges_of_e in cross.items():
            for b in bridges_of_e:
                crossing_of.setdefault(b, []).append(e)
        bridges_doc = []
        for b in sorted(find_bridges(g)):
            part = reachability_partition(g, b)
            members = sorted(crossing_of.get(b, []))
            lines.append(
                f"bridge {_edge_str(g, b)} sides {len(part.comp_u)} {len(part.comp_v)}"
            )
            lines.extend(f"  crossing {_edge_str(g, e)}" for e in members)
            bridges_doc.append(
                {
                    **_edge_doc(g, b),
                    "side_sizes": [len(part.comp_u), len(part.comp_v)],
                    "crossing": [_edge_doc(g, e) for e in members],
                }
            )
        doc["bridges"] = bridges_doc
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_diff(args) -> int:
    g1, g2 = _load_pair(args)
    only1 = sorted(g1.edges - g2.edges)
    only2 = sorted(g2.edges - g1.edges)
    delta = difference(g1, g2)
    lines = [f"delta {delta}"]
    lines.extend(f"only-g1 {_edge_str(g1, e)}" for e in only1)
    lines.extend(f"only-g2 {_edge_str(g1, e)}" for e in only2)
    doc = {
        "command": "diff",
        "delta": delta,
        "only_g1": [_edge_doc(g1, e) for e in only1],
        "only_g2": [_edge_doc(g1, e) for e in only2],
    }
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_oracle(args) -> int:
    g1, g2 = _load_pair(args)
    budget = OracleBudget(max_states=args.max_states, max_depth=args.max_depth)
    outcome = oracle_shortest_sequence(g1, g2, budget)
    length = len(outcome.sequence) if outcome.sequence is not None else None
    doc = {"command": "oracle", "status": outcome.status, "length": length}
    if outcome.status == "found":
        _emit(args, doc, f"found {length}")
        return 0
    if outcome.status == "unreachable":
        _emit(args, doc, "unreachable")
        return 1
    _emit(args, doc, "budget")
    return 2


def cmd_gen(args) -> int:
    g = generate_random_instance(args.n, args.t, args.extra, args.seed)
    save_temporal_graph(g, args.output)
    doc = {
        "command": "gen",
        "n": g.n,
        "t": g.lifetime,
        "m": g.m,
        "path": args.output,
    }
    _emit(args, doc, f"generated n={g.n} t={g.lifetime} m={g.m}")
    return 0


def cmd_reduce_vc(args) -> int:
    edges = parse_edge_list(
        Path(args.graph).read_text(encoding="utf-8"), args.graph
    )
    vertices = sorted({x for e in edges for x in e})
    inst = VCInstance.build(vertices, edges, args.k)
    red = build_reduction(inst)
    prefix = args.out_prefix
    save_temporal_graph(red.g1, f"{prefix}.g1.tg")
    save_temporal_graph(red.g2, f"{prefix}.g2.tg")
    Path(f"{prefix}.vc").write_text(
        format_vc(inst.vertices, inst.edges, inst.k), encoding="utf-8"
    )
    doc = {
        "command": "reduce-vc",
        "ell": red.ell,
        "g1": f"{prefix}.g1.tg",
        "g2": f"{prefix}.g2.tg",
        "vc": f"{prefix}.vc",
        "vertices": red.g1.n,
        "temporal_edges": red.g1.m,
    }
    _emit(args, doc, f"ell {red.ell}")
    return 0


def cmd_cover_seq(args) -> int:
    names, edges, k = parse_vc(
        Path(f"{args.prefix}.vc").read_text(encoding="utf-8"), f"{args.prefix}.vc"
    )
    inst = VCInstance.build(names, edges, k)
    red = build_reduction(inst)
    cover = [c for c in (x.strip() for x in args.cover.split(",")) if c]
    seq = cover_to_sequence(red, cover)
    save_sequence(seq, red.g1, args.output)
    doc = {"command": "cover-seq", "length": len(seq), "path": args.output}
    _emit(args, doc, f"length {len(seq)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tgr",
        description="Decide and build connectivity-preserving relabeling plans "
        "between temporal graphs.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"tgr {__version__} (formats: tg {TG_VERSION}, tgs {TGS_VERSION}, vc {VC_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        return p

    p = add("check", cmd_check, help="decide feasibility only")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)

    p = add("plan", cmd_plan, help="decide and synthesize a full sequence")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("-o", "--output", help="write the sequence to this .tgs file")

    p = add("validate", cmd_validate, help="check a sequence file step by step")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--seq", required=True)

    p = add("classify", cmd_classify, help="per-edge changeability levels")
    p.add_argument("--g", required=True)
    p.add_argument("--dump-cross", action="store_true", help="also print each bridge's partition and crossing edges")

    p = add("diff", cmd_diff, help="edges only in one of the graphs")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)

    p = add("oracle", cmd_oracle, help="exhaustive shortest-sequence search")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--max-states", type=int, default=5_000_000)
    p.add_argument("--max-depth", type=int, default=None)

    p = add("gen", cmd_gen, help="random always-connected instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--extra", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)

    p = add("reduce-vc", cmd_reduce_vc, help="vertex-cover hardness instance")
    p.add_argument("--graph", required=True, help="edge list: one 'u v' per line")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out-prefix", required=True)

    p = add("cover-seq", cmd_cover_seq, help="sequence realizing a vertex cover")
    p.add_argument("--prefix", required=True, help="prefix used by reduce-vc")
    p.add_argument("--cover", required=True, help="comma-separated vertex names")
    p.add_argument("-o", "--output", required=True)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, GraphError) as exc:
        print(f"tgr: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"tgr: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
