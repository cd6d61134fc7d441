"""Command-line interface.

Exit status: 0 success, 1 a verification discrepancy, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .boundary import star_transform, strong_resolving_graph, strong_resolving_tf_graph
from .constructions import lexicographic_product
from .cover import vertex_cover
from .graph import Graph, GraphError, remove_isolated
from .io import encode_graph6, parse_graph6, parse_graph_spec, product_labels, read_edge_list, write_dot
from .smd import (
    BRUTE_FORCE_LIMIT,
    PIPELINE_LIMIT,
    PreconditionError,
    SizeLimitError,
    route_and_evaluate,
    smd_bruteforce,
    smd_via_sr,
    strong_metric_basis,
)
from .verify import CHECKS, check_families, verify_corpus

LEVELS = {"formula": "formula_only", "pipeline": "pipeline", "bruteforce": "bruteforce"}


class UsageError(Exception):
    pass


def _parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit JSON lines instead of text")
    p.add_argument("--seed", type=int, default=0, help="seed for random corpora (default 0)")
    p.add_argument("--limit-brute", type=int, default=BRUTE_FORCE_LIMIT, metavar="N",
                   help=f"largest graph for brute force (default {BRUTE_FORCE_LIMIT})")
    p.add_argument("--dot", metavar="FILE", help="also write the resulting graph as DOT")
    return p


def _graph_inputs(p: argparse.ArgumentParser, need_h: bool = False) -> None:
    src = p.add_argument_group("graph input")
    src.add_argument("--graph6", metavar="S", help="graph6 string")
    src.add_argument("--edges", metavar="FILE", help="edge-list file")
    src.add_argument("--g", metavar="SPEC", help="inline graph, e.g. path:4 or join(complete:1,path:3)")
    src.add_argument("--h", metavar="SPEC", required=need_h,
                     help="second factor; the input becomes the lexicographic product G∘H")


def build_parser() -> argparse.ArgumentParser:
    parent = _parent()
    parser = argparse.ArgumentParser(
        prog="lexsmd",
        description="Strong metric dimension of graphs and lexicographic products.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("smd", parents=[parent], allow_abbrev=False, help="strong metric dimension")
    _graph_inputs(p)
    p.add_argument("--method", choices=("pipeline", "bruteforce"), default="pipeline")

    for name, text in (
        ("sr-graph", "strong resolving graph"),
        ("srs-graph", "strong resolving TF-graph"),
        ("star", "the G* transform"),
        ("cover", "minimum vertex cover"),
        ("product", "lexicographic product G∘H"),
    ):
        p = sub.add_parser(name, parents=[parent], allow_abbrev=False, help=text)
        _graph_inputs(p, need_h=name == "product")
        if name == "star":
            p.add_argument("--minus", action="store_true", help="drop isolated vertices")

    verify = sub.add_parser("verify", help="check closed forms and identities")
    vsub = verify.add_subparsers(dest="target", required=True)
    p = vsub.add_parser("lex", parents=[parent], allow_abbrev=False, help="one product G∘H")
    p.add_argument("--g", metavar="SPEC", required=True)
    p.add_argument("--h", metavar="SPEC", required=True)
    p.add_argument("--level", choices=tuple(LEVELS), default="pipeline")
    p.add_argument("--limit-pipeline", type=int, default=PIPELINE_LIMIT, metavar="N")
    p = vsub.add_parser("corpus", parents=[parent], allow_abbrev=False, help="corpus sweep")
    p.add_argument("--check", choices=tuple(CHECKS) + ("all",), default="all")
    p.add_argument("--count", type=int, help="instances for the random checks")
    p.add_argument("--max-n", type=int, help="largest order for the exhaustive checks")
    p.add_argument("--quiet", action="store_true", help="print failures and the summary only")

    p = sub.add_parser("families", parents=[parent], allow_abbrev=False,
                       help="closed-form values for the named families")
    p.add_argument("--table", action="store_true", help="aligned table (default)")
    return parser


def _load(args) -> tuple[Graph, list[str] | None]:
    given = [x for x in (args.graph6, args.edges, args.g) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph6, --edges, --g")
    if args.graph6 is not None:
        g = parse_graph6(args.graph6)
    elif args.edges is not None:
        try:
            g = read_edge_list(args.edges)
        except OSError as exc:
            raise UsageError(f"cannot read {args.edges}: {exc.strerror}") from None
    else:
        g = parse_graph_spec(args.g)
    if getattr(args, "h", None) is None:
        return g, None
    h = parse_graph_spec(args.h)
    labels = product_labels(g.n, h.n) if g.n <= 26 else None
    return lexicographic_product(g, h), labels


def _emit(out: TextIO, args, payload: dict, lines: list[str]) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _write_dot(args, g: Graph, labels) -> None:
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(write_dot(g, labels))


def _names(labels, vertices) -> list:
    return [labels[v] for v in vertices] if labels else list(vertices)


def _graph_payload(g: Graph, index, labels) -> tuple[dict, list[str]]:
    names = _names(labels, index)
    edges = [[names[u], names[v]] for u, v in g.edges]
    payload = {"n": g.n, "vertices": names, "edges": edges, "graph6": encode_graph6(g)}
    lines = [
        f"n={g.n}",
        "vertices=" + " ".join(map(str, names)),
        "edges=" + " ".join(f"{u}-{v}" for u, v in edges),
        f"graph6={payload['graph6']}",
    ]
    return payload, lines


def _cmd_smd(args, out) -> int:
    g, labels = _load(args)
    if args.method == "bruteforce":
        size, basis = smd_bruteforce(g, args.limit_brute)
    else:
        size, basis = smd_via_sr(g), strong_metric_basis(g)
    names = _names(labels, basis)
    _emit(out, args, {"dim_s": size, "basis": names, "method": args.method}, [str(size)])
    return 0


def _cmd_transform(args, out) -> int:
    g, labels = _load(args)
    if args.command == "sr-graph":
        result, index = strong_resolving_graph(g)
    elif args.command == "srs-graph":
        result, index = strong_resolving_tf_graph(g)
    elif args.command == "star":
        if args.minus:
            result, index = remove_isolated(star_transform(g))
        else:
            result, index = star_transform(g), tuple(range(g.n))
    else:
        result, index = g, tuple(range(g.n))
    payload, lines = _graph_payload(result, index, labels)
    _write_dot(args, result, _names(labels, index) if labels else None)
    _emit(out, args, payload, lines)
    return 0


def _cmd_cover(args, out) -> int:
    g, labels = _load(args)
    res = vertex_cover(g)
    names = _names(labels, res.witness)
    lines = [f"alpha={res.size}", "witness=" + " ".join(map(str, names))]
    _emit(out, args, {"alpha": res.size, "witness": names}, lines)
    return 0


def _cmd_verify_lex(args, out) -> int:
    g = parse_graph_spec(args.g)
    h = parse_graph_spec(args.h)
    report = route_and_evaluate(
        g, h, LEVELS[args.level], brute_limit=args.limit_brute, pipeline_limit=args.limit_pipeline
    )
    if args.dot:
        _write_dot(args, lexicographic_product(g, h), product_labels(g.n, h.n) if g.n <= 26 else None)
    status = "DISCREPANCY" if report.discrepancy else "OK"
    lines = [f"case={report.case_id}"]
    lines += [f"  {name}: {'yes' if ok else 'no'}" for name, ok in report.preconditions]
    lines.append(f"formula={report.value}")
    lines += [f"  {k}={v}" for k, v in report.cross_checks.items()]
    lines += [f"  term {k}={v}" for k, v in report.terms.items()]
    if report.pipeline_value is not None:
        lines.append(f"pipeline={report.pipeline_value}")
    if report.bruteforce_value is not None:
        lines.append(f"brute={report.bruteforce_value}")
    lines.append(f"status={status}")
    _emit(out, args, report.to_dict(), lines)
    return 1 if report.discrepancy else 0


def _cmd_verify_corpus(args, out) -> int:
    total = failures = 0
    for rec in verify_corpus(
        args.check,
        seed=args.seed,
        count=args.count,
        max_n=args.max_n,
        brute_limit=args.limit_brute,
    ):
        total += 1
        failures += not rec.ok
        if args.quiet and rec.ok:
            continue
        if args.json:
            out.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")
        else:
            out.write(f"{'PASS' if rec.ok else 'FAIL'} {rec.check} {rec.instance}\n")
    summary = {"checks": total, "failures": failures}
    if args.json:
        out.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
    else:
        out.write(f"checked={total} failures={failures}\n")
    return 1 if failures else 0


def _cmd_families(args, out) -> int:
    records = list(check_families(brute_limit=args.limit_brute))
    failures = sum(not r.ok for r in records)
    if args.json:
        for r in records:
            out.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")
    else:
        head = f"{'family':<18}{'closed form':>12}{'pipeline':>10}{'brute':>7}  status"
        out.write(head + "\n" + "-" * len(head) + "\n")
        for r in records:
            d = r.detail
            if not r.ok:
                status = "MISMATCH"
            elif not d["claim_holds"]:
                status = "printed claim differs (not enforced)"
            else:
                status = "ok"
            brute = "-" if d["brute"] is None else d["brute"]
            out.write(f"{r.instance:<18}{d['closed_form']:>12}{d['pipeline']:>10}{brute:>7}  {status}\n")
        out.write(f"rows={len(records)} failures={failures}\n")
    return 1 if failures else 0


def run_cli(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "smd": _cmd_smd,
        "sr-graph": _cmd_transform,
        "srs-graph": _cmd_transform,
        "star": _cmd_transform,
        "product": _cmd_transform,
        "cover": _cmd_cover,
        "families": _cmd_families,
    }
    try:
        if args.command == "verify":
            handler = _cmd_verify_lex if args.target == "lex" else _cmd_verify_corpus
        else:
            handler = handlers[args.command]
        return handler(args, out)
    except (UsageError, GraphError, PreconditionError, SizeLimitError, ValueError) as exc:
        err.write(f"lexsmd: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
