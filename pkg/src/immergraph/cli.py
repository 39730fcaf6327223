"""Command-line surface.

Subcommands cover the oracle (immerse), the recognizers (classify), the
reduction pipeline (reduce, sausage-reduce), exact treewidth, theorem
sweeps (verify), and catalog regeneration (catalog).

The data stream (stdout, or --output) carries exactly one JSON document;
progress and diagnostics go to stderr.  Exit codes: 0 = computed, even
when the answer is negative; 1 = hypothesis violation, certificate on
the data stream; 2 = usage or input parse error.  Identical invocations
with --workers 1 produce byte-identical output, so the verify report's
elapsed_ms is zeroed here; timing goes to stderr instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields, is_dataclass
from pathlib import Path

from .catalog import Catalog, catalog_from_json, default_catalog
from .errors import HypothesisViolation, UnclassifiedGraph
from .immersion import decide_immersion, pattern_from_name
from .multigraph import Multigraph
from .reduction import full_reduction, sausage_reduce
from .structure import classify_dm, classify_k4, classify_rooted_w4, classify_w4
from .treewidth import treewidth_exact
from .verifier import generate_catalog, verify_theorem

__all__ = ["main"]

_CLASSIFY_KINDS = ("dm", "rooted-w4", "w4", "k4")


def _jsonable(value):
    if is_dataclass(value) and not isinstance(value, type):
        out = {"tag": type(value).__name__}
        out.update({f.name: _jsonable(getattr(value, f.name)) for f in fields(value)})
        return out
    if isinstance(value, Multigraph):
        return value.to_text()
    if isinstance(value, frozenset):
        return sorted(value)
    if isinstance(value, bytes):
        return value.hex()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _emit(payload, stream) -> None:
    stream.write(json.dumps(payload, sort_keys=True) + "\n")


def _read_graph(path: str, roots: str | None) -> Multigraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="ascii")
    g = Multigraph.from_text(text)
    if roots is not None:
        ids = tuple(int(p) for p in roots.split(",") if p != "")
        g = g.with_roots(ids)
    return g


def _load_catalog(path: str | None) -> Catalog:
    if path is None:
        return default_catalog()
    return catalog_from_json(Path(path).read_text(encoding="ascii"))


def _parse_ns(values: list[str] | None) -> tuple[int, ...] | None:
    if not values:
        return None
    out: list[int] = []
    for value in values:
        out.extend(int(p) for p in value.split(",") if p != "")
    return tuple(out)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="immergraph",
        description="immersion testing, structure recognition, and theorem sweeps",
    )
    parser.add_argument(
        "--format", choices=("json",), default="json", help="output format"
    )
    parser.add_argument("--output", metavar="PATH", help="write JSON here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_input(p):
        p.add_argument("input", help="graph file in plain text format, - for stdin")
        p.add_argument("--roots", metavar="IDS", help="replace roots, comma-separated")

    p = sub.add_parser("immerse", help="run the immersion oracle")
    p.add_argument("--pattern", required=True, metavar="NAME", help="k4, w4, or dm:<m>")
    add_graph_input(p)

    p = sub.add_parser("classify", help="run a recognizer")
    p.add_argument("kind", metavar="KIND", help="dm:<m>, rooted-w4, w4, or k4")
    p.add_argument("--catalog", metavar="PATH", help="catalog JSON for the wheel recognizers")
    add_graph_input(p)

    add_graph_input(sub.add_parser("reduce", help="run the full reduction pipeline"))
    add_graph_input(sub.add_parser("sausage-reduce", help="shorten chains of sausages"))
    add_graph_input(sub.add_parser("treewidth", help="exact treewidth"))

    p = sub.add_parser("verify", help="sweep one structure statement")
    p.add_argument("--theorem", required=True, metavar="ID")
    p.add_argument("--n", action="append", metavar="K", help="orders to sweep, repeatable")
    p.add_argument("--cap", type=int, metavar="M", help="multiplicity ceiling")
    p.add_argument("--workers", type=int, default=1, metavar="W")
    p.add_argument("--catalog", metavar="PATH")
    p.add_argument("--checkpoint", metavar="PATH")

    p = sub.add_parser("catalog", help="regenerate the sporadic catalog")
    p.add_argument("--n", action="append", metavar="K", help="largest support order")
    p.add_argument("--cap", type=int, metavar="M")
    p.add_argument("--workers", type=int, default=1, metavar="W")
    return parser


def _run_immerse(args) -> dict:
    g = _read_graph(args.input, args.roots)
    pattern = pattern_from_name(args.pattern, nroots=len(g.roots))
    witness = decide_immersion(g, pattern)
    return {
        "immerses": witness is not None,
        "pattern": args.pattern,
        "witness": _jsonable(witness) if witness is not None else None,
    }


def _run_classify(args) -> dict:
    kind = args.kind
    g = _read_graph(args.input, args.roots)
    if kind.startswith("dm:"):
        result = classify_dm(g, int(kind[3:]))
    elif kind == "rooted-w4":
        result = classify_rooted_w4(g, _load_catalog(args.catalog))
    elif kind == "w4":
        result = classify_w4(g, _load_catalog(args.catalog))
    elif kind == "k4":
        result = classify_k4(g)
    else:
        raise ValueError(f"unknown classify kind {kind!r}")
    return {"kind": kind, "result": _jsonable(result)}


def _run_reduce(args) -> dict:
    g = _read_graph(args.input, args.roots)
    trace = full_reduction(g)
    return {
        "steps": [
            {
                "rule": step.rule,
                "before": step.before.to_text(),
                "side": sorted(step.side),
                "after": [h.to_text() for h in step.after],
            }
            for step in trace.steps
        ],
        "components": [h.to_text() for h in trace.components],
    }


def _run_sausage_reduce(args) -> dict:
    g = _read_graph(args.input, args.roots)
    return {"graph": sausage_reduce(g).to_text()}


def _run_treewidth(args) -> dict:
    g = _read_graph(args.input, args.roots)
    width, decomposition = treewidth_exact(g)
    return {
        "treewidth": width,
        "bags": [sorted(bag) for bag in decomposition.bags],
        "tree_edges": [list(e) for e in decomposition.edges],
    }


def _run_verify(args) -> dict:
    catalog = _load_catalog(args.catalog) if args.catalog else None
    report = verify_theorem(
        args.theorem,
        ns=_parse_ns(args.n),
        cap=args.cap,
        workers=args.workers,
        catalog=catalog,
        checkpoint=args.checkpoint,
    )
    print(
        f"{report.theorem}: examined {report.examined}, "
        f"obstructions {report.obstructions}, "
        f"counterexamples {len(report.counterexamples)}, "
        f"{report.elapsed_ms} ms",
        file=sys.stderr,
    )
    payload = report.to_payload()
    payload["elapsed_ms"] = 0
    return payload


def _run_catalog(args) -> list:
    ns = _parse_ns(args.n)
    n_max = max(ns) if ns else 8
    cap = args.cap if args.cap is not None else 8
    built = generate_catalog(n_max=n_max, cap=cap, workers=args.workers)
    print(
        f"catalog: {built.provenance['rooted_entries']} rooted, "
        f"{built.provenance['unrooted_entries']} unrooted entries "
        f"(n_max={built.provenance['n_max']}, cap={built.provenance['cap']})",
        file=sys.stderr,
    )
    return json.loads(built.catalog.to_json())


_RUNNERS = {
    "immerse": _run_immerse,
    "classify": _run_classify,
    "reduce": _run_reduce,
    "sausage-reduce": _run_sausage_reduce,
    "treewidth": _run_treewidth,
    "verify": _run_verify,
    "catalog": _run_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        payload = _RUNNERS[args.command](args)
        code = 0
    except HypothesisViolation as exc:
        payload = {
            "error": "hypothesis-violation",
            "message": str(exc),
            "certificate": _jsonable(exc.certificate),
        }
        code = 1
    except UnclassifiedGraph as exc:
        # a computed negative: no tag applies, the input is a candidate
        # counterexample or a catalog gap
        payload = {"result": {"tag": "Unclassified"}, "graph": exc.graph.to_text()}
        code = 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="ascii") as handle:
            _emit(payload, handle)
    else:
        _emit(payload, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
