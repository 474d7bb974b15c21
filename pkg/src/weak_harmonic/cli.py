"""Command-line interface.

Exit status: 0 on success, 1 when the answer is negative (not verified,
axioms fail, not admissible, coalescence preconditions fail), 2 on usage
errors and malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families
from .correspondence import AxiomError, NotationError, UnverifiedGraphError, build, extract, format_collection, parse_collection
from .enumeration import Catalog, EnumOptions, enumerate_catalog
from .graphs import GraphError, LabeledMultigraph
from .harmonic import verify_weak, verify_weak_multi
from .serialize import FormatError, dumps, graph_from_json, graph_to_json, to_dot
from .total import NotAdmissibleError, check_admissible, minimize_weights, total_label


class UsageError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON near line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _graph_arg(value: str, multi: bool | None = None):
    """A graph given as a JSON file path or as collection notation."""
    if value.endswith(".json") or os.path.exists(value):
        return graph_from_json(_load_json(value), multi=multi)
    c = parse_collection(value)
    return build(c)


def _parse_base(text: str) -> list[tuple[int, int]]:
    out = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        try:
            i, k = part.split(":")
            out.append((int(i), int(k)))
        except ValueError:
            raise UsageError(f"bad base pair {part!r} (expected i:k)") from None
    return out


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) if isinstance(obj, dict) else obj)


def cmd_verify(args) -> int:
    data = _load_json(args.graph)
    if args.total:
        t = graph_from_json(data, total=True)
        report = t.verify()
    else:
        g = graph_from_json(data, multi=True if args.multi else None)
        report = verify_weak_multi(g) if isinstance(g, LabeledMultigraph) else verify_weak(g)
    _emit(report.to_json())
    return 0 if report.ok else 1


def cmd_extract(args) -> int:
    g = graph_from_json(_load_json(args.graph), multi=True if args.multi else None)
    try:
        c = extract(g)
    except UnverifiedGraphError as exc:
        _emit(exc.report.to_json())
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(format_collection(c, compact=args.compact))
    return 0


def cmd_build(args) -> int:
    c = parse_collection(args.collection, multi=True if args.multi else None)
    try:
        g = build(c, connected=not args.disconnected)
    except AxiomError as exc:
        _emit(exc.report.to_json())
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(graph_to_json(g))
    return 0


def cmd_enumerate(args) -> int:
    opts = EnumOptions(args.n, connected=not args.disconnected, max_multiplicity=args.max_mult,
                       dedup_inversion=args.dedup_inversion, max_n=args.max_n)
    cat = enumerate_catalog(opts, workers=args.workers)
    text = cat.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"{cat.count} collections written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.kind} needs {', '.join(missing)}")


def cmd_family(args) -> int:
    kind = args.kind
    labels = None
    if kind == "path":
        _need(args, "n")
        g = families.path(args.n)
    elif kind == "star":
        _need(args, "n")
        g = families.star(args.n)
    elif kind == "star-path":
        _need(args, "m", "n", "k")
        g = families.star_path(args.m, args.n, args.k)
    elif kind == "c-grid":
        _need(args, "k", "h")
        g = families.c_grid(args.k, args.h)
    elif kind in ("pb-window", "cylinder-window"):
        _need(args, "lo", "hi")
        if kind == "pb-window":
            f = families.pb(_parse_base(args.base or ""))
        else:
            _need(args, "graph")
            f = families.inner_cylinder(_graph_arg(args.graph, multi=False))
        report = families.verify_window(f, args.lo, args.hi)
        g, labels = families.window_graph(f, args.lo, args.hi)
        if not report.ok:
            print(f"error: window fails at labels {[t for t, _, _ in report.failures]}", file=sys.stderr)
            _emit(graph_to_json(g, labels))
            return 1
    elif kind == "coalesce":
        _need(args, "left", "right")
        try:
            g = families.coalesce(_graph_arg(args.left, multi=False), _graph_arg(args.right, multi=False))
        except families.CoalescenceError as exc:
            print(f"error: {exc.reason}: {exc}", file=sys.stderr)
            return 1
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {kind}")
    _emit(graph_to_json(g, labels))
    return 0


def cmd_total(args) -> int:
    g = graph_from_json(_load_json(args.graph), multi=False)
    adm = check_admissible(g)
    if not adm.ok:
        print(f"error: not admissible at vertices {list(adm.failures)}", file=sys.stderr)
        return 1
    t = total_label(g)
    if args.minimize:
        t = minimize_weights(t)
    _emit(graph_to_json(t))
    return 0


def cmd_export(args) -> int:
    data = _load_json(args.input)
    if "collections" in data:
        cat = Catalog.from_json(data)
        parts = []
        for i, c in enumerate(cat.entries):
            parts.append(to_dot(build(c, connected=cat.options.connected), name=f"G{i}"))
        text = "".join(parts)
    else:
        g = graph_from_json(data)
        text = to_dot(g, labels=data.get("labels"))
    with open(args.output, "w") as fh:
        fh.write(text)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weak-harmonic", description="Weak harmonic labelings of graphs and multigraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check a labeled graph")
    s.add_argument("graph")
    s.add_argument("--multi", action="store_true")
    s.add_argument("--total", action="store_true", help="treat third edge entries as edge labels")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("extract", help="graph JSON to collection notation")
    s.add_argument("graph")
    s.add_argument("--multi", action="store_true")
    s.add_argument("--compact", action="store_true", help="digit form when every element is 0-9")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("build", help="collection notation to graph JSON")
    s.add_argument("collection")
    s.add_argument("--multi", action="store_true")
    s.add_argument("--disconnected", action="store_true", help="skip the connectivity axiom")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("enumerate", help="all weakly labeled graphs on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--disconnected", action="store_true")
    s.add_argument("--max-mult", type=int, default=1)
    s.add_argument("--dedup-inversion", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("family", help="generate a family member or window")
    s.add_argument("kind", choices=["path", "star", "star-path", "c-grid", "pb-window", "cylinder-window", "coalesce"])
    for flag in ("--m", "--n", "--k", "--h", "--lo", "--hi"):
        s.add_argument(flag, type=int)
    s.add_argument("--base", help='spanning pairs, e.g. "0:2,1:3,3:5"')
    s.add_argument("--graph", help="base graph (JSON path or collection) for cylinder-window")
    s.add_argument("--left")
    s.add_argument("--right")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("total", help="edge weights for an admissible labeling")
    s.add_argument("graph")
    s.add_argument("--minimize", action="store_true")
    s.set_defaults(func=cmd_total)

    s = sub.add_parser("export", help="write Graphviz DOT")
    s.add_argument("--dot", action="store_true", required=True)
    s.add_argument("input")
    s.add_argument("output")
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, NotationError, FormatError, GraphError, families.FamilyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AxiomError, UnverifiedGraphError, NotAdmissibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
