"""Command-line front end: ``powergraph {build,graph,analyze,check,sweep}``.

Exit codes: 0 success (all statements hold), 1 a statement failed, 2 usage or
input error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import connectivity as conn
from .errors import CapExceeded, InputError, PowerGraphError
from .graphs import SimpleGraph
from .groups import FiniteGroup, GroupSpec, classify, make, parse_spec
from .powergraph import build_power_graph, power_graph_adjacency_text, power_graph_dot, reduced_graph
from .theorems import STATEMENTS, CheckOptions, GroupFacts, load_catalog, run_check, sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

_FAMILY_ALIASES = {"quaternion": "generalized_quaternion", "elementary-abelian": "elementary_abelian"}


class UsageError(InputError):
    pass


def _spec_from_args(args) -> GroupSpec:
    sources = [x for x in (args.family, args.spec, args.cayley_file, args.perm_file) if x is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --spec, --cayley-file, --perm-file")
    if args.spec is not None:
        return parse_spec(args.spec)
    if args.cayley_file is not None:
        return GroupSpec("cayley_file", (args.cayley_file,))
    if args.perm_file is not None:
        return GroupSpec("perm_file", (args.perm_file,))
    fam = _FAMILY_ALIASES.get(args.family, args.family)
    needed = {
        "cyclic": ("n",),
        "dihedral": ("n",),
        "symmetric": ("n",),
        "elementary_abelian": ("p", "r"),
        "heisenberg": ("p",),
        "generalized_quaternion": ("order",),
    }
    if fam not in needed:
        raise UsageError(f"--family {args.family!r} is not a buildable family (use --spec for direct products)")
    if fam == "symmetric" and args.n is None:
        args.n = args.degree
    values = []
    for name in needed[fam]:
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"--family {args.family} needs --{name}")
        values.append(val)
    return GroupSpec(fam, tuple(values))


def _group(args) -> tuple[GroupSpec, FiniteGroup]:
    spec = _spec_from_args(args)
    return spec, make(spec, args.max_order)


def _emit(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _kv_text(d: dict, prefix: str = "") -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            lines.append(_kv_text(v, f"{prefix}{k}.").rstrip("\n"))
        else:
            lines.append(f"{prefix}{k}={json.dumps(v) if isinstance(v, (list, bool)) or v is None else v}")
    return "\n".join(lines) + "\n"


# -- commands ---------------------------------------------------------------------


def cmd_build(args) -> int:
    spec, g = _group(args)
    info = {"spec": str(spec), **classify(g).to_dict()}
    _emit(args, _kv_text(info) if args.format == "text" else _dumps(info))
    return EXIT_OK


def cmd_graph(args) -> int:
    _, g = _group(args)
    pg = build_power_graph(g)
    fmt = args.format or "text"
    if fmt == "dot":
        out = power_graph_dot(pg, reduced=args.reduced)
    elif fmt == "json":
        graph: SimpleGraph = reduced_graph(pg) if args.reduced else pg.graph
        out = _dumps({
            "vertices": [{"id": v, "element": graph.labels[v], "label": g.label(graph.labels[v])}
                         for v in range(graph.vertex_count)],
            "edges": [[graph.labels[u], graph.labels[v]] for u, v in graph.sorted_edges],
        })
    else:
        out = power_graph_adjacency_text(pg, reduced=args.reduced)
    _emit(args, out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    _, g = _group(args)
    graph = build_power_graph(g).graph
    if args.reduced:
        graph = reduced_graph(build_power_graph(g))
    report = conn.analyze(graph, args.analysis_cap).to_dict()
    _emit(args, _kv_text(report) if args.format == "text" else _dumps(report))
    return EXIT_OK


def _options(args) -> CheckOptions:
    return CheckOptions(sample_count=args.samples, seed=args.seed, enumeration_cap=args.enum_cap,
                        max_order=args.max_order)


def _statements(args) -> Optional[list[str]]:
    if not args.stmt:
        return None
    out = []
    for item in args.stmt:
        out.extend(s.strip() for s in item.split(",") if s.strip())
    unknown = [s for s in out if s not in STATEMENTS]
    if unknown:
        raise UsageError(f"unknown statement id(s): {', '.join(unknown)}; choose from {', '.join(STATEMENTS)}")
    return out


def _status(verdicts) -> int:
    if any(v.holds is False for v in verdicts):
        return EXIT_FAIL
    if any(v.capped for v in verdicts):
        return EXIT_CAP
    if any(v.error for v in verdicts):
        return EXIT_USAGE
    return EXIT_OK


def cmd_check(args) -> int:
    spec, g = _group(args)
    stmts = _statements(args) or list(STATEMENTS)
    options = _options(args)
    facts = GroupFacts(g, spec, options.enumeration_cap, options.max_subsets)
    verdicts = [run_check(s, facts, options) for s in STATEMENTS if s in stmts]
    if args.format == "text":
        lines = []
        for v in verdicts:
            state = "error" if v.error else ("holds" if v.holds else "FAILS")
            lines.append(f"{v.statement_id}: {state} lhs={json.dumps(v.lhs)} rhs={json.dumps(v.rhs)}"
                         + (f" ({v.reason or v.error})" if v.reason or v.error else ""))
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dumps({"spec": str(spec), "verdicts": [v.to_dict(args.timings) for v in verdicts]}))
    return _status(verdicts)


def cmd_sweep(args) -> int:
    catalog = load_catalog(args.catalog)
    report = sweep(catalog, _statements(args), fast=args.fast, options=_options(args), jobs=args.jobs)
    if args.format == "text":
        lines = [f"catalog {report.catalog_version}: {len(report.verdicts)} verdicts, "
                 f"{len(report.failures)} failures, {len(report.errors)} errors"]
        for sid, row in report.summary().items():
            lines.append(f"  {sid:22s} " + " ".join(f"{k}={v}" for k, v in row.items()))
        for v in report.failures + report.errors:
            lines.append(f"  ! {v.spec} {v.statement_id}: {json.dumps(v.witness) if v.witness else v.error}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dumps(report.to_dict(args.timings)))
    return _status(report.verdicts)


# -- parser -----------------------------------------------------------------------


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("group source")
    g.add_argument("--family", help="cyclic, elementary_abelian, dihedral, symmetric, quaternion, heisenberg")
    g.add_argument("--n", type=int, help="cyclic/dihedral/symmetric parameter")
    g.add_argument("--degree", type=int, help="symmetric group degree (alias of --n)")
    g.add_argument("--p", type=int, help="prime for elementary_abelian/heisenberg")
    g.add_argument("--r", type=int, help="rank for elementary_abelian")
    g.add_argument("--order", type=int, help="order for quaternion (2^k, k >= 3)")
    g.add_argument("--spec", help='full spec text, e.g. "direct_product [cyclic 2] [cyclic 4]"')
    g.add_argument("--cayley-file", help="Cayley table file")
    g.add_argument("--perm-file", help="permutation generator file")


def _add_common(p: argparse.ArgumentParser, formats: Sequence[str], default: Optional[str]) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--output", "-o", help="write to this path instead of stdout")
    p.add_argument("--max-order", type=int, default=None, help="group order cap (default 2048 or $PG_MAX_ORDER)")


def _add_check_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--stmt", action="append", help="statement id(s), repeatable or comma separated")
    p.add_argument("--samples", type=int, default=200, help="random induced subgraphs for lem_2_1_ii")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=0xC0FFEE, help="sampling seed")
    p.add_argument("--enum-cap", type=int, default=conn.DEFAULT_ENUMERATION_CAP, help="vertex cap for cut enumeration")
    p.add_argument("--timings", action="store_true", help="include elapsedMs (output no longer reproducible)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powergraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a group and summarize it")
    _add_source(p)
    _add_common(p, ("json", "text"), "json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("graph", help="export the power graph")
    _add_source(p)
    _add_common(p, ("text", "dot", "json"), "text")
    p.add_argument("--reduced", action="store_true", help="drop the identity vertex")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("analyze", help="connectivity report of the power graph")
    _add_source(p)
    _add_common(p, ("json", "text"), "json")
    p.add_argument("--reduced", action="store_true", help="analyze the graph without the identity vertex")
    p.add_argument("--analysis-cap", type=int, default=conn.DEFAULT_ANALYSIS_CAP)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="check statements on one group")
    _add_source(p)
    _add_common(p, ("json", "text"), "json")
    _add_check_opts(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="check statements over a catalog")
    p.add_argument("--catalog", default="default", help='manifest path or "default"')
    p.add_argument("--fast", action="store_true", help="skip entries tagged @slow")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_common(p, ("json", "text"), "json")
    _add_check_opts(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PowerGraphError, KeyError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
