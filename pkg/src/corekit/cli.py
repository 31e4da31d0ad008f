"""Command-line front end: analyze / verify / search / generate.

Output discipline: everything semantic goes to stdout in a canonical order
(sorted labels, fixed field order), so identical invocations are
byte-identical regardless of worker count or timing; elapsed time and other
diagnostics go to stderr. Exit codes: 0 success (all checks hold), 1 a
counterexample was found, 2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .budgets import Budgets
from .corpus import FIXTURE_NAMES, family_items, fixture, kernel_gap_family, random_unicyclic
from .critical import critical_difference, ker
from .errors import BudgetExceededError, CorekitError, ParseError
from .graph import Graph, classify_shape, parse_edge_list, serialize
from .independence import alpha, core, corona
from .matching import mu
from .theorems import (
    THEOREM_IDS,
    check,
    search_problem1,
    sum_defect_histogram,
    sweep,
)
from .unicyclic import decompose

_EXIT_OK = 0
_EXIT_COUNTEREXAMPLE = 1
_EXIT_USAGE = 2
_EXIT_BUDGET = 3


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _fmt_set(labels) -> str:
    return "{" + ", ".join(labels) + "}"


def _budgets_from(args: argparse.Namespace) -> Budgets:
    return Budgets(
        enum_n=args.max_enum_n,
        subset_n=args.max_subset_n,
        matching_limit=args.matching_limit,
    )


def _read_graph(path: str) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    return parse_edge_list(text)


# -- analyze -------------------------------------------------------------------


def _analysis_record(gid: str, g: Graph, budgets: Budgets) -> dict:
    shape = classify_shape(g)
    a = alpha(g, budgets)
    m = mu(g, budgets)
    c = core(g, budgets)
    cor = corona(g, budgets)
    k = ker(g, budgets)
    d_c = critical_difference(g, budgets)
    record = {
        "graph_id": gid,
        "n": g.n,
        "m": g.m,
        "shape": {
            "kind": shape.kind,
            "connected": shape.connected,
            "bipartite": shape.bipartite,
        },
        "alpha": a,
        "mu": m,
        "ke": a + m == g.n,
        "core": list(c.labels()),
        "corona": list(cor.labels()),
        "ker": list(k.labels()),
        "d_c": d_c,
        "sum_defect": len(cor) + len(c) - 2 * a,
        "unicyclic": None,
    }
    if shape.connected and shape.kind == "unicyclic":
        dec = decompose(g)
        record["unicyclic"] = {
            "cycle": list(dec.cycle),
            "n1": list(dec.outer_roots().labels()),
            "pendant_trees": [
                {
                    "root": pt.root,
                    "anchor": pt.anchor,
                    "vertices": list(pt.vertices.labels()),
                }
                for pt in dec.pendant_trees
            ],
        }
    return record


def _print_analysis_text(rec: dict) -> None:
    shape = rec["shape"]
    out = [
        f"graph: {rec['graph_id']}",
        f"n: {rec['n']}",
        f"m: {rec['m']}",
        "shape: {} ({}connected, {}bipartite)".format(
            shape["kind"],
            "" if shape["connected"] else "dis",
            "" if shape["bipartite"] else "non-",
        ),
        f"alpha: {rec['alpha']}",
        f"mu: {rec['mu']}",
        f"koenig-egervary: {_bool(rec['ke'])}",
        f"core: {_fmt_set(rec['core'])}",
        f"corona: {_fmt_set(rec['corona'])}",
        f"ker: {_fmt_set(rec['ker'])}",
        f"critical-difference: {rec['d_c']}",
        f"sum-defect: {rec['sum_defect']}",
    ]
    uni = rec["unicyclic"]
    if uni is not None:
        out.append("cycle: (" + ", ".join(uni["cycle"]) + ")")
        out.append(f"n1: {_fmt_set(uni['n1'])}")
        for pt in uni["pendant_trees"]:
            out.append(
                f"pendant: root={pt['root']} anchor={pt['anchor']} "
                f"vertices={_fmt_set(pt['vertices'])}"
            )
    print("\n".join(out))


def _cmd_analyze(args: argparse.Namespace) -> int:
    budgets = _budgets_from(args)
    g = _read_graph(args.file)
    rec = _analysis_record(Path(args.file).stem, g, budgets)
    if args.format == "json":
        print(json.dumps(rec, indent=2))
    else:
        _print_analysis_text(rec)
    return _EXIT_OK


# -- verify --------------------------------------------------------------------


def _parse_theorems(values: list[str]) -> tuple[str, ...]:
    tids: list[str] = []
    for v in values:
        for part in v.split(","):
            part = part.strip()
            if not part:
                continue
            if part == "all":
                tids.extend(THEOREM_IDS)
            else:
                tids.append(part)
    # preserve order, drop repeats
    seen = set()
    out = []
    for t in tids:
        if t not in seen:
            seen.add(t)
            out.append(t)
    return tuple(out)


def _render_report_line(rep) -> str:
    holds = "-" if rep.holds is None else _bool(rep.holds)
    parts = [
        f"{rep.theorem_id} {rep.graph_id} "
        f"applicable={_bool(rep.applicable)} holds={holds}"
    ]
    for key, val in rep.witness:
        parts.append(f"{key}={val}")
    return " ".join(parts)


def _cmd_verify(args: argparse.Namespace) -> int:
    budgets = _budgets_from(args)
    tids = _parse_theorems(args.theorem)
    if not tids:
        print("error: no theorem ids given", file=sys.stderr)
        return _EXIT_USAGE
    single = None
    if args.graph:
        gid = Path(args.graph).stem
        single = (gid, _read_graph(args.graph))
        items = [single]
        family = f"file:{args.graph}"
    elif args.random is not None:
        if args.size is None:
            print("error: --random needs --size", file=sys.stderr)
            return _EXIT_USAGE
        items = family_items(
            "random-connected",
            count=args.random,
            size=args.size,
            seed=args.seed,
            budgets=budgets,
        )
        family = f"random-connected(count={args.random}, size={args.size}, seed={args.seed})"
    elif args.family:
        if args.family != "fixtures" and args.max_n is None:
            print("error: --family needs --max-n", file=sys.stderr)
            return _EXIT_USAGE
        items = family_items(args.family, max_n=args.max_n, budgets=budgets)
        family = args.family if args.family == "fixtures" else f"{args.family}(max_n={args.max_n})"
    else:
        print("error: one of --graph/--family/--random is required", file=sys.stderr)
        return _EXIT_USAGE

    summary = sweep(
        items,
        tids,
        budgets=budgets,
        fail_fast=args.fail_fast,
        workers=args.workers,
        family=family,
    )
    if single is not None:
        gid, g = single
        for tid in tids:
            print(_render_report_line(check(tid, g, gid, budgets)))
    print(f"family: {summary.family}")
    print(f"theorems: {', '.join(summary.theorem_ids)}")
    print(f"graphs tested: {summary.graphs_tested}")
    print(f"checks run: {summary.checks_run}")
    print(f"checks applicable: {summary.checks_applicable}")
    print(f"failures: {len(summary.failures)}")
    if summary.truncated:
        print(f"truncated: {summary.truncation_reason}")
    for text, rep in summary.failures:
        print(f"failure: {rep.theorem_id} on {rep.graph_id}")
        for key, val in rep.counterexample:
            print(f"  {key}: {val}")
        for line in text.rstrip("\n").split("\n"):
            print(f"  | {line}")
    print("result: " + ("all hold" if summary.all_hold() else "counterexample found"))
    print(f"elapsed: {summary.elapsed:.3f}s", file=sys.stderr)
    return _EXIT_OK if summary.all_hold() else _EXIT_COUNTEREXAMPLE


# -- search --------------------------------------------------------------------


def _cmd_search(args: argparse.Namespace) -> int:
    budgets = _budgets_from(args)
    if args.problem == 1:
        rep = search_problem1(args.max_n, budgets)
        print("problem: 1")
        print(f"max_n: {rep.max_n}")
        print(f"examined: {rep.examined}")
        print(f"core=ker: {len(rep.equal)}")
        print(f"core!=ker: {len(rep.different)}")
        for title, bucket in (("core=ker", rep.equal), ("core!=ker", rep.different)):
            if bucket:
                gid, text = bucket[0]
                print(f"smallest {title} exemplar: {gid}")
                for line in text.rstrip("\n").split("\n"):
                    print(f"  | {line}")
        return _EXIT_OK
    items = family_items(args.family, max_n=args.max_n, budgets=budgets)
    counts, examples = sum_defect_histogram(items, budgets)
    print("problem: 2")
    print(f"family: {args.family}")
    print(f"max_n: {args.max_n}")
    for d in sorted(counts):
        print(f"sum-defect {d}: {counts[d]} graphs")
        gid, text = examples[d][0]
        print(f"  exemplar: {gid}")
        for line in text.rstrip("\n").split("\n"):
            print(f"  | {line}")
    return _EXIT_OK


# -- generate ------------------------------------------------------------------


def _cmd_generate(args: argparse.Namespace) -> int:
    chosen = [
        args.fixture is not None,
        args.family is not None,
        args.random_unicyclic,
    ]
    if sum(chosen) != 1:
        print(
            "error: exactly one of --fixture/--family/--random-unicyclic",
            file=sys.stderr,
        )
        return _EXIT_USAGE
    if args.fixture is not None:
        g = fixture(args.fixture)
    elif args.family is not None:
        if args.family != "kernel-gap":
            print(f"error: unknown family {args.family!r}", file=sys.stderr)
            return _EXIT_USAGE
        if args.k is None:
            print("error: --family kernel-gap needs --k", file=sys.stderr)
            return _EXIT_USAGE
        g = kernel_gap_family(args.k)
    else:
        if args.n is None:
            print("error: --random-unicyclic needs --n", file=sys.stderr)
            return _EXIT_USAGE
        g = random_unicyclic(args.n, args.seed)
    sys.stdout.write(serialize(g))
    return _EXIT_OK


# -- parser --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-enum-n",
        type=int,
        default=20,
        help="largest n for enumeration-backed operations (default 20)",
    )
    common.add_argument(
        "--max-subset-n",
        type=int,
        default=20,
        help="largest n for subset-sweep operations (default 20)",
    )
    common.add_argument(
        "--matching-limit",
        type=int,
        default=10**6,
        help="cap on enumerated maximum matchings (default 1000000)",
    )

    parser = argparse.ArgumentParser(
        prog="corekit",
        description="Independence structure of graphs: alpha, mu, core, corona, "
        "ker, critical difference, and mechanically checked statements about them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser(
        "analyze", parents=[common], help="full invariant report for one edge-list file"
    )
    p_an.add_argument("file", help="edge-list file")
    p_an.add_argument("--format", choices=("text", "json"), default="text")
    p_an.set_defaults(func=_cmd_analyze)

    p_ver = sub.add_parser(
        "verify", parents=[common], help="run theorem checkers over graphs"
    )
    p_ver.add_argument(
        "--theorem",
        action="append",
        default=[],
        metavar="ID",
        help=f"theorem id, comma list, or 'all' ({', '.join(THEOREM_IDS)})",
    )
    p_ver.add_argument("--graph", metavar="FILE", help="check one edge-list file")
    p_ver.add_argument(
        "--family",
        choices=("trees", "unicyclic", "connected", "fixtures", "kernel-gap"),
        help="exhaustive corpus to sweep",
    )
    p_ver.add_argument("--max-n", type=int, help="largest n for --family")
    p_ver.add_argument(
        "--random", type=int, metavar="COUNT", help="sweep COUNT random connected graphs"
    )
    p_ver.add_argument("--size", type=int, help="vertex count for --random")
    p_ver.add_argument("--seed", type=int, default=0, help="seed for --random (default 0)")
    p_ver.add_argument("--fail-fast", action="store_true", help="stop at first failure")
    p_ver.add_argument(
        "--workers",
        type=int,
        default=max(1, os.cpu_count() or 1),
        help="parallel workers (default: available parallelism); output is "
        "identical for any value",
    )
    p_ver.set_defaults(func=_cmd_verify)

    p_se = sub.add_parser(
        "search", parents=[common], help="open-problem searches over corpora"
    )
    p_se.add_argument("--problem", type=int, choices=(1, 2), required=True)
    p_se.add_argument("--max-n", type=int, required=True)
    p_se.add_argument(
        "--family",
        choices=("trees", "unicyclic", "connected"),
        default="unicyclic",
        help="corpus for problem 2 (default unicyclic)",
    )
    p_se.set_defaults(func=_cmd_search)

    p_gen = sub.add_parser(
        "generate", parents=[common], help="emit an edge-list to stdout"
    )
    p_gen.add_argument("--fixture", choices=FIXTURE_NAMES, help="packaged fixture name")
    p_gen.add_argument("--family", help="parametric family (kernel-gap)")
    p_gen.add_argument("--k", type=int, help="family index for kernel-gap")
    p_gen.add_argument(
        "--random-unicyclic", action="store_true", help="random unicyclic graph"
    )
    p_gen.add_argument("--n", type=int, help="vertex count for --random-unicyclic")
    p_gen.add_argument("--seed", type=int, default=0, help="seed (default 0)")
    p_gen.set_defaults(func=_cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_BUDGET
    except CorekitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except IsADirectoryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
