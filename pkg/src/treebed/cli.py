"""Command-line front end.

Subcommands build the pieces (``guest``, ``host``), run and cross-check the
wirelength computations (``wirelength``, ``verify``, ``sweep``), and export
Graphviz drawings (``export-dot``).  Exit codes: 0 success, 1 failed
verification or write failure, 2 usage error (including out-of-scale
requests and exceeded budgets).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from treebed import formulas
from treebed.embedding import (
    build_report,
    congestion_lemma_value,
    cut_congestion,
    identity_embedding,
    verify_cut_conditions,
    wirelength_direct,
    wirelength_via_partition,
)
from treebed.errors import BudgetExceededError
from treebed.graphs import Guest, build_guest
from treebed.hosts import (
    LAYOUT_VARIANTS,
    HostTree,
    build_host,
    cut_family,
    inorder_labeling,
    sibling_layout_labeling,
)
from treebed.search import (
    DEFAULT_BIJECTION_BUDGET,
    exhaustive_min_wirelength,
    local_search_min,
)

ENGINE_MAX_N = 8       # routed-path engine: 2**8 = 256 vertices
EXHAUSTIVE_MAX_N = 3   # bijection enumeration: 2**n <= 8
FORMULA_MAX_N = formulas.MAX_N


def _build_labeled(n1: int, k: int, kind: str, variant: int) -> HostTree:
    host = build_host(n1, k, sibling=(kind == "sibling"))
    if kind == "sibling":
        return sibling_layout_labeling(host, variant)
    if variant != 0:
        raise ValueError("--variant applies to sibling hosts only")
    return inorder_labeling(host)


def _labeled_host(n: int, n1: int, kind: str, variant: int) -> HostTree:
    return _build_labeled(n1, 1 << (n - n1), kind, variant)


def _instance(args) -> tuple[Guest, HostTree]:
    n, p = args.n, args.p
    if n > ENGINE_MAX_N:
        raise ValueError(f"engine runs are capped at n <= {ENGINE_MAX_N}")
    guest = build_guest(n, p)
    n1 = args.n1 if args.n1 is not None else n
    if not 1 <= n1 <= n:
        raise ValueError(f"need 1 <= n1 <= n, got n1={n1}")
    return guest, _labeled_host(n, n1, args.host, args.variant)


def _apply_swaps(embedding, swaps):
    for a, b in swaps or ():
        embedding = embedding.swapped(a, b)
    return embedding


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_guest(args) -> int:
    guest = build_guest(args.n, args.p)
    info = {
        "schema": 1,
        "n": args.n,
        "p": args.p,
        "vertex_count": guest.graph.vertex_count,
        "edge_count": guest.graph.edge_count,
        "part_count": guest.part_count,
        "part_size": guest.part_size,
        "degree": guest.degree,
    }
    if args.n <= ENGINE_MAX_N:
        info["partites"] = [sorted(part) for part in guest.partites]
    if args.output == "json":
        print(json.dumps(info, indent=2))
    else:
        print(f"guest: 2^{args.n} vertices in 2^{args.p} partite sets")
        for key in ("vertex_count", "edge_count", "part_count", "part_size", "degree"):
            print(f"  {key} = {info[key]}")
    return 0


def cmd_host(args) -> int:
    host = _build_labeled(args.n1, args.k, args.host, args.variant)
    level_counts: dict[int, int] = {}
    for level in host.level_of.values():
        level_counts[level] = level_counts.get(level, 0) + 1
    info = {
        "schema": 1,
        "n1": args.n1,
        "k": args.k,
        "kind": host.kind,
        "vertex_count": host.graph.vertex_count,
        "edge_count": host.graph.edge_count,
        "sibling_edge_count": len(host.sibling_pairs),
        "level_counts": {str(level): level_counts[level] for level in sorted(level_counts)},
    }
    if host.graph.vertex_count <= 256:
        info["label_of"] = {str(v): host.label_of[v] for v in sorted(host.label_of)}
    if args.output == "json":
        print(json.dumps(info, indent=2))
    else:
        print(f"host: {host.kind}, {args.k} block(s) of height {args.n1}")
        for key in ("vertex_count", "edge_count", "sibling_edge_count"):
            print(f"  {key} = {info[key]}")
    return 0


def cmd_wirelength(args) -> int:
    guest, host = _instance(args)
    embedding = _apply_swaps(identity_embedding(guest, host), args.swap)
    exhaustive_min = None
    if args.exhaustive:
        if args.n > EXHAUSTIVE_MAX_N:
            raise ValueError(
                f"exhaustive search is capped at 2**n <= {1 << EXHAUSTIVE_MAX_N}"
            )
        exhaustive_min = exhaustive_min_wirelength(
            guest, host, budget=args.budget
        ).best_value
    heuristic = None
    if args.local_search is not None:
        if args.seed is None:
            raise ValueError("--local-search requires an explicit --seed")
        heuristic = local_search_min(
            guest, host, seed=args.seed, iterations=args.local_search
        ).best_value
    report = build_report(
        guest, host, embedding,
        exhaustive_min=exhaustive_min,
        local_search_min=heuristic,
    )
    if args.output == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(f"direct        = {report.direct}")
        print(f"via_partition = {report.via_partition}")
        print(f"closed_form   = {report.closed_form}")
        if report.exhaustive_min is not None:
            print(f"exhaustive    = {report.exhaustive_min}")
        if report.local_search_min is not None:
            print(f"local_search  = {report.local_search_min}")
        print(f"cut_conditions_ok = {str(report.cut_conditions_ok).lower()}")
    return 0 if report.consistent else 1


def cmd_verify(args) -> int:
    guest, host = _instance(args)
    embedding = _apply_swaps(identity_embedding(guest, host), args.swap)
    cuts = cut_family(host)
    count = guest.graph.vertex_count
    rows = []
    all_ok = True
    for cut in cuts:
        ec = cut_congestion(guest, host, embedding, cut)
        cond = verify_cut_conditions(guest, host, embedding, cut)
        inside = {
            m
            for m in range(1, count + 1)
            if cut.component_lo <= embedding.label_for(m) <= cut.component_hi
        }
        lemma = congestion_lemma_value(guest, inside)
        ok = cond.ok and ec == lemma
        all_ok = all_ok and ok
        rows.append(
            {
                "family": cut.family,
                "j": cut.j,
                "i": cut.i,
                "ec": ec,
                "lemma_value": lemma,
                "inside_avoids_cut": cond.inside_avoids_cut,
                "crossings_cross_once": cond.crossings_cross_once,
                "preimages_optimal": cond.preimages_optimal,
                "ok": ok,
            }
        )
    direct = wirelength_direct(guest, host, embedding)
    partition = wirelength_via_partition(guest, host, embedding)
    all_ok = all_ok and direct == partition
    result = {
        "schema": 1,
        "n": args.n,
        "p": args.p,
        "n1": host.n1,
        "k": host.k,
        "host_kind": host.kind,
        "direct": direct,
        "via_partition": partition,
        "partition_matches_direct": direct == partition,
        "cut_conditions_ok": all(r["ok"] for r in rows),
        "per_cut": rows,
    }
    if args.output == "json":
        print(json.dumps(result, indent=2))
    else:
        for r in rows:
            j = "-" if r["j"] is None else r["j"]
            status = "ok" if r["ok"] else "FAIL"
            print(
                f"{r['family']}(j={j}, i={r['i']}): ec={r['ec']} "
                f"lemma={r['lemma_value']} {status}"
            )
        print(f"direct={direct} via_partition={partition} -> "
              f"{'ok' if all_ok else 'FAIL'}")
    return 0 if all_ok else 1


SWEEP_COLUMNS = [
    "n",
    "p",
    "n1",
    "k",
    "host",
    "closed_form",
    "direct",
    "via_partition",
    "exhaustive_min",
    "formula_matches_direct",
    "partition_matches_direct",
    "exhaustive_matches_closed_form",
    "cut_conditions_ok",
]


def _sweep_rows(args):
    kinds = ["binary", "sibling"] if args.host == "both" else [args.host]
    for n in range(args.n_min, args.n_max + 1):
        p_values = [args.p] if args.p is not None else list(range(2, n + 1))
        n1_values = [args.n1] if args.n1 is not None else list(range(1, n + 1))
        for p in p_values:
            if not 2 <= p <= n:
                continue
            guest = build_guest(n, p) if n <= ENGINE_MAX_N and args.engine != "off" else None
            for n1 in n1_values:
                if not 1 <= n1 <= n:
                    continue
                for kind in kinds:
                    row = dict.fromkeys(SWEEP_COLUMNS, "")
                    row.update(n=n, p=p, n1=n1, k=1 << (n - n1), host=kind)
                    closed = formulas.closed_form_wirelength(
                        n, p, n1=n1, sibling=(kind == "sibling")
                    )
                    row["closed_form"] = closed
                    if guest is not None:
                        host = _labeled_host(n, n1, kind, 0)
                        embedding = identity_embedding(guest, host)
                        report = build_report(guest, host, embedding)
                        row["direct"] = report.direct
                        row["via_partition"] = report.via_partition
                        row["formula_matches_direct"] = report.direct == closed
                        row["partition_matches_direct"] = (
                            report.via_partition == report.direct
                        )
                        row["cut_conditions_ok"] = report.cut_conditions_ok
                        if args.exhaustive:
                            best = exhaustive_min_wirelength(
                                guest, host, budget=args.budget
                            ).best_value
                            row["exhaustive_min"] = best
                            row["exhaustive_matches_closed_form"] = best == closed
                    yield row


def cmd_sweep(args) -> int:
    if args.n_max > FORMULA_MAX_N:
        raise ValueError(f"formula scale is capped at n <= {FORMULA_MAX_N}")
    if args.engine == "on" and args.n_max > ENGINE_MAX_N:
        raise ValueError(f"engine runs are capped at n <= {ENGINE_MAX_N}")
    if args.exhaustive and args.n_max > EXHAUSTIVE_MAX_N:
        raise ValueError(
            f"exhaustive search is capped at 2**n <= {1 << EXHAUSTIVE_MAX_N}"
        )
    rows = list(_sweep_rows(args))
    failed = any(
        row[col] is False
        for row in rows
        for col in (
            "formula_matches_direct",
            "partition_matches_direct",
            "exhaustive_matches_closed_form",
            "cut_conditions_ok",
        )
    )
    if args.output == "json":
        printable = [
            {col: (row[col] if row[col] != "" else None) for col in SWEEP_COLUMNS}
            for row in rows
        ]
        print(json.dumps(printable, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    str(row[col]).lower() if isinstance(row[col], bool) else row[col]
                    for col in SWEEP_COLUMNS
                ]
            )
        sys.stdout.write(buf.getvalue())
    return 1 if failed else 0


def _host_dot(host: HostTree) -> str:
    labels = host.label_of
    sibling_edges = set()
    for u, v in host.sibling_pairs:
        a, b = labels[u], labels[v]
        sibling_edges.add((a, b) if a < b else (b, a))
    chain_edges = set()
    for u, v in zip(host.root_chain, host.root_chain[1:]):
        a, b = labels[u], labels[v]
        chain_edges.add((a, b) if a < b else (b, a))
    by_level: dict[int, list[int]] = {}
    for vid, level in host.level_of.items():
        by_level.setdefault(level, []).append(labels[vid])
    lines = ["graph host {", "  node [shape=circle];"]
    for level in sorted(by_level):
        members = " ".join(f"{lab};" for lab in sorted(by_level[level]))
        lines.append(f"  {{ rank=same; {members} }}")
    for a, b in sorted(host.label_edges):
        if (a, b) in sibling_edges:
            lines.append(f"  {a} -- {b} [style=dashed];")
        elif (a, b) in chain_edges:
            lines.append(f"  {a} -- {b} [style=bold];")
        else:
            lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _guest_dot(guest: Guest) -> str:
    lines = ["graph guest {", "  node [shape=circle];"]
    for idx, part in enumerate(guest.partites, start=1):
        members = " ".join(f"{v};" for v in sorted(part))
        lines.append(
            f'  subgraph cluster_{idx} {{ label="partite {idx}"; {members} }}'
        )
    for u, v in sorted(guest.graph.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    if args.target == "guest":
        if args.n is None or args.p is None:
            raise ValueError("guest export needs --n and --p")
        if args.n > ENGINE_MAX_N:
            raise ValueError(f"guest export is capped at n <= {ENGINE_MAX_N}")
        text = _guest_dot(build_guest(args.n, args.p))
    else:
        if args.n1 is None:
            raise ValueError("host export needs --n1")
        if args.k * (1 << args.n1) > 1024:
            raise ValueError("host export is capped at 1024 vertices")
        text = _host_dot(_build_labeled(args.n1, args.k, args.host, args.variant))
    _emit(args, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treebed",
        description="Wirelength laboratory: complete multipartite guests "
        "into chained binary and sibling trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="guest has 2**n vertices")
        p.add_argument("--p", type=int, required=True, help="2**p partite sets")
        p.add_argument("--n1", type=int, default=None,
                       help="host block height (default: n, a single tree)")
        p.add_argument("--host", choices=["binary", "sibling"], default="binary",
                       help="host kind (default: binary)")
        p.add_argument("--variant", type=int, default=0, choices=LAYOUT_VARIANTS,
                       help="sibling layout variant (default: 0)")
        p.add_argument("--swap", type=int, nargs=2, action="append",
                       metavar=("A", "B"),
                       help="swap labels A and B in the embedding; repeatable")

    p_guest = sub.add_parser("guest", help="describe a guest graph")
    p_guest.add_argument("--n", type=int, required=True)
    p_guest.add_argument("--p", type=int, required=True)
    p_guest.add_argument("--output", choices=["json", "text"], default="json")
    p_guest.set_defaults(func=cmd_guest)

    p_host = sub.add_parser("host", help="describe a labeled host tree")
    p_host.add_argument("--n1", type=int, required=True, help="block height")
    p_host.add_argument("--k", type=int, default=1, help="number of blocks (default: 1)")
    p_host.add_argument("--host", choices=["binary", "sibling"], default="binary")
    p_host.add_argument("--variant", type=int, default=0, choices=LAYOUT_VARIANTS)
    p_host.add_argument("--output", choices=["json", "text"], default="json")
    p_host.set_defaults(func=cmd_host)

    p_wl = sub.add_parser("wirelength", help="compute and cross-check wirelengths")
    add_instance_flags(p_wl)
    p_wl.add_argument("--exhaustive", action="store_true",
                      help="also enumerate all embeddings (needs 2**n <= 8)")
    p_wl.add_argument("--budget", type=int, default=DEFAULT_BIJECTION_BUDGET,
                      help="bound on embeddings the exhaustive run may evaluate")
    p_wl.add_argument("--local-search", type=int, default=None, metavar="ITERS",
                      help="also run 2-swap local search for ITERS restarts; "
                      "reported as an upper bound and requires --seed")
    p_wl.add_argument("--seed", type=int, default=None,
                      help="explicit seed for --local-search (no wall-clock seeding)")
    p_wl.add_argument("--output", choices=["json", "text"], default="json")
    p_wl.set_defaults(func=cmd_wirelength)

    p_verify = sub.add_parser("verify", help="check cut conditions cut by cut")
    add_instance_flags(p_verify)
    p_verify.add_argument("--output", choices=["json", "text"], default="json")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="tabulate instances as CSV")
    p_sweep.add_argument("--n-min", type=int, required=True)
    p_sweep.add_argument("--n-max", type=int, required=True)
    p_sweep.add_argument("--p", type=int, default=None,
                         help="fix p (default: all 2..n per row)")
    p_sweep.add_argument("--n1", type=int, default=None,
                         help="fix n1 (default: all 1..n per row)")
    p_sweep.add_argument("--host", choices=["binary", "sibling", "both"],
                         default="both")
    p_sweep.add_argument("--engine", choices=["auto", "on", "off"], default="auto",
                         help="auto runs the engine when n <= 8 (default)")
    p_sweep.add_argument("--exhaustive", action="store_true",
                         help="add exhaustive minima (needs n-max <= 3)")
    p_sweep.add_argument("--budget", type=int, default=DEFAULT_BIJECTION_BUDGET)
    p_sweep.add_argument("--output", choices=["csv", "json"], default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_dot = sub.add_parser("export-dot", help="emit a Graphviz drawing")
    p_dot.add_argument("target", choices=["host", "guest"])
    p_dot.add_argument("--n", type=int, default=None)
    p_dot.add_argument("--p", type=int, default=None)
    p_dot.add_argument("--n1", type=int, default=None)
    p_dot.add_argument("--k", type=int, default=1)
    p_dot.add_argument("--host", choices=["binary", "sibling"], default="binary")
    p_dot.add_argument("--variant", type=int, default=0, choices=LAYOUT_VARIANTS)
    p_dot.add_argument("--out", default=None, help="write to a file instead of stdout")
    p_dot.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
