#!/usr/bin/env python3
"""Time the compiled enumeration kernels against the pure-Python fallback.

Runs the same two workloads through both implementations, checks they agree
exactly, and reports the best-of-N wall times.  Exits with a note when the
extension is not built.
"""

import argparse
import sys
import time

from treebed import _kernels_py, build_guest, build_host, inorder_labeling
from treebed.search import _instance_tables

try:
    from treebed import _kernels as compiled
except ImportError:
    compiled = None


def best_of(repeats, fn):
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best[0]:
            best = (elapsed, result)
    return best


def bench_bijections(repeats):
    guest = build_guest(3, 2)
    host = inorder_labeling(build_host(3, 1))
    count, dist, edge_u, edge_v = _instance_tables(guest, host)
    label = (
        f"bijection kernel: {count} vertices, {len(edge_u)} guest edges, "
        f"40320 bijections"
    )
    runs = {
        "python": lambda: _kernels_py.min_wirelength_bijections(
            count, dist, edge_u, edge_v, None
        )
    }
    if compiled is not None:
        runs["compiled"] = lambda: compiled.min_wirelength_bijections(
            count, dist, edge_u, edge_v, None
        )
    return label, {name: best_of(repeats, fn) for name, fn in runs.items()}


def bench_subsets(repeats):
    graph = build_guest(4, 2).graph  # 16 vertices, 4 partite sets
    nv = graph.vertex_count
    masks = [0] * nv
    for a, b in graph.edges:
        masks[a - 1] |= 1 << (b - 1)
        masks[b - 1] |= 1 << (a - 1)

    def sweep(impl):
        return [impl.max_induced_edges(nv, masks, k) for k in range(nv + 1)]

    label = f"subset kernel: {nv} vertices, k = 0..{nv}, {1 << nv} subsets"
    runs = {"python": lambda: sweep(_kernels_py)}
    if compiled is not None:
        runs["compiled"] = lambda: sweep(compiled)
    return label, {name: best_of(repeats, fn) for name, fn in runs.items()}


def report(label, results):
    print(label)
    base = results["python"][0]
    for name, (elapsed, _) in results.items():
        speedup = "" if name == "python" else f"   ({base / elapsed:.1f}x)"
        print(f"  {name:<9} {elapsed:8.3f}s{speedup}")
    if "compiled" in results:
        if results["python"][1] != results["compiled"][1]:
            print("  MISMATCH between implementations", file=sys.stderr)
            return False
        print("  results identical")
    return True


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--repeats", type=int, default=3, help="timing runs per case (default: 3)"
    )
    args = parser.parse_args(argv)
    if compiled is None:
        print("extension treebed._kernels is not built; timing the fallback only")
    ok = True
    for bench in (bench_bijections, bench_subsets):
        label, results = bench(args.repeats)
        ok = report(label, results) and ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
