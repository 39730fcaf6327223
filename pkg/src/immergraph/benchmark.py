"""Kernel lane benchmark: compiled extension versus pure Python.

Run as `python -m immergraph.benchmark [--repeat N]`.  Times the four
hot kernels on fixed workloads under both lanes and prints one line per
kernel with the speedup.  Results also cross-check that the lanes agree
on every output, so the benchmark doubles as a conformance run.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import _pure
from .immersion import wheel4
from .multigraph import Multigraph
from .verifier import generate_simple_graphs

try:
    from . import _speedups
except ImportError:
    _speedups = None


def _workload() -> dict[str, list]:
    hosts = []
    for g in generate_simple_graphs(6):
        mat = bytearray(g.mat)
        for u in range(6):
            for v in range(6):
                if mat[u * 6 + v]:
                    mat[u * 6 + v] = 1 + (u + v) % 3
        hosts.append((bytes(mat), 6))
    wheel = wheel4()
    conds = ((3, 1, 1, _pure.MODE_ANY), (4, 2, 2, _pure.MODE_ANY))
    return {
        "canonical_bytes": [(mat, n, ()) for mat, n in hosts],
        "find_violated_cut": [(mat, n, -1, -1, conds) for mat, n in hosts],
        "max_flow": [(mat, n, 0, n - 1) for mat, n in hosts],
        "immerses": [
            (mat, n, (), wheel.mat, wheel.n, wheel.roots) for mat, n in hosts
        ],
    }


def _time_lane(impl, name: str, calls: list, repeat: int) -> tuple[float, list]:
    fn = getattr(impl, name)
    best = float("inf")
    results = []
    for _ in range(repeat):
        start = time.perf_counter()
        results = [fn(*args) for args in calls]
        best = min(best, time.perf_counter() - start)
    return best, results


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="immergraph.benchmark")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args(argv)

    if _speedups is None:
        print("compiled lane unavailable; nothing to compare", file=sys.stderr)
        return 1

    work = _workload()
    width = max(len(k) for k in work)
    print(f"{'kernel':<{width}}  {'pure':>10}  {'compiled':>10}  speedup")
    for name, calls in work.items():
        pure_s, pure_out = _time_lane(_pure, name, calls, args.repeat)
        fast_s, fast_out = _time_lane(_speedups, name, calls, args.repeat)
        if pure_out != fast_out:
            print(f"{name}: lane outputs disagree", file=sys.stderr)
            return 1
        print(
            f"{name:<{width}}  {pure_s * 1e3:>8.1f}ms  {fast_s * 1e3:>8.1f}ms  "
            f"{pure_s / fast_s:>6.1f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
