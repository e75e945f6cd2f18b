"""Compare the compiled core with the pure-Python fallback.

Each backend runs in its own interpreter (the choice is made at import),
so the script re-invokes itself with ``RAMSEY_EPS_PURE`` set or unset.

    python benchmarks/bench_core.py [--repeat N] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    from ramsey_eps.budget import Budget
    from ramsey_eps.colourings import SeededColouring, parse_colouring
    from ramsey_eps.core import ProductRun, ReadTrie, place_nodes, prefix_zero_masks
    from ramsey_eps.eta import CounterexampleSpec
    from ramsey_eps.ramsey import ramsey_pipeline
    from ramsey_eps.selection import argmax_selection, at

    def tree_build():
        for seed in range(1, 6):
            pred, children = [1], [{}]
            place_nodes(pred, children, SeededColouring(seed), 3000, Budget())

    def masks():
        alpha = [i % 3 == 0 for i in range(60)]
        for _ in range(20000):
            prefix_zero_masks(alpha, 60)

    def product():
        depth = 12
        sel = argmax_selection((0, 1))
        outcome = lambda a: sum(at(a, i) * (i % 5 - 2) for i in range(depth))
        ProductRun(lambda s: sel, lambda s: depth - 1, outcome, Budget()).play()

    def trie():
        t = ReadTrie()
        for n in range(4096):
            reads = {i: (n >> i) & 1 for i in range(12)}
            t.insert(reads, n)
        for n in range(4096):
            t.lookup(lambda i, n=n: (n >> i) & 1)

    def pipeline():
        for seed in range(1, 9):
            for eta in ("const:1", "xswitch:1:2", "fmax:2:8"):
                ramsey_pipeline(parse_colouring(f"seed:{seed}"), CounterexampleSpec.parse(eta))

    return {"tree_build": tree_build, "prefix_masks": masks, "product_run": product,
            "read_trie": trie, "pipeline_sweep": pipeline}


def run_here(repeat):
    from ramsey_eps.core import BACKEND

    return {"backend": BACKEND, "seconds": {k: _best(fn, repeat) for k, fn in workloads().items()}}


def run_backend(pure, repeat):
    env = dict(os.environ)
    env.pop("RAMSEY_EPS_PURE", None)
    if pure:
        env["RAMSEY_EPS_PURE"] = "1"
    cmd = [sys.executable, __file__, "--child", "--repeat", str(repeat)]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(run_here(args.repeat)))
        return 0
    fast, slow = run_backend(False, args.repeat), run_backend(True, args.repeat)
    if fast["backend"] != "compiled":
        print("compiled core is not built; only the pure backend is available", file=sys.stderr)
    if args.json:
        print(json.dumps({"compiled": fast, "python": slow}, indent=1))
        return 0
    print(f"{'workload':<16}{fast['backend']:>12}{'python':>12}{'speedup':>10}")
    for name, t in fast["seconds"].items():
        p = slow["seconds"][name]
        print(f"{name:<16}{t:>11.3f}s{p:>11.3f}s{p / t:>9.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
