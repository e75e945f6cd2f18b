"""Acceptance suite: one check per criterion, each reporting PASS or FAIL.

    pytest tests/test_acceptance.py -v        # summary printed at the end
    python tests/test_acceptance.py [N ...]   # plain run, one line each

The end-to-end sweep (criterion 1) stops at its first failing run.  Set
``RAMSEY_EPS_FULL_SWEEP=1`` to run all 250 cases regardless.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import subprocess
import sys
import time

from ramsey_eps.colourings import SeededColouring, ZeroColouring
from ramsey_eps.eta import CounterexampleSpec
from ramsey_eps.games import Game, optimal_play, verify_optimal_play
from ramsey_eps.oracles import (
    brute_force_play,
    canonical_branch,
    eq14_enumerated,
    exact_beta_oracle,
)
from ramsey_eps.ramsey import build_a, build_alpha, build_beta, delta_sel, iphp_realizer, ramsey_pipeline
from ramsey_eps.selection import argmax_selection, argmin_selection, at, constant_selection, eps
from ramsey_eps.tree import ErdosRadoTree, prec_literal, t_prime

SELECTIONS = (argmax_selection((0, 1)), argmin_selection((0, 1)), constant_selection(0), constant_selection(1))

RUN_LIMIT = 30.0
SWEEP_LIMIT = 20 * 60.0
SWEEP_ETAS = ("const:0", "const:1", "xswitch:1:2", "fmax:2:8", "const:2")


def _solve_cmd(*args):
    return [sys.executable, "-m", "ramsey_eps", "solve", *args]


def _random_game(rng, rounds):
    """Constant control ``rounds``, a random selection at every position."""
    table = [rng.randint(0, 7) for _ in range(2 ** (rounds + 1))]
    picks = {
        s: rng.choice(SELECTIONS)
        for level in range(rounds + 1)
        for s in itertools.product((0, 1), repeat=level)
    }

    def outcome(play):
        idx = 0
        for i in range(rounds + 1):
            idx = 2 * idx + at(play, i)
        return table[idx]

    # positions past the control never matter; give them a fixed selection
    family = lambda s: picks.get(tuple(s), SELECTIONS[0])
    return Game(family, outcome, lambda a: rounds)


def check_1():
    full = os.environ.get("RAMSEY_EPS_FULL_SWEEP", "") not in ("", "0")
    t_sweep = time.perf_counter()
    passed, failures, slowest = 0, [], 0.0
    for eta in SWEEP_ETAS:
        for seed in range(1, 51):
            t0 = time.perf_counter()
            try:
                p = subprocess.run(
                    _solve_cmd("--seed", str(seed), "--eta", eta, "--out", "json"),
                    capture_output=True, text=True, timeout=RUN_LIMIT,
                )
                report = json.loads(p.stdout) if p.stdout else {}
                ok = p.returncode == 0 and report.get("verified") is True
                why = f"exit {p.returncode}"
            except subprocess.TimeoutExpired:
                ok, why = False, f"over {RUN_LIMIT:.0f} s"
            dt = time.perf_counter() - t0
            slowest = max(slowest, dt)
            if ok and dt < RUN_LIMIT:
                passed += 1
            else:
                failures.append(f"seed:{seed}/{eta} {why}")
                if not full:
                    break
        if failures and not full:
            break
    total = time.perf_counter() - t_sweep
    ok = not failures and passed == 250 and total < SWEEP_LIMIT
    detail = f"{passed}/250 runs passed, slowest {slowest:.1f} s, sweep {total:.0f} s"
    if failures:
        shown = ", ".join(failures[:3]) + (f" (+{len(failures) - 3} more)" if len(failures) > 3 else "")
        detail += f"; failed: {shown}"
        if not full:
            detail += "; stopped at first failure"
    return ok, detail


def check_2():
    rng = random.Random(2)
    bad = 0
    for _ in range(200):
        rounds = rng.randint(0, 3)
        g = _random_game(rng, rounds)
        alpha = optimal_play(g)
        bad += not verify_optimal_play(g, alpha).ok
        for n in range(len(alpha) + 1):
            bad += alpha != alpha[:n] + eps(alpha[:n], g.family, g.control, g.outcome)
    return bad == 0, f"200 games, {bad} failures"


def check_3():
    rng = random.Random(3)
    bad = 0
    for _ in range(500):
        depth = rng.randint(1, 3)
        g = _random_game(rng, depth - 1)
        bad += tuple(optimal_play(g)) != tuple(brute_force_play(g, depth))
    return bad == 0, f"500 games, {bad} mismatches"


def check_4():
    rng = random.Random(4)
    bad = 0
    for _ in range(100):
        c = SeededColouring(rng.randrange(1, 2**32))
        n = rng.randint(0, 3)
        kind = rng.choice(("identity", "constant", "affine"))
        if kind == "identity":
            p = lambda v: v
        elif kind == "constant":
            k = rng.randint(0, 8)
            p = lambda v, k=k: k
        else:
            a, b = rng.randint(1, 3), rng.randint(0, 8)
            p = lambda v, a=a, b=b: a * v + b
        d = delta_sel(c, n, p)
        tree = ErdosRadoTree(c)
        for s in itertools.product((0, 1), repeat=n):
            bad += t_prime(tree, s, p(d)) and not t_prime(tree, s, d)
    return bad == 0, f"100 pairs, {bad} failures"


def check_5():
    bad = checked = 0
    for seed in range(1, 21):
        c = SeededColouring(seed)
        res = build_beta(c, lambda a, b: 2)
        for n in range(min(res.omega_value, 6) + 1):
            checked += 1
            bad += not eq14_enumerated(c, res.beta, n, res.q_value)
    return bad == 0, f"20 colourings, {checked} levels checked, {bad} failures"


def check_6():
    bad = 0
    for seed in range(1, 21):
        c = SeededColouring(seed)
        beta = exact_beta_oracle(c, 6, cap=400)
        for m in range(6):
            r = build_alpha(c, beta, lambda a, m=m: m)
            prefix = tuple(at(r.alpha, i) for i in range(m))
            bad += not t_prime(c, prefix, beta[m])
    return bad == 0, f"20 colourings x m <= 5, {bad} failures"


def check_7():
    zero = ZeroColouring()
    bad = []
    tree, memo = ErdosRadoTree(zero), {}
    if not all(tree.prec(j, i) and prec_literal(zero, j, i, memo) for i in range(21) for j in range(i)):
        bad.append("prec")
    if any(canonical_branch(zero, n) != (0,) * n for n in range(21)):
        bad.append("canonical_branch")
    beta = exact_beta_oracle(zero, 22, cap=44)
    if beta[1:21] != list(range(1, 21)):
        bad.append("exact_beta_oracle")
    # const:2 is left out: its Skolem game does not finish in practical time
    # even here (see the end-to-end criterion)
    for eta in ("const:0", "const:1", "xswitch:1:2", "fmax:2:8"):
        w = ramsey_pipeline(zero, CounterexampleSpec.parse(eta))
        if w.x != 0 or not w.report.passed:
            bad.append(f"pipeline {eta}")
        # the pipeline only fixes a prefix of beta; the closed form is for beta(n) = n
        if build_a(zero, w.alpha, beta, 20) != (list(range(21)), set()):
            bad.append(f"build_a {eta}")
    return not bad, "prec, canonical_branch, exact beta, build_a, pipeline x" + (
        f"; failed: {', '.join(bad)}" if bad else " all exact up to 20"
    )


def check_8():
    bad = 0
    for seed in range(1, 21):
        c = SeededColouring(seed)
        tree = ErdosRadoTree(c)
        rng = random.Random(800 + seed)
        for _ in range(1000):
            total = rng.randint(0, 8)
            cut = rng.randint(0, total)
            u = tuple(rng.randint(0, 1) for _ in range(total))
            s, t = u[:cut], u[cut:]
            k, l = rng.randint(0, 20), rng.randint(0, 20)
            bad += t_prime(tree, s + t, k) and not t_prime(tree, s, k)
            bad += t_prime(tree, s, k) and not t_prime(tree, s, k + l)
    return bad == 0, f"20 colourings x 1000 samples, {bad} failures"


def check_9():
    rng = random.Random(9)
    bad = 0
    for _ in range(100):
        bits = [rng.randint(0, 1) for _ in range(64)]
        c1 = lambda n, bits=bits: bits[n % 64]
        if rng.random() < 0.5:
            e = (rng.randint(0, 4), rng.randint(0, 4))
            eps_ = lambda x, p, e=e: e[x]
        else:
            # a bound that depends on the evaluator it is given
            j = rng.randint(0, 4)
            eps_ = lambda x, p, j=j: min(4, p(j) % 5)
        r = iphp_realizer(c1, eps_)
        bound = eps_(r.x, r.p)
        bad += not all(r.p(i) >= i and c1(r.p(i)) == r.x for i in range(bound + 1))
    return bad == 0, f"100 instances, {bad} failures"


def check_10():
    cases = [
        ("--seed", "1", "--eta", "const:1", "--out", "json"),
        ("--seed", "7", "--eta", "xswitch:1:2", "--out", "json"),
        ("--colouring", "formula:parity", "--eta", "fmax:2:8", "--out", "json"),
        ("--seed", "3", "--eta", "const:0"),
    ]
    bad = 0
    for args in cases:
        outs = [subprocess.run(_solve_cmd(*args), capture_output=True, check=True).stdout for _ in range(3)]
        bad += len(set(outs)) != 1
    return bad == 0, f"{len(cases)} invocations x 3 repeats, {bad} differing"


CHECKS = {n: globals()[f"check_{n}"] for n in range(1, 11)}


def test_criterion_01_end_to_end(record):
    record(1, *check_1())


def test_criterion_02_eps_equations(record):
    record(2, *check_2())


def test_criterion_03_oracle_equivalence(record):
    record(3, *check_3())


def test_criterion_04_delta_property(record):
    record(4, *check_4())


def test_criterion_05_skolem_approximation(record):
    record(5, *check_5())


def test_criterion_06_wkl_realizer(record):
    record(6, *check_6())


def test_criterion_07_closed_forms(record):
    record(7, *check_7())


def test_criterion_08_tree_laws(record):
    record(8, *check_8())


def test_criterion_09_iphp(record):
    record(9, *check_9())


def test_criterion_10_determinism(record):
    record(10, *check_10())


if __name__ == "__main__":
    wanted = [int(a) for a in sys.argv[1:]] or sorted(CHECKS)
    failed = 0
    for n in wanted:
        ok, detail = CHECKS[n]()
        failed += not ok
        print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    sys.exit(1 if failed else 0)
