"""Command-line front end.

    ramsey-eps solve    --colouring SPEC --eta SPEC [--budget N] [--out text|json] [--save FILE]
    ramsey-eps verify   --witness FILE
    ramsey-eps game     --table V0,V1,... [--selection argmax|argmin|const0|const1]
    ramsey-eps selftest [--samples N] [--seed S]

Exit status: 0 when every check passes, 1 on a failed verification, 2 on
a parse or configuration error, 3 when the work budget runs out.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .budget import DEFAULT_BUDGET, Budget
from .colourings import MASK64, SeededColouring, parse_colouring
from .errors import BudgetExceeded, RamseyEpsError, SpecError
from .eta import CounterexampleSpec
from .games import Game, optimal_play, verify_optimal_play
from .oracles import brute_force_play, verify_ramsey_condition
from .ramsey import ramsey_pipeline
from .selection import argmax_selection, argmin_selection, at, constant_selection

EXIT_OK, EXIT_FAILED, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3

SELECTIONS = {
    "argmax": argmax_selection((0, 1)),
    "argmin": argmin_selection((0, 1)),
    "const0": constant_selection(0),
    "const1": constant_selection(1),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramsey-eps", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="run the Ramsey realizer and check its output")
    solve.add_argument("--colouring", default=None, help="formula:zero, formula:parity, seed:<u64> or matrix:<path>")
    solve.add_argument("--seed", type=int, default=None, help="shorthand for --colouring seed:<u64>")
    solve.add_argument("--eta", required=True, help="const:k, xswitch:k0:k1 or fmax:m:cap")
    solve.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    solve.add_argument("--out", choices=("text", "json"), default="text")
    solve.add_argument("--save", default=None, help="also write the JSON report (a witness file) here")
    solve.add_argument("--timing", action="store_true", help="include wall-clock time in the report")

    verify = sub.add_parser("verify", help="re-check a stored witness file")
    verify.add_argument("--witness", required=True)
    verify.add_argument("--out", choices=("text", "json"), default="text")

    game = sub.add_parser("game", help="solve a finite Boolean game and verify the play")
    game.add_argument("--table", required=True, help="outcomes of all 2^d plays, first move most significant")
    game.add_argument("--selection", choices=sorted(SELECTIONS), default="argmax")
    game.add_argument("--out", choices=("text", "json"), default="text")

    selftest = sub.add_parser("selftest", help="oracle-equivalence and invariant checks")
    selftest.add_argument("--samples", type=int, default=200)
    selftest.add_argument("--seed", type=int, default=0)
    return parser


def _emit(report: dict, fmt: str, lines: Sequence[str]) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        for ln in lines:
            print(ln)


def _colouring_spec(args) -> str:
    if args.seed is not None:
        if args.colouring not in (None, "seed"):
            raise SpecError("--seed only combines with a seeded colouring")
        if not 0 <= args.seed <= MASK64:
            raise SpecError("--seed must be an unsigned 64-bit integer")
        return f"seed:{args.seed}"
    if args.colouring is None:
        raise SpecError("one of --colouring or --seed is required")
    return args.colouring


def solve_report(colouring: str, eta: str, budget: int, timing: bool = False) -> dict:
    """Run the pipeline and return the structured report (raises on budget)."""
    c = parse_colouring(colouring)
    e = CounterexampleSpec.parse(eta)
    if budget <= 0:
        raise SpecError("--budget must be positive")
    w = ramsey_pipeline(c, e, Budget(limit=budget))
    counters = dict(sorted(w.counters.items()))
    counters["eps_calls"] = counters.get("skolem_nodes", 0) + counters.get("wkl_nodes", 0)
    report = {
        "colouring": colouring,
        "eta": str(e),
        "x": w.x,
        "F": w.F,
        "eta_value": w.eta_value,
        "verified": w.report.passed,
        "first_violation": w.report.to_dict()["first_violation"],
        "checks_performed": w.report.checks_performed,
        "counters": counters,
        "budget_used": w.budget_used,
        "budget_limit": w.budget_limit,
        "alpha": list(w.alpha),
        "beta": list(w.beta),
        "psi": w.psi_value,
        "a_fallbacks": w.a_fallbacks,
    }
    if timing:
        report["elapsed_seconds"] = round(w.elapsed, 6)
    return report


def cmd_solve(args) -> int:
    colouring = _colouring_spec(args)
    try:
        report = solve_report(colouring, args.eta, args.budget, args.timing)
    except BudgetExceeded as exc:
        diag = {"error": "budget_exceeded", "budget_limit": exc.limit, "where": exc.where,
                "counters": dict(sorted(exc.counters.items()))}
        _emit(diag, args.out, [f"budget exceeded: {exc}", f"counters: {diag['counters']}"])
        return EXIT_BUDGET
    if args.save:
        with open(args.save, "w") as fh:
            json.dump(report, fh, sort_keys=True, indent=1)
            fh.write("\n")
    lines = [
        f"colouring {report['colouring']}  eta {report['eta']}",
        f"x = {report['x']}",
        f"F = {report['F']}",
        f"eta_x F = {report['eta_value']}",
        f"verified: {'yes' if report['verified'] else 'NO'}",
        f"budget used: {report['budget_used']} of {report['budget_limit']}",
    ]
    if not report["verified"]:
        lines.append(f"first violation: {report['first_violation']}")
    _emit(report, args.out, lines)
    return EXIT_OK if report["verified"] else EXIT_FAILED


def cmd_verify(args) -> int:
    try:
        with open(args.witness) as fh:
            data = json.load(fh)
        c = parse_colouring(data["colouring"])
        eta = CounterexampleSpec.parse(data["eta"])
        x, F = int(data["x"]), [int(v) for v in data["F"]]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise SpecError(f"cannot read witness {args.witness!r}: {exc}") from exc
    if x not in (0, 1):
        raise SpecError("witness colour must be 0 or 1")
    r = verify_ramsey_condition(c, x, F, eta)
    lines = [f"verified: {'yes' if r.passed else 'NO'} ({r.checks_performed} checks)"]
    if not r.passed:
        lines.append(f"first violation: {r.first_violation}")
    _emit(r.to_dict(), args.out, lines)
    return EXIT_OK if r.passed else EXIT_FAILED


def table_game(table: Sequence[int], selection) -> tuple[Game, int]:
    size = len(table)
    depth = size.bit_length() - 1
    if size < 2 or 1 << depth != size:
        raise SpecError("outcome table length must be a power of two, at least 2")

    def outcome(play):
        idx = 0
        for i in range(depth):
            idx = 2 * idx + at(play, i)
        return table[idx]

    return Game(lambda s: selection, outcome, lambda a: depth - 1), depth


def cmd_game(args) -> int:
    try:
        table = [int(v) for v in args.table.split(",")]
    except ValueError as exc:
        raise SpecError(f"bad outcome table {args.table!r}") from exc
    g, depth = table_game(table, SELECTIONS[args.selection])
    play = optimal_play(g)
    report = verify_optimal_play(g, play)
    brute = brute_force_play(g, depth)
    ok = report.ok and tuple(play) == tuple(brute)
    out = {
        "play": list(play),
        "value": g.outcome(play),
        "equations_hold": report.ok,
        "matches_backward_induction": tuple(play) == tuple(brute),
    }
    lines = [
        f"play = {list(play)}  value = {out['value']}",
        f"optimality equations: {'hold' if report.ok else 'FAIL'}",
        f"backward induction agrees: {'yes' if out['matches_backward_induction'] else 'NO'}",
    ]
    _emit(out, args.out, lines)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_selftest(args) -> int:
    from .tree import ErdosRadoTree, prec_literal, t_prime

    rng = random.Random(args.seed)
    results = []

    bad = 0
    for _ in range(args.samples):
        depth = rng.randint(1, 3)
        table = [rng.randint(0, 3) for _ in range(1 << depth)]
        g, _ = table_game(table, SELECTIONS[rng.choice(sorted(SELECTIONS))])
        bad += tuple(optimal_play(g)) != tuple(brute_force_play(g, depth))
    results.append(("optimal play equals backward induction", bad))

    bad = 0
    for seed in range(1, 4):
        c = SeededColouring(seed)
        tree, memo = ErdosRadoTree(c), {}
        bad += sum(tree.prec(j, i) != prec_literal(c, j, i, memo) for i in range(1, 40) for j in range(i))
        for _ in range(args.samples):
            n = rng.randint(0, 8)
            m = rng.randint(0, n)
            u = tuple(rng.randint(0, 1) for _ in range(n))
            k, l = rng.randint(0, 20), rng.randint(0, 20)
            bad += t_prime(tree, u, k) and not t_prime(tree, u[:m], k)
            bad += t_prime(tree, u, k) and not t_prime(tree, u, k + l)
    results.append(("tree order and monotonicity laws", bad))

    bad = 0
    for seed in range(1, 4):
        for eta in ("const:0", "const:1"):
            report = solve_report(f"seed:{seed}", eta, DEFAULT_BUDGET)
            bad += not report["verified"]
    results.append(("pipeline output passes the Ramsey condition", bad))

    for name, failures in results:
        print(f"{'PASS' if not failures else 'FAIL'}  {name}  ({failures} failures)")
    return EXIT_OK if not any(f for _, f in results) else EXIT_FAILED


COMMANDS = {"solve": cmd_solve, "verify": cmd_verify, "game": cmd_game, "selftest": cmd_selftest}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SpecError as exc:
        print(f"ramsey-eps: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BudgetExceeded as exc:
        print(f"ramsey-eps: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RamseyEpsError as exc:
        print(f"ramsey-eps: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
