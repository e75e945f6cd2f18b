"""Sequential games played by the controlled product of selection functions.

A game is a family of selection functions (one per position), an outcome
functional and a control functional.  The product computes a play in which
every relevant move is what the selection function at that position picks
when shown the exact continuation values; :func:`verify_optimal_play`
checks precisely these equations and nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import Budget
from .selection import (
    ControlFn,
    OutcomeFn,
    Play,
    ProductRun,
    SelectionFamily,
    at,
)


@dataclass(frozen=True)
class Game:
    family: SelectionFamily
    outcome: OutcomeFn
    control: ControlFn

    def run(self, budget: Budget | None = None) -> ProductRun:
        return ProductRun(self.family, self.control, self.outcome, budget)


@dataclass
class IndexCheck:
    n: int
    move_ok: bool
    outcome_ok: bool
    expected_move: int
    continuation_values: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.move_ok and self.outcome_ok


@dataclass
class PlayReport:
    play: Play
    relevant_up_to: int
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> IndexCheck | None:
        return next((c for c in self.checks if not c.ok), None)


def optimal_play(g: Game, budget: Budget | None = None) -> Play:
    return g.run(budget).play()


def is_relevant(s: Play, control: ControlFn) -> bool:
    return control(tuple(s)) >= len(s)


def verify_optimal_play(
    g: Game,
    alpha: Play,
    moves=(0, 1),
    budget: Budget | None = None,
) -> PlayReport:
    """Check both optimality equations at every ``n <= control(alpha)``.

    The continuation values ``p(x)`` are recomputed by a fresh product run,
    for every move in ``moves``, so the check does not reuse anything
    computed while producing ``alpha``.  A probing evaluator records which
    moves the selection function actually asks about.
    """
    alpha = tuple(alpha)
    run = g.run(budget)
    bound = g.control(alpha)
    final = g.outcome(alpha)
    checks = []
    for n in range(bound + 1):
        s = tuple(at(alpha, i) for i in range(n))
        seen: dict = {}

        def p(x, s=s, seen=seen):
            if x not in seen:
                seen[x] = run.continuation_value(s, x)
            return seen[x]

        for m in moves:
            p(m)
        sel = g.family(s)
        chosen = sel(p)
        checks.append(
            IndexCheck(
                n=n,
                move_ok=chosen == at(alpha, n),
                outcome_ok=final == p(chosen),
                expected_move=chosen,
                continuation_values=dict(seen),
            )
        )
    return PlayReport(play=alpha, relevant_up_to=bound, checks=checks)
