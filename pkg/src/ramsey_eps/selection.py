"""Selection functions and their products.

A selection function maps an evaluator ``p: X -> R`` to a move in ``X``.
Infinite plays are represented by finite tuples read with a default
element of ``0`` beyond their end, so every outcome functional ``q`` and
control functional ``omega`` below is an ordinary Python callable taking a
tuple.  Outcome functionals always receive the *whole* play from the root
position: shifting ``q`` by a prefix ``s`` is done by prepending ``s`` to
the argument, never inside ``q``.
"""

from __future__ import annotations

from typing import Callable, Hashable, Sequence, Tuple, TypeVar

from .budget import Budget, ensure_budget
from .core import ProductRun as _ProductRun

X = TypeVar("X")
Y = TypeVar("Y")
R = TypeVar("R")

Play = Tuple[int, ...]
Evaluator = Callable[[X], R]
SelectionFn = Callable[[Evaluator], X]
SelectionFamily = Callable[[Play], SelectionFn]
OutcomeFn = Callable[[Play], R]
ControlFn = Callable[[Play], int]

DEFAULT_MOVE = 0


def at(play: Sequence[int], i: int) -> int:
    """Read position ``i`` of the canonical extension of ``play``."""
    return play[i] if i < len(play) else DEFAULT_MOVE


def attain(sel: SelectionFn, p: Evaluator) -> R:
    """Outcome of playing the move ``sel`` chooses for ``p``."""
    return p(sel(p))


def binary_product(
    eps: SelectionFn,
    delta: Callable[[X], SelectionFn],
    q: Callable[[X, Y], R],
) -> tuple[X, Y]:
    """Binary product of ``eps`` with the dependent family ``delta``.

    ``B[x] = delta(x)(y -> q(x, y))`` is the best reply to ``x`` and the
    first move is ``eps(x -> q(x, B[x]))``.  Replies are cached for the
    duration of the call.
    """
    replies: dict = {}

    def reply(x):
        if x not in replies:
            replies[x] = delta(x)(lambda y: q(x, y))
        return replies[x]

    a = eps(lambda x: q(x, reply(x)))
    return a, reply(a)


def finite_product(family: Sequence[SelectionFn], q: OutcomeFn) -> Play:
    """Right-nested iteration of :func:`binary_product` over ``family``.

    ``q`` receives the tuple of all chosen moves.  No memoisation: the
    number of outcome evaluations grows exponentially with ``len(family)``.
    """
    family = list(family)

    def solve(i: int, q_i: Callable[[Play], R]) -> Play:
        if i == len(family):
            return ()
        head, rest = binary_product(
            family[i],
            lambda x: (lambda p: solve(i + 1, p)),
            lambda x, tail: q_i((x,) + tail),
        )
        return (head,) + rest

    return solve(0, q)


class ProductRun(_ProductRun):
    __doc__ = _ProductRun.__doc__

    def __init__(
        self,
        family: SelectionFamily,
        control: ControlFn,
        outcome: OutcomeFn,
        budget: Budget | None = None,
        label: str = "eps",
        evict: bool = False,
    ):
        super().__init__(family, control, outcome, ensure_budget(budget), label, evict)


def eps(
    s: Sequence[int],
    family: SelectionFamily,
    control: ControlFn,
    outcome: OutcomeFn,
    budget: Budget | None = None,
) -> Play:
    """Extension computed by the controlled product from position ``s``."""
    return ProductRun(family, control, outcome, budget).extension(tuple(s))


def continuation_value(
    s: Sequence[int],
    x,
    family: SelectionFamily,
    control: ControlFn,
    outcome: OutcomeFn,
    budget: Budget | None = None,
):
    """Outcome of playing ``x`` at ``s`` and continuing with the product."""
    return ProductRun(family, control, outcome, budget).continuation_value(s, x)


# Example selection functions over finite move sets.  Ties go to the
# least move.


def argmax_selection(moves: Sequence[int] = (0, 1)) -> SelectionFn:
    moves = sorted(moves)

    def sel(p):
        best, best_val = moves[0], p(moves[0])
        for m in moves[1:]:
            v = p(m)
            if v > best_val:
                best, best_val = m, v
        return best

    return sel


def argmin_selection(moves: Sequence[int] = (0, 1)) -> SelectionFn:
    moves = sorted(moves)

    def sel(p):
        best, best_val = moves[0], p(moves[0])
        for m in moves[1:]:
            v = p(m)
            if v < best_val:
                best, best_val = m, v
        return best

    return sel


def constant_selection(move) -> SelectionFn:
    return lambda p: move


def least_root_selection(bound: int) -> SelectionFn:
    """Least ``i <= bound`` with ``p(i) == 0``, else ``bound``."""

    def sel(p):
        for i in range(bound + 1):
            if p(i) == 0:
                return i
        return bound

    return sel
