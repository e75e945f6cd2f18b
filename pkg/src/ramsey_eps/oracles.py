"""Brute-force checkers that share no search code with the realizer.

Everything here is written from the definitions with plain loops:
``prec_literal`` instead of the tree walk, enumeration over all Boolean
sequences instead of witness indexes, full backward induction instead of
the memoised product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import CapInsufficient, DepthTooLarge, TableTooShort
from .eta import CounterexampleSpec
from .games import Game
from .selection import Play
from .tree import prec_literal

MAX_BRUTE_FORCE_DEPTH = 20
DEFAULT_CAP = 1000


@dataclass
class VerificationReport:
    passed: bool
    first_violation: tuple | None
    checks_performed: int

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "first_violation": list(self.first_violation) if self.first_violation else None,
            "checks_performed": self.checks_performed,
        }


def verify_ramsey_condition(c, x: int, F: Sequence[int], eta: CounterexampleSpec) -> VerificationReport:
    """Check ``F(k) >= k`` and pairwise colour ``x`` for every ``k <= eta_x F``.

    A violation is reported as ``(k, i, j, reason)``; for ``F(k) < k`` the
    pair slots repeat ``k``.
    """
    F = list(F)

    def read(i):
        if not 0 <= i < len(F):
            raise TableTooShort(f"F table has {len(F)} entries, index {i} requested")
        return F[i]

    bound = eta(x, read)
    read(bound)
    checks = 0
    for k in range(bound + 1):
        checks += 1
        if F[k] < k:
            return VerificationReport(False, (k, k, k, f"F({k})={F[k]} < {k}"), checks)
        # pairs with max(i, j) == k are new at this k
        for i in range(k):
            for u, v in ((i, k), (k, i)):
                checks += 1
                if F[u] < F[v] and c(F[u], F[v]) != x:
                    return VerificationReport(
                        False,
                        (k, u, v, f"c(F({u}), F({v})) = c({F[u]}, {F[v]}) != {x}"),
                        checks,
                    )
    return VerificationReport(True, None, checks)


def canonical_branch(c, n: int) -> Play:
    """The length-``n`` branch witnessed by ``n`` itself."""
    memo: dict = {}
    return tuple(0 if prec_literal(c, i, n, memo) else 1 for i in range(n))


def _branch_of(c, k: int, n: int, memo: dict) -> Play:
    return tuple(0 if prec_literal(c, i, k, memo) else 1 for i in range(n))


def exact_beta_oracle(c, n_max: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Skolem function restricted to witnesses ``<= cap``, for ``n <= n_max``.

    ``beta(n)`` is the largest least-witness over all Boolean ``s`` of
    length ``n`` that have a witness ``k' <= cap``: every ``s`` is tried
    and every candidate ``k'`` in ``[n, cap]`` is tested against the
    literal order.  No witness can exist when ``n > cap``, so that case is
    an error rather than a silently wrong value.
    """
    if n_max > cap:
        raise CapInsufficient(f"n_max={n_max} exceeds cap={cap}: no witness can be found")
    memo: dict = {}
    branches = {}
    out = []
    for n in range(n_max + 1):
        best = 0
        for s in itertools.product((0, 1), repeat=n):
            least = None
            for k in range(n, cap + 1):
                key = (k, n)
                if key not in branches:
                    branches[key] = _branch_of(c, k, n, memo)
                if branches[key] == s:
                    least = k
                    break
            if least is not None:
                best = max(best, least)
        out.append(best)
    return out


def brute_force_play(g: Game, depth: int, moves: Sequence[int] = (0, 1)) -> Play:
    """Backward induction over the whole ``moves ** depth`` play tree.

    Assumes the game's control is the constant ``depth - 1``.  Values are
    filled bottom-up level by level; each selection function then sees the
    full table of its children's values.
    """
    if depth > MAX_BRUTE_FORCE_DEPTH:
        raise DepthTooLarge(f"depth {depth} exceeds {MAX_BRUTE_FORCE_DEPTH}")
    moves = tuple(moves)
    value = {s: g.outcome(s) for s in itertools.product(moves, repeat=depth)}
    choice = {}
    for level in range(depth - 1, -1, -1):
        for s in itertools.product(moves, repeat=level):
            table = {m: value[s + (m,)] for m in moves}
            m = g.family(s)(lambda x, table=table: table[x])
            choice[s] = m
            value[s] = table[m]
    play: Play = ()
    for _ in range(depth):
        play += (choice[play],)
    return play


def eq14_enumerated(c, beta, n: int, bound: int) -> bool:
    """For every ``s`` of length ``n``: a witness ``<= bound`` implies one ``<= beta(n)``.

    Builds the branch of every candidate witness with the literal order and
    compares the two sets of length-``n`` branches.
    """
    b = beta[n] if n < len(beta) else 0
    memo: dict = {}
    late = {_branch_of(c, k, n, memo) for k in range(n, bound + 1)}
    early = {_branch_of(c, k, n, memo) for k in range(n, b + 1)}
    return late <= early
