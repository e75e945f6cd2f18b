"""The Erdos/Rado precedence order and the binary tree of its branches.

Nodes are naturals.  ``j`` precedes ``i`` (``j < i``) when ``c(k, i) ==
c(k, j)`` for every ``k`` preceding ``j``; ``0`` precedes every positive
node.  The predecessors of a node form a chain, and a node ``i`` is placed
by walking down from the root, at each node ``m`` following the child whose
edge colour ``c(m, child)`` equals ``c(m, i)``.  :func:`prec_literal`
evaluates the recursive definition directly and is used to check the walk.

Predecessor sets are stored as integer bitmasks.  A Boolean sequence ``s``
is encoded by the mask of its zero positions, so ``T'(s, k)`` asks whether
some ``k'`` in ``[len(s), k]`` has ``pred(k')`` restricted to
``[0, len(s))`` equal to that mask.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from typing import Callable, Sequence

from .budget import Budget, ensure_budget
from .core import place_nodes, zeros_mask
from .colourings import PairColouring
from .errors import DepthLimitExceeded
from .selection import at

MAX_EXHAUSTIVE_DEPTH = 24

BetaLike = Callable[[int], int] | Sequence[int]


def beta_fn(beta: BetaLike) -> Callable[[int], int]:
    """Read a Skolem approximation given either as a function or a prefix."""
    if callable(beta):
        return beta
    beta = tuple(beta)
    return lambda i: at(beta, i)


def mask_to_seq(mask: int, n: int) -> tuple:
    return tuple(0 if (mask >> i) & 1 else 1 for i in range(n))


class ErdosRadoTree:
    """Lazily grown Erdos/Rado tree of a pair colouring.

    All queries are memoised; the object is meant to live for one
    computation (a pipeline run, a test) and is not thread safe.
    """

    def __init__(self, c: PairColouring, budget: Budget | None = None):
        self.c = c
        self.budget = ensure_budget(budget)
        self._pred: list[int] = [0]
        self._children: list[dict] = [{}]
        # per length n: (nodes indexed so far, pattern -> witnesses, first witnesses)
        self._index: dict[int, tuple[int, dict, list]] = {}

    def __len__(self) -> int:
        return len(self._pred)

    def ensure(self, n: int) -> None:
        """Place every node ``<= n``."""
        if n >= len(self._pred):
            place_nodes(self._pred, self._children, self.c, n + 1, self.budget)

    def pred_mask(self, i: int) -> int:
        if i >= len(self._pred):
            self.ensure(i)
        return self._pred[i]

    def prec(self, j: int, i: int) -> bool:
        if not j < i:
            raise ValueError("prec is defined for j < i")
        return bool((self.pred_mask(i) >> j) & 1)

    def predecessors(self, i: int) -> list[int]:
        m = self.pred_mask(i)
        return [j for j in range(i) if (m >> j) & 1]

    def children(self, m: int, below: int) -> list[int]:
        """Immediate successors of ``m`` among nodes ``< below``."""
        self.ensure(below - 1)
        return sorted(v for v in self._children[m].values() if v < below)

    def pattern(self, k: int, n: int) -> int:
        """Zero-mask of the length-``n`` branch that ``k`` witnesses."""
        return self.pred_mask(k) & ((1 << n) - 1)

    # per-length index of witnesses

    def _length_index(self, n: int, upto: int):
        self.ensure(upto)
        done, by_pattern, firsts = self._index.get(n, (n - 1, {}, []))
        if done < upto:
            low = (1 << n) - 1
            pred = self._pred
            for k in range(done + 1, upto + 1):
                pat = pred[k] & low
                lst = by_pattern.get(pat)
                if lst is None:
                    by_pattern[pat] = [k]
                    firsts.append(k)
                else:
                    lst.append(k)
            self.budget.tick(upto - done, where="index")
            self._index[n] = (upto, by_pattern, firsts)
        return by_pattern, firsts

    def has_witness(self, n: int, zmask: int, lo: int, hi: int) -> bool:
        """Is there ``k'`` in ``[max(lo, n), hi]`` witnessing the branch ``zmask``?"""
        lo = max(lo, n)
        if hi < lo:
            return False
        self.budget.count("witness_queries")
        by_pattern, _ = self._length_index(n, hi)
        lst = by_pattern.get(zmask)
        if not lst:
            return False
        pos = bisect_left(lst, lo)
        return pos < len(lst) and lst[pos] <= hi

    def first_witnesses(self, n: int, upto: int) -> list[int]:
        """Sorted minimal witnesses ``<= upto`` of all length-``n`` branches."""
        _, firsts = self._length_index(n, upto)
        return firsts[: bisect_right(firsts, upto)]

    def new_branch_between(self, n: int, lo: int, hi: int) -> bool:
        """Does some length-``n`` branch have its least witness in ``(lo, hi]``?"""
        if hi <= lo:
            return False
        _, firsts = self._length_index(n, hi)
        pos = bisect_right(firsts, lo)
        return pos < len(firsts) and firsts[pos] <= hi


def as_tree(c, budget: Budget | None = None) -> ErdosRadoTree:
    return c if isinstance(c, ErdosRadoTree) else ErdosRadoTree(c, budget)


def prec(c, j: int, i: int) -> bool:
    return as_tree(c).prec(j, i)


def prec_literal(c: PairColouring, j: int, i: int, memo: dict | None = None) -> bool:
    """Evaluate ``j < i`` in the Erdos/Rado order straight from its definition."""
    if memo is None:
        memo = {}

    def rec(j, i):
        key = (j, i)
        if key not in memo:
            memo[key] = all(c(k, i) == c(k, j) for k in range(j) if rec(k, j))
        return memo[key]

    if not j < i:
        raise ValueError("prec is defined for j < i")
    return rec(j, i)


def t_prime(c, s: Sequence[int], k: int) -> bool:
    """``T'(s, k)``: some ``k'`` in ``[|s|, k]`` has ``s`` as its branch prefix."""
    tree = as_tree(c)
    n = len(s)
    return tree.has_witness(n, zeros_mask(s), n, k)


def t_prime_literal(c, s: Sequence[int], k: int) -> bool:
    tree = as_tree(c)
    n = len(s)
    return any(
        all((s[i] == 0) == tree.prec(i, kk) for i in range(n))
        for kk in range(n, k + 1)
    )


def t_beta(c, beta: BetaLike, s: Sequence[int]) -> bool:
    return t_prime(c, s, beta_fn(beta)(len(s)))


def depth(
    c,
    beta: BetaLike,
    s: Sequence[int],
    n: int,
    method: str = "index",
) -> bool:
    """``Depth_n`` of the subtree of ``T^beta`` below ``s``.

    True iff some Boolean ``t`` of length ``n`` has ``T'(s * t, beta(|s|+n))``.
    Since ``t`` is then fixed by the witness, the ``"index"`` method looks up a
    ``k'`` in ``[|s| + n, beta(|s| + n)]`` whose length-``|s|`` branch is
    ``s``.  ``"dfs"`` extends ``s`` bit by bit and prunes every prefix that
    already fails ``T'``; ``"enumerate"`` tries all ``2**n`` extensions.
    """
    tree = as_tree(c)
    s = tuple(s)
    m = len(s)
    bound = beta_fn(beta)(m + n)
    tree.budget.count("depth_evaluations")
    if method == "index":
        return tree.has_witness(m, zeros_mask(s), m + n, bound)
    if n > MAX_EXHAUSTIVE_DEPTH:
        raise DepthLimitExceeded(f"Depth search with n={n} exceeds {MAX_EXHAUSTIVE_DEPTH}")
    if method == "dfs":
        return _depth_dfs(tree, s, n, bound)
    if method == "enumerate":
        for t in itertools.product((0, 1), repeat=n):
            tree.budget.tick(where="depth")
            if t_prime_literal(tree, s + t, bound):
                return True
        return False
    raise ValueError(f"unknown depth method {method!r}")


def _depth_dfs(tree: ErdosRadoTree, s: tuple, n: int, bound: int) -> bool:
    target = len(s) + n
    stack = [s]
    while stack:
        u = stack.pop()
        tree.budget.tick(where="depth")
        if not tree.has_witness(len(u), zeros_mask(u), len(u), bound):
            continue
        if len(u) == target:
            return True
        stack.append(u + (1,))
        stack.append(u + (0,))
    return False
