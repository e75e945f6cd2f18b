"""Realizer for the finitary Ramsey theorem for pairs.

Given a pair colouring ``c`` and a counterexample functional ``eta`` the
pipeline produces a colour ``x`` and a function ``F`` with

    for all k <= eta_x F:  F(k) >= k  and
        for all i, j <= k:  F(i) < F(j)  ->  c(F(i), F(j)) = x.

The construction nests three games played by the controlled product:

* the Skolem game over naturals builds ``beta``, a bound on branch
  witnesses (``build_beta``);
* for every candidate ``beta`` the Koenig game over Booleans builds an
  approximate infinite branch ``alpha`` of the decidable tree ``T^beta``
  (``build_alpha``);
* for every candidate branch, the two-round pigeonhole game picks a
  colour that recurs along the branch (``iphp_realizer``).

Plays are finite tuples read with default ``0``; functionals of plays are
memoised on the play with trailing zeros stripped, because two tuples that
differ only in trailing zeros denote the same infinite play.
"""

from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .budget import Budget, ensure_budget
from .colourings import PairColouring
from .errors import BudgetExceeded, InternalInvariantViolation
from .eta import CounterexampleSpec
from .selection import Play, ProductRun, at, binary_product
from .core import ReadTrie, RecordingBeta, last_extending, prefix_zero_masks, strip
from .tree import ErdosRadoTree, as_tree, beta_fn, depth, zeros_mask

RECURSION_LIMIT = 200_000


# The Koenig game on T^beta


def epsilon_wkl(c, beta, s: Sequence[int], p: Callable[[int], int]) -> int:
    """Move ``0`` unless the subtree below ``s * 0`` is provably too shallow.

    Plays ``0`` when ``Depth_{p(0)+1}`` below ``s`` implies ``Depth_{p(0)}``
    below ``s * 0``, and ``1`` otherwise.  Only ``p(0)`` is evaluated.
    """
    tree = as_tree(c)
    s = tuple(s)
    p0 = p(0)
    if not depth(tree, beta, s, p0 + 1):
        return 0
    return 0 if depth(tree, beta, s + (0,), p0) else 1


def chain_holds(tree: ErdosRadoTree, bound: int, alpha: Sequence[int], k: int, width: int) -> bool:
    """``Depth_{width-k}`` below ``[alpha](k)`` with witnesses up to ``bound``."""
    s = tuple(at(alpha, i) for i in range(k))
    return tree.has_witness(k, zeros_mask(s), width, bound)


def q_control(c, beta, omega_value: int, alpha: Sequence[int]) -> int:
    """Outcome of the Koenig game: ``W - k - 1`` for the least refuting ``k``.

    ``W = omega_value`` is the control applied to ``alpha``.  The chain
    condition at ``k`` reads: if ``[alpha](k)`` extends to a branch of
    length ``W`` then so does ``[alpha](k+1)``.  Extendability is monotone
    in ``k``, so the least refutation is the last ``k`` that still
    extends, found by bisection.  Returns 0 if nothing refutes.
    """
    W = omega_value
    if W <= 0:
        return 0
    tree = as_tree(c)
    return last_extending(tree.has_witness, prefix_zero_masks(alpha, W), W, beta_fn(beta)(W))


def q_control_literal(c, beta, omega_value: int, alpha: Sequence[int], method: str = "index") -> int:
    """Same value as :func:`q_control`, scanning ``k`` upwards with ``depth``."""
    tree = as_tree(c)
    W = omega_value
    for k in range(W):
        s = tuple(at(alpha, i) for i in range(k))
        if depth(tree, beta, s, W - k, method) and not depth(
            tree, beta, s + (at(alpha, k),), W - k - 1, method
        ):
            return W - k - 1
    return 0


@dataclass
class AlphaResult:
    """A branch of the Koenig game and the data the Skolem game needs."""

    alpha: Play
    omega_value: int
    q_value: int
    prefix_len: int
    p0: int
    p1: int
    run: ProductRun | None = field(repr=False, default=None)


def skolem_bounds(beta, omega_value: int, q_value: int, p0: int, p1: int) -> tuple[int, int]:
    """How much of ``beta`` the Koenig game relied on: ``(N, K)``.

    ``N = max(W, |W - q - 1| + max(p0, p1) + 1)`` and
    ``K = max(W, max_{i <= N} beta(i))`` with ``W`` the control value.
    """
    b = beta_fn(beta)
    W = omega_value
    N = max(W, abs(W - q_value - 1) + max(p0, p1) + 1)
    K = max(W, max(b(i) for i in range(N + 1)))
    return N, K


def build_alpha(
    c,
    beta,
    omega: Callable[[Play], int],
    budget: Budget | None = None,
    keep_run: bool = True,
) -> AlphaResult:
    """Play the Koenig game on ``T^beta`` with control ``omega``.

    ``omega`` maps a Boolean play to a natural.  When ``beta`` is a good
    enough Skolem approximation the result satisfies
    ``T^beta([alpha](omega(alpha)))``.  ``keep_run=False`` drops the
    game's memo tables from the result.
    """
    tree = as_tree(c, budget)
    budget = tree.budget
    omega_memo: dict = {}

    def control(a: Play) -> int:
        key = strip(a)
        v = omega_memo.get(key)
        if v is None:
            v = omega_memo[key] = omega(key)
        return v

    def outcome(a: Play) -> int:
        return q_control(tree, beta, control(a), a)

    def family(s: Play):
        return lambda p: epsilon_wkl(tree, beta, s, p)

    run = ProductRun(family, control, outcome, budget, label="wkl")
    alpha = run.play()
    W = control(alpha)
    qv = outcome(alpha)
    plen = max(W - qv - 1, 0)
    s = tuple(at(alpha, i) for i in range(plen))
    p0 = run.continuation_value(s, 0)
    p1 = run.continuation_value(s, 1)
    return AlphaResult(alpha, W, qv, plen, p0, p1, run if keep_run else None)


# The Skolem game


def delta_sel(c, n: int, p: Callable[[int], int], budget: Budget | None = None) -> int:
    """Iterate ``p`` from 0 until no length-``n`` branch gains a witness.

    Returns ``p^i(0)`` for the least ``i`` such that every Boolean ``s`` of
    length ``n`` with ``T'(s, p^{i+1}(0))`` already has ``T'(s, p^i(0))``.
    Such an ``i <= 2**n`` always exists.
    """
    tree = as_tree(c, budget)
    v = 0
    limit = 1 << n
    for i in itertools.count():
        if i > limit:
            raise InternalInvariantViolation(
                f"no fixed point of the witness bound within 2^{n} iterations"
            )
        tree.budget.tick(where="delta")
        w = p(v)
        if not tree.new_branch_between(n, v, w):
            return v
        v = w
    raise AssertionError("unreachable")


def eq14_holds(c, beta, n: int, bound: int) -> bool:
    """Every length-``n`` branch with a witness ``<= bound`` has one ``<= beta(n)``."""
    tree = as_tree(c)
    return not tree.new_branch_between(n, beta_fn(beta)(n), bound)


@dataclass
class BetaResult:
    beta: Play
    omega_value: int
    q_value: int
    run: ProductRun = field(repr=False)


class SkolemGame:
    """The Skolem game for a control ``omega(alpha, beta)``.

    Keeps one Koenig-game result per candidate ``beta``; its control is
    ``N`` and its outcome ``K`` from :func:`skolem_bounds`.
    """

    def __init__(
        self,
        c,
        omega: Callable[[Play, Play], int],
        budget: Budget | None = None,
        share_reads: bool = True,
    ):
        self.share_reads = share_reads
        self.tree = as_tree(c, budget)
        self.budget = self.tree.budget
        self.omega = omega
        self._bounds: dict[Play, tuple[int, int]] = {}
        self._reads = ReadTrie()

    def alpha_for(self, beta: Sequence[int]) -> AlphaResult:
        b = beta_fn(strip(beta))
        res = self._reads.lookup(b) if self.share_reads else None
        if res is None:
            self.budget.count("alpha_runs")
            rec = RecordingBeta(b)
            res = build_alpha(self.tree, rec, lambda a: self.omega(a, rec), self.budget, keep_run=False)
            if self.share_reads:
                self._reads.insert(rec.reads, res)
        else:
            self.budget.count("alpha_reuses")
        return res

    def bounds(self, beta: Sequence[int]) -> tuple[int, int]:
        key = strip(beta)
        b = self._bounds.get(key)
        if b is None:
            r = self.alpha_for(key)
            b = self._bounds[key] = skolem_bounds(key, r.omega_value, r.q_value, r.p0, r.p1)
        return b

    def play(self) -> BetaResult:
        run = ProductRun(
            lambda s: (lambda p: delta_sel(self.tree, len(s), p)),
            lambda b: self.bounds(b)[0],
            lambda b: self.bounds(b)[1],
            self.budget,
            label="skolem",
            evict=True,
        )
        beta = run.play()
        N, K = self.bounds(beta)
        return BetaResult(beta, N, K, run)


def build_beta(
    c,
    omega: Callable[[Play, Play], int],
    budget: Budget | None = None,
    share_reads: bool = True,
) -> BetaResult:
    return SkolemGame(c, omega, budget, share_reads).play()


# From a branch to an increasing sequence


class BranchZeros:
    """``a(n)``: least ``k`` in ``[n, beta(beta(n) + 1)]`` with ``alpha(k) == 0``.

    ``a(0) = 0``.  When the interval holds no zero the upper endpoint is
    returned and ``n`` is recorded in :attr:`fallbacks`.
    """

    def __init__(self, alpha: Sequence[int], beta):
        self.alpha = tuple(alpha)
        self.beta = beta_fn(beta)
        self.fallbacks: set[int] = set()
        self._memo: dict[int, int] = {0: 0}

    def __call__(self, n: int) -> int:
        v = self._memo.get(n)
        if v is not None:
            return v
        b = self.beta
        hi = b(b(n) + 1)
        alpha = self.alpha
        v = next((k for k in range(n, hi + 1) if at(alpha, k) == 0), None)
        if v is None:
            v = hi
            self.fallbacks.add(n)
        self._memo[n] = v
        return v

    def table(self, n_max: int) -> list[int]:
        return [self(n) for n in range(n_max + 1)]


def build_a(c, alpha, beta, n_max: int) -> tuple[list[int], set[int]]:
    """Table ``a(0..n_max)`` and the indices that fell back to the bound."""
    a = BranchZeros(alpha, beta)
    return a.table(n_max), set(a.fallbacks)


def induced_colouring(c: PairColouring, a: Callable[[int], int]) -> Callable[[int], int]:
    """Colour of ``a(i)`` against the next branch element after it.

    The next element is ``a(a(i) + 1)``, which is strictly above ``a(i)``
    whenever ``a`` did not fall back.  It coincides with ``c(a(i), a(i+1))``
    whenever that pair is off the diagonal.
    """

    def c1(i: int) -> int:
        lo = a(i)
        hi = a(lo + 1)
        if hi == lo:
            return 0
        return c(lo, hi)

    return c1


# Pigeonhole


@dataclass
class IPHPResult:
    x: int
    p: Callable[[int], int] = field(repr=False)
    k0: int
    k1: int

    @property
    def N(self) -> int:
        return max(self.k0, self.k1)


def _cached(f: Callable[[int], int]) -> Callable[[int], int]:
    memo: dict = {}

    def g(k):
        if k not in memo:
            memo[k] = f(k)
        return memo[k]

    return g


def iphp_realizer(c1: Callable[[int], int], eps: Callable[[int, Callable], int]) -> IPHPResult:
    """Colour ``x`` and ``p`` with ``p(i) >= i`` and ``c1(p(i)) == x`` for ``i <= eps(x, p)``.

    Each colour ``x`` gets a selection that plays the least ``i <= eps(x, p)``
    where ``p`` fails (``p(i) < i`` or ``c1(p(i)) != x``), or the bound if
    there is none; the two selections are combined with the binary product
    under ``max``.
    """

    def tilde(x):
        def sel(p):
            bound = eps(x, p)
            for i in range(bound + 1):
                v = p(i)
                if v < i or c1(v) != x:
                    return i
            return bound

        return sel

    second = tilde(1)
    k0, k1 = binary_product(tilde(0), lambda _: second, max)
    x = c1(max(k0, k1))
    if x == 0:
        p = _cached(lambda k: max(k, second(lambda k2: max(k, k2))))
    else:
        p = _cached(lambda k: max(k0, k))
    return IPHPResult(x, p, k0, k1)


def iphp_for_branch(c: PairColouring, a: Callable[[int], int], eta: CounterexampleSpec) -> IPHPResult:
    c1 = induced_colouring(c, a)
    return iphp_realizer(c1, lambda x, p: eta(x, lambda i: a(p(i))))


def psi(c: PairColouring, a: Callable[[int], int], eta: CounterexampleSpec) -> int:
    """How far ``a`` must be a min-monochromatic branch for ``eta``.

    Maximum of ``p(i)`` over ``i <= p(eta_x(a o p))`` where ``x, p`` come
    from the pigeonhole game on the induced colouring.
    """
    r = iphp_for_branch(c, a, eta)
    top = r.p(eta(r.x, lambda i: a(r.p(i))))
    return max(r.p(i) for i in range(top + 1))


def omega_control(c: PairColouring, eta: CounterexampleSpec) -> Callable[[Play, Play], int]:
    """Control of the Koenig game: how much of ``alpha`` and ``beta`` ``eta`` needs."""

    def omega(alpha: Play, beta: Play) -> int:
        b = beta_fn(beta)
        a = BranchZeros(alpha, beta)
        top = psi(c, a, eta)
        return max(max(i, b(i) + 1, b(b(i) + 1) + 1) for i in range(top + 1))

    return omega


def omega_from_psi(beta, psi_value: int) -> int:
    b = beta_fn(beta)
    return max(max(i, b(i) + 1, b(b(i) + 1) + 1) for i in range(psi_value + 1))


# Pipeline


@dataclass
class RamseyWitness:
    colouring: str
    eta: str
    x: int
    F: list[int]
    eta_value: int
    alpha: Play
    beta: Play
    a_fallbacks: list[int]
    psi_value: int
    counters: dict
    budget_used: int
    budget_limit: int
    elapsed: float = 0.0
    report: object = None


def ramsey_pipeline(
    c: PairColouring,
    eta: CounterexampleSpec,
    budget: Budget | None = None,
    verify: bool = True,
    share_reads: bool = True,
) -> RamseyWitness:
    budget = ensure_budget(budget)
    start = time.perf_counter()
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, RECURSION_LIMIT))
    try:
        tree = ErdosRadoTree(c, budget)
        omega = omega_control(c, eta)
        game = SkolemGame(tree, omega, budget, share_reads)
        beta = game.play().beta
        alpha = game.alpha_for(beta).alpha
        a = BranchZeros(alpha, beta)
        r = iphp_for_branch(c, a, eta)

        def F(i):
            return a(r.p(i))

        eta_value = eta(r.x, F)
        psi_value = psi(c, a, eta)
        n = max([eta_value, *eta.reads()])
        table = [F(i) for i in range(n + 1)]
    except BudgetExceeded as exc:
        exc.counters = dict(budget.counters)
        raise
    finally:
        sys.setrecursionlimit(old_limit)
    budget.counters["prec_nodes"] = len(tree)
    w = RamseyWitness(
        colouring=getattr(c, "spec", "custom"),
        eta=str(eta),
        x=r.x,
        F=table,
        eta_value=eta_value,
        alpha=strip(alpha),
        beta=strip(beta),
        a_fallbacks=sorted(a.fallbacks),
        psi_value=psi_value,
        counters=dict(budget.counters),
        budget_used=budget.used,
        budget_limit=budget.limit,
        elapsed=time.perf_counter() - start,
    )
    if verify:
        from .oracles import verify_ramsey_condition

        w.report = verify_ramsey_condition(c, w.x, w.F, eta)
    return w
