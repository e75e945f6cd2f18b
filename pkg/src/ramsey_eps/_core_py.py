"""Pure-Python implementation of the hot paths.

``_core.pyx`` implements the same functions and classes with typed Cython
code; :mod:`ramsey_eps.core` picks one of the two at import.  Both must
give identical results, including budget accounting.
"""

from __future__ import annotations

from typing import Callable, Hashable

from .errors import BudgetExceeded, InternalInvariantViolation

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(z: int) -> int:
    z = (z + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def seeded_colour(key: int, lo: int, hi: int) -> int:
    h = splitmix64(key ^ (lo & MASK64))
    return splitmix64(h ^ (hi & MASK64)) & 1


def strip(play) -> tuple:
    play = tuple(play)
    end = len(play)
    while end and play[end - 1] == 0:
        end -= 1
    return play[:end]


def zeros_mask(s) -> int:
    m = 0
    for i, b in enumerate(s):
        if b == 0:
            m |= 1 << i
    return m


def prefix_zero_masks(alpha, n: int) -> list:
    """``out[k]`` is the zero mask of ``alpha`` restricted to ``[0, k)``, for ``k <= n``."""
    out = [0]
    m, la = 0, len(alpha)
    for i in range(n):
        if i >= la or alpha[i] == 0:
            m |= 1 << i
        out.append(m)
    return out


def place_nodes(pred: list, children: list, c, stop: int, budget) -> None:
    """Extend the Erdos/Rado tree so that every node ``< stop`` is placed."""
    for i in range(len(pred), stop):
        budget.tick(where="prec")
        m, mask = 0, 1
        while True:
            col = c(m, i)
            nxt = children[m].get(col)
            if nxt is None:
                children[m][col] = i
                break
            m = nxt
            mask |= 1 << m
        pred.append(mask)
        children.append({})


def last_extending(has_witness: Callable, masks: list, W: int, bound: int) -> int:
    """Outcome of the Koenig game given the prefix masks of ``alpha``.

    ``has_witness(k, mask, W, bound)`` says whether ``[alpha](k)`` extends
    to a length-``W`` branch with witnesses up to ``bound``; it holds for
    an initial segment of ``k``.  Returns ``W - k - 1`` for the last ``k``
    that extends, or ``0`` if ``k = 0`` fails or ``k = W`` still extends.
    """
    if W <= 0 or not has_witness(0, masks[0], W, bound):
        return 0
    if has_witness(W, masks[W], W, bound):
        return 0
    lo, hi = 0, W
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if has_witness(mid, masks[mid], W, bound):
            lo = mid
        else:
            hi = mid
    return W - lo - 1


class ProductRun:
    """One evaluation of the explicitly controlled unbounded product.

    ``extension(s)`` is the finite sequence that the product appends to the
    position ``s``; it is empty as soon as ``omega(s) < len(s)``.
    Extensions and continuation values are memoised by position for the
    lifetime of the object, so a run should not outlive the functionals it
    was built from.

    With ``evict=True`` the memo entries of a position's children are
    dropped once the position's own extension is known.  Nothing asks for
    them again during the run, so the result is unchanged, but memory stays
    proportional to the current recursion stack instead of the whole tree.
    """

    def __init__(self, family, control, outcome, budget, label: str = "eps", evict: bool = False):
        self.family = family
        self.control = control
        self.outcome = outcome
        self.budget = budget
        self.label = label
        self.evict = evict
        self._node_key = f"{label}_nodes"
        self._ext: dict = {}
        self._val: dict = {}
        self._kids: dict = {}
        self._nodes = 0

    def extension(self, s: tuple) -> tuple:
        ext = self._ext.get(s)
        if ext is not None:
            return ext
        b = self.budget
        b.used += 1
        if b.used > b.limit:
            raise BudgetExceeded(b.limit, b.used, self.label)
        b.counters[self._node_key] += 1
        self._nodes += 1
        if self.control(s) < len(s):
            ext = ()
        else:
            a = self.family(s)(lambda x: self._child_value(s, x))
            ext = (a,) + self.extension(s + (a,))
            if self.evict:
                for y in self._kids.pop(s, ()):
                    self._ext.pop(s + (y,), None)
                    self._val.pop(s + (y,), None)
        self._ext[s] = ext
        return ext

    def _child_value(self, s: tuple, x):
        if self.evict:
            self._kids.setdefault(s, set()).add(x)
        return self.value(s + (x,))

    def value(self, s: tuple) -> Hashable:
        """Outcome of the play that continues ``s`` optimally."""
        if s in self._val:
            return self._val[s]
        v = self.outcome(s + self.extension(s))
        self._val[s] = v
        return v

    def continuation_value(self, s, x):
        return self.value(tuple(s) + (x,))

    def play(self, s=()) -> tuple:
        """The full play ``s * extension(s)``."""
        s = tuple(s)
        return s + self.extension(s)

    @property
    def nodes(self) -> int:
        """Positions whose extension was computed."""
        return self._nodes


class RecordingBeta:
    """A Skolem approximation that logs each index it is asked for."""

    def __init__(self, b: Callable[[int], int]):
        self._b = b
        self.reads: dict = {}

    def __call__(self, i: int) -> int:
        v = self.reads.get(i)
        if v is None:
            v = self.reads[i] = self._b(i)
        return v


class _Leaf:
    __slots__ = ("result",)

    def __init__(self, result):
        self.result = result


class _Path:
    """A run of reads with exactly one recorded answer each."""

    __slots__ = ("idx", "vals", "next")

    def __init__(self, idx: tuple, vals: tuple, nxt):
        self.idx, self.vals, self.next = idx, vals, nxt


class _Branch:
    __slots__ = ("index", "kids")

    def __init__(self, index: int, kids: dict):
        self.index, self.kids = index, kids


def _inconsistent():
    return InternalInvariantViolation("computation read beta inconsistently")


class ReadTrie:
    """Results of a deterministic computation keyed by what it read of ``beta``.

    A computation that sees ``beta`` only through point reads gives the
    same result for every ``beta`` answering its reads the same way.
    Reads are stored in the order they were made, so a lookup replays the
    same questions and follows the answers.  Unbranched stretches are kept
    as one path node.
    """

    def __init__(self):
        self._root = None
        self.size = 0

    def lookup(self, b: Callable[[int], int]):
        node = self._root
        while node is not None:
            if type(node) is _Leaf:
                return node.result
            if type(node) is _Path:
                for i, v in zip(node.idx, node.vals):
                    if b(i) != v:
                        return None
                node = node.next
            else:
                node = node.kids.get(b(node.index))
        return None

    @staticmethod
    def _make(items, result):
        leaf = _Leaf(result)
        if not items:
            return leaf
        return _Path(tuple(i for i, _ in items), tuple(v for _, v in items), leaf)

    def insert(self, reads: dict, result) -> None:
        items = list(reads.items())
        self.size += 1
        if self._root is None:
            self._root = self._make(items, result)
            return
        # ``parent`` holds the node, ``slot`` where it hangs: None for the
        # root, "next" for a path, a value for a branch
        parent, slot, node, pos = None, None, self._root, 0
        while True:
            if type(node) is _Leaf:
                raise _inconsistent()
            if type(node) is _Path:
                j = 0
                for i, v in zip(node.idx, node.vals):
                    if pos + j >= len(items) or items[pos + j][0] != i:
                        raise _inconsistent()
                    if items[pos + j][1] != v:
                        break
                    j += 1
                if j == len(node.idx):
                    parent, slot, node, pos = node, "next", node.next, pos + j
                    continue
                rest = node.next
                if j + 1 < len(node.idx):
                    rest = _Path(node.idx[j + 1 :], node.vals[j + 1 :], rest)
                branch = _Branch(node.idx[j], {node.vals[j]: rest})
                branch.kids[items[pos + j][1]] = self._make(items[pos + j + 1 :], result)
                if j:
                    node.idx, node.vals, node.next = node.idx[:j], node.vals[:j], branch
                elif parent is None:
                    self._root = branch
                elif slot == "next" and type(parent) is _Path:
                    parent.next = branch
                else:
                    parent.kids[slot] = branch
                return
            if pos >= len(items) or items[pos][0] != node.index:
                raise _inconsistent()
            v = items[pos][1]
            child = node.kids.get(v)
            if child is None:
                node.kids[v] = self._make(items[pos + 1 :], result)
                return
            parent, slot, node, pos = node, v, child, pos + 1
