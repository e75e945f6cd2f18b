"""Two-colourings of pairs of naturals and their text specifications.

Supported specs::

    formula:zero      every pair has colour 0
    formula:parity    c(i, j) = (i + j) mod 2
    seed:<u64>        low bit of a splitmix64 hash of (seed, min, max)
    matrix:<path>     explicit lower triangle, colour 0 beyond it

The matrix file has ``n`` on its first line, followed by ``n - 1`` lines;
line ``i`` (for ``i = 1 .. n-1``) holds ``i`` characters ``0``/``1`` giving
``c(i, j)`` for ``j = 0 .. i-1``.  Whitespace between digits is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .core import seeded_colour, splitmix64
from .errors import SpecError

MASK64 = (1 << 64) - 1


class PairColouring:
    """Symmetric map from pairs of distinct naturals to ``{0, 1}``."""

    spec: str = "custom"

    def __call__(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("colouring is only defined on distinct pairs")
        return self.colour(i, j) if i < j else self.colour(j, i)

    def colour(self, lo: int, hi: int) -> int:
        """Colour of ``{lo, hi}`` with ``lo < hi``."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.spec}>"


class ZeroColouring(PairColouring):
    spec = "formula:zero"

    def colour(self, lo, hi):
        return 0


class ParityColouring(PairColouring):
    spec = "formula:parity"

    def colour(self, lo, hi):
        return (lo + hi) & 1


class SeededColouring(PairColouring):
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise SpecError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.spec = f"seed:{seed}"
        self._key = splitmix64(seed)
        # lets the compiled tree builder hash colours without a Python call
        self.seeded_key = self._key

    def colour(self, lo, hi):
        return seeded_colour(self._key, lo, hi)


class MatrixColouring(PairColouring):
    def __init__(self, rows: Sequence[Sequence[int]], spec: str = "matrix:<memory>"):
        # rows[i - 1][j] = c(i, j) for j < i
        self.rows = [tuple(int(b) for b in r) for r in rows]
        for i, r in enumerate(self.rows, start=1):
            if len(r) != i or any(b not in (0, 1) for b in r):
                raise SpecError(f"matrix row {i} must hold {i} bits")
        self.n = len(self.rows) + 1
        self.spec = spec

    def colour(self, lo, hi):
        if hi < self.n:
            return self.rows[hi - 1][lo]
        return 0

    @classmethod
    def from_text(cls, text: str, spec: str = "matrix:<memory>") -> "MatrixColouring":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise SpecError("empty matrix file")
        try:
            n = int(lines[0])
        except ValueError as exc:
            raise SpecError(f"matrix size line is not an integer: {lines[0]!r}") from exc
        if n < 1:
            raise SpecError("matrix size must be at least 1")
        body = lines[1:]
        if len(body) != n - 1:
            raise SpecError(f"matrix of size {n} needs {n - 1} rows, found {len(body)}")
        rows = []
        for ln in body:
            bits = ln.replace(" ", "").replace("\t", "")
            if any(ch not in "01" for ch in bits):
                raise SpecError(f"matrix row contains non-binary digits: {ln!r}")
            rows.append([int(ch) for ch in bits])
        return cls(rows, spec)

    def to_text(self) -> str:
        out = [str(self.n)]
        out += ["".join(str(b) for b in r) for r in self.rows]
        return "\n".join(out) + "\n"


class FunctionColouring(PairColouring):
    """Wrap an arbitrary symmetric callable ``f(lo, hi)``."""

    def __init__(self, f: Callable[[int, int], int], spec: str = "custom"):
        self.f = f
        self.spec = spec

    def colour(self, lo, hi):
        return self.f(lo, hi) & 1


def parse_colouring(spec: str) -> PairColouring:
    kind, _, arg = spec.partition(":")
    if kind == "formula":
        if arg == "zero":
            return ZeroColouring()
        if arg == "parity":
            return ParityColouring()
        raise SpecError(f"unknown formula colouring {arg!r}")
    if kind == "seed":
        try:
            seed = int(arg)
        except ValueError as exc:
            raise SpecError(f"bad seed {arg!r}") from exc
        return SeededColouring(seed)
    if kind == "matrix":
        path = Path(arg)
        try:
            text = path.read_text()
        except OSError as exc:
            raise SpecError(f"cannot read matrix file {arg!r}: {exc}") from exc
        return MatrixColouring.from_text(text, spec)
    raise SpecError(f"unknown colouring spec {spec!r}")


@dataclass(frozen=True)
class UnaryColouring:
    """A colouring of single naturals, e.g. ``i -> c(a(i), a(i+1))``."""

    f: Callable[[int], int]

    def __call__(self, n: int) -> int:
        return self.f(n)
