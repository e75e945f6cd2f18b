"""Counterexample functionals ``eta: (colour, F) -> N``.

Only a closed family is supported so that every functional is continuous
and reads a known finite part of ``F``:

``const:k``          eta_x F = k
``xswitch:k0:k1``    eta_x F = k_x
``fmax:m:cap``       eta_x F = min(cap, max(F(0), ..., F(m-1)))   (0 if m = 0)

New variants go in ``_KINDS`` together with a ``reads`` rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import SpecError

_KINDS = {"const": 1, "xswitch": 2, "fmax": 2}


@dataclass(frozen=True)
class CounterexampleSpec:
    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise SpecError(f"unknown eta kind {self.kind!r}")
        if len(self.params) != _KINDS[self.kind]:
            raise SpecError(f"eta {self.kind} takes {_KINDS[self.kind]} parameters")
        if any((not isinstance(v, int)) or v < 0 for v in self.params):
            raise SpecError("eta parameters must be naturals")

    def __call__(self, x: int, F: Callable[[int], int]) -> int:
        if self.kind == "const":
            return self.params[0]
        if self.kind == "xswitch":
            return self.params[x]
        m, cap = self.params
        return min(cap, max((F(i) for i in range(m)), default=0))

    def reads(self) -> range:
        """Indices of ``F`` the functional looks at."""
        return range(self.params[0]) if self.kind == "fmax" else range(0)

    def __str__(self) -> str:
        return ":".join([self.kind, *map(str, self.params)])

    @classmethod
    def parse(cls, text: str) -> "CounterexampleSpec":
        kind, *rest = text.split(":")
        try:
            params = tuple(int(v) for v in rest)
        except ValueError as exc:
            raise SpecError(f"bad eta spec {text!r}") from exc
        return cls(kind, params)


def const(k: int) -> CounterexampleSpec:
    return CounterexampleSpec("const", (k,))


def xswitch(k0: int, k1: int) -> CounterexampleSpec:
    return CounterexampleSpec("xswitch", (k0, k1))


def fmax(m: int, cap: int) -> CounterexampleSpec:
    return CounterexampleSpec("fmax", (m, cap))
