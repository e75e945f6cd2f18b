"""Work accounting for the exponential parts of the construction."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**8


@dataclass
class Budget:
    """A mutable step counter with a hard limit.

    Every recursion node of the product, every scanned witness candidate and
    every Erdos/Rado tree node costs one step.  ``counters`` keeps named
    statistics that are reported alongside a result but do not count
    against the limit.
    """

    limit: int = DEFAULT_BUDGET
    used: int = 0
    counters: Counter = field(default_factory=Counter)

    def __post_init__(self) -> None:
        if self.limit <= 0:
            raise ValueError("budget limit must be positive")

    def tick(self, steps: int = 1, where: str = "") -> None:
        self.used += steps
        if self.used > self.limit:
            raise BudgetExceeded(self.limit, self.used, where)

    def count(self, name: str, n: int = 1) -> None:
        self.counters[name] += n

    @property
    def remaining(self) -> int:
        return max(0, self.limit - self.used)


def ensure_budget(budget: Budget | None) -> Budget:
    return Budget() if budget is None else budget
