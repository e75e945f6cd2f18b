"""Selection functions, the controlled unbounded product, and a realizer
for the finitary Ramsey theorem for pairs built from it."""

from .budget import DEFAULT_BUDGET, Budget
from .colourings import PairColouring, parse_colouring
from .errors import BudgetExceeded, RamseyEpsError, SpecError
from .eta import CounterexampleSpec
from .games import Game, optimal_play, verify_optimal_play
from .oracles import VerificationReport, verify_ramsey_condition
from .ramsey import RamseyWitness, ramsey_pipeline
from .selection import binary_product, eps, finite_product

__all__ = [
    "DEFAULT_BUDGET",
    "Budget",
    "BudgetExceeded",
    "CounterexampleSpec",
    "Game",
    "PairColouring",
    "RamseyEpsError",
    "RamseyWitness",
    "SpecError",
    "VerificationReport",
    "binary_product",
    "eps",
    "finite_product",
    "optimal_play",
    "parse_colouring",
    "ramsey_pipeline",
    "verify_optimal_play",
    "verify_ramsey_condition",
]
