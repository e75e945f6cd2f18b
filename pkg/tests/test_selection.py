import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ramsey_eps.budget import Budget
from ramsey_eps.errors import BudgetExceeded
from ramsey_eps.selection import (
    ProductRun,
    argmax_selection,
    at,
    attain,
    binary_product,
    constant_selection,
    continuation_value,
    eps,
    finite_product,
    least_root_selection,
)

argmax = argmax_selection((0, 1))


def weighted(play):
    return 2 * at(play, 0) + at(play, 1)


def brute_max_play(q, length):
    """Lexicographically least play of ``length`` moves maximising ``q``."""
    plays = list(itertools.product((0, 1), repeat=length))
    best = max(q(p) for p in plays)
    return min(p for p in plays if q(p) == best)


def test_attain_constant():
    assert attain(constant_selection(5), lambda x: x + 1) == 6


def test_attain_argmax():
    assert attain(argmax, [3, 7].__getitem__) == 7


def test_attain_least_root_calls_selection_once():
    calls = []

    def sel(p):
        calls.append(1)
        return least_root_selection(2)(p)

    assert attain(sel, [1, 0, 9].__getitem__) == 0
    assert len(calls) == 1


def test_binary_product_xor():
    # brute force: every x reaches outcome 1; ties go to x = 0, whose reply is 1
    q = lambda x, y: x ^ y
    outcomes = {x: max(q(x, y) for y in (0, 1)) for x in (0, 1)}
    assert outcomes == {0: 1, 1: 1}
    assert binary_product(argmax, lambda x: argmax, q) == (0, 1)


def test_binary_product_constants():
    assert binary_product(constant_selection(1), lambda x: constant_selection(2), lambda x, y: x * y) == (1, 2)


def test_binary_product_all_ties():
    assert binary_product(argmax, lambda x: argmax, lambda x, y: 0) == (0, 0)


@given(st.lists(st.integers(0, 5), min_size=4, max_size=4))
def test_binary_product_first_component(table):
    q = lambda x, y: table[2 * x + y]
    a, b = binary_product(argmax, lambda x: argmax, q)
    reply = {x: argmax(lambda y: q(x, y)) for x in (0, 1)}
    assert a == argmax(lambda x: q(x, reply[x]))
    assert b == reply[a]


def test_finite_product_examples():
    assert finite_product([], lambda s: 0) == ()
    assert finite_product([constant_selection(4), constant_selection(7)], lambda s: 0) == (4, 7)
    assert brute_max_play(weighted, 2) == (1, 1)
    assert finite_product([argmax, argmax], weighted) == (1, 1)


def test_eps_guard_fires_at_once():
    assert eps((7,), lambda s: argmax, lambda a: 0, weighted) == ()


def test_eps_single_round():
    assert eps((), lambda s: constant_selection(3), lambda a: 0, weighted) == (3,)


def test_eps_two_rounds():
    assert eps((), lambda s: argmax, lambda a: 1, weighted) == brute_max_play(weighted, 2)


def test_continuation_values():
    fam, ctl = (lambda s: argmax), (lambda a: 1)
    # optimal continuations are <0,1> and <1,1>
    assert continuation_value((), 0, fam, ctl, weighted) == weighted((0, 1)) == 1
    assert continuation_value((), 1, fam, ctl, weighted) == 3
    assert continuation_value((), 5, fam, lambda a: 0, lambda a: at(a, 0) * 10) == 50


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        eps((), lambda s: argmax, lambda a: 12, weighted, budget=Budget(limit=50))


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        Budget(limit=0)


# Random games over Booleans: a selection family drawn per position.

SELECTIONS = {
    "argmax": argmax_selection((0, 1)),
    "argmin": lambda p: argmax_selection((0, 1))(lambda x: -p(x)),
    "const0": constant_selection(0),
    "const1": constant_selection(1),
    "root": lambda p: 0 if p(0) == 0 else 1,
}


@st.composite
def random_games(draw):
    rounds = draw(st.integers(0, 3))
    table = draw(st.lists(st.integers(0, 7), min_size=2 ** (rounds + 1), max_size=2 ** (rounds + 1)))
    names = draw(st.lists(st.sampled_from(sorted(SELECTIONS)), min_size=2 ** (rounds + 2), max_size=2 ** (rounds + 2)))

    def outcome(play):
        idx = 0
        for i in range(rounds + 1):
            idx = 2 * idx + at(play, i)
        return table[idx]

    def family(s):
        # position index in a complete binary numbering
        return SELECTIONS[names[(1 << len(s)) - 1 + int("".join(map(str, s)) or "0", 2)]]

    return rounds, family, outcome


@settings(max_examples=150, deadline=None)
@given(random_games())
def test_main_lemma_suffix_identity(game):
    rounds, family, outcome = game
    control = lambda a: rounds
    run = ProductRun(family, control, outcome)
    alpha = run.extension(())
    for n in range(len(alpha) + 1):
        again = eps(alpha[:n], family, control, outcome)
        assert alpha == alpha[:n] + again


@settings(max_examples=150, deadline=None)
@given(random_games())
def test_finite_product_matches_eps(game):
    rounds, family, outcome = game
    alpha = eps((), family, lambda a: rounds, outcome)
    # for position-independent families the two must coincide
    name_free = [family(alpha[:i]) for i in range(rounds + 1)]
    uniform = lambda s: name_free[len(s)]
    assert finite_product(name_free, outcome) == eps((), uniform, lambda a: rounds, outcome)
    assert len(alpha) == rounds + 1
