from ramsey_eps.games import Game, is_relevant, optimal_play, verify_optimal_play
from ramsey_eps.oracles import brute_force_play
from ramsey_eps.selection import argmax_selection, at, constant_selection, finite_product

argmax = argmax_selection((0, 1))


def weighted(play):
    return 2 * at(play, 0) + at(play, 1)


ARGMAX_GAME = Game(lambda s: argmax, weighted, lambda a: 1)


def test_optimal_play_examples():
    assert optimal_play(ARGMAX_GAME) == (1, 1)
    assert optimal_play(Game(lambda s: constant_selection(0), weighted, lambda a: 2)) == (0, 0, 0)
    assert optimal_play(Game(lambda s: constant_selection(1), weighted, lambda a: 0)) == (1,)


def test_is_relevant():
    assert is_relevant((), lambda a: 0)
    assert not is_relevant((0,), lambda a: 0)
    assert is_relevant((0, 1), lambda a: 5)


def test_verify_accepts_optimal_play():
    report = verify_optimal_play(ARGMAX_GAME, optimal_play(ARGMAX_GAME))
    assert report.ok
    assert [c.n for c in report.checks] == [0, 1]


def test_verify_rejects_suboptimal_first_move():
    report = verify_optimal_play(ARGMAX_GAME, (0, 1))
    first = report.first_failure
    assert first.n == 0 and not first.move_ok
    # p(0) = 1 and p(1) = 3, so argmax plays 1
    assert first.continuation_values == {0: 1, 1: 3}
    assert first.expected_move == 1


def test_constant_family_first_equation():
    g = Game(lambda s: constant_selection(1), weighted, lambda a: 2)
    report = verify_optimal_play(g, (1, 1, 1, 0, 1))
    assert all(c.move_ok for c in report.checks)


def test_constant_control_matches_finite_product():
    g = Game(lambda s: argmax, lambda a: (at(a, 0) ^ at(a, 2)) + at(a, 1), lambda a: 2)
    assert optimal_play(g) == finite_product([argmax] * 3, g.outcome)


def test_brute_force_examples():
    assert brute_force_play(Game(lambda s: constant_selection(1), weighted, lambda a: 0), 1) == (1,)
    assert brute_force_play(ARGMAX_GAME, 2) == (1, 1)
