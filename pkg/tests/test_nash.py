import random
from fractions import Fraction

import pytest

from lvreal import (
    BimatrixGame,
    StrategyPair,
    nash_2x2_family,
    nash_family_recover,
    nash_solve,
    nash_verify,
)


def test_family_closed_form():
    game, pair = nash_2x2_family(Fraction(1))
    assert pair.y[0] == Fraction(1, 2)
    game, pair = nash_2x2_family(Fraction(0))
    assert pair.y[0] == Fraction(1, 3)
    for a in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
        game, pair = nash_2x2_family(a)
        assert pair.x == (Fraction(1, 2), Fraction(1, 2))
        assert pair.y[0] == (1 + a) / (3 + a)
        assert nash_verify(game, pair)
        assert nash_family_recover(pair.y[0]) == a


def test_family_rejects_out_of_range():
    with pytest.raises(ValueError):
        nash_2x2_family(Fraction(3, 2))


def test_verify_rejects_non_equilibrium():
    game, _ = nash_2x2_family(Fraction(1, 2))
    bad = StrategyPair((Fraction(1), Fraction(0)), (Fraction(1), Fraction(0)))
    assert not nash_verify(game, bad)


def test_strategy_pair_invariants():
    with pytest.raises(ValueError):
        StrategyPair((Fraction(3, 2), Fraction(-1, 2)), (Fraction(1), Fraction(0)))
    with pytest.raises(ValueError):
        StrategyPair((Fraction(1, 2), Fraction(1, 4)), (Fraction(1), Fraction(0)))


def test_solver_reproduces_family_exactly():
    for a in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
        game, expected = nash_2x2_family(a)
        found = nash_solve(game)
        assert found is not None
        assert found.x == expected.x and found.y == expected.y


def test_solver_matching_pennies():
    game = BimatrixGame(
        ((Fraction(1), Fraction(-1)), (Fraction(-1), Fraction(1))),
        ((Fraction(-1), Fraction(1)), (Fraction(1), Fraction(-1))),
    )
    pair = nash_solve(game)
    assert pair.x == (Fraction(1, 2), Fraction(1, 2))
    assert pair.y == (Fraction(1, 2), Fraction(1, 2))


def test_solver_dominant_strategy_game():
    game = BimatrixGame(
        ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(0))),
        ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(0))),
    )
    pair = nash_solve(game)
    assert pair is not None
    rows, cols = pair.support()
    assert len(rows) == 1 and len(cols) == 1
    assert nash_verify(game, pair)


def test_solver_random_regression_corpus():
    rng = random.Random(1234)
    solved = 0
    for _ in range(40):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        game = BimatrixGame(
            tuple(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)) for _ in range(m)),
            tuple(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)) for _ in range(m)),
        )
        pair = nash_solve(game)
        if pair is not None:
            solved += 1
            assert nash_verify(game, pair)
            assert all(v >= 0 for v in pair.x + pair.y)
            assert sum(pair.x) == 1 and sum(pair.y) == 1
    # support enumeration covers every nondegenerate game; allow a few degenerates
    assert solved >= 36


def test_shape_mismatch_rejected():
    game, _ = nash_2x2_family(Fraction(1, 2))
    with pytest.raises(ValueError):
        nash_verify(game, StrategyPair((Fraction(1),), (Fraction(1), Fraction(0))))
    with pytest.raises(ValueError):
        BimatrixGame(((Fraction(1),),), ((Fraction(1), Fraction(2)),))
