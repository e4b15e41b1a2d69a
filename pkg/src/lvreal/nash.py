"""Exact bimatrix games: verification, the closed-form 2x2 family, and a
support-enumeration solver.

Conventions: A and B are m x n payoff matrices, the row player mixes over
rows (x, length m) and the column player over columns (y, length n); payoffs
are x^T A y and x^T B y.  All arithmetic is rational and all equilibrium
checks are exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .rdiv import rdiv

Matrix = tuple[tuple[Fraction, ...], ...]


def _to_matrix(rows: Sequence[Sequence]) -> Matrix:
    if not rows or not rows[0]:
        raise ValueError("matrices need at least one row and one column")
    width = len(rows[0])
    out = []
    for row in rows:
        if len(row) != width:
            raise ValueError("ragged matrix")
        out.append(tuple(Fraction(v) for v in row))
    return tuple(out)


@dataclass(frozen=True)
class BimatrixGame:
    a: Matrix
    b: Matrix

    def __post_init__(self):
        object.__setattr__(self, "a", _to_matrix(self.a))
        object.__setattr__(self, "b", _to_matrix(self.b))
        if len(self.a) != len(self.b) or len(self.a[0]) != len(self.b[0]):
            raise ValueError("payoff matrices must have identical shape")

    @property
    def rows(self) -> int:
        return len(self.a)

    @property
    def cols(self) -> int:
        return len(self.a[0])

    @staticmethod
    def from_json_dict(data: dict) -> "BimatrixGame":
        return BimatrixGame(
            tuple(tuple(Fraction(v) for v in row) for row in data["A"]),
            tuple(tuple(Fraction(v) for v in row) for row in data["B"]),
        )


@dataclass(frozen=True)
class StrategyPair:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    def __post_init__(self):
        x = tuple(Fraction(v) for v in self.x)
        y = tuple(Fraction(v) for v in self.y)
        for vec in (x, y):
            if not vec:
                raise ValueError("empty strategy vector")
            if any(v < 0 for v in vec):
                raise ValueError("mixed strategies must be nonnegative")
            if sum(vec) != 1:
                raise ValueError("mixed strategies must sum to exactly 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def support(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (
            tuple(i for i, v in enumerate(self.x) if v > 0),
            tuple(j for j, v in enumerate(self.y) if v > 0),
        )


def _mat_vec(m: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def _vec_mat(v: Sequence[Fraction], m: Matrix) -> list[Fraction]:
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def nash_verify(game: BimatrixGame, pair: StrategyPair) -> bool:
    """Exact best-response check against all pure deviations."""
    if len(pair.x) != game.rows or len(pair.y) != game.cols:
        raise ValueError("strategy shapes do not match the game")
    ay = _mat_vec(game.a, pair.y)
    row_payoff = sum(pair.x[i] * ay[i] for i in range(game.rows))
    if any(row_payoff < ay[i] for i in range(game.rows)):
        return False
    xb = _vec_mat(pair.x, game.b)
    col_payoff = sum(xb[j] * pair.y[j] for j in range(game.cols))
    return not any(col_payoff < xb[j] for j in range(game.cols))


def nash_2x2_family(a: Fraction) -> tuple[BimatrixGame, StrategyPair]:
    """The matching-pennies variant with payoff parameter a in [0, 1].

    Its unique equilibrium is x = (1/2, 1/2), y1 = (1+a)/(3+a), and the
    parameter round-trips as a = 2*y1/(1-y1) - 1.
    """
    a = Fraction(a)
    if not 0 <= a <= 1:
        raise ValueError("parameter must lie in [0, 1]")
    game = BimatrixGame(
        ((Fraction(1), Fraction(-1)), (Fraction(-1), a)),
        ((Fraction(-1), Fraction(1)), (Fraction(1), Fraction(-1))),
    )
    y1 = (1 + a) / (3 + a)
    pair = StrategyPair((Fraction(1, 2), Fraction(1, 2)), (y1, 1 - y1))
    return game, pair


def nash_family_recover(y1: Fraction) -> Fraction:
    return 2 * y1 / (1 - y1) - 1


def _null_vector(matrix: list[list[Fraction]], size: int) -> Optional[list[Fraction]]:
    """A nonzero solution of a (size-1) x size homogeneous system, or None.

    Plain Gaussian elimination; a rank drop means a degenerate support and is
    reported as None rather than perturbed.
    """
    rows = [row[:] for row in matrix]
    n_rows, n_cols = len(rows), size
    pivot_cols = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [vi - factor * vr for vi, vr in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivot_cols]
    if len(free) != 1:
        return None  # degenerate: no one-dimensional solution space
    solution = [Fraction(0)] * n_cols
    solution[free[0]] = Fraction(1)
    for row, c in zip(rows, pivot_cols):
        solution[c] = -row[free[0]]
    return solution


def _normalize_weights(weights: list[Fraction]) -> Optional[list[Fraction]]:
    """Scale a nonnegative weight vector to sum 1 via the guarded division.

    rdiv handles the degenerate all-zero vector gracefully (it returns zeros,
    which the caller rejects) instead of raising on division by zero.
    """
    if any(w < 0 for w in weights):
        if all(w <= 0 for w in weights):
            weights = [-w for w in weights]
        else:
            return None
    total = sum(weights)
    peak = max(max(weights), total, Fraction(1))
    scaled = [rdiv(w / peak, total / peak) for w in weights]
    if sum(scaled) != 1:
        return None  # total was zero
    return scaled


def nash_solve(game: BimatrixGame) -> Optional[StrategyPair]:
    """Support enumeration with exact rational elimination.

    Supports are tried in order of size, lexicographically within a size;
    equal row/column support sizes suffice for every nondegenerate game.  For
    each support the indifference system is solved exactly, weights are
    normalized by the guarded division, and the candidate must pass the full
    verification.  Returns None only if every support fails.
    """
    m, n = game.rows, game.cols
    for size in range(1, min(m, n) + 1):
        for rows_support in combinations(range(m), size):
            for cols_support in combinations(range(n), size):
                pair = _solve_support(game, rows_support, cols_support)
                if pair is not None and nash_verify(game, pair):
                    return pair
    return None


def _solve_support(
    game: BimatrixGame, rows_support: tuple[int, ...], cols_support: tuple[int, ...]
) -> Optional[StrategyPair]:
    size = len(rows_support)
    if size == 1:
        x = [Fraction(0)] * game.rows
        y = [Fraction(0)] * game.cols
        x[rows_support[0]] = Fraction(1)
        y[cols_support[0]] = Fraction(1)
        return StrategyPair(tuple(x), tuple(y))
    # column weights: the supported rows must be indifferent under A
    a_diffs = [
        [game.a[r1][c] - game.a[r2][c] for c in cols_support]
        for r1, r2 in zip(rows_support, rows_support[1:])
    ]
    y_weights = _null_vector(a_diffs, size)
    # row weights: the supported columns must be indifferent under B
    b_diffs = [
        [game.b[r][c1] - game.b[r][c2] for r in rows_support]
        for c1, c2 in zip(cols_support, cols_support[1:])
    ]
    x_weights = _null_vector(b_diffs, size)
    if y_weights is None or x_weights is None:
        return None
    y_norm = _normalize_weights(y_weights)
    x_norm = _normalize_weights(x_weights)
    if y_norm is None or x_norm is None:
        return None
    x = [Fraction(0)] * game.rows
    y = [Fraction(0)] * game.cols
    for idx, r in enumerate(rows_support):
        x[r] = x_norm[idx]
    for idx, c in enumerate(cols_support):
        y[c] = y_norm[idx]
    try:
        return StrategyPair(tuple(x), tuple(y))
    except ValueError:
        return None
