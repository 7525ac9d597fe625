"""Exact Nash equilibria of tiny games by support enumeration.

Used as ground truth in tests and to seed the sampling demonstrator.
Square support pairs only: each pair ``(S, T)`` with ``|S| == |T|``
gives two indifference systems that are solved exactly; singular
systems are skipped. Every pure equilibrium is found because 1x1
systems are never singular.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exceptions import DimensionError, NotSymmetricError
from .game import (
    ZERO,
    BimatrixGame,
    MixedStrategy,
    StrategyProfile,
    is_symmetric,
    payoffs,
    wsne_epsilon,
)

DEFAULT_MAX_N = 5


@dataclass(frozen=True)
class NeRecord:
    profile: StrategyProfile
    v: Fraction
    u: Fraction
    symmetric: bool


def _solve_square(A, b):
    """Gauss-Jordan over Fractions; ``None`` when ``A`` is singular."""
    n = len(A)
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def _indifferent_mix(payoff_rows, support, n):
    """Weights on ``support`` making every row of ``payoff_rows`` equal.

    Unknowns are the weights plus the common value; returns the full
    length-``n`` weight vector or ``None``.
    """
    k = len(support)
    A = [[row[j] for j in support] + [Fraction(-1)] for row in payoff_rows]
    A.append([Fraction(1)] * k + [ZERO])
    b = [ZERO] * k + [Fraction(1)]
    sol = _solve_square(A, b)
    if sol is None:
        return None
    w = sol[:k]
    if any(p < 0 for p in w):
        return None
    full = [ZERO] * n
    for j, p in zip(support, w):
        full[j] = p
    return tuple(full)


def support_enumeration_ne(game: BimatrixGame, max_n: int = DEFAULT_MAX_N) -> list[NeRecord]:
    n = game.n
    if n > max_n:
        raise DimensionError(f"oracle limited to n <= {max_n}, got {n}")
    C_cols = [tuple(game.C[i][j] for i in range(n)) for j in range(n)]
    seen = set()
    records = []
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            for T in combinations(range(n), k):
                # y makes the row player indifferent over S; x does the same
                # for the column player over T.
                y = _indifferent_mix([game.R[i] for i in S], T, n)
                if y is None:
                    continue
                x = _indifferent_mix([C_cols[j] for j in T], S, n)
                if x is None:
                    continue
                profile = StrategyProfile(MixedStrategy(x), MixedStrategy(y))
                key = (profile.row.weights, profile.col.weights)
                if key in seen:
                    continue
                if wsne_epsilon(game, profile).epsilon_ne != 0:
                    continue
                seen.add(key)
                v, u = payoffs(game, profile)
                records.append(NeRecord(profile, v, u, profile.row == profile.col))
    return records


def symmetric_ne(game: BimatrixGame, max_n: int = DEFAULT_MAX_N) -> list[NeRecord]:
    if not is_symmetric(game):
        raise NotSymmetricError("symmetric_ne needs C == R^T")
    return [r for r in support_enumeration_ne(game, max_n) if r.symmetric]
