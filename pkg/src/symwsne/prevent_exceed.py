"""Profiles that keep every pure response at or below a threshold."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import NotSymmetricError
from .game import (
    BimatrixGame,
    MixedStrategy,
    StrategyProfile,
    as_fraction,
    is_symmetric,
    prevents_exceeding,
)
from .simplex import EQ, LE, LinearSystem, solve_feasible


@dataclass(frozen=True)
class PeParams:
    v: Fraction
    u: Fraction

    def __post_init__(self):
        v, u = as_fraction(self.v), as_fraction(self.u)
        if not (0 <= v <= 1 and 0 <= u <= 1):
            raise ValueError("thresholds must lie in [0, 1]")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "u", u)


def build_pe(game: BimatrixGame, params: PeParams) -> LinearSystem:
    """Linear system over ``(x_0..x_{n-1}, y_0..y_{n-1})``.

    Constraint order: the two simplex equalities, then ``R[i] . y <= v``
    for each ``i``, then ``x . C[:, j] <= u`` for each ``j``.
    """
    n = game.n
    zeros = [0] * n
    system = LinearSystem(2 * n)
    system.add([1] * n + zeros, EQ, 1)
    system.add(zeros + [1] * n, EQ, 1)
    for R_i in game.R:
        system.add(zeros + list(R_i), LE, params.v)
    for C_j in zip(*game.C):
        system.add(list(C_j) + zeros, LE, params.u)
    return system


def solve_pe(game: BimatrixGame, params: PeParams) -> StrategyProfile | None:
    point = solve_feasible(build_pe(game, params))
    if point is None:
        return None
    n = game.n
    profile = StrategyProfile(MixedStrategy(point[:n]), MixedStrategy(point[n:]))
    assert prevents_exceeding(game, profile, params.v, params.u)
    return profile


def symmetric_pe(game: BimatrixGame, u) -> MixedStrategy | None:
    """Find ``x`` with ``R x <= u`` componentwise, if one exists.

    In a symmetric game ``x . C[:, j] == R[j] . x``, so ``(x, x)`` then
    prevents exceeding ``(u, u)``. ``None`` means no symmetric strategy
    prevents exceeding ``u``.
    """
    if not is_symmetric(game):
        raise NotSymmetricError("symmetric_pe needs C == R^T")
    u = as_fraction(u)
    n = game.n
    system = LinearSystem(n)
    system.add([1] * n, EQ, 1)
    for R_j in game.R:
        system.add(R_j, LE, u)
    point = solve_feasible(system)
    if point is None:
        return None
    x = MixedStrategy(point)
    assert prevents_exceeding(game, StrategyProfile(x, x), u, u)
    return x
