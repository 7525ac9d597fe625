"""Games, strategies and exact equilibrium-quality predicates.

Every quantity here is a :class:`fractions.Fraction`; nothing is rounded.
Indices are 0-based throughout the Python API.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import DimensionError

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Strings may be integers, finite decimals (``"0.25"``) or ``"p/q"``.
    Floats are converted through their shortest repr, so ``0.1`` becomes
    ``1/10`` rather than its binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not payoffs")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, numbers.Real):
        f = float(value)
        if not math.isfinite(f):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(repr(f))
    if isinstance(value, str):
        text = value.strip()
        if not text or "e" in text.lower():
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def _matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    out = tuple(tuple(as_fraction(v) for v in row) for row in rows)
    return out


@dataclass(frozen=True)
class BimatrixGame:
    """Square two-player game ``(R, C)``.

    ``R[i][j]`` is the row player's payoff and ``C[i][j]`` the column
    player's payoff when row plays ``i`` and column plays ``j``.
    """

    R: tuple[tuple[Fraction, ...], ...]
    C: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        R = _matrix(self.R)
        C = _matrix(self.C)
        n = len(R)
        if n < 1:
            raise DimensionError("a game needs at least one pure strategy")
        for name, M in (("R", R), ("C", C)):
            if len(M) != n or any(len(row) != n for row in M):
                raise DimensionError(f"{name} must be {n}x{n}")
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "C", C)

    @classmethod
    def symmetric(cls, R) -> "BimatrixGame":
        """Build ``(R, R^T)``."""
        R = _matrix(R)
        return cls(R, tuple(zip(*R)))

    @property
    def n(self) -> int:
        return len(self.R)

    def entries(self) -> Iterable[Fraction]:
        for M in (self.R, self.C):
            for row in M:
                yield from row

    def is_normalized(self) -> bool:
        return all(ZERO <= e <= ONE for e in self.entries())


@dataclass(frozen=True)
class MixedStrategy:
    """Probability vector over pure strategies ``0..n-1``."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(as_fraction(v) for v in self.weights)
        if not w:
            raise DimensionError("empty strategy")
        if any(p < 0 for p in w):
            raise ValueError("negative probability in mixed strategy")
        if sum(w) != 1:
            raise ValueError(f"probabilities sum to {sum(w)}, not 1")
        object.__setattr__(self, "weights", w)

    @classmethod
    def pure(cls, n: int, i: int) -> "MixedStrategy":
        return cls(tuple(ONE if k == i else ZERO for k in range(n)))

    @classmethod
    def uniform(cls, n: int, support: Sequence[int] | None = None) -> "MixedStrategy":
        support = range(n) if support is None else support
        p = Fraction(1, len(support))
        s = set(support)
        return cls(tuple(p if k in s else ZERO for k in range(n)))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.weights) if p > 0)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


@dataclass(frozen=True)
class StrategyProfile:
    row: MixedStrategy
    col: MixedStrategy

    def __post_init__(self):
        if not isinstance(self.row, MixedStrategy):
            object.__setattr__(self, "row", MixedStrategy(tuple(self.row)))
        if not isinstance(self.col, MixedStrategy):
            object.__setattr__(self, "col", MixedStrategy(tuple(self.col)))
        if self.row.n != self.col.n:
            raise DimensionError("row and column strategies differ in length")

    def swapped(self) -> "StrategyProfile":
        return StrategyProfile(self.col, self.row)


@dataclass(frozen=True)
class RegretReport:
    """Certificate of equilibrium quality for one profile.

    ``epsilon_wsne`` is the smallest epsilon for which the profile is an
    epsilon-well-supported equilibrium; ``epsilon_ne`` is the same for
    the plain epsilon-Nash notion.
    """

    row_payoff: Fraction
    col_payoff: Fraction
    row_wsne_regret: Fraction
    col_wsne_regret: Fraction
    epsilon_wsne: Fraction
    epsilon_ne: Fraction


def _check_dims(game: BimatrixGame, profile: StrategyProfile) -> None:
    if profile.row.n != game.n or profile.col.n != game.n:
        raise DimensionError(
            f"profile has dimension {profile.row.n}, game has {game.n}"
        )


def _dot(a, b) -> Fraction:
    return sum((p * q for p, q in zip(a, b) if p and q), ZERO)


def pure_response_values(game: BimatrixGame, profile: StrategyProfile):
    """Payoff of every pure strategy against the opponent's mixture.

    Returns ``(row_values, col_values)`` with ``row_values[i] = R[i] . y``
    and ``col_values[j] = x . C[:, j]``.
    """
    _check_dims(game, profile)
    x, y = profile.row.weights, profile.col.weights
    row_values = tuple(_dot(R_i, y) for R_i in game.R)
    col_values = tuple(_dot(x, C_j) for C_j in zip(*game.C))
    return row_values, col_values


def payoffs(game: BimatrixGame, profile: StrategyProfile):
    """Expected payoffs ``(x^T R y, x^T C y)``."""
    _check_dims(game, profile)
    row_values, col_values = pure_response_values(game, profile)
    return _dot(profile.row.weights, row_values), _dot(profile.col.weights, col_values)


def wsne_epsilon(game: BimatrixGame, profile: StrategyProfile) -> RegretReport:
    row_values, col_values = pure_response_values(game, profile)
    v = _dot(profile.row.weights, row_values)
    u = _dot(profile.col.weights, col_values)
    best_row = max(row_values)
    best_col = max(col_values)
    row_regret = best_row - min(row_values[i] for i in profile.row.support)
    col_regret = best_col - min(col_values[j] for j in profile.col.support)
    return RegretReport(
        row_payoff=v,
        col_payoff=u,
        row_wsne_regret=row_regret,
        col_wsne_regret=col_regret,
        epsilon_wsne=max(row_regret, col_regret),
        epsilon_ne=max(best_row - v, best_col - u),
    )


def is_symmetric(game: BimatrixGame) -> bool:
    n = game.n
    return all(game.C[i][j] == game.R[j][i] for i in range(n) for j in range(n))


def normalize(game: BimatrixGame):
    """Affinely map all payoffs into ``[0, 1]``.

    Returns ``(game', shift, scale)`` with ``game' = (game - shift) / scale``.
    A constant game has no well-defined range; it maps to all zeros with
    ``scale = 1``.
    """
    entries = list(game.entries())
    lo, hi = min(entries), max(entries)
    scale = hi - lo if hi > lo else ONE
    if lo == 0 and scale == 1:
        return game, lo, scale

    def f(M):
        return tuple(tuple((e - lo) / scale for e in row) for row in M)

    return BimatrixGame(f(game.R), f(game.C)), lo, scale


def ensure_normalized(game: BimatrixGame):
    """Like :func:`normalize`, but leaves games already in ``[0, 1]`` alone.

    The 1/2 thresholds are meaningful for any ``[0, 1]`` game; rescaling
    one that already fits (say, the all-ones game) would change them.
    """
    if game.is_normalized():
        return game, ZERO, ONE
    return normalize(game)


def prevents_exceeding(game: BimatrixGame, profile: StrategyProfile, v, u) -> bool:
    """True iff no pure response earns the row player more than ``v`` or
    the column player more than ``u``."""
    v, u = as_fraction(v), as_fraction(u)
    row_values, col_values = pure_response_values(game, profile)
    return all(r <= v for r in row_values) and all(c <= u for c in col_values)


def well_supports(game: BimatrixGame, profile: StrategyProfile, v, u) -> bool:
    """True iff every supported pure strategy earns at least ``v`` (row)
    and ``u`` (column) against the opponent's mixture."""
    v, u = as_fraction(v), as_fraction(u)
    row_values, col_values = pure_response_values(game, profile)
    return all(row_values[i] >= v for i in profile.row.support) and all(
        col_values[j] >= u for j in profile.col.support
    )
