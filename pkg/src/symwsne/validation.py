"""Input coercion for the estimator front end."""
from __future__ import annotations

import numpy as np

from .exceptions import DimensionError, NotSymmetricError
from .game import BimatrixGame, MixedStrategy, StrategyProfile, as_fraction, is_symmetric


def check_game(X, *, symmetric: bool = False) -> BimatrixGame:
    """Coerce ``X`` to a :class:`BimatrixGame`.

    Accepts a game, a square matrix (read as ``R`` of the symmetric game
    ``(R, R^T)``), a pair ``(R, C)`` or an array of shape ``(2, n, n)``.
    Entries go through :func:`as_fraction`.
    """
    if isinstance(X, BimatrixGame):
        game = X
    elif isinstance(X, (tuple, list)) and len(X) == 2 and _is_matrix(X[0]) and _is_matrix(X[1]):
        game = BimatrixGame(_rows(X[0]), _rows(X[1]))
    else:
        arr = np.asarray(X, dtype=object)
        if arr.ndim == 2:
            game = BimatrixGame.symmetric(_rows(arr))
        elif arr.ndim == 3 and arr.shape[0] == 2:
            game = BimatrixGame(_rows(arr[0]), _rows(arr[1]))
        else:
            raise DimensionError(f"cannot read a game from shape {arr.shape}")
    if symmetric and not is_symmetric(game):
        raise NotSymmetricError("expected a symmetric game (C == R^T)")
    return game


def _is_matrix(M) -> bool:
    arr = np.asarray(M, dtype=object)
    return arr.ndim == 2 and arr.shape[0] == arr.shape[1]


def _rows(M):
    return tuple(tuple(as_fraction(v) for v in row) for row in np.asarray(M, dtype=object))


def check_profile(profile, n: int | None = None) -> StrategyProfile:
    if not isinstance(profile, StrategyProfile):
        row, col = profile
        profile = StrategyProfile(_strategy(row), _strategy(col))
    if n is not None and profile.row.n != n:
        raise DimensionError(f"profile has dimension {profile.row.n}, expected {n}")
    return profile


def _strategy(s) -> MixedStrategy:
    if isinstance(s, MixedStrategy):
        return s
    return MixedStrategy(tuple(as_fraction(v) for v in np.asarray(s, dtype=object).ravel()))


def check_delta(delta):
    delta = as_fraction(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    return delta
