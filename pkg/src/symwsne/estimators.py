"""scikit-learn style front end.

Each estimator takes its settings in ``__init__`` (so ``get_params`` /
``set_params`` and ``sklearn.base.clone`` work) and does its work in
``fit``, storing results in trailing-underscore attributes.
"""
from __future__ import annotations

from fractions import Fraction

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .algorithm import half_wsne
from .game import ensure_normalized, wsne_epsilon
from .oracle import DEFAULT_MAX_N, support_enumeration_ne, symmetric_ne
from .sampling import SampleConfig, demonstrate_existence
from .validation import check_delta, check_game, check_profile
from .well_support import DEFAULT_BUDGET


class HalfWsneSolver(BaseEstimator):
    """(1/2 + delta)-well-supported equilibrium of a symmetric game.

    Parameters
    ----------
    delta : rational in (0, 1), default=1/10
        Slack on top of 1/2. Small values make the fallback search
        expensive.
    jobs : int, default=1
        Worker processes for the fallback search.
    budget : int, default=10**8
        Cap on search nodes visited by the fallback search.
    normalize : bool, default=True
        Map payoffs affinely into [0, 1] before solving. Results are then
        in normalized units; ``shift_`` and ``scale_`` record the map.

    Attributes
    ----------
    solution_ : Solution
    profile_ : StrategyProfile
    path_ : Path
    certificate_ : RegretReport
    """

    def __init__(self, delta=Fraction(1, 10), jobs=1, budget=DEFAULT_BUDGET, normalize=True):
        self.delta = delta
        self.jobs = jobs
        self.budget = budget
        self.normalize = normalize

    def fit(self, X, y=None):
        game = check_game(X, symmetric=True)
        delta = check_delta(self.delta)
        if self.normalize:
            game, self.shift_, self.scale_ = ensure_normalized(game)
        else:
            self.shift_, self.scale_ = Fraction(0), Fraction(1)
        self.game_ = game
        self.n_strategies_ = game.n
        self.solution_ = half_wsne(game, delta, jobs=self.jobs, budget=self.budget)
        self.profile_ = self.solution_.profile
        self.path_ = self.solution_.path
        self.certificate_ = self.solution_.certificate
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).profile_

    def score(self, X=None, y=None):
        """Negated well-support epsilon of the fitted profile, as a float."""
        check_is_fitted(self, "solution_")
        game = self.game_ if X is None else ensure_normalized(check_game(X))[0]
        return -float(wsne_epsilon(game, self.profile_).epsilon_wsne)


class SupportEnumeration(BaseEstimator):
    """Exact equilibria of a small game (``n <= max_n``)."""

    def __init__(self, max_n=DEFAULT_MAX_N, symmetric_only=False):
        self.max_n = max_n
        self.symmetric_only = symmetric_only

    def fit(self, X, y=None):
        game = check_game(X, symmetric=self.symmetric_only)
        find = symmetric_ne if self.symmetric_only else support_enumeration_ne
        self.equilibria_ = find(game, self.max_n)
        return self


class ExistenceSampler(BaseEstimator):
    """Sample small-support profiles around an exact equilibrium.

    ``fit`` takes the game and, optionally, the equilibrium ``ne``; by
    default the first equilibrium found by support enumeration is used.
    The game is normalized first.
    """

    def __init__(self, delta=Fraction(1, 5), trials=1000, seed=0):
        self.delta = delta
        self.trials = trials
        self.seed = seed

    def fit(self, X, y=None, ne=None):
        game, _, _ = ensure_normalized(check_game(X))
        if ne is None:
            ne = support_enumeration_ne(game)[0].profile
        else:
            ne = check_profile(ne, game.n)
        self.ne_ = ne
        config = SampleConfig(check_delta(self.delta), self.trials, self.seed)
        self.outcome_ = demonstrate_existence(game, ne, config)
        return self
