"""Two-phase solver for (1/2 + delta)-well-supported equilibria."""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import GuaranteeViolatedError, NotSymmetricError
from .game import (
    BimatrixGame,
    RegretReport,
    StrategyProfile,
    as_fraction,
    is_symmetric,
    wsne_epsilon,
)
from .prevent_exceed import symmetric_pe
from .well_support import DEFAULT_BUDGET, WsParams, kappa, search_ws

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class Path(str, enum.Enum):
    PE = "PE"
    WS = "WS"


@dataclass(frozen=True)
class Solution:
    profile: StrategyProfile
    path: Path
    certificate: RegretReport
    pairs_examined: int
    delta: Fraction
    kappa: int
    work: int = 0
    warnings: tuple[str, ...] = field(default=())

    @property
    def bound(self) -> Fraction:
        """The guaranteed well-support epsilon for this path."""
        return HALF if self.path is Path.PE else HALF + self.delta


def half_wsne(
    game: BimatrixGame,
    delta,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> Solution:
    """Compute a (1/2 + delta)-well-supported equilibrium of a symmetric game.

    First looks for ``x`` with every pure payoff against ``x`` at most
    1/2; ``(x, x)`` is then a 1/2-WSNE. Failing that, searches pairs of
    ``kappa(delta)``-uniform strategies that well support
    ``(1/2 - delta, 1/2 - delta)``.

    The game must be symmetric with payoffs in [0, 1]; see
    :func:`symwsne.game.normalize`. The returned certificate is
    recomputed from scratch and checked against the path's bound.

    Raises
    ------
    NotSymmetricError
        If ``C != R^T``.
    BudgetExceededError
        If the multiset search runs out of budget.
    GuaranteeViolatedError
        If the search exhausts every pair or a certificate breaks its
        bound. Neither can happen for valid input.
    """
    delta = as_fraction(delta)
    if not is_symmetric(game):
        raise NotSymmetricError("half_wsne needs a symmetric game")
    if not game.is_normalized():
        raise ValueError("payoffs must lie in [0, 1]; normalize the game first")
    k = kappa(delta)
    notes = []
    if delta >= HALF:
        notes.append(f"delta={delta} makes the 1/2+delta guarantee vacuous")

    x = symmetric_pe(game, HALF)
    if x is not None:
        profile = StrategyProfile(x, x)
        solution = Solution(profile, Path.PE, wsne_epsilon(game, profile), 0, delta, k,
                            warnings=tuple(notes))
    else:
        logger.info("no symmetric strategy prevents exceeding 1/2; searching kappa=%d", k)
        result = search_ws(game, WsParams(HALF, HALF, delta), jobs=jobs, budget=budget)
        if not result.found:
            raise GuaranteeViolatedError(
                f"no well-supporting pair among {result.stats.pairs_total} pairs"
            )
        solution = Solution(
            result.profile,
            Path.WS,
            wsne_epsilon(game, result.profile),
            result.stats.pairs_examined,
            delta,
            k,
            work=result.stats.work,
            warnings=tuple(notes),
        )

    if solution.certificate.epsilon_wsne > solution.bound:
        raise GuaranteeViolatedError(
            f"certificate {solution.certificate.epsilon_wsne} exceeds {solution.bound}"
        )
    return solution
