"""Monte Carlo look at small-support strategies drawn from an equilibrium.

Drawing ``kappa(delta)`` pure strategies from each side of a Nash
equilibrium and taking the empirical distributions gives a profile
that, with positive probability, well supports ``(v* - delta,
u* - delta)``. :func:`demonstrate_existence` measures that probability
and reports it beside the Hoeffding and union-bound quantities.

Randomness comes from numpy's PCG64. Trial ``t`` under seed ``s`` uses
the stream ``PCG64(SeedSequence([s, t]))``, so trials are independent of
one another and of execution order.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .game import (
    BimatrixGame,
    MixedStrategy,
    StrategyProfile,
    as_fraction,
    payoffs,
    well_supports,
    wsne_epsilon,
)
from .well_support import kappa

RNG_NAME = "numpy PCG64, SeedSequence([seed, trial])"
_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class SampleConfig:
    delta: Fraction
    trials: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "delta", as_fraction(self.delta))
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SampleOutcome:
    trials: int
    successes: int
    first_success: StrategyProfile | None
    empirical_failure_rate: Fraction
    per_side_bound: float
    union_bound: float
    kappa: int
    # Samples breaking support containment or k-uniformity; always 0
    # unless the sampler itself is broken.
    support_violations: int = 0
    uniformity_violations: int = 0
    rng: str = RNG_NAME


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def _randbelow(rng: np.random.Generator, bound: int, size: int) -> list[int]:
    if bound <= _INT64_MAX:
        return [int(v) for v in rng.integers(0, bound, size=size)]
    nbytes = (bound.bit_length() + 7) // 8
    out = []
    while len(out) < size:
        v = int.from_bytes(rng.bytes(nbytes), "little") >> (8 * nbytes - bound.bit_length())
        if v < bound:
            out.append(v)
    return out


def sample_k_uniform(base: MixedStrategy, k: int, rng: np.random.Generator) -> MixedStrategy:
    """Empirical distribution of ``k`` i.i.d. draws from ``base``.

    Draws are exact: a uniform integer below the common denominator of
    the weights is mapped through the integer cumulative distribution.
    """
    if k < 1:
        raise ValueError("k must be positive")
    L = 1
    for p in base.weights:
        L = math.lcm(L, p.denominator)
    cumulative = []
    acc = 0
    for p in base.weights:
        acc += int(p * L)
        cumulative.append(acc)
    counts = [0] * base.n
    for r in _randbelow(rng, L, k):
        counts[bisect.bisect_right(cumulative, r)] += 1
    return MixedStrategy(tuple(Fraction(c, k) for c in counts))


def hoeffding_tail(delta, k: int) -> float:
    """``exp(-2 delta^2 k)``, evaluated at 40 digits and rounded once."""
    delta = as_fraction(delta)
    if delta <= 0 or k < 1:
        raise ValueError("need delta > 0 and k >= 1")
    z = 2 * delta * delta * k
    with mpmath.workdps(40):
        return float(mpmath.exp(-mpmath.mpf(z.numerator) / z.denominator))


def _mp(delta):
    if isinstance(delta, (Fraction, int, str)):
        d = as_fraction(delta)
        return mpmath.mpf(d.numerator) / d.denominator
    return mpmath.mpf(delta)


def union_bound_value(delta) -> float:
    """``2 delta^2 ln(1/delta)``; ``delta`` may be rational or real."""
    with mpmath.workdps(40):
        d = _mp(delta)
        if not 0 < d < 1:
            raise ValueError("delta must lie in (0, 1)")
        return float(2 * d * d * mpmath.log(1 / d))


def per_side_bound(delta) -> float:
    """``kappa * exp(-2 delta^2 kappa)`` with ``kappa = kappa(delta)``."""
    k = kappa(delta)
    return float(k * mpmath.mpf(hoeffding_tail(delta, k)))


def _is_k_uniform(s: MixedStrategy, k: int) -> bool:
    return all(k % p.denominator == 0 for p in s.weights)


def demonstrate_existence(
    game: BimatrixGame, ne: StrategyProfile, config: SampleConfig
) -> SampleOutcome:
    """Sample ``kappa``-uniform profiles around an exact equilibrium ``ne``.

    A trial succeeds when the sampled ``(X, Y)`` well supports
    ``(v* - delta, u* - delta)`` with ``(v*, u*)`` the payoffs of ``ne``.
    """
    if wsne_epsilon(game, ne).epsilon_ne != 0:
        raise ValueError("ne must be an exact Nash equilibrium")
    delta = config.delta
    k = kappa(delta)
    v, u = payoffs(game, ne)
    row_support = set(ne.row.support)
    col_support = set(ne.col.support)
    successes = 0
    first = None
    bad_support = bad_uniform = 0
    for t in range(config.trials):
        rng = trial_rng(config.seed, t)
        X = sample_k_uniform(ne.row, k, rng)
        Y = sample_k_uniform(ne.col, k, rng)
        if not (set(X.support) <= row_support and set(Y.support) <= col_support):
            bad_support += 1
        if not (_is_k_uniform(X, k) and _is_k_uniform(Y, k)):
            bad_uniform += 1
        profile = StrategyProfile(X, Y)
        if well_supports(game, profile, v - delta, u - delta):
            successes += 1
            if first is None:
                first = profile
    return SampleOutcome(
        trials=config.trials,
        successes=successes,
        first_success=first,
        empirical_failure_rate=Fraction(config.trials - successes, config.trials),
        per_side_bound=per_side_bound(delta),
        union_bound=union_bound_value(delta),
        kappa=k,
        support_violations=bad_support,
        uniformity_violations=bad_uniform,
    )
