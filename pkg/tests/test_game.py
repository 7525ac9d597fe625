from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import e, game_and_profile, games, strategies_for, uniform
from symwsne.exceptions import DimensionError
from symwsne.game import (
    BimatrixGame,
    MixedStrategy,
    StrategyProfile,
    as_fraction,
    is_symmetric,
    normalize,
    payoffs,
    prevents_exceeding,
    pure_response_values,
    well_supports,
    wsne_epsilon,
)


class TestConstruction:
    def test_entries_become_fractions(self):
        g = BimatrixGame([[1, "1/2"], ["0.25", 0.1]], [[0, 0], [0, 0]])
        assert g.R == ((1, F(1, 2)), (F(1, 4), F(1, 10)))
        assert all(isinstance(v, F) for v in g.entries())

    def test_non_square_rejected(self):
        with pytest.raises(DimensionError):
            BimatrixGame([[1, 2]], [[1, 2]])

    def test_mismatched_sizes_rejected(self):
        with pytest.raises(DimensionError):
            BimatrixGame([[1]], [[1, 0], [0, 1]])

    @pytest.mark.parametrize("w", [(F(1, 2), F(1, 3)), (F(3, 2), F(-1, 2)), ()])
    def test_bad_strategies_rejected(self, w):
        with pytest.raises((ValueError, DimensionError)):
            MixedStrategy(w)

    def test_support(self):
        assert MixedStrategy((F(1, 2), 0, F(1, 2))).support == (0, 2)

    def test_scientific_notation_rejected(self):
        with pytest.raises(ValueError):
            as_fraction("1e-3")


class TestPayoffs:
    def test_all_ones(self, all_ones):
        p = StrategyProfile((F(1, 3), F(2, 3)), (1, 0))
        assert payoffs(all_ones, p) == (1, 1)

    def test_rps_uniform(self, rps):
        assert payoffs(rps, StrategyProfile(uniform(3), uniform(3))) == (F(1, 2), F(1, 2))

    def test_coordination_pure(self, coordination):
        assert payoffs(coordination, StrategyProfile(e(2, 0), e(2, 0))) == (1, 1)

    def test_dimension_mismatch(self, rps):
        with pytest.raises(DimensionError):
            payoffs(rps, StrategyProfile(uniform(2), uniform(2)))


class TestPureResponses:
    def test_all_zeros(self, all_zeros):
        rows, cols = pure_response_values(all_zeros, StrategyProfile(uniform(2), e(2, 1)))
        assert rows == (0, 0) and cols == (0, 0)

    def test_rps_uniform_column(self, rps):
        rows, _ = pure_response_values(rps, StrategyProfile(e(3, 0), uniform(3)))
        assert rows == (F(1, 2),) * 3

    def test_coordination_col_values(self, coordination):
        _, cols = pure_response_values(coordination, StrategyProfile(e(2, 0), uniform(2)))
        assert cols == (1, 0)


class TestWsneEpsilon:
    def test_pure_ne(self, coordination):
        assert wsne_epsilon(coordination, StrategyProfile(e(2, 0), e(2, 0))).epsilon_wsne == 0

    def test_miscoordination(self, coordination):
        rep = wsne_epsilon(coordination, StrategyProfile(e(2, 0), e(2, 1)))
        assert rep.epsilon_wsne == 1
        assert rep.row_wsne_regret == 1

    def test_rps_uniform(self, rps):
        rep = wsne_epsilon(rps, StrategyProfile(uniform(3), uniform(3)))
        assert rep.epsilon_wsne == 0 and rep.epsilon_ne == 0

    def test_wsne_is_strictly_stronger(self):
        # Mixed row strategy with one bad pure strategy: small NE regret,
        # large well-supported regret.
        g = BimatrixGame([[1, 1], [0, 0]], [[0, 0], [0, 0]])
        rep = wsne_epsilon(g, StrategyProfile((F(9, 10), F(1, 10)), e(2, 0)))
        assert rep.epsilon_ne == F(1, 10)
        assert rep.epsilon_wsne == 1


class TestSymmetricAndNormalize:
    def test_is_symmetric(self, rps):
        assert is_symmetric(BimatrixGame([[1, 0], [0, 1]], [[1, 0], [0, 1]]))
        assert is_symmetric(rps)
        assert not is_symmetric(BimatrixGame([[1, 1], [0, 0]], [[1, 1], [0, 0]]))

    def test_normalize_identity(self, coordination):
        g, shift, scale = normalize(coordination)
        assert g == coordination and shift == 0 and scale == 1

    def test_normalize_affine(self):
        g, shift, scale = normalize(BimatrixGame([[2, 4], [3, 3]], [[2, 4], [3, 3]]))
        assert (shift, scale) == (2, 2)
        assert g.R == ((0, 1), (F(1, 2), F(1, 2)))

    def test_normalize_constant(self):
        g, shift, scale = normalize(BimatrixGame([[5]], [[5]]))
        assert g.R == ((0,),) and (shift, scale) == (5, 1)


class TestPredicates:
    def test_prevents_exceeding_examples(self, rps, all_ones):
        u = StrategyProfile(uniform(3), uniform(3))
        assert prevents_exceeding(rps, u, F(1, 2), F(1, 2))
        assert not prevents_exceeding(all_ones, StrategyProfile(uniform(2), e(2, 0)), F(1, 2), F(1, 2))
        assert prevents_exceeding(rps, StrategyProfile(e(3, 0), e(3, 2)), 1, 1)

    def test_well_supports_examples(self, all_ones, rps, coordination):
        assert well_supports(all_ones, StrategyProfile(uniform(2), e(2, 1)), 1, 1)
        assert well_supports(rps, StrategyProfile(e(3, 1), uniform(3)), 0, 0)
        assert not well_supports(coordination, StrategyProfile(e(2, 0), e(2, 1)), F(1, 2), F(1, 2))


# -- properties -----------------------------------------------------------------

@given(game_and_profile())
def test_ne_regret_never_exceeds_wsne_regret(gp):
    g, p = gp
    rep = wsne_epsilon(g, p)
    assert 0 <= rep.epsilon_ne <= rep.epsilon_wsne <= 1


@given(game_and_profile())
def test_prevents_exceeding_implies_wsne(gp):
    g, p = gp
    rows, cols = pure_response_values(g, p)
    v, u = max(rows), max(cols)
    assert prevents_exceeding(g, p, v, u)
    assert wsne_epsilon(g, p).epsilon_wsne <= max(v, u)


@given(game_and_profile())
def test_well_supports_implies_wsne(gp):
    g, p = gp
    rows, cols = pure_response_values(g, p)
    v = min(rows[i] for i in p.row.support)
    u = min(cols[j] for j in p.col.support)
    assert well_supports(g, p, v, u)
    assert wsne_epsilon(g, p).epsilon_wsne <= 1 - min(v, u)


@given(game_and_profile(symmetric=True))
def test_symmetric_swap(gp):
    g, p = gp
    a = wsne_epsilon(g, p)
    b = wsne_epsilon(g, p.swapped())
    assert (a.row_wsne_regret, a.col_wsne_regret) == (b.col_wsne_regret, b.row_wsne_regret)
    assert (a.row_payoff, a.col_payoff) == (b.col_payoff, b.row_payoff)


@given(game_and_profile())
def test_normalization_preserves_best_responses(gp):
    g, p = gp
    # Stretch the game so normalization does real work.
    stretched = BimatrixGame(
        [[3 * v - 2 for v in row] for row in g.R], [[3 * v - 2 for v in row] for row in g.C]
    )
    ng, shift, scale = normalize(stretched)
    assert ng.is_normalized()
    rows_a, cols_a = pure_response_values(stretched, p)
    rows_b, cols_b = pure_response_values(ng, p)
    argmax = lambda vals: {i for i, v in enumerate(vals) if v == max(vals)}  # noqa: E731
    assert argmax(rows_a) == argmax(rows_b)
    assert argmax(cols_a) == argmax(cols_b)
    assert wsne_epsilon(ng, p).epsilon_wsne == wsne_epsilon(stretched, p).epsilon_wsne / scale


@settings(max_examples=50)
@given(games(symmetric=True).flatmap(lambda g: strategies_for(g.n).map(lambda x: (g, x))))
def test_symmetric_ne_chain(gx):
    # If R x <= x^T R x componentwise then (x, x) is exact and every
    # column response x . C[:, j] equals R[j] . x.
    g, x = gx
    p = StrategyProfile(x, x)
    rows, cols = pure_response_values(g, p)
    assert rows == cols
    value, _ = payoffs(g, p)
    if all(r <= value for r in rows):
        assert wsne_epsilon(g, p).epsilon_wsne == 0
