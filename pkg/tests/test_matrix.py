"""Strategic-form games: utilities, best response, the 2x2 closed form."""

import numpy as np
import pytest

from pgames.matrix import (
    BimatrixGame,
    DegenerateGameError,
    DimensionError,
    MixedStrategy,
    StrategyProfile,
    TwoByTwoPayoffs,
    best_response,
    expected_utility,
    exploitability_zs,
    max_regret,
    pure,
    solve_2x2,
    zero_sum_value_2x2,
)

PENNIES = BimatrixGame.from_zero_sum(np.array([[1.0, -1.0], [-1.0, 1.0]]))
UNIFORM = MixedStrategy(np.array([0.5, 0.5]))


def profile(r, c):
    return StrategyProfile(MixedStrategy(np.asarray(r, float)),
                           MixedStrategy(np.asarray(c, float)))


class TestTypes:
    def test_mixed_strategy_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            MixedStrategy(np.array([0.5, 0.4]))

    def test_mixed_strategy_rejects_negative(self):
        with pytest.raises(ValueError):
            MixedStrategy(np.array([1.5, -0.5]))

    def test_empty_strategy_rejected(self):
        with pytest.raises(DimensionError):
            MixedStrategy(np.array([]))

    def test_zero_sum_flag_enforced(self):
        with pytest.raises(ValueError):
            BimatrixGame(np.eye(2), np.eye(2), zero_sum=True)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(DimensionError):
            BimatrixGame(np.zeros((2, 2)), np.zeros((2, 3)))

    def test_zero_sum_classmethod(self):
        p = TwoByTwoPayoffs.zero_sum(1.0, 2.0, 3.0, 4.0)
        assert (p.b, p.d, p.f, p.h) == (-1.0, -2.0, -3.0, -4.0)
        assert p.to_game().zero_sum


class TestExpectedUtility:
    def test_matching_pennies_uniform(self):
        assert expected_utility(PENNIES, StrategyProfile(UNIFORM, UNIFORM)) == (0.0, 0.0)

    def test_zero_sum_pair_sums_to_zero(self):
        rng = np.random.default_rng(0)
        game = BimatrixGame.from_zero_sum(rng.uniform(-1, 1, size=(3, 4)))
        r = rng.dirichlet(np.ones(3))
        c = rng.dirichlet(np.ones(4))
        u1, u2 = expected_utility(game, profile(r, c))
        assert abs(u1 + u2) <= 1e-12

    def test_derived_bilinear_value(self):
        game = BimatrixGame.from_zero_sum(np.array([[2.0, -1.0], [-1.0, 0.0]]))
        u1, _ = expected_utility(game, profile([0.25, 0.75], [0.25, 0.75]))
        assert u1 == pytest.approx(-0.25, abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            expected_utility(PENNIES, profile([1.0], [0.5, 0.5]))


class TestBestResponse:
    def test_dominance(self):
        value, brs = best_response(PENNIES, "row", pure(2, 0))
        assert value == 1.0 and brs == {0}

    def test_indifference_tie_set(self):
        game = BimatrixGame.from_zero_sum(np.array([[2.0, -1.0], [-1.0, 0.0]]))
        value, brs = best_response(game, "row", MixedStrategy(np.array([0.25, 0.75])))
        assert value == pytest.approx(-0.25, abs=1e-12)
        assert brs == {0, 1}

    def test_dominates_any_fixed_strategy(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            game = BimatrixGame.from_zero_sum(rng.uniform(-1, 1, size=(3, 3)))
            opp = MixedStrategy(rng.dirichlet(np.ones(3)))
            own = MixedStrategy(rng.dirichlet(np.ones(3)))
            value, _ = best_response(game, "row", opp)
            u1, _ = expected_utility(game, StrategyProfile(own, opp))
            assert value >= u1 - 1e-12

    def test_bad_player_name(self):
        with pytest.raises(ValueError):
            best_response(PENNIES, "diagonal", UNIFORM)


class TestMaxRegret:
    def test_equilibrium_zero(self):
        assert max_regret(PENNIES, StrategyProfile(UNIFORM, UNIFORM)) <= 1e-12

    def test_pure_profile_regret(self):
        assert max_regret(PENNIES, profile([1, 0], [1, 0])) == pytest.approx(2.0)

    def test_pure_equilibrium_battle(self):
        game = BimatrixGame(np.array([[2.0, 0.0], [0.0, 1.0]]),
                            np.array([[1.0, 0.0], [0.0, 2.0]]))
        assert max_regret(game, profile([1, 0], [1, 0])) <= 1e-12


class TestSolve2x2:
    def test_matching_pennies(self):
        p = solve_2x2(TwoByTwoPayoffs.zero_sum(1.0, -1.0, -1.0, 1.0))
        assert np.allclose(p.row.probs, [0.5, 0.5])
        assert np.allclose(p.col.probs, [0.5, 0.5])

    def test_pure_branch_battle(self):
        p = solve_2x2(TwoByTwoPayoffs(2, 1, 0, 0, 0, 0, 1, 2))
        assert np.allclose(p.row.probs, [1, 0])
        assert np.allclose(p.col.probs, [1, 0])

    def test_derived_mixed_zero_sum(self):
        p = solve_2x2(TwoByTwoPayoffs.zero_sum(2.0, -1.0, -1.0, 0.0))
        assert np.allclose(p.row.probs, [0.25, 0.75])
        assert np.allclose(p.col.probs, [0.25, 0.75])

    def test_branch_order_first_match_wins(self):
        # both (1,1) and (2,2) conditions hold; the first branch is returned
        p = solve_2x2(TwoByTwoPayoffs(0, 0, 0, 0, 0, 0, 0, 0))
        assert np.allclose(p.row.probs, [1, 0])
        assert np.allclose(p.col.probs, [1, 0])

    def test_certificate_random_games(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            payoffs = TwoByTwoPayoffs(*rng.uniform(-1, 1, size=8))
            assert max_regret(payoffs.to_game(), solve_2x2(payoffs)) <= 1e-9

    def test_mixed_branch_denominators_never_vanish(self):
        # for finite payoffs, whenever all pure branches fail the two
        # indifference denominators are strictly signed, so the
        # degenerate-input guard is purely defensive
        assert issubclass(DegenerateGameError, ValueError)
        rng = np.random.default_rng(8)
        for _ in range(500):
            p = TwoByTwoPayoffs(*rng.uniform(-1, 1, size=8))
            solve_2x2(p)  # must never raise on finite input


class TestZeroSumValue:
    def test_matching_pennies(self):
        assert zero_sum_value_2x2(1, -1, -1, 1) == 0.0

    def test_derived_mixed(self):
        assert zero_sum_value_2x2(2, -1, -1, 0) == pytest.approx(-0.25, abs=1e-12)

    def test_dominated_constant_column(self):
        assert zero_sum_value_2x2(1, 1, 0, 0) == 1.0


class TestExploitability:
    def test_equilibrium_strategy(self):
        assert exploitability_zs(1, -1, -1, 1, "row", UNIFORM) <= 1e-12

    def test_pure_row_pennies(self):
        assert exploitability_zs(1, -1, -1, 1, "row", pure(2, 0)) == pytest.approx(1.0)

    def test_derived_partial_mix(self):
        s = MixedStrategy(np.array([0.75, 0.25]))
        assert exploitability_zs(1, -1, -1, 1, "row", s) == pytest.approx(0.5)

    def test_nonnegative_random(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            a, c, e, g = rng.uniform(-1, 1, size=4)
            s = MixedStrategy(rng.dirichlet(np.ones(2)))
            for player in ("row", "col"):
                assert exploitability_zs(a, c, e, g, player, s) >= -1e-12


class TestPerturbationLemmas:
    """Payoff, nemesis and value continuity plus equilibrium transfer."""

    @staticmethod
    def perturbed_pair(rng):
        eps = rng.uniform(1e-6, 0.2)
        base = rng.uniform(-1, 1, size=4)
        other = base + rng.uniform(-eps, eps, size=4)
        return base, other, eps

    def test_payoff_continuity(self):
        rng = np.random.default_rng(3)
        for _ in range(300):
            base, other, eps = self.perturbed_pair(rng)
            g1 = BimatrixGame.from_zero_sum(base.reshape(2, 2))
            g2 = BimatrixGame.from_zero_sum(other.reshape(2, 2))
            prof = profile(rng.dirichlet(np.ones(2)), rng.dirichlet(np.ones(2)))
            u1a, _ = expected_utility(g1, prof)
            u1b, _ = expected_utility(g2, prof)
            assert abs(u1a - u1b) <= eps + 1e-12

    def test_nemesis_continuity(self):
        rng = np.random.default_rng(4)
        for _ in range(300):
            base, other, eps = self.perturbed_pair(rng)
            g1 = BimatrixGame.from_zero_sum(base.reshape(2, 2))
            g2 = BimatrixGame.from_zero_sum(other.reshape(2, 2))
            s = MixedStrategy(rng.dirichlet(np.ones(2)))
            n1, _ = best_response(g1, "col", s)
            n2, _ = best_response(g2, "col", s)
            assert abs(n1 - n2) <= eps + 1e-12

    def test_value_continuity(self):
        rng = np.random.default_rng(5)
        for _ in range(300):
            base, other, eps = self.perturbed_pair(rng)
            v1 = zero_sum_value_2x2(*base)
            v2 = zero_sum_value_2x2(*other)
            assert abs(v1 - v2) <= eps + 1e-12

    def test_equilibrium_transfer(self):
        rng = np.random.default_rng(6)
        for _ in range(300):
            base, other, eps = self.perturbed_pair(rng)
            prof = solve_2x2(TwoByTwoPayoffs.zero_sum(*base))
            assert exploitability_zs(*other, "row", prof.row) <= 2 * eps + 1e-9
            assert exploitability_zs(*other, "col", prof.col) <= 2 * eps + 1e-9
