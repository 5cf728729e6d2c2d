"""Sampling pipeline: determinism, nearest neighbor, experiment, k-means."""

import numpy as np
import pytest

from pgames.matrix import max_regret, BimatrixGame
from pgames.sampling import (
    ExperimentConfig,
    SampleSet,
    TEST_STREAM,
    convergence_study,
    kmeans_variant,
    nearest_index,
    run_experiment,
    sample_zs_games,
)


class TestSampleGames:
    def test_empty(self):
        assert sample_zs_games(0, seed=3).shape == (0, 4)

    def test_deterministic_and_in_range(self):
        a = sample_zs_games(3, seed=7)
        b = sample_zs_games(3, seed=7)
        assert np.array_equal(a, b)
        assert a.shape == (3, 4)
        assert np.all((a >= -1.0) & (a <= 1.0))

    def test_streams_differ(self):
        train = sample_zs_games(5, seed=7)
        test = sample_zs_games(5, seed=7, stream=TEST_STREAM)
        assert not np.array_equal(train, test)

    def test_mean_near_zero_large_t(self):
        games = sample_zs_games(100_000, seed=42)
        assert np.all(np.abs(games.mean(axis=0)) < 0.01)

    def test_custom_range(self):
        games = sample_zs_games(100, seed=0, payoff_range=(0.0, 1.0))
        assert np.all((games >= 0.0) & (games <= 1.0))


class TestNearestIndex:
    def test_single_point(self):
        assert nearest_index(np.zeros((1, 4)), np.ones(4)) == 0

    def test_derived_lookup(self):
        train = np.array([[0, 0, 0, 0], [1, 1, 1, 1]], dtype=float)
        assert nearest_index(train, np.full(4, 0.9)) == 1

    def test_tie_lowest_index(self):
        train = np.zeros((2, 4))
        assert nearest_index(train, np.zeros(4)) == 0

    def test_errors(self):
        with pytest.raises(ValueError):
            nearest_index(np.zeros((0, 4)), np.zeros(4))
        with pytest.raises(ValueError):
            nearest_index(np.zeros((2, 4)), np.zeros(3))


class TestSampleSet:
    def test_solved_profiles_are_equilibria(self):
        games = sample_zs_games(200, seed=5)
        ss = SampleSet.solve(games)
        assert len(ss) == 200
        for i in range(0, 200, 17):
            a, c, e, g = games[i]
            game = BimatrixGame.from_zero_sum(np.array([[a, c], [e, g]]))
            assert max_regret(game, ss.profile(i)) <= 1e-9

    def test_misaligned_rejected(self):
        with pytest.raises(ValueError):
            SampleSet(np.zeros((2, 4)), np.zeros(2), np.zeros(3))


class TestExperimentConfig:
    def test_k_must_be_sorted(self):
        with pytest.raises(ValueError):
            ExperimentConfig(10, (5, 2), 10, 0)

    def test_k_bounded_by_n_train(self):
        with pytest.raises(ValueError):
            ExperimentConfig(10, (11,), 10, 0)

    def test_bad_range(self):
        with pytest.raises(ValueError):
            ExperimentConfig(10, (5,), 10, 0, (1.0, -1.0))


class TestRunExperiment:
    def test_csv_deterministic(self):
        cfg = ExperimentConfig(200, (1, 10, 200), 50, seed=3)
        csv1 = run_experiment(cfg).to_csv()
        csv2 = run_experiment(cfg).to_csv()
        assert csv1 == csv2
        lines = csv1.strip().split("\n")
        assert lines[0] == "k,avg_exploitability,std_err,n_test,seed"
        assert len(lines) == 4
        assert lines[1].startswith("1,") and lines[1].endswith(",50,3")

    def test_exploitabilities_bounded(self):
        cfg = ExperimentConfig(500, (1, 5, 50, 500), 200, seed=9)
        result = run_experiment(cfg)
        for _, avg, se, n_test, seed in result.rows:
            assert -1e-9 <= avg <= 2.0
            assert se >= 0.0
            assert (n_test, seed) == (200, 9)

    def test_self_lookup_is_exact(self):
        # one train game, one test game, drawn identically from the same stream
        games = sample_zs_games(1, seed=13)
        ss = SampleSet.solve(games)
        a, c, e, g = games[0]
        game = BimatrixGame.from_zero_sum(np.array([[a, c], [e, g]]))
        assert max_regret(game, ss.profile(0)) <= 1e-9

    def test_avg_accessor(self):
        cfg = ExperimentConfig(50, (1, 50), 20, seed=1)
        result = run_experiment(cfg)
        assert result.avg(50) == result.rows[1][1]
        with pytest.raises(KeyError):
            result.avg(2)

    def test_more_training_data_helps(self):
        cfg = ExperimentConfig(2000, (2, 2000), 400, seed=21)
        result = run_experiment(cfg)
        assert result.avg(2000) < result.avg(2)


class TestConvergenceStudy:
    def test_trend_over_seeds(self):
        table = convergence_study([1, 2000], seeds=list(range(5)), n_test=200)
        assert table[0][0] == 1 and table[1][0] == 2000
        assert table[1][1] < table[0][1]

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            convergence_study([10, 1], seeds=[0])

    def test_constant_family_zero_exploitability(self):
        # all-equal payoffs: every strategy is an equilibrium of every game
        for t in (1, 5):
            cfg = ExperimentConfig(t, (t,), 20, seed=0, payoff_range=(0.5, 0.5 + 1e-15))
            assert run_experiment(cfg).rows[0][1] <= 1e-9


class TestKmeans:
    def test_k1_is_mean(self):
        samples = sample_zs_games(100, seed=2)
        means, assignments = kmeans_variant(samples, 1)
        assert np.allclose(means[0], samples.mean(axis=0))
        assert np.all(assignments == 0)

    def test_k_equals_t(self):
        samples = sample_zs_games(8, seed=4)
        means, assignments = kmeans_variant(samples, 8)
        d = ((samples[:, None, :] - means[None, :, :]) ** 2).sum(axis=2)
        assert d[np.arange(8), assignments].sum() <= 1e-18

    def test_wcss_monotone(self):
        samples = sample_zs_games(1000, seed=6)

        def wcss(k, iters):
            means, assignments = kmeans_variant(samples, k, max_iter=iters, seed=0)
            d = ((samples - means[assignments]) ** 2).sum()
            return float(d)

        series = [wcss(10, i) for i in range(1, 8)]
        assert all(b <= a + 1e-9 for a, b in zip(series, series[1:]))

    def test_bad_k(self):
        with pytest.raises(ValueError):
            kmeans_variant(np.zeros((3, 4)), 4)
