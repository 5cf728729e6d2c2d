"""Sampling pipeline for 2x2 zero-sum games.

Draw random payoff vectors, solve each game once, answer queries by
nearest neighbor, and reproduce the exploitability-vs-k experiment,
plus the k-means clustering variant.

RNG contract: PCG64 (numpy default_rng) seeded through SeedSequence with
a fixed stream index, so the train stream (0), the test stream (1) and
the k-means stream (2) are all derived deterministically from the single
master seed and a run is bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .matrix import MixedStrategy, StrategyProfile

TRAIN_STREAM = 0
TEST_STREAM = 1
KMEANS_STREAM = 2


def _rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))


def sample_zs_games(
    t: int,
    seed: int,
    payoff_range: tuple[float, float] = (-1.0, 1.0),
    stream: int = TRAIN_STREAM,
) -> np.ndarray:
    """t i.i.d. uniform payoff vectors (a, c, e, g), shape (t, 4)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    low, high = payoff_range
    return _rng(seed, stream).uniform(low, high, size=(t, 4))


def nearest_index(train: np.ndarray, query: np.ndarray) -> int:
    """Index of the L2-nearest training vector; lowest index on exact ties."""
    train = np.asarray(train, dtype=np.float64)
    query = np.asarray(query, dtype=np.float64)
    if train.ndim != 2 or train.shape[0] == 0:
        raise ValueError("training set must be a non-empty 2-d array")
    if query.shape != (train.shape[1],):
        raise ValueError(
            f"query dimension {query.shape} does not match train {train.shape[1]}"
        )
    d = ((train - query) ** 2).sum(axis=1)
    return int(np.argmin(d))


@dataclass(frozen=True)
class SampleSet:
    """Sampled parameter vectors with their solved equilibrium strategies."""

    params: np.ndarray  # (t, 4) payoff vectors
    p: np.ndarray  # P(top row) per game
    q: np.ndarray  # P(left col) per game

    def __post_init__(self):
        if not (len(self.params) == len(self.p) == len(self.q)):
            raise ValueError("params and strategies must be index-aligned")

    def __len__(self):
        return len(self.params)

    @classmethod
    def solve(cls, games: np.ndarray) -> "SampleSet":
        p, q, _ = kernels.solve_zs_batch(games)
        return cls(np.asarray(games, dtype=np.float64), p, q)

    def profile(self, i: int) -> StrategyProfile:
        return StrategyProfile(
            MixedStrategy(np.array([self.p[i], 1.0 - self.p[i]])),
            MixedStrategy(np.array([self.q[i], 1.0 - self.q[i]])),
        )


@dataclass(frozen=True)
class ExperimentConfig:
    n_train: int
    k_values: tuple[int, ...]
    n_test: int
    seed: int
    payoff_range: tuple[float, float] = (-1.0, 1.0)

    def __post_init__(self):
        object.__setattr__(self, "k_values", tuple(int(k) for k in self.k_values))
        if self.n_train < 1 or self.n_test < 1 or not self.k_values:
            raise ValueError("n_train, n_test and k_values must be non-empty/positive")
        if list(self.k_values) != sorted(self.k_values):
            raise ValueError("k_values must be sorted ascending")
        if any(k < 1 or k > self.n_train for k in self.k_values):
            raise ValueError("every k must satisfy 1 <= k <= n_train")
        if not self.payoff_range[0] < self.payoff_range[1]:
            raise ValueError("payoff_range must be (low, high) with low < high")


@dataclass(frozen=True)
class ExperimentResult:
    """One row per k: (k, avg_exploitability, std_err, n_test, seed)."""

    rows: tuple[tuple[int, float, float, int, int], ...]

    CSV_HEADER = "k,avg_exploitability,std_err,n_test,seed"

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        for k, avg, se, n_test, seed in self.rows:
            lines.append(f"{k},{avg:.6g},{se:.6g},{n_test},{seed}")
        return "\n".join(lines) + "\n"

    def avg(self, k: int) -> float:
        for row in self.rows:
            if row[0] == k:
                return row[1]
        raise KeyError(k)


def _exploitability_matrix(config: ExperimentConfig) -> np.ndarray:
    """(len(k_values), n_test) per-test-game mean exploitabilities."""
    train = sample_zs_games(config.n_train, config.seed, config.payoff_range,
                            stream=TRAIN_STREAM)
    tests = sample_zs_games(config.n_test, config.seed, config.payoff_range,
                            stream=TEST_STREAM)
    p, q, _ = kernels.solve_zs_batch(train)
    _, _, vtest = kernels.solve_zs_batch(tests)
    ks = np.asarray(config.k_values, dtype=np.int64)
    return kernels.nn_exploitability(train, p, q, tests, vtest, ks)


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Exploitability-vs-k: for each k, the first k training games serve
    as the lookup table and fresh test games score their nearest
    neighbor's equilibrium (mean of both players' exploitabilities)."""
    expl = _exploitability_matrix(config)
    rows = []
    for ki, k in enumerate(config.k_values):
        col = expl[ki]
        avg = float(col.mean())
        se = float(col.std(ddof=1) / np.sqrt(len(col))) if len(col) > 1 else 0.0
        rows.append((int(k), avg, se, config.n_test, config.seed))
    return ExperimentResult(tuple(rows))


def convergence_study(
    t_values: list[int],
    seeds: list[int],
    n_test: int = 1000,
    payoff_range: tuple[float, float] = (-1.0, 1.0),
) -> list[tuple[int, float]]:
    """Mean exploitability per training-set size t, averaged over seeds."""
    if list(t_values) != sorted(t_values):
        raise ValueError("t_values must be ascending")
    out = []
    for t in t_values:
        means = []
        for seed in seeds:
            cfg = ExperimentConfig(t, (t,), n_test, seed, payoff_range)
            means.append(run_experiment(cfg).rows[0][1])
        out.append((t, float(np.mean(means))))
    return out


def kmeans_variant(
    samples: np.ndarray, k: int, max_iter: int = 100, seed: int = 0
) -> tuple[np.ndarray, np.ndarray]:
    """Lloyd's algorithm over the sampled parameter vectors.

    Empty clusters are re-seeded to the point farthest from its assigned
    mean.  Returns (means, assignments); strategies for lookup are then
    re-solved at the means with SampleSet.solve(means).
    """
    samples = np.asarray(samples, dtype=np.float64)
    t = samples.shape[0]
    if not 1 <= k <= t:
        raise ValueError(f"need 1 <= k <= {t}, got {k}")
    rng = _rng(seed, KMEANS_STREAM)
    means = samples[rng.choice(t, size=k, replace=False)].copy()
    assignments = np.zeros(t, dtype=np.int64)
    prev_wcss = np.inf
    for _ in range(max_iter):
        d = ((samples[:, None, :] - means[None, :, :]) ** 2).sum(axis=2)
        assignments = np.argmin(d, axis=1)
        wcss = float(d[np.arange(t), assignments].sum())
        for ci in range(k):
            members = samples[assignments == ci]
            if len(members) == 0:
                far = int(np.argmax(d[np.arange(t), assignments]))
                means[ci] = samples[far]
            else:
                means[ci] = members.mean(axis=0)
        if wcss >= prev_wcss - 1e-15:
            break
        prev_wcss = wcss
    return means, assignments
