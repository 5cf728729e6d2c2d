"""Finite two-player strategic-form games.

Utilities, best responses, regret, the closed-form 2x2 equilibrium and
zero-sum exploitability.  Everything here is scalar double-precision math;
the vectorized/batched versions used by the sampling experiment live in
``pgames.kernels``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: tolerance for algebraic identities (distribution sums, tie detection)
ALGEBRA_TOL = 1e-12
#: tolerance for regret / exploitability certificates
CERT_TOL = 1e-9


class DimensionError(ValueError):
    """Strategy or matrix dimensions do not match the game."""


class DegenerateGameError(ValueError):
    """The 2x2 closed form hit a zero denominator after all pure branches failed."""


@dataclass(frozen=True)
class MixedStrategy:
    """Probability vector over pure strategies."""

    probs: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=np.float64)
        object.__setattr__(self, "probs", p)
        if p.ndim != 1 or p.size == 0:
            raise DimensionError("strategy must be a non-empty vector")
        if np.any(p < -ALGEBRA_TOL):
            raise ValueError(f"negative probability in {p}")
        if abs(float(p.sum()) - 1.0) > ALGEBRA_TOL:
            raise ValueError(f"probabilities sum to {p.sum()}, not 1")

    def __len__(self):
        return self.probs.size


@dataclass(frozen=True)
class BimatrixGame:
    """Two-player strategic-form game with m x k payoff matrices per player."""

    u1: np.ndarray
    u2: np.ndarray
    zero_sum: bool = False

    def __post_init__(self):
        a = np.asarray(self.u1, dtype=np.float64)
        b = np.asarray(self.u2, dtype=np.float64)
        object.__setattr__(self, "u1", a)
        object.__setattr__(self, "u2", b)
        if a.ndim != 2 or a.shape != b.shape or min(a.shape) < 1:
            raise DimensionError(f"bad payoff shapes {a.shape} / {b.shape}")
        if self.zero_sum and not np.array_equal(b, -a):
            raise ValueError("zero_sum game requires u2 == -u1 exactly")

    @property
    def rows(self) -> int:
        return self.u1.shape[0]

    @property
    def cols(self) -> int:
        return self.u1.shape[1]

    @classmethod
    def from_zero_sum(cls, u1) -> "BimatrixGame":
        u1 = np.asarray(u1, dtype=np.float64)
        return cls(u1, -u1, zero_sum=True)


@dataclass(frozen=True)
class StrategyProfile:
    row: MixedStrategy
    col: MixedStrategy


@dataclass(frozen=True)
class TwoByTwoPayoffs:
    """Payoff parameters of the 2x2 matrix [[(a,b),(c,d)],[(e,f),(g,h)]].

    The zero-sum view fixes b=-a, d=-c, f=-e, h=-g.
    """

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float
    g: float
    h: float

    @classmethod
    def zero_sum(cls, a: float, c: float, e: float, g: float) -> "TwoByTwoPayoffs":
        return cls(a, -a, c, -c, e, -e, g, -g)

    def to_game(self) -> BimatrixGame:
        u1 = np.array([[self.a, self.c], [self.e, self.g]])
        u2 = np.array([[self.b, self.d], [self.f, self.h]])
        zs = bool(np.array_equal(u2, -u1))
        return BimatrixGame(u1, u2, zero_sum=zs)


def _check_profile(game: BimatrixGame, profile: StrategyProfile) -> None:
    if len(profile.row) != game.rows or len(profile.col) != game.cols:
        raise DimensionError(
            f"profile dims ({len(profile.row)},{len(profile.col)}) "
            f"vs game ({game.rows},{game.cols})"
        )


def expected_utility(game: BimatrixGame, profile: StrategyProfile) -> tuple[float, float]:
    """Bilinear expected payoff for (row, col)."""
    _check_profile(game, profile)
    r, c = profile.row.probs, profile.col.probs
    return float(r @ game.u1 @ c), float(r @ game.u2 @ c)


def best_response(
    game: BimatrixGame, player: str, opp: MixedStrategy
) -> tuple[float, set[int]]:
    """Best-response value and the set of all pure maximizers (1e-12 tie band)."""
    if player == "row":
        if len(opp) != game.cols:
            raise DimensionError("opponent strategy has wrong dimension")
        payoffs = game.u1 @ opp.probs
    elif player == "col":
        if len(opp) != game.rows:
            raise DimensionError("opponent strategy has wrong dimension")
        payoffs = opp.probs @ game.u2
    else:
        raise ValueError(f"player must be 'row' or 'col', got {player!r}")
    value = float(payoffs.max())
    brs = {int(i) for i in np.flatnonzero(payoffs >= value - ALGEBRA_TOL)}
    return value, brs


def max_regret(game: BimatrixGame, profile: StrategyProfile) -> float:
    """Max over players of (best-response value - realized value).

    Zero (to certificate tolerance) exactly when the profile is a Nash
    equilibrium; this is the epsilon-Nash certificate used throughout.
    """
    u1, u2 = expected_utility(game, profile)
    br_row, _ = best_response(game, "row", profile.col)
    br_col, _ = best_response(game, "col", profile.row)
    return max(br_row - u1, br_col - u2)


def pure(n: int, i: int) -> MixedStrategy:
    p = np.zeros(n)
    p[i] = 1.0
    return MixedStrategy(p)


def solve_2x2(p: TwoByTwoPayoffs) -> StrategyProfile:
    """Closed-form 2x2 general-sum equilibrium.

    Ordered branch list: the four pure-equilibrium conditions are tried
    first (first match wins), then the mixed indifference formulas
    p = (h-f)/(b-f+h-d), q = (g-c)/(a-c+g-e).
    """
    a, b, c, d, e, f, g, h = p.a, p.b, p.c, p.d, p.e, p.f, p.g, p.h
    if a >= e and b >= d:
        return StrategyProfile(pure(2, 0), pure(2, 0))
    if c >= g and d >= b:
        return StrategyProfile(pure(2, 0), pure(2, 1))
    if e >= a and f >= h:
        return StrategyProfile(pure(2, 1), pure(2, 0))
    if g >= c and h >= f:
        return StrategyProfile(pure(2, 1), pure(2, 1))
    dp = b - f + h - d
    dq = a - c + g - e
    if dp == 0.0 or dq == 0.0:
        raise DegenerateGameError(
            "mixed-branch denominator is 0 although no pure branch matched"
        )
    pr = (h - f) / dp
    q = (g - c) / dq
    return StrategyProfile(
        MixedStrategy(np.array([pr, 1.0 - pr])),
        MixedStrategy(np.array([q, 1.0 - q])),
    )


def zero_sum_value_2x2(a: float, c: float, e: float, g: float) -> float:
    """Row-player value of the zero-sum 2x2 game [[a,c],[e,g]]."""
    profile = solve_2x2(TwoByTwoPayoffs.zero_sum(a, c, e, g))
    game = BimatrixGame.from_zero_sum(np.array([[a, c], [e, g]]))
    return expected_utility(game, profile)[0]


def exploitability_zs(
    a: float, c: float, e: float, g: float, player: str, strategy: MixedStrategy
) -> float:
    """Game value minus the strategy's payoff against a nemesis (>= 0)."""
    game = BimatrixGame.from_zero_sum(np.array([[a, c], [e, g]]))
    v = zero_sum_value_2x2(a, c, e, g)
    if player == "row":
        # nemesis col minimizes the row payoff
        nemesis_value, _ = best_response(game, "col", strategy)
        return v - (-nemesis_value)
    if player == "col":
        nemesis_value, _ = best_response(game, "row", strategy)
        return (-v) - (-nemesis_value)
    raise ValueError(f"player must be 'row' or 'col', got {player!r}")
