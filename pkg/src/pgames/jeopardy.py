"""Simplified two-player Final Jeopardy.

Fixed banks X1 = 5, X2 = 3; integer wagers; parameters (p1, p2) are the
probabilities that each player answers correctly.  Payoffs are +-0.5 for
a win/loss and 0 for a tie, so the game is zero-sum.

Both players' closed-form strategies ship as cheat-sheet files and are
evaluated through the PDL engine, so everything the advisor prints
round-trips through the text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .matrix import BimatrixGame, MixedStrategy, StrategyProfile, max_regret
from .pdl import PDL, evaluate_pdl, parse_pdl

X1 = 5  # player 1's bank
X2 = 3  # player 2's bank

P1_WAGERS = [f"wager{w}" for w in range(X1 + 1)]
P2_WAGERS = [f"wager{w}" for w in range(X2 + 1)]


@dataclass(frozen=True)
class JeopardyParams:
    p1: float
    p2: float

    def __post_init__(self):
        if not (0.0 <= self.p1 <= 1.0 and 0.0 <= self.p2 <= 1.0):
            raise ValueError(f"p1, p2 must be in [0,1], got ({self.p1}, {self.p2})")


def payoff_matrix(params: JeopardyParams) -> BimatrixGame:
    """6x4 zero-sum matrix of player 1's expected payoffs (rows = P1
    wagers 0..5, cols = P2 wagers 0..3), each entry a closed form in
    (p1, p2)."""
    p1, p2 = params.p1, params.p2
    m = p1 * p2  # recurring product
    u1 = np.array(
        [
            [0.5, 0.5, 0.5 - 0.5 * p2, 0.5 - p2],
            [0.5, 0.5 * m - 0.5 * p2 + 0.5, 0.5 - p2 + m, 0.5 + 0.5 * m - p2],
            [0.5 * p1, 0.5 - p2 + m, 0.5 - p2 + m, 0.5 - p2 + m],
            [p1 - 0.5, 0.5 * m + 0.5 * p1 - 0.5 * p2, 0.5 - p2 + m, 0.5 - p2 + m],
            [p1 - 0.5, p1 - 0.5, 0.5 * m + 0.5 * p1 - 0.5 * p2, 0.5 - p2 + m],
            [p1 - 0.5, p1 - 0.5, p1 - 0.5, 0.5 * m + 0.5 * p1 - 0.5 * p2],
        ]
    )
    return BimatrixGame.from_zero_sum(u1)


@lru_cache(maxsize=None)
def player_pdl(player: int) -> PDL:
    """The bundled cheat sheet for player 1 or 2, parsed once."""
    if player not in (1, 2):
        raise ValueError(f"player must be 1 or 2, got {player}")
    name = f"jeopardy_p{player}.pdl"
    text = resources.files("pgames.cheatsheets").joinpath(name).read_text()
    return parse_pdl(text)


def advise(player: int, params: JeopardyParams) -> tuple[dict[str, float], str]:
    """Wager distribution and matched branch ("1".."n" or "mixed")."""
    strategy, matched = evaluate_pdl(
        player_pdl(player), {"p1": params.p1, "p2": params.p2}
    )
    strategy = {a: w for a, w in strategy.items() if w > 0.0}
    branch = "mixed" if matched == "default" else str(matched)
    return strategy, branch


def equilibrium_case(params: JeopardyParams) -> str:
    """First matching case of the equilibrium case table."""
    p1, p2 = params.p1, params.p2
    if p2 == 0:
        return "(0,0)"
    if p1 == 0:
        return "(0,3)"
    if p1 == 1:
        return "(2,0)"
    if p1 >= 0.5 and p2 >= 0.5:
        return "(2,2)"
    if p1 < 0.5 and p2 >= 0.5:
        return "(2,3)"
    return "mixed"


def advised_profile(params: JeopardyParams) -> StrategyProfile:
    """Both players' advised strategies as full wager-probability vectors."""
    row = np.zeros(len(P1_WAGERS))
    col = np.zeros(len(P2_WAGERS))
    for weights, labels, vec in (
        (advise(1, params)[0], P1_WAGERS, row),
        (advise(2, params)[0], P2_WAGERS, col),
    ):
        for action, w in weights.items():
            vec[labels.index(action)] = w
    return StrategyProfile(MixedStrategy(row), MixedStrategy(col))


def verify_equilibrium(params: JeopardyParams) -> float:
    """Max regret of the advised profile in the payoff matrix."""
    return max_regret(payoff_matrix(params), advised_profile(params))
