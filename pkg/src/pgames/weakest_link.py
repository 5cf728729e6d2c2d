"""Weakest Link final-three voting model.

You face opponents 1 and 2 (player 2 the stronger: p1 > p2 head-to-head
win probabilities for you).  Each opponent votes for you with probability
y1 / y2.  Two decision rules are provided:

* the closed-form rule conditioning on the two split-vote cases only
  (``*_paper`` functions), and
* a brute-force oracle enumerating all four opponent vote profiles
  (``*_full``), including the profile where neither opponent votes for
  you, in which your vote is still pivotal.

``agreement_report`` quantifies where the two disagree; the library never
silently substitutes one for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

PLAYER1 = "player1"
PLAYER2 = "player2"


class DegenerateVotesError(ValueError):
    """y1 = y2 = 0 or y1 = y2 = 1: the split-vote case probabilities are 0/0."""


@dataclass(frozen=True)
class WLParams:
    w: float  # bank, currency units
    p1: float  # win probability vs player 1 (the weaker opponent)
    p2: float  # win probability vs player 2
    y1: float  # probability player 1 votes for you
    y2: float  # probability player 2 votes for you

    def __post_init__(self):
        for name in ("p1", "p2", "y1", "y2"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0,1], got {v}")
        if self.w <= 0:
            raise ValueError(f"bank W must be positive, got {self.w}")
        if not self.p1 > self.p2:
            raise ValueError(f"need p1 > p2 (player 2 stronger), got {self.p1} <= {self.p2}")


def tie_ev(params: WLParams) -> float:
    """Expected payoff of a three-way tie: W*(p1+p2)/3."""
    return params.w * (params.p1 + params.p2) / 3.0


def case_probs(params: WLParams) -> tuple[float, float]:
    """Normalized probabilities of the two split-vote cases.

    Case 1: P1 votes for you, P2 votes for P1.  Case 2: the reverse.
    """
    y1, y2 = params.y1, params.y2
    m1 = y1 * (1.0 - y2)
    m2 = y2 * (1.0 - y1)
    denom = m1 + m2
    if denom == 0.0:
        raise DegenerateVotesError(
            f"split-vote mass is zero at y1={y1}, y2={y2}; your vote is irrelevant "
            "under the split-vote rule, use the full-enumeration oracle"
        )
    return m1 / denom, m2 / denom


def ev_vote_paper(target: str, params: WLParams) -> float:
    """EV of a vote under the split-vote rule (normalized case probabilities)."""
    c1, c2 = case_probs(params)
    tie = tie_ev(params)
    if target == PLAYER1:
        return c1 * params.p2 * params.w + c2 * tie
    if target == PLAYER2:
        return c1 * tie + c2 * params.p1 * params.w
    raise ValueError(f"target must be {PLAYER1!r} or {PLAYER2!r}, got {target!r}")


def decide_vote_paper(params: WLParams) -> str:
    """Closed-form polynomial decision rule; player1 on exact ties.

    Total even where case_probs is degenerate, and invariant under
    scaling the bank.
    """
    p1, p2, y1, y2 = params.p1, params.p2, params.y1, params.y2
    lhs = 2 * y1 * p2 + y2 * p2 + 3 * y1 * y2 * p1
    rhs = 2 * y2 * p1 + y1 * p1 + 3 * y1 * y2 * p2
    return PLAYER1 if lhs >= rhs else PLAYER2


def ev_vote_full(target: str, params: WLParams) -> float:
    """EV of a vote enumerating all four opponent vote profiles.

    The both-vote-for-you profile contributes 0 (you are eliminated
    regardless of your vote).
    """
    w, p1, p2, y1, y2 = params.w, params.p1, params.p2, params.y1, params.y2
    tie = tie_ev(params)
    split1 = y1 * (1.0 - y2)  # P1 votes you, P2 votes P1
    split2 = (1.0 - y1) * y2  # P2 votes you, P1 votes P2
    neither = (1.0 - y1) * (1.0 - y2)  # your vote breaks the 1-1 opponent split
    if target == PLAYER1:
        return split1 * p2 * w + split2 * tie + neither * p2 * w
    if target == PLAYER2:
        return split1 * tie + split2 * p1 * w + neither * p1 * w
    raise ValueError(f"target must be {PLAYER1!r} or {PLAYER2!r}, got {target!r}")


def decide_vote_full(params: WLParams) -> str:
    """Argmax under the full oracle; player2 on ties (it faces the weaker field)."""
    ev1 = ev_vote_full(PLAYER1, params)
    ev2 = ev_vote_full(PLAYER2, params)
    return PLAYER1 if ev1 > ev2 else PLAYER2


@dataclass(frozen=True)
class AgreementReport:
    agreement: float
    n_cells: int
    disagreements: tuple[WLParams, ...]


def _grid(step: float) -> Iterator[WLParams]:
    ticks = [round(i * step, 10) for i in range(int(round(1.0 / step)) + 1)]
    for p1 in ticks:
        for p2 in ticks:
            if p2 >= p1:
                continue
            for y1 in ticks:
                for y2 in ticks:
                    yield WLParams(1.0, p1, p2, y1, y2)


def agreement_report(grid_step: float) -> AgreementReport:
    """Fraction of grid cells (p1 > p2) where both decision rules agree."""
    if not 0.0 < grid_step <= 0.5:
        raise ValueError(f"grid_step must be in (0, 0.5], got {grid_step}")
    cells = 0
    bad = []
    for params in _grid(grid_step):
        cells += 1
        if decide_vote_paper(params) != decide_vote_full(params):
            bad.append(params)
    return AgreementReport(1.0 - len(bad) / cells if cells else 1.0, cells, tuple(bad))
