"""Grid certificates shared by `pgames verify` and the acceptance tests."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import jeopardy as jp
from . import kuhn as kp
from . import weakest_link as wl
from .matrix import CERT_TOL, TwoByTwoPayoffs, max_regret, solve_2x2


def solve_2x2_certificate(n_games: int = 10_000, seed: int = 0) -> float:
    """Worst max-regret of the closed form over random general-sum games."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for payoffs in rng.uniform(-1.0, 1.0, size=(n_games, 8)):
        p = TwoByTwoPayoffs(*payoffs)
        worst = max(worst, max_regret(p.to_game(), solve_2x2(p)))
    return worst


def jeopardy_grid_regret(steps: int = 21) -> float:
    """Worst advised-profile regret over the (p1, p2) grid."""
    grid = np.linspace(0.0, 1.0, steps)
    worst = 0.0
    for p1 in grid:
        for p2 in grid:
            worst = max(worst, jp.verify_equilibrium(jp.JeopardyParams(p1, p2)))
    return worst


def kuhn_threshold_chain(n: int) -> bool:
    """The ordering the equilibrium argument relies on: bluff cutoffs below
    call cutoffs below value cutoffs, in both players' trees.

    Terms naming card 0 are vacuous (cards run 1..n) and drop out of the
    chain, the same convention the strategy tables use for boundary mixes.
    """
    chains = [
        (math.ceil((n - 1) / 9), math.floor((n - 1) / 3),
         math.ceil((n - 1) / 3), math.floor((2 * n + 4) / 3)),
        (math.ceil((n - 1) / 6), math.floor((n - 1) / 3),
         math.ceil((n - 1) / 3), math.floor((n + 3) / 2)),
    ]
    for chain in chains:
        cards = [c for c in chain if c >= 1]
        if any(a > b for a, b in zip(cards, cards[1:])):
            return False
    return True


def kuhn_bluff_ratio(n: int) -> Fraction:
    """A's first-round bluff card-mass over bluff+value mass (exactly 1/4)."""
    strat_a, _ = kp.pdl_strategy(kp.KuhnSpec(n))
    lo = Fraction(n - 1, 9)
    bluff = sum(strat_a.bet_first[x - 1] for x in range(1, math.ceil(lo) + 1))
    total = sum(strat_a.bet_first)
    return Fraction(bluff) / Fraction(total)


def weakest_link_grid_checks(step: float = 0.05) -> dict[str, bool]:
    """The decision-rule invariants over the 0.05-step grid."""
    sign_ok = True
    w_inv_ok = True
    half_rule_ok = True
    gap_ok = True
    for params in wl._grid(step):
        d = wl.decide_vote_paper(params)
        # bank invariance; exact-tie cells may flip the tie convention under
        # rounding, so a cell only counts against invariance when the full
        # EV gap is resolvably nonzero at both scales
        scaled = wl.WLParams(params.w * 7.3, params.p1, params.p2, params.y1, params.y2)
        if wl.decide_vote_paper(scaled) != d:
            w_inv_ok = False
        if wl.decide_vote_full(scaled) != wl.decide_vote_full(params):
            gap = wl.ev_vote_full(wl.PLAYER1, params) - wl.ev_vote_full(wl.PLAYER2, params)
            if abs(gap) > 1e-12 * params.w:
                w_inv_ok = False
        # sign consistency with the normalized EVs where defined
        try:
            diff = wl.ev_vote_paper(wl.PLAYER1, params) - wl.ev_vote_paper(wl.PLAYER2, params)
            if (d == wl.PLAYER1 and diff < -1e-12) or (d == wl.PLAYER2 and diff > 1e-12):
                sign_ok = False
        except wl.DegenerateVotesError:
            pass
        # p2 <= p1/2 forces player2 away from the boundary y-faces
        if (params.p2 <= params.p1 / 2 and params.y1 < 1.0 and params.y2 > 0.0
                and d != wl.PLAYER2):
            half_rule_ok = False
        # full-oracle gap identity against the unnormalized split-vote EVs
        m1 = params.y1 * (1 - params.y2)
        m2 = params.y2 * (1 - params.y1)
        tie = wl.tie_ev(params)
        paper_diff = (m1 * tie + m2 * params.p1 * params.w) - (
            m1 * params.p2 * params.w + m2 * tie)
        full_diff = wl.ev_vote_full(wl.PLAYER2, params) - wl.ev_vote_full(wl.PLAYER1, params)
        extra = (1 - params.y1) * (1 - params.y2) * (params.p1 - params.p2) * params.w
        if abs(full_diff - (paper_diff + extra)) > 1e-12:
            gap_ok = False
    return {
        "sign_consistency": sign_ok,
        "w_invariance": w_inv_ok,
        "half_rule": half_rule_ok,
        "full_oracle_gap": gap_ok,
    }


def run_all(fast: bool = False, echo=print) -> bool:
    checks: list[tuple[str, bool, str]] = []

    worst = solve_2x2_certificate(1_000 if fast else 10_000)
    checks.append(("solve_2x2 certificate", worst <= CERT_TOL, f"max regret {worst:.3g}"))

    worst = jeopardy_grid_regret()
    checks.append(("jeopardy 21x21 grid", worst <= CERT_TOL, f"max regret {worst:.3g}"))

    wl_checks = weakest_link_grid_checks(0.1 if fast else 0.05)
    for name, ok in wl_checks.items():
        checks.append((f"weakest-link {name}", ok, ""))

    n_max = 12 if fast else 50
    chain = all(kuhn_threshold_chain(n) for n in range(3, n_max + 1))
    checks.append((f"kuhn threshold chain n<=%d" % n_max, chain, ""))
    ratios = all(kuhn_bluff_ratio(n) == Fraction(1, 4) for n in range(3, n_max + 1))
    checks.append((f"kuhn bluff ratio 1/4 n<=%d" % n_max, ratios, ""))

    alphas = (0, Fraction(1, 2), 1) if fast else (0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1)
    spec3 = kp.KuhnSpec(3)
    alpha_ok = True
    for alpha in alphas:
        sa, sb = kp.alpha_equilibrium(alpha)
        if kp.nashconv(spec3, sa, sb) != 0 or kp.expected_value(spec3, sa, sb) != Fraction(-1, 18):
            alpha_ok = False
    checks.append(("kuhn alpha family equilibrium", alpha_ok, "EV -1/18, NashConv 0"))

    all_ok = True
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        echo(f"[{status}] {name}{suffix}")
        all_ok &= ok
    return all_ok
