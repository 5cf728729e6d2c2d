"""Generalized Kuhn poker with an n-card deck.

Cards are 1..n, both players ante 1, the bet size is 1.  A acts first
(bet/check); facing a bet B calls or folds; after a check B bets or
checks and A then calls or folds.  Deals are ordered pairs without
replacement, uniform over the n(n-1) possibilities.

All expectations and best responses are computed in exact rational
arithmetic (fractions.Fraction), so equilibrium pins like EV = -1/18 at
n = 3 hold exactly rather than to a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .pdl import (
    PDL,
    BinOp,
    Comparison,
    Expr,
    Func,
    Num,
    Param,
    ParamStrategy,
    Rule,
    render_pdl,
)

DEFAULT_MAX_N = 10_000


@dataclass(frozen=True)
class KuhnSpec:
    n: int
    max_n: int = DEFAULT_MAX_N

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"deck size must be >= 3, got {self.n}")
        if self.n > self.max_n:
            raise ValueError(f"deck size {self.n} exceeds cap {self.max_n}")


@dataclass(frozen=True)
class BehavioralStrategy:
    """Per-card action probabilities; cards are 1-based, vectors length n.

    A-instances populate bet_first and call_after_check_bet; B-instances
    populate call_vs_bet and bet_vs_check.
    """

    bet_first: tuple[Fraction, ...] | None = None
    call_vs_bet: tuple[Fraction, ...] | None = None
    bet_vs_check: tuple[Fraction, ...] | None = None
    call_after_check_bet: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        for name in ("bet_first", "call_vs_bet", "bet_vs_check", "call_after_check_bet"):
            vec = getattr(self, name)
            if vec is None:
                continue
            vec = tuple(Fraction(x) for x in vec)
            object.__setattr__(self, name, vec)
            for prob in vec:
                if not 0 <= prob <= 1:
                    raise ValueError(f"{name} probability {prob} outside [0,1]")

    @classmethod
    def for_a(cls, bet_first, call_after_check_bet) -> "BehavioralStrategy":
        return cls(bet_first=tuple(bet_first), call_after_check_bet=tuple(call_after_check_bet))

    @classmethod
    def for_b(cls, call_vs_bet, bet_vs_check) -> "BehavioralStrategy":
        return cls(call_vs_bet=tuple(call_vs_bet), bet_vs_check=tuple(bet_vs_check))


def _frac(num: int, den: int) -> Fraction:
    return Fraction(num, den)


def _region_tables(n: int):
    """The four threshold tables of the closed-form strategy.

    Returns (bet_first, call_vs_bet, bet_vs_check, call_after_check_bet)
    as lists of Fractions indexed by card-1.  A computed mixing
    probability outside [0,1] indicates a transcription bug and raises.
    """

    def set_mix(vec, card, prob):
        # nonexistent boundary cards are skipped
        if 1 <= card <= n:
            if not 0 <= prob <= 1:
                raise ValueError(f"mixing probability {prob} for card {card} outside [0,1]")
            vec[card - 1] = prob

    zero = Fraction(0)
    one = Fraction(1)

    # A first round: bluff region below (n-1)/9, value region above (2n+4)/3
    ab = [zero] * n
    lo = _frac(n - 1, 9)
    hi = _frac(2 * n + 4, 3)
    for x in range(1, math.floor(lo) + 1):
        ab[x - 1] = one
    if n % 9 != 1:
        set_mix(ab, math.ceil(lo), lo - math.floor(lo))
    for x in range(math.ceil(hi), n + 1):
        ab[x - 1] = one
    if n % 3 != 1:
        set_mix(ab, math.floor(hi), math.ceil(hi) - hi)

    # B facing a bet: call at or above (n-1)/3
    bc = [zero] * n
    th = _frac(n - 1, 3)
    for y in range(math.ceil(th), n + 1):
        bc[y - 1] = one
    if n % 3 != 1:
        set_mix(bc, math.floor(th), math.ceil(th) - th)

    # B facing a check: bluff region below (n-1)/6, value region above (n+3)/2
    bb = [zero] * n
    lo = _frac(n - 1, 6)
    hi = _frac(n + 3, 2)
    for y in range(1, math.floor(lo) + 1):
        bb[y - 1] = one
    if n % 6 != 1:
        set_mix(bb, math.ceil(lo), lo - math.floor(lo))
    for y in range(math.ceil(hi), n + 1):
        bb[y - 1] = one
    if n % 2 != 1:
        set_mix(bb, math.floor(hi), math.ceil(hi) - hi)

    # A facing a bet after checking: call at or above (n+5)/3
    ac = [zero] * n
    th = _frac(n + 5, 3)
    for x in range(math.ceil(th), n + 1):
        ac[x - 1] = one
    if n % 3 != 1:
        set_mix(ac, math.floor(th), math.ceil(th) - th)

    return ab, bc, bb, ac


def pdl_strategy(spec: KuhnSpec) -> tuple[BehavioralStrategy, BehavioralStrategy]:
    """The closed-form threshold strategy for both players."""
    ab, bc, bb, ac = _region_tables(spec.n)
    return (
        BehavioralStrategy.for_a(ab, ac),
        BehavioralStrategy.for_b(bc, bb),
    )


def alpha_equilibrium(alpha) -> tuple[BehavioralStrategy, BehavioralStrategy]:
    """The one-parameter equilibrium family of the 3-card game."""
    a = Fraction(alpha)
    if not 0 <= a <= 1:
        raise ValueError(f"alpha must be in [0,1], got {alpha}")
    third = Fraction(1, 3)
    strat_a = BehavioralStrategy.for_a(
        bet_first=(a / 3, Fraction(0), a),
        call_after_check_bet=(Fraction(0), a / 3 + third, Fraction(1)),
    )
    strat_b = BehavioralStrategy.for_b(
        call_vs_bet=(Fraction(0), third, Fraction(1)),
        bet_vs_check=(third, Fraction(0), Fraction(1)),
    )
    return strat_a, strat_b


def _sign(x: int, y: int) -> int:
    return 1 if x > y else -1


def _deal_ev(x, y, ab, ac, bc, bb) -> Fraction:
    """A's expected payoff for the ordered deal (A=x, B=y)."""
    s = _sign(x, y)
    # A bets: B calls (showdown for 2) or folds (A wins 1)
    ev_bet = bc[y - 1] * (2 * s) + (1 - bc[y - 1]) * 1
    # A checks: B bets (A calls for 2 or folds for -1) or checks (showdown for 1)
    ev_vs_bet = ac[x - 1] * (2 * s) + (1 - ac[x - 1]) * (-1)
    ev_check = bb[y - 1] * ev_vs_bet + (1 - bb[y - 1]) * s
    return ab[x - 1] * ev_bet + (1 - ab[x - 1]) * ev_check


def expected_value(
    spec: KuhnSpec, strat_a: BehavioralStrategy, strat_b: BehavioralStrategy
) -> Fraction:
    """A's exact expected payoff (antes), enumerated over all ordered deals."""
    n = spec.n
    ab, ac = strat_a.bet_first, strat_a.call_after_check_bet
    bc, bb = strat_b.call_vs_bet, strat_b.bet_vs_check
    total = Fraction(0)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if x != y:
                total += _deal_ev(x, y, ab, ac, bc, bb)
    return total / (n * (n - 1))


def best_response(
    spec: KuhnSpec, player: str, opponent: BehavioralStrategy
) -> tuple[BehavioralStrategy, Fraction]:
    """Exact best response for one player against a fixed opponent.

    The value is from the responding player's perspective.  Ties between
    actions are broken toward the more aggressive action (bet/call).
    """
    n = spec.n
    if player == "A":
        bc, bb = opponent.call_vs_bet, opponent.bet_vs_check
        ab = [Fraction(0)] * n
        ac = [Fraction(0)] * n
        total = Fraction(0)
        for x in range(1, n + 1):
            ev_bet = Fraction(0)
            showdown = Fraction(0)
            call_sum = Fraction(0)
            fold_sum = Fraction(0)
            for y in range(1, n + 1):
                if y == x:
                    continue
                s = _sign(x, y)
                ev_bet += bc[y - 1] * (2 * s) + (1 - bc[y - 1]) * 1
                showdown += (1 - bb[y - 1]) * s
                call_sum += bb[y - 1] * (2 * s)
                fold_sum += bb[y - 1] * (-1)
            ac[x - 1] = Fraction(1) if call_sum >= fold_sum else Fraction(0)
            ev_check = showdown + max(call_sum, fold_sum)
            ab[x - 1] = Fraction(1) if ev_bet >= ev_check else Fraction(0)
            total += max(ev_bet, ev_check)
        return BehavioralStrategy.for_a(ab, ac), total / (n * (n - 1))

    if player == "B":
        ab, ac = opponent.bet_first, opponent.call_after_check_bet
        bc = [Fraction(0)] * n
        bb = [Fraction(0)] * n
        total = Fraction(0)
        for y in range(1, n + 1):
            call_sum = Fraction(0)
            fold_sum = Fraction(0)
            bet_sum = Fraction(0)
            check_sum = Fraction(0)
            for x in range(1, n + 1):
                if x == y:
                    continue
                s = _sign(y, x)  # B's sign
                call_sum += ab[x - 1] * (2 * s)
                fold_sum += ab[x - 1] * (-1)
                checked = 1 - ab[x - 1]
                bet_sum += checked * (ac[x - 1] * (2 * s) + (1 - ac[x - 1]) * 1)
                check_sum += checked * s
            bc[y - 1] = Fraction(1) if call_sum >= fold_sum else Fraction(0)
            bb[y - 1] = Fraction(1) if bet_sum >= check_sum else Fraction(0)
            total += max(call_sum, fold_sum) + max(bet_sum, check_sum)
        return BehavioralStrategy.for_b(bc, bb), total / (n * (n - 1))

    raise ValueError(f"player must be 'A' or 'B', got {player!r}")


def nashconv(
    spec: KuhnSpec, strat_a: BehavioralStrategy, strat_b: BehavioralStrategy
) -> Fraction:
    """Sum of both players' best-response values; 0 exactly at equilibrium."""
    _, value_a = best_response(spec, "A", strat_b)
    _, value_b = best_response(spec, "B", strat_a)
    return value_a + value_b


# ---------------------------------------------------------------------------
# Cheat-sheet export
# ---------------------------------------------------------------------------


def _ratio(num_expr: Expr, den: int) -> Expr:
    return BinOp("/", num_expr, Num(den))


def _card() -> Expr:
    return Param("card")


def _threshold_exprs(n: int, offset: int, den: int) -> tuple[Expr, Expr, Expr]:
    """(raw, floor, ceil) expressions of (n + offset) / den with n literal."""
    base = BinOp("+", Num(n), Num(offset)) if offset >= 0 else BinOp("-", Num(n), Num(-offset))
    raw = _ratio(base, den)
    return raw, Func("floor", raw), Func("ceil", raw)


def _upper_lower_pdl(n: int, lo_off: int, lo_den: int, hi_scale: int,
                     hi_off: int, hi_den: int, act: str, alt: str,
                     lo_guard: bool, hi_guard: bool) -> PDL:
    """Five-bullet region PDL: act below lo, act above hi, alt between."""
    raw_lo, floor_lo, ceil_lo = _threshold_exprs(n, lo_off, lo_den)
    hi_base = BinOp("+", BinOp("*", Num(hi_scale), Num(n)), Num(hi_off))
    raw_hi = _ratio(hi_base, hi_den)
    floor_hi, ceil_hi = Func("floor", raw_hi), Func("ceil", raw_hi)
    rules = [Rule((Comparison(_card(), "<=", floor_lo),), ParamStrategy.pure(act))]
    if lo_guard:
        mix = BinOp("-", raw_lo, floor_lo)
        rules.append(Rule((Comparison(_card(), "==", ceil_lo),),
                          ParamStrategy.of((act, mix), (alt, "rest"))))
    rules.append(Rule((Comparison(_card(), ">=", ceil_hi),), ParamStrategy.pure(act)))
    if hi_guard:
        mix = BinOp("-", ceil_hi, raw_hi)
        rules.append(Rule((Comparison(_card(), "==", floor_hi),),
                          ParamStrategy.of((act, mix), (alt, "rest"))))
    return PDL(("card",), tuple(rules), ParamStrategy.pure(alt))


def _threshold_pdl(n: int, off: int, den: int, act: str, alt: str, guard: bool) -> PDL:
    raw, floor_e, ceil_e = _threshold_exprs(n, off, den)
    rules = [Rule((Comparison(_card(), ">=", ceil_e),), ParamStrategy.pure(act))]
    if guard:
        mix = BinOp("-", ceil_e, raw)
        rules.append(Rule((Comparison(_card(), "==", floor_e),),
                          ParamStrategy.of((act, mix), (alt, "rest"))))
    return PDL(("card",), tuple(rules), ParamStrategy.pure(alt))


def export_cheatsheets(spec: KuhnSpec) -> dict[str, str]:
    """The four decision tables as cheat-sheet texts (parameter: card;
    the deck size is baked in as a literal)."""
    n = spec.n
    pdls = {
        "a_first_round": _upper_lower_pdl(
            n, -1, 9, 2, 4, 3, "bet", "check", n % 9 != 1, n % 3 != 1),
        "b_facing_bet": _threshold_pdl(n, -1, 3, "call", "fold", n % 3 != 1),
        "b_facing_check": _upper_lower_pdl(
            n, -1, 6, 1, 3, 2, "bet", "check", n % 6 != 1, n % 2 != 1),
        "a_facing_check_bet": _threshold_pdl(n, 5, 3, "call", "fold", n % 3 != 1),
    }
    return {name: render_pdl(p) for name, p in pdls.items()}
