"""Parametric decision lists.

A PDL is an ordered list of rules, each a conjunction of comparisons over
a parameter vector, outputting a (possibly parameter-dependent) mixed
strategy, plus a default strategy.  Depth counts strategies (rules + 1),
width is the largest conjunction.

Evaluation is first-match: rules are tried in order and the first rule
whose conditions all hold wins.  Comparisons are exact on computed
doubles; there is no epsilon band, boundary behaviour is the weak/strict
operator itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union


class PdlError(Exception):
    """Base class for PDL construction/evaluation failures."""


class EvalError(PdlError):
    """Runtime evaluation failure (division by zero, missing parameter)."""


class DistributionError(PdlError):
    """Evaluated strategy weights do not form a probability distribution."""


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------

Env = dict[str, float]


@dataclass(frozen=True)
class Expr:
    def eval(self, env: Env) -> float:
        raise NotImplementedError

    def params(self) -> set[str]:
        raise NotImplementedError


@dataclass(frozen=True)
class Num(Expr):
    value: float

    def eval(self, env):
        return float(self.value)

    def params(self):
        return set()


@dataclass(frozen=True)
class Param(Expr):
    name: str

    def eval(self, env):
        try:
            return float(env[self.name])
        except KeyError:
            raise EvalError(f"missing parameter {self.name!r}") from None

    def params(self):
        return {self.name}


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr

    def eval(self, env):
        return -self.arg.eval(env)

    def params(self):
        return self.arg.params()


@dataclass(frozen=True)
class BinOp(Expr):
    op: str  # one of + - * /
    left: Expr
    right: Expr

    def eval(self, env):
        x = self.left.eval(env)
        y = self.right.eval(env)
        if self.op == "+":
            return x + y
        if self.op == "-":
            return x - y
        if self.op == "*":
            return x * y
        if self.op == "/":
            if y == 0.0:
                raise EvalError("division by zero")
            return x / y
        raise ValueError(f"unknown operator {self.op!r}")

    def params(self):
        return self.left.params() | self.right.params()


@dataclass(frozen=True)
class Func(Expr):
    """abs, floor or ceil of a subexpression."""

    name: str
    arg: Expr

    _TABLE = {"abs": abs, "floor": math.floor, "ceil": math.ceil}

    def eval(self, env):
        return float(self._TABLE[self.name](self.arg.eval(env)))

    def params(self):
        return self.arg.params()


def num(x: float) -> Num:
    return Num(float(x))


def param(name: str) -> Param:
    return Param(name)


# ---------------------------------------------------------------------------
# Comparisons and strategies
# ---------------------------------------------------------------------------

_CMP: dict[str, Callable[[float, float], bool]] = {
    "<": lambda x, y: x < y,
    "<=": lambda x, y: x <= y,
    ">": lambda x, y: x > y,
    ">=": lambda x, y: x >= y,
    "==": lambda x, y: x == y,
    "!=": lambda x, y: x != y,
}


@dataclass(frozen=True)
class Comparison:
    """lhs op rhs, semantically normalized to (lhs - rhs) op 0."""

    lhs: Expr
    op: str
    rhs: Expr

    def __post_init__(self):
        if self.op not in _CMP:
            raise PdlError(f"unknown comparison operator {self.op!r}")

    def holds(self, env: Env) -> bool:
        return _CMP[self.op](self.lhs.eval(env), self.rhs.eval(env))

    def params(self) -> set[str]:
        return self.lhs.params() | self.rhs.params()


REST = "rest"  # sentinel weight: 1 - sum of the other weights


@dataclass(frozen=True)
class ParamStrategy:
    """Ordered (action label, weight expression) pairs.

    At most one action may carry the REST sentinel, meaning one minus the
    sum of the other weights.  A bare action label is sugar for that
    action with weight 1.
    """

    entries: tuple[tuple[str, Union[Expr, str]], ...]

    def __post_init__(self):
        labels = [a for a, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise PdlError(f"duplicate action label in {labels}")
        if sum(1 for _, w in self.entries if w is REST or w == REST) > 1:
            raise PdlError("multiple 'rest' weights in one strategy")

    @classmethod
    def pure(cls, action: str) -> "ParamStrategy":
        return cls(((action, Num(1.0)),))

    @classmethod
    def of(cls, *pairs: tuple[str, Union[Expr, str]]) -> "ParamStrategy":
        return cls(tuple(pairs))

    def actions(self) -> list[str]:
        return [a for a, _ in self.entries]

    def params(self) -> set[str]:
        out: set[str] = set()
        for _, w in self.entries:
            if isinstance(w, Expr):
                out |= w.params()
        return out

    def eval(self, env: Env, tol: float = 1e-9) -> dict[str, float]:
        weights: dict[str, float] = {}
        rest_label = None
        for action, w in self.entries:
            if not isinstance(w, Expr):
                rest_label = action
            else:
                weights[action] = w.eval(env)
        total = sum(weights.values())
        if rest_label is not None:
            weights[rest_label] = 1.0 - total
            total = 1.0
        if abs(total - 1.0) > tol:
            raise DistributionError(f"weights sum to {total}, not 1: {weights}")
        for action, w in weights.items():
            if w < -tol or w > 1.0 + tol:
                raise DistributionError(f"weight {w} for {action!r} outside [0,1]")
        return weights


@dataclass(frozen=True)
class Rule:
    conditions: tuple[Comparison, ...]
    strategy: ParamStrategy


@dataclass(frozen=True)
class PDL:
    param_names: tuple[str, ...]
    rules: tuple[Rule, ...]
    default: ParamStrategy

    def __post_init__(self):
        declared = set(self.param_names)
        used: set[str] = self.default.params()
        for rule in self.rules:
            for cond in rule.conditions:
                used |= cond.params()
            used |= rule.strategy.params()
        undeclared = used - declared
        if undeclared:
            raise PdlError(f"undeclared parameters {sorted(undeclared)}")


def depth(pdl: PDL) -> int:
    """Number of strategies, rules plus the default."""
    return len(pdl.rules) + 1


def width(pdl: PDL) -> int:
    """Largest conjunction over the rules (the default contributes 0)."""
    return max((len(r.conditions) for r in pdl.rules), default=0)


def evaluate_pdl(
    pdl: PDL, assignment: Env
) -> tuple[dict[str, float], Union[int, str]]:
    """First-match evaluation.

    Returns the evaluated strategy (action -> probability) of the first
    rule whose conditions all hold, else the default, together with the
    1-based matched rule index or the string "default".
    """
    missing = [n for n in pdl.param_names if n not in assignment]
    if missing:
        raise EvalError(f"missing parameters {missing}")
    for i, rule in enumerate(pdl.rules, start=1):
        if all(c.holds(assignment) for c in rule.conditions):
            return rule.strategy.eval(assignment), i
    return pdl.default.eval(assignment), "default"


# ---------------------------------------------------------------------------
# Nearest-neighbor constructor
# ---------------------------------------------------------------------------


def _dist_expr(names: Sequence[str], point: Sequence[float]) -> Expr:
    """Distance from the parameter vector to a fixed sample point.

    One-dimensional points use abs(lambda - point); higher dimensions use
    the squared Euclidean distance, which induces the same ordering.
    """
    if len(names) == 1:
        return Func("abs", BinOp("-", Param(names[0]), num(point[0])))
    total: Expr | None = None
    for name, x in zip(names, point):
        diff = BinOp("-", Param(name), num(x))
        sq = BinOp("*", diff, diff)
        total = sq if total is None else BinOp("+", total, sq)
    assert total is not None
    return total


def build_nn_pdl(
    samples: Sequence[Sequence[float]],
    strategies: Sequence[ParamStrategy],
    param_names: Sequence[str] | None = None,
) -> PDL:
    """Nearest-sample lookup as a PDL.

    Rule j (j = 1..t-1) holds when sample j is no farther than any other
    sample; the last strategy is the default.  Weak inequalities plus
    rule order realize lowest-index tie-breaking, so the PDL agrees with
    a direct argmin lookup everywhere.
    """
    pts = [list(map(float, s)) for s in samples]
    t = len(pts)
    if t == 0:
        raise PdlError("need at least one sample")
    if len(strategies) != t:
        raise PdlError(f"{t} samples but {len(strategies)} strategies")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise PdlError("samples have inconsistent dimension")
    if param_names is None:
        param_names = ["lam"] if dim == 1 else [f"lam{i+1}" for i in range(dim)]
    names = tuple(param_names)
    if len(names) != dim:
        raise PdlError("param_names length does not match sample dimension")

    dists = [_dist_expr(names, p) for p in pts]
    rules = []
    for j in range(t - 1):
        conds = tuple(
            Comparison(BinOp("-", dists[i], dists[j]), ">=", num(0.0))
            for i in range(t)
            if i != j
        )
        rules.append(Rule(conds, strategies[j]))
    return PDL(names, tuple(rules), strategies[t - 1])


# ---------------------------------------------------------------------------
# Implementability check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ImplementabilityReport:
    depth: int
    width: int
    max_error: float


def check_implementability(
    pdl: PDL,
    game_family: Callable[[Env], tuple[float, Callable[[dict[str, float]], float]]],
    grid: Sequence[Env],
) -> ImplementabilityReport:
    """Worst-case objective gap of the PDL over a parameter grid.

    ``game_family(assignment)`` returns ``(optimal_value, evaluate)``
    where ``evaluate(strategy)`` scores a strategy (same units as the
    optimum).  The report carries (depth, width, max over the grid of
    optimal - achieved).
    """
    worst = 0.0
    for point in grid:
        try:
            optimal, evaluate = game_family(point)
            strategy, _ = evaluate_pdl(pdl, point)
            achieved = evaluate(strategy)
        except Exception as exc:
            raise PdlError(f"objective evaluation failed at {point}: {exc}") from exc
        worst = max(worst, optimal - achieved)
    return ImplementabilityReport(depth(pdl), width(pdl), worst)
