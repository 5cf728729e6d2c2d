"""Parametric decision lists: model, evaluation, text format."""

from .model import (
    PDL,
    BinOp,
    Comparison,
    DistributionError,
    EvalError,
    Expr,
    Func,
    ImplementabilityReport,
    Neg,
    Num,
    Param,
    ParamStrategy,
    PdlError,
    REST,
    Rule,
    build_nn_pdl,
    check_implementability,
    depth,
    evaluate_pdl,
    num,
    param,
    width,
)
from .textfmt import PdlSyntaxError, parse_pdl, render_pdl

__all__ = [
    "PDL",
    "BinOp",
    "Comparison",
    "DistributionError",
    "EvalError",
    "Expr",
    "Func",
    "ImplementabilityReport",
    "Neg",
    "Num",
    "Param",
    "ParamStrategy",
    "PdlError",
    "PdlSyntaxError",
    "REST",
    "Rule",
    "build_nn_pdl",
    "check_implementability",
    "depth",
    "evaluate_pdl",
    "num",
    "param",
    "parse_pdl",
    "render_pdl",
    "width",
]
