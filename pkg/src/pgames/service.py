"""Stateless HTTP/JSON facade over the advisor operations.

Every handler is a pure function of the request body; responses for
identical bodies are identical.  Malformed JSON yields 400, out-of-range
parameters 422 with the offending field named, unknown routes 404.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Query
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, model_validator

from . import jeopardy as jp
from . import kuhn as kp
from . import weakest_link as wl
from .matrix import DegenerateGameError, TwoByTwoPayoffs, max_regret, solve_2x2
from .pdl import PdlError, evaluate_pdl, parse_pdl


class JeopardyRequest(BaseModel):
    p1: float = Field(ge=0.0, le=1.0)
    p2: float = Field(ge=0.0, le=1.0)
    player: int = Field(default=1, ge=1, le=2)


class WeakestLinkRequest(BaseModel):
    w: float = Field(gt=0.0)
    p1: float = Field(ge=0.0, le=1.0)
    p2: float = Field(ge=0.0, le=1.0)
    y1: float = Field(ge=0.0, le=1.0)
    y2: float = Field(ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _stronger_second(self):
        if not self.p1 > self.p2:
            raise ValueError("p1 must exceed p2 (player 2 is the stronger opponent)")
        return self


class PdlEvaluateRequest(BaseModel):
    pdl: str
    params: dict[str, float]


class Solve2x2Request(BaseModel):
    a: float
    b: float
    c: float
    d: float
    e: float
    f: float
    g: float
    h: float


def _strategy_list(weights: dict[str, float]) -> list[dict]:
    return [{"action": a, "prob": w} for a, w in weights.items()]


def create_app() -> FastAPI:
    app = FastAPI(title="pgames advisor", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(RequestValidationError)
    async def _validation(request, exc):
        errors = exc.errors()
        if any(e.get("type") == "json_invalid" for e in errors):
            return JSONResponse(status_code=400, content={"error": "malformed JSON"})
        fields = sorted(
            {
                ".".join(str(p) for p in e.get("loc", ()) if p not in ("body", "query"))
                or "body"
                for e in errors
            }
        )
        return JSONResponse(
            status_code=422,
            content={"error": "invalid parameter", "fields": fields},
        )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/advise/jeopardy")
    def advise_jeopardy(req: JeopardyRequest):
        params = jp.JeopardyParams(req.p1, req.p2)
        strategy, branch = jp.advise(req.player, params)
        return {
            "strategy": _strategy_list(strategy),
            "branch": branch,
            "case": jp.equilibrium_case(params),
        }

    @app.post("/advise/weakest-link")
    def advise_weakest_link(req: WeakestLinkRequest):
        params = wl.WLParams(req.w, req.p1, req.p2, req.y1, req.y2)
        out = {
            "paper_rule": wl.decide_vote_paper(params),
            "full_enumeration": wl.decide_vote_full(params),
            "ev_full": {
                "player1": wl.ev_vote_full(wl.PLAYER1, params),
                "player2": wl.ev_vote_full(wl.PLAYER2, params),
            },
            "tie_ev": wl.tie_ev(params),
            "vote_irrelevant": req.y1 == 1.0 and req.y2 == 1.0,
        }
        try:
            out["ev_paper"] = {
                "player1": wl.ev_vote_paper(wl.PLAYER1, params),
                "player2": wl.ev_vote_paper(wl.PLAYER2, params),
            }
        except wl.DegenerateVotesError:
            out["ev_paper"] = None
        return out

    @app.get("/kuhn/strategy")
    def kuhn_strategy(
        n: int = Query(ge=3, le=kp.DEFAULT_MAX_N),
        certify: bool = Query(default=False),
    ):
        spec = kp.KuhnSpec(n)
        strat_a, strat_b = kp.pdl_strategy(spec)
        out = {
            "n": n,
            "a_bet_first": [float(x) for x in strat_a.bet_first],
            "b_call_vs_bet": [float(x) for x in strat_b.call_vs_bet],
            "b_bet_vs_check": [float(x) for x in strat_b.bet_vs_check],
            "a_call_after_check_bet": [float(x) for x in strat_a.call_after_check_bet],
        }
        if certify:
            if n > 200:
                return JSONResponse(
                    status_code=422,
                    content={"error": "invalid parameter", "fields": ["n"],
                             "detail": "certification capped at n <= 200"},
                )
            out["nashconv"] = float(kp.nashconv(spec, strat_a, strat_b))
        return out

    @app.post("/pdl/evaluate")
    def pdl_evaluate(req: PdlEvaluateRequest):
        try:
            pdl = parse_pdl(req.pdl)
            strategy, matched = evaluate_pdl(pdl, req.params)
        except PdlError as exc:
            return JSONResponse(
                status_code=422,
                content={"error": "invalid parameter", "fields": ["pdl"],
                         "detail": str(exc)},
            )
        return {"strategy": _strategy_list(strategy), "matched_rule": matched}

    @app.post("/solve/2x2")
    def solve2x2(req: Solve2x2Request):
        payoffs = TwoByTwoPayoffs(req.a, req.b, req.c, req.d, req.e, req.f, req.g, req.h)
        try:
            profile = solve_2x2(payoffs)
        except DegenerateGameError as exc:
            return JSONResponse(
                status_code=422,
                content={"error": "invalid parameter", "fields": ["a..h"],
                         "detail": str(exc)},
            )
        return {
            "row": [float(x) for x in profile.row.probs],
            "col": [float(x) for x in profile.col.probs],
            "max_regret": max_regret(payoffs.to_game(), profile),
        }

    return app
