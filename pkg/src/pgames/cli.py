"""Command-line entry point.

One subcommand per artifact: solve2x2, jeopardy, kuhn, weakest-link,
sample, pdl (eval/check/render), verify, serve.  Exit codes: 0 success,
1 domain error, 2 usage error.  Output is deterministic text keyed
`name: value`; numbers print with 6 significant digits by default.
"""

from __future__ import annotations

import os
import sys

import click

from . import jeopardy as jp
from . import kuhn as kp
from . import weakest_link as wl
from .matrix import (
    DegenerateGameError,
    TwoByTwoPayoffs,
    max_regret,
    solve_2x2,
)
from .pdl import PdlError, depth, evaluate_pdl, parse_pdl, render_pdl, width
from .sampling import ExperimentConfig, run_experiment


def _prob(ctx, param, value):
    if value is not None and not 0.0 <= value <= 1.0:
        raise click.BadParameter(f"{param.name} must be in [0,1], got {value}")
    return value


def _default_seed() -> int:
    return int(os.environ.get("PGAMES_SEED", "0"))


class _Fmt:
    def __init__(self, precision: int):
        self.precision = precision

    def __call__(self, x: float) -> str:
        return format(float(x), f".{self.precision}g")

    def dist(self, weights: dict[str, float]) -> str:
        inner = ", ".join(f"{a}: {self(w)}" for a, w in weights.items())
        return "{" + inner + "}"


precision_option = click.option(
    "--precision", type=int, default=6, show_default=True,
    help="significant digits for printed numbers")


@click.group()
def main():
    """Solver, verifier and real-time advisor for parametrized games."""


@main.command()
@click.option("--a", type=float, required=True)
@click.option("--b", type=float)
@click.option("--c", type=float, required=True)
@click.option("--d", type=float)
@click.option("--e", type=float, required=True)
@click.option("--f", type=float)
@click.option("--g", type=float, required=True)
@click.option("--h", type=float)
@precision_option
def solve2x2(a, b, c, d, e, f, g, h, precision):
    """Closed-form 2x2 equilibrium.

    Give all eight payoffs (a..h) for a general-sum game, or only
    (a, c, e, g) for the zero-sum view b=-a, d=-c, f=-e, h=-g.
    """
    fmt = _Fmt(precision)
    given = [b, d, f, h]
    if all(v is None for v in given):
        payoffs = TwoByTwoPayoffs.zero_sum(a, c, e, g)
    elif any(v is None for v in given):
        raise click.UsageError("give either none or all of --b --d --f --h")
    else:
        payoffs = TwoByTwoPayoffs(a, b, c, d, e, f, g, h)
    try:
        profile = solve_2x2(payoffs)
    except DegenerateGameError as exc:
        raise click.ClickException(str(exc))
    regret = max_regret(payoffs.to_game(), profile)
    click.echo(f"row: ({fmt(profile.row.probs[0])}, {fmt(profile.row.probs[1])})")
    click.echo(f"col: ({fmt(profile.col.probs[0])}, {fmt(profile.col.probs[1])})")
    click.echo(f"max_regret: {fmt(regret)}")


@main.command()
@click.option("--p1", type=float, required=True, callback=_prob)
@click.option("--p2", type=float, required=True, callback=_prob)
@click.option("--player", type=click.Choice(["1", "2"]), default="1", show_default=True)
@precision_option
def jeopardy(p1, p2, player, precision):
    """Final Jeopardy wager advice for the given answer probabilities."""
    fmt = _Fmt(precision)
    params = jp.JeopardyParams(p1, p2)
    strategy, branch = jp.advise(int(player), params)
    click.echo(f"strategy: {fmt.dist(strategy)}")
    click.echo(f"branch: {branch}")
    click.echo(f"case: {jp.equilibrium_case(params)}")
    click.echo(f"max_regret: {fmt(jp.verify_equilibrium(params))}")


@main.command()
@click.option("--n", type=int, required=True, help="deck size (>= 3)")
@click.option("--nashconv", "show_nashconv", is_flag=True,
              help="also report the exact-oracle NashConv of the strategy")
@click.option("--export-pdl", "export_dir", type=click.Path(file_okay=False),
              help="write the four cheat-sheet files to this directory")
@precision_option
def kuhn(n, show_nashconv, export_dir, precision):
    """Closed-form threshold strategy for n-card Kuhn poker."""
    fmt = _Fmt(precision)
    try:
        spec = kp.KuhnSpec(n)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--n")
    strat_a, strat_b = kp.pdl_strategy(spec)
    tables = [
        ("a_bet_first", strat_a.bet_first),
        ("b_call_vs_bet", strat_b.call_vs_bet),
        ("b_bet_vs_check", strat_b.bet_vs_check),
        ("a_call_after_check_bet", strat_a.call_after_check_bet),
    ]
    for name, vec in tables:
        click.echo(f"{name}: [" + ", ".join(fmt(v) for v in vec) + "]")
    if show_nashconv:
        nc = kp.nashconv(spec, strat_a, strat_b)
        click.echo(f"nashconv: {fmt(nc)} ({nc})")
    if export_dir:
        os.makedirs(export_dir, exist_ok=True)
        for name, text in kp.export_cheatsheets(spec).items():
            path = os.path.join(export_dir, f"{name}.pdl")
            with open(path, "w") as fh:
                fh.write(text)
            click.echo(f"wrote: {path}")


@main.command("weakest-link")
@click.option("--w", type=float, required=True, help="bank amount (> 0)")
@click.option("--p1", type=float, required=True, callback=_prob)
@click.option("--p2", type=float, required=True, callback=_prob)
@click.option("--y1", type=float, required=True, callback=_prob)
@click.option("--y2", type=float, required=True, callback=_prob)
@precision_option
def weakest_link(w, p1, p2, y1, y2, precision):
    """Final-three vote advice under both decision rules."""
    fmt = _Fmt(precision)
    try:
        params = wl.WLParams(w, p1, p2, y1, y2)
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    click.echo(f"paper_rule: {wl.decide_vote_paper(params)}")
    click.echo(f"full_enumeration: {wl.decide_vote_full(params)}")
    try:
        ev1 = wl.ev_vote_paper(wl.PLAYER1, params)
        ev2 = wl.ev_vote_paper(wl.PLAYER2, params)
        click.echo(f"ev_paper: {{player1: {fmt(ev1)}, player2: {fmt(ev2)}}}")
    except wl.DegenerateVotesError:
        click.echo("ev_paper: degenerate (split-vote mass is zero)")
    if y1 == 1.0 and y2 == 1.0:
        click.echo("note: both opponents vote for you; your vote is irrelevant")
    f1 = wl.ev_vote_full(wl.PLAYER1, params)
    f2 = wl.ev_vote_full(wl.PLAYER2, params)
    click.echo(f"ev_full: {{player1: {fmt(f1)}, player2: {fmt(f2)}}}")
    click.echo(f"tie_ev: {fmt(wl.tie_ev(params))}")


@main.command()
@click.option("--n-train", type=int, default=10_000, show_default=True)
@click.option("--n-test", type=int, default=1_000, show_default=True)
@click.option("--k", "k_values", type=int, multiple=True,
              help="training-prefix sizes (repeatable; default a log sweep)")
@click.option("--seed", type=int, default=None, help="default: $PGAMES_SEED or 0")
@click.option("--payoff-range", nargs=2, type=float, default=(-1.0, 1.0),
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="CSV path (default stdout)")
def sample(n_train, n_test, k_values, seed, payoff_range, out):
    """Exploitability-vs-k sampling experiment over random 2x2 games."""
    if seed is None:
        seed = _default_seed()
    if not k_values:
        k_values = tuple(k for k in (1, 2, 3, 5, 10, 20, 100, 1000, 10_000, 100_000)
                         if k <= n_train)
    try:
        config = ExperimentConfig(n_train, tuple(sorted(k_values)), n_test, seed,
                                  tuple(payoff_range))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    csv = run_experiment(config).to_csv()
    if out:
        with open(out, "w") as fh:
            fh.write(csv)
        click.echo(f"wrote: {out}")
    else:
        click.echo(csv, nl=False)


@main.group()
def pdl():
    """Work with cheat-sheet files."""


def _parse_sets(sets: tuple[str, ...]) -> dict[str, float]:
    out = {}
    for item in sets:
        if "=" not in item:
            raise click.BadParameter(f"expected name=value, got {item!r}",
                                     param_hint="--set")
        name, _, value = item.partition("=")
        try:
            out[name.strip()] = float(value)
        except ValueError:
            raise click.BadParameter(f"bad number {value!r} for {name!r}",
                                     param_hint="--set")
    return out


def _load_pdl(path: str):
    with open(path) as fh:
        text = fh.read()
    try:
        return parse_pdl(text)
    except PdlError as exc:
        raise click.ClickException(f"{path}: {exc}")


@pdl.command("eval")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--set", "sets", multiple=True, help="parameter assignment name=value")
@precision_option
def pdl_eval(file, sets, precision):
    """Evaluate a cheat sheet at a parameter assignment."""
    fmt = _Fmt(precision)
    p = _load_pdl(file)
    try:
        strategy, matched = evaluate_pdl(p, _parse_sets(sets))
    except PdlError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"strategy: {fmt.dist(strategy)}")
    click.echo(f"matched_rule: {matched}")


@pdl.command("check")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def pdl_check(file):
    """Parse a cheat sheet and report depth/width and round-trip health."""
    p = _load_pdl(file)
    click.echo(f"params: {', '.join(p.param_names)}")
    click.echo(f"depth: {depth(p)}")
    click.echo(f"width: {width(p)}")
    reparsed = parse_pdl(render_pdl(p))
    ok = render_pdl(reparsed) == render_pdl(p)
    click.echo(f"round_trip: {'ok' if ok else 'MISMATCH'}")


@pdl.command("render")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def pdl_render(file):
    """Re-emit a cheat sheet in canonical form."""
    click.echo(render_pdl(_load_pdl(file)), nl=False)


@main.command()
@click.option("--fast", is_flag=True, help="smaller sample counts")
def verify(fast):
    """Run the grid certificates and report pass/fail per check."""
    from . import verifysuite

    ok = verifysuite.run_all(fast=fast, echo=click.echo)
    if not ok:
        raise SystemExit(1)


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port, host):
    """Start the JSON advisor service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
