"""Acceptance criteria, one test per criterion.

Each test prints a single [PASS]/[FAIL] line (visible under pytest -s or
on failure) and asserts the same condition, including the runtime budget.
"""

import time
from fractions import Fraction
from importlib import resources

import numpy as np

from pgames import jeopardy as jp
from pgames import kuhn as kp
from pgames import weakest_link as wl
from pgames.matrix import (
    BimatrixGame,
    MixedStrategy,
    StrategyProfile,
    TwoByTwoPayoffs,
    expected_utility,
    exploitability_zs,
    max_regret,
    solve_2x2,
    zero_sum_value_2x2,
)
from pgames.pdl import ParamStrategy, PdlSyntaxError, build_nn_pdl, depth, \
    evaluate_pdl, parse_pdl, render_pdl
from pgames.sampling import ExperimentConfig, run_experiment
from pgames.verifysuite import kuhn_bluff_ratio, kuhn_threshold_chain, \
    weakest_link_grid_checks

BUNDLED_SHEETS = ("jeopardy_p1.pdl", "jeopardy_p2.pdl",
                  "weakest_link.pdl", "zs2x2_row.pdl")


def report(name, ok, detail=""):
    suffix = f" ({detail})" if detail else ""
    print(f"[{'PASS' if ok else 'FAIL'}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


def test_solve_2x2_certificate():
    start = time.perf_counter()
    rng = np.random.default_rng(0)
    worst = 0.0
    for payoffs in rng.uniform(-1.0, 1.0, size=(10_000, 8)):
        p = TwoByTwoPayoffs(*payoffs)
        worst = max(worst, max_regret(p.to_game(), solve_2x2(p)))
    elapsed = time.perf_counter() - start
    report("2x2 solver certificate", worst <= 1e-9 and elapsed < 5.0,
           f"max regret {worst:.3g} over 10000 games, {elapsed:.2f}s")


def test_lemma_suite():
    start = time.perf_counter()
    rng = np.random.default_rng(1)
    ok = True
    for _ in range(1000):
        eps = rng.uniform(1e-9, 0.2)
        base = rng.uniform(-1.0, 1.0, size=4)
        other = base + rng.uniform(-eps, eps, size=4)
        g1 = BimatrixGame.from_zero_sum(base.reshape(2, 2))
        g2 = BimatrixGame.from_zero_sum(other.reshape(2, 2))
        prof = StrategyProfile(MixedStrategy(rng.dirichlet(np.ones(2))),
                               MixedStrategy(rng.dirichlet(np.ones(2))))
        u1, _ = expected_utility(g1, prof)
        u2, _ = expected_utility(g2, prof)
        ok &= abs(u1 - u2) <= eps + 1e-12
        ok &= abs(zero_sum_value_2x2(*base) - zero_sum_value_2x2(*other)) <= eps + 1e-12
        eq = solve_2x2(TwoByTwoPayoffs.zero_sum(*base))
        ok &= exploitability_zs(*other, "row", eq.row) <= 2 * eps + 1e-9
        ok &= exploitability_zs(*other, "col", eq.col) <= 2 * eps + 1e-9
    elapsed = time.perf_counter() - start
    report("lemma suite (payoff/value continuity, equilibrium transfer)",
           ok and elapsed < 10.0, f"1000 triples, {elapsed:.2f}s")


def test_figure_1_reproduction():
    ks = (1, 2, 3, 5, 10, 20, 100, 1000, 10_000, 100_000)
    start = time.perf_counter()
    result = run_experiment(ExperimentConfig(100_000, ks, 10_000, seed=0))
    full_avg = result.avg(100_000)
    # small-k values are seed-dependent and reported, not asserted
    print("    small-k report: " + ", ".join(
        f"k={k}: {result.avg(k):.4g}" for k in (2, 3, 20)))
    trend_small, trend_full = [], []
    for seed in range(20):
        r = run_experiment(ExperimentConfig(100_000, (10, 100_000), 10_000, seed))
        trend_small.append(r.avg(10))
        trend_full.append(r.avg(100_000))
    trend_ok = np.mean(trend_full) < np.mean(trend_small)
    desk_start = time.perf_counter()
    run_experiment(ExperimentConfig(10_000, (1, 10, 100, 1000, 10_000), 1_000, 7))
    desk_elapsed = time.perf_counter() - desk_start
    elapsed = time.perf_counter() - start
    ok = 0.003 <= full_avg <= 0.013 and trend_ok and desk_elapsed < 60.0
    report("figure-1 reproduction", ok,
           f"avg@1e5 {full_avg:.4g}, 20-seed trend "
           f"{np.mean(trend_full):.4g} < {np.mean(trend_small):.4g}, "
           f"desk scale {desk_elapsed:.2f}s, total {elapsed:.1f}s")


def test_nn_constructor():
    rng = np.random.default_rng(2)
    ok = True
    queries = 0
    for _ in range(100):
        t = int(rng.integers(1, 51))
        dim = int(rng.integers(1, 4))
        samples = rng.uniform(-1.0, 1.0, size=(t, dim))
        strategies = [ParamStrategy.pure(f"s{i}") for i in range(t)]
        pdl = build_nn_pdl(samples, strategies)
        ok &= depth(pdl) == t
        for _ in range(10):
            q = rng.uniform(-1.0, 1.0, size=dim)
            env = dict(zip(pdl.param_names, map(float, q)))
            want = int(np.argmin(((samples - q) ** 2).sum(axis=1)))
            ok &= evaluate_pdl(pdl, env)[0] == {f"s{want}": 1.0}
            queries += 1
    report("nearest-neighbor constructor equals argmin lookup", ok,
           f"100 sample sets, {queries} queries, depth = t throughout")


def test_jeopardy_certificate():
    worst = 0.0
    for p1 in np.linspace(0.0, 1.0, 21):
        for p2 in np.linspace(0.0, 1.0, 21):
            worst = max(worst, jp.verify_equilibrium(jp.JeopardyParams(p1, p2)))
    params = jp.JeopardyParams(0.5, 0.25)
    value, _ = expected_utility(jp.payoff_matrix(params), jp.advised_profile(params))
    ok = worst <= 1e-9 and abs(value - 0.35) <= 1e-12
    report("jeopardy 21x21 certificate", ok,
           f"max regret {worst:.3g}, spot value {value:.12g}")


def test_kuhn_criterion():
    start = time.perf_counter()
    import json
    import pathlib

    spec3 = kp.KuhnSpec(3)
    alpha_ok = True
    for alpha in (0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1):
        sa, sb = kp.alpha_equilibrium(alpha)
        alpha_ok &= kp.nashconv(spec3, sa, sb) <= Fraction(1, 10**12)
        alpha_ok &= kp.expected_value(spec3, sa, sb) == Fraction(-1, 18)
    pins = json.loads((pathlib.Path(__file__).parent / "data"
                       / "kuhn_nashconv_pins.json").read_text())
    pins_ok = True
    chain_ok = True
    ratio_ok = True
    for n in range(3, 51):
        spec = kp.KuhnSpec(n)
        sa, sb = kp.pdl_strategy(spec)
        pin = pins[str(n)]
        pins_ok &= kp.nashconv(spec, sa, sb) == Fraction(pin["num"], pin["den"])
        chain_ok &= kuhn_threshold_chain(n)
        ratio_ok &= kuhn_bluff_ratio(n) == Fraction(1, 4)
    elapsed = time.perf_counter() - start
    ok = alpha_ok and pins_ok and chain_ok and ratio_ok and elapsed < 30.0
    report("kuhn alpha family, nashconv pins, bluff ratio, threshold chain",
           ok, f"n in 3..50, {elapsed:.2f}s")


def test_weakest_link_criterion():
    start = time.perf_counter()
    checks = weakest_link_grid_checks(0.05)
    rep = wl.agreement_report(0.05)
    print(f"    agreement report: {rep.agreement:.4f} over {rep.n_cells} cells, "
          f"{len(rep.disagreements)} disagreements")
    elapsed = time.perf_counter() - start
    ok = all(checks.values()) and elapsed < 5.0
    detail = ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in checks.items())
    report("weakest-link 0.05-grid checks", ok, f"{detail}, {elapsed:.2f}s")


def test_pdl_format_criterion():
    ok = True
    for name in BUNDLED_SHEETS:
        text = resources.files("pgames.cheatsheets").joinpath(name).read_text()
        pdl = parse_pdl(text)
        ok &= render_pdl(parse_pdl(render_pdl(pdl))) == render_pdl(pdl)
    rng = np.random.default_rng(3)
    from test_pdl import random_pdl

    for _ in range(1000):
        pdl = random_pdl(rng)
        text = render_pdl(pdl)
        ok &= render_pdl(parse_pdl(text)) == text
    malformed = [
        "",
        "params: x",
        "params: x\n  if x < -> y\n  else -> z\n",
        "params: x\n  else -> {a: rest, b: rest}\n",
        "params: x\n  else -> {a: 1, a: 0}\n",
        "params: x\n  else -> y extra\n",
        "params: x\n  if x ? 1 -> a\n  else -> b\n",
        "params: x\n  else -> {q: undeclared, r: rest}\n",
    ]
    for text in malformed:
        try:
            parse_pdl(text)
            ok = False
        except PdlSyntaxError as exc:
            ok &= exc.line >= 1 and exc.col >= 1
        except Exception:
            ok = False
    report("pdl parse/render round-trip and positioned errors", ok,
           f"{len(BUNDLED_SHEETS)} bundled sheets, 1000 fuzzed, "
           f"{len(malformed)} malformed inputs")
