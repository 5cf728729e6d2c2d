/** The four panels: Jeopardy, Weakest Link, Kuhn and custom cheat sheet.
 *
 * Each factory pairs a service call with client-side validation and a
 * pure rendering of the reply into display lines.
 */

import type {
  AdvisorClient,
  JeopardyAdvice,
  JeopardyRequest,
  KuhnStrategy,
  PdlEvaluation,
  StrategyEntry,
  WeakestLinkAdvice,
  WeakestLinkRequest,
} from "./api.js";
import { sig } from "./format.js";
import { Panel, type PanelView } from "./panel.js";
import {
  validateCustomPdl,
  validateJeopardy,
  validateKuhn,
  validateWeakestLink,
} from "./validate.js";

type OnChange = (view: PanelView) => void;

/** "wager1" -> "wager 1" for display. */
function humanAction(action: string): string {
  return action.replace(/(\d+)$/, " $1").trim();
}

function strategyLines(strategy: StrategyEntry[]): string[] {
  if (strategy.length === 1 && strategy[0].prob === 1) {
    return [`play ${humanAction(strategy[0].action)}`];
  }
  return strategy.map(
    (s) => `${humanAction(s.action)} with probability ${sig(s.prob)}`,
  );
}

export function renderJeopardy(advice: JeopardyAdvice): string[] {
  return [...strategyLines(advice.strategy), `branch: ${advice.branch}`];
}

function evSummary(label: string, vote: string, ev: Record<string, number> | null): string {
  if (ev === null) {
    return `${label}: vote ${vote} (EV undefined for degenerate votes)`;
  }
  const parts = Object.entries(ev).map(([who, v]) => `${who} ${sig(v)}`);
  return `${label}: vote ${vote} (EV ${parts.join(", ")})`;
}

export function renderWeakestLink(advice: WeakestLinkAdvice): string[] {
  const lines = [
    evSummary("paper rule", advice.paper_rule, advice.ev_paper),
    evSummary("full enumeration", advice.full_enumeration, advice.ev_full),
  ];
  if (advice.paper_rule !== advice.full_enumeration) {
    lines.push("note: the two rules disagree here");
  }
  if (advice.vote_irrelevant) {
    lines.push("your vote is irrelevant: both opponents answered correctly");
  }
  return lines;
}

export function renderKuhn(tables: KuhnStrategy): string[] {
  const row = (name: string, probs: number[]) =>
    `${name}: [${probs.map(sig).join(", ")}]`;
  const lines = [
    row("A bet first", tables.a_bet_first),
    row("B call vs bet", tables.b_call_vs_bet),
    row("B bet vs check", tables.b_bet_vs_check),
    row("A call after check-bet", tables.a_call_after_check_bet),
  ];
  if (tables.nashconv !== undefined) {
    lines.push(`nashconv: ${sig(tables.nashconv)}`);
  }
  return lines;
}

export function renderPdl(evaluation: PdlEvaluation): string[] {
  return [
    `matched rule: ${evaluation.matched_rule}`,
    ...strategyLines(evaluation.strategy),
  ];
}

export function jeopardyPanel(client: AdvisorClient, onChange?: OnChange) {
  return new Panel<JeopardyRequest, JeopardyAdvice>(
    (inputs) => client.adviseJeopardy(inputs),
    validateJeopardy,
    renderJeopardy,
    onChange,
  );
}

export function weakestLinkPanel(client: AdvisorClient, onChange?: OnChange) {
  return new Panel<WeakestLinkRequest, WeakestLinkAdvice>(
    (inputs) => client.adviseWeakestLink(inputs),
    validateWeakestLink,
    renderWeakestLink,
    onChange,
  );
}

export function kuhnPanel(client: AdvisorClient, onChange?: OnChange) {
  return new Panel<{ n: number; certify: boolean }, KuhnStrategy>(
    (inputs) => client.kuhnStrategy(inputs.n, inputs.certify),
    validateKuhn,
    renderKuhn,
    onChange,
  );
}

export function customPdlPanel(client: AdvisorClient, onChange?: OnChange) {
  return new Panel<{ pdl: string; params: Record<string, number> }, PdlEvaluation>(
    (inputs) => client.evaluatePdl(inputs.pdl, inputs.params),
    validateCustomPdl,
    renderPdl,
    onChange,
  );
}
