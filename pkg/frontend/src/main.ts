/** Browser bootstrap: tabbed panels wired to the advisor service. */

import { AdvisorClient } from "./api.js";
import type { Panel, PanelView } from "./panel.js";
import {
  customPdlPanel,
  jeopardyPanel,
  kuhnPanel,
  weakestLinkPanel,
} from "./panels.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("service") ?? "http://127.0.0.1:8000";
const client = new AdvisorClient(baseUrl);

interface FieldSpec {
  name: string;
  label: string;
  value: string;
  kind: "number" | "text";
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderView(output: HTMLElement, view: PanelView): void {
  output.replaceChildren();
  output.dataset.status = view.status;
  if (view.banner) {
    output.appendChild(el("div", "banner", view.banner));
  }
  for (const [field, message] of Object.entries(view.fieldErrors)) {
    output.appendChild(el("div", "field-error", `${field}: ${message}`));
  }
  if (view.lines.length > 0) {
    const box = el("div", view.status === "stale" ? "advice stale" : "advice");
    for (const line of view.lines) box.appendChild(el("div", "line", line));
    if (view.status === "stale") {
      box.appendChild(el("div", "stale-note", "inputs changed, resubmit"));
    }
    output.appendChild(box);
  } else if (view.status === "loading") {
    output.appendChild(el("div", "loading", "asking the service..."));
  }
}

function mountPanel<I, R>(
  title: string,
  fields: FieldSpec[],
  makePanel: (onChange: (view: PanelView) => void) => Panel<I, R>,
  readInputs: (values: Record<string, string>) => I,
): HTMLElement {
  const section = el("section", "panel");
  section.appendChild(el("h2", undefined, title));
  const form = el("form");
  const inputs = new Map<string, HTMLInputElement | HTMLTextAreaElement>();
  for (const spec of fields) {
    const label = el("label", undefined, `${spec.label} `);
    const input =
      spec.kind === "text" ? el("textarea") : el("input");
    if (input instanceof HTMLInputElement) input.type = "text";
    input.name = spec.name;
    input.value = spec.value;
    inputs.set(spec.name, input);
    label.appendChild(input);
    form.appendChild(label);
  }
  const button = el("button", undefined, "advise");
  button.type = "submit";
  form.appendChild(button);
  const output = el("div", "output");
  const panel = makePanel((view) => renderView(output, view));
  form.addEventListener("input", () => panel.inputsChanged());
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const values: Record<string, string> = {};
    for (const [name, input] of inputs) values[name] = input.value;
    void panel.submit(readInputs(values));
  });
  section.appendChild(form);
  section.appendChild(output);
  return section;
}

function parseParamList(text: string): Record<string, number> {
  const out: Record<string, number> = {};
  for (const piece of text.split(",")) {
    const trimmed = piece.trim();
    if (trimmed === "") continue;
    const [name, value] = trimmed.split("=");
    out[(name ?? "").trim()] = Number(value);
  }
  return out;
}

const root = document.getElementById("app")!;
root.appendChild(
  mountPanel(
    "Jeopardy wager",
    [
      { name: "p1", label: "p1", value: "0.5", kind: "number" },
      { name: "p2", label: "p2", value: "0.25", kind: "number" },
      { name: "player", label: "player", value: "1", kind: "number" },
    ],
    (onChange) => jeopardyPanel(client, onChange),
    (v) => ({ p1: Number(v.p1), p2: Number(v.p2), player: Number(v.player) }),
  ),
);
root.appendChild(
  mountPanel(
    "Weakest Link vote",
    [
      { name: "w", label: "bank W", value: "60000", kind: "number" },
      { name: "p1", label: "p1", value: "0.6", kind: "number" },
      { name: "p2", label: "p2", value: "0.4", kind: "number" },
      { name: "y1", label: "y1", value: "0.5", kind: "number" },
      { name: "y2", label: "y2", value: "0.5", kind: "number" },
    ],
    (onChange) => weakestLinkPanel(client, onChange),
    (v) => ({
      w: Number(v.w),
      p1: Number(v.p1),
      p2: Number(v.p2),
      y1: Number(v.y1),
      y2: Number(v.y2),
    }),
  ),
);
root.appendChild(
  mountPanel(
    "Kuhn thresholds",
    [
      { name: "n", label: "cards n", value: "3", kind: "number" },
      { name: "certify", label: "certify (yes/no)", value: "no", kind: "number" },
    ],
    (onChange) => kuhnPanel(client, onChange),
    (v) => ({ n: Number(v.n), certify: v.certify.trim() === "yes" }),
  ),
);
root.appendChild(
  mountPanel(
    "Custom cheat sheet",
    [
      { name: "pdl", label: "cheat sheet", value: "", kind: "text" },
      { name: "params", label: "params (x=0.5, y=1)", value: "", kind: "number" },
    ],
    (onChange) => customPdlPanel(client, onChange),
    (v) => ({ pdl: v.pdl, params: parseParamList(v.params) }),
  ),
);
