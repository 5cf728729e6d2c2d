/** Panel view-model: one in-flight request, sequence-numbered replies.
 *
 * Each panel owns a monotone sequence counter; a reply is applied only if
 * it belongs to the newest request, so slow responses can never overwrite
 * fresher advice. Editing any input marks the current advice stale, and a
 * network failure clears the advice entirely rather than leaving it up.
 */

import { ServiceError } from "./api.js";
import type { FieldErrors } from "./validate.js";

export type PanelStatus = "idle" | "loading" | "ready" | "stale" | "error";

export interface PanelView {
  status: PanelStatus;
  lines: string[];
  fieldErrors: FieldErrors;
  banner: string | null;
}

export class Panel<I, R> {
  view: PanelView = { status: "idle", lines: [], fieldErrors: {}, banner: null };
  private seq = 0;

  constructor(
    private readonly fetchAdvice: (inputs: I) => Promise<R>,
    private readonly validate: (inputs: I) => FieldErrors,
    private readonly render: (response: R) => string[],
    private readonly onChange: (view: PanelView) => void = () => {},
  ) {}

  /** Any edit invalidates displayed advice until the next submit. */
  inputsChanged(): void {
    if (this.view.status === "ready") {
      this.update({ ...this.view, status: "stale" });
    }
  }

  async submit(inputs: I): Promise<void> {
    const fieldErrors = this.validate(inputs);
    if (Object.keys(fieldErrors).length > 0) {
      this.seq += 1; // outdate any in-flight request
      this.update({ status: "error", lines: [], fieldErrors, banner: null });
      return;
    }
    const ticket = ++this.seq;
    this.update({ ...this.view, status: "loading", fieldErrors: {}, banner: null });
    try {
      const response = await this.fetchAdvice(inputs);
      if (ticket !== this.seq) return; // a newer request superseded this one
      this.update({
        status: "ready",
        lines: this.render(response),
        fieldErrors: {},
        banner: null,
      });
    } catch (err) {
      if (ticket !== this.seq) return;
      if (err instanceof ServiceError) {
        const fieldErrors: FieldErrors = {};
        for (const field of err.fields) fieldErrors[field] = err.message;
        this.update({ status: "error", lines: [], fieldErrors, banner: null });
      } else {
        this.update({
          status: "error",
          lines: [],
          fieldErrors: {},
          banner: "service unreachable, check it is running and retry",
        });
      }
    }
  }

  private update(view: PanelView): void {
    this.view = view;
    this.onChange(view);
  }
}
