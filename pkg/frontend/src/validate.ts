/** Client-side input validation mirroring the ranges the service enforces.
 *
 * Catching bad inputs here keeps round trips off the hot path; the service
 * remains the authority and its 422 replies are surfaced the same way.
 */

export type FieldErrors = Record<string, string>;

function prob(errors: FieldErrors, name: string, value: number): void {
  if (!Number.isFinite(value) || value < 0 || value > 1) {
    errors[name] = "must be a probability in [0, 1]";
  }
}

export function validateJeopardy(inputs: {
  p1: number;
  p2: number;
  player: number;
}): FieldErrors {
  const errors: FieldErrors = {};
  prob(errors, "p1", inputs.p1);
  prob(errors, "p2", inputs.p2);
  if (inputs.player !== 1 && inputs.player !== 2) {
    errors.player = "must be 1 or 2";
  }
  return errors;
}

export function validateWeakestLink(inputs: {
  w: number;
  p1: number;
  p2: number;
  y1: number;
  y2: number;
}): FieldErrors {
  const errors: FieldErrors = {};
  if (!Number.isFinite(inputs.w) || inputs.w <= 0) {
    errors.w = "must be a positive bank";
  }
  prob(errors, "p1", inputs.p1);
  prob(errors, "p2", inputs.p2);
  prob(errors, "y1", inputs.y1);
  prob(errors, "y2", inputs.y2);
  if (!("p1" in errors) && !("p2" in errors) && !(inputs.p1 > inputs.p2)) {
    errors.p2 = "p1 must exceed p2 (player 2 is the stronger opponent)";
  }
  return errors;
}

export function validateKuhn(inputs: { n: number; certify: boolean }): FieldErrors {
  const errors: FieldErrors = {};
  if (!Number.isInteger(inputs.n) || inputs.n < 3 || inputs.n > 10_000) {
    errors.n = "must be an integer in [3, 10000]";
  } else if (inputs.certify && inputs.n > 200) {
    errors.n = "certification capped at n <= 200";
  }
  return errors;
}

export function validateCustomPdl(inputs: {
  pdl: string;
  params: Record<string, number>;
}): FieldErrors {
  const errors: FieldErrors = {};
  if (inputs.pdl.trim() === "") {
    errors.pdl = "paste a cheat sheet first";
  }
  for (const [name, value] of Object.entries(inputs.params)) {
    if (!Number.isFinite(value)) {
      errors.params = `parameter ${name} is not a number`;
      break;
    }
  }
  return errors;
}
