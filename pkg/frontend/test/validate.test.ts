import { describe, expect, it } from "vitest";

import {
  validateCustomPdl,
  validateJeopardy,
  validateKuhn,
  validateWeakestLink,
} from "../src/validate.js";

describe("validateJeopardy", () => {
  it("accepts in-range inputs", () => {
    expect(validateJeopardy({ p1: 0.5, p2: 0.25, player: 1 })).toEqual({});
  });

  it("flags out-of-range probabilities by field", () => {
    const errors = validateJeopardy({ p1: 1.5, p2: -0.1, player: 2 });
    expect(Object.keys(errors).sort()).toEqual(["p1", "p2"]);
  });

  it("flags a bad player", () => {
    expect(validateJeopardy({ p1: 0, p2: 0, player: 3 })).toHaveProperty("player");
  });
});

describe("validateWeakestLink", () => {
  const good = { w: 60000, p1: 0.6, p2: 0.4, y1: 0.5, y2: 0.5 };

  it("accepts in-range inputs", () => {
    expect(validateWeakestLink(good)).toEqual({});
  });

  it("requires a positive bank", () => {
    expect(validateWeakestLink({ ...good, w: 0 })).toHaveProperty("w");
  });

  it("enforces the p1 > p2 ordering", () => {
    expect(validateWeakestLink({ ...good, p1: 0.3, p2: 0.6 })).toHaveProperty("p2");
  });
});

describe("validateKuhn", () => {
  it("accepts the service range", () => {
    expect(validateKuhn({ n: 3, certify: true })).toEqual({});
    expect(validateKuhn({ n: 10000, certify: false })).toEqual({});
  });

  it("rejects n below 3 and non-integers", () => {
    expect(validateKuhn({ n: 2, certify: false })).toHaveProperty("n");
    expect(validateKuhn({ n: 4.5, certify: false })).toHaveProperty("n");
  });

  it("caps certification at n = 200", () => {
    expect(validateKuhn({ n: 500, certify: true })).toHaveProperty("n");
    expect(validateKuhn({ n: 500, certify: false })).toEqual({});
  });
});

describe("validateCustomPdl", () => {
  it("rejects an empty sheet", () => {
    expect(validateCustomPdl({ pdl: "  ", params: {} })).toHaveProperty("pdl");
  });

  it("rejects non-numeric parameter values", () => {
    const errors = validateCustomPdl({ pdl: "params: x\n  else -> a\n",
                                       params: { x: NaN } });
    expect(errors).toHaveProperty("params");
  });
});
