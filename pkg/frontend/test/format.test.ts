import { describe, expect, it } from "vitest";

import { sig } from "../src/format.js";

describe("sig", () => {
  it("keeps six significant digits", () => {
    expect(sig(0.36666666)).toBe("0.366667");
    expect(sig(23 / 60)).toBe("0.383333");
    expect(sig(0.4)).toBe("0.4");
  });

  it("trims trailing zeros like the CLI", () => {
    expect(sig(15000)).toBe("15000");
    expect(sig(0.5)).toBe("0.5");
    expect(sig(1)).toBe("1");
  });

  it("switches to exponent notation outside [1e-4, 1e6)", () => {
    expect(sig(1234567)).toBe("1.23457e+06");
    expect(sig(0.0000123456649)).toBe("1.23457e-05");
    expect(sig(-2e-7)).toBe("-2e-07");
  });

  it("handles zero and negatives", () => {
    expect(sig(0)).toBe("0");
    expect(sig(-0.25)).toBe("-0.25");
  });
});
