/** Number formatting matching the CLI's default 6 significant digits. */

/** Format like Python's "%.6g" so displays line up with the CLI. */
export function sig(x: number): string {
  if (!Number.isFinite(x)) return String(x);
  if (x === 0) return "0";
  const exp = Math.floor(Math.log10(Math.abs(x)));
  if (exp < -4 || exp >= 6) {
    const [mantissa, rawExp] = x.toExponential(5).split("e");
    const m = trimZeros(mantissa);
    const sign = rawExp.startsWith("-") ? "-" : "+";
    const digits = rawExp.replace(/^[+-]/, "").padStart(2, "0");
    return `${m}e${sign}${digits}`;
  }
  return trimZeros(x.toPrecision(6));
}

function trimZeros(s: string): string {
  if (!s.includes(".")) return s;
  return s.replace(/0+$/, "").replace(/\.$/, "");
}
