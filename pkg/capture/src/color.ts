/** Hue in degrees [0, 360), saturation and value in [0, 1]. */
export interface Hsv {
  readonly h: number;
  readonly s: number;
  readonly v: number;
}

export interface HsvRange {
  readonly hue: readonly [number, number];
  readonly sat: readonly [number, number];
  readonly val: readonly [number, number];
}

export function rgbToHsv(r: number, g: number, b: number): Hsv {
  const rn = r / 255;
  const gn = g / 255;
  const bn = b / 255;
  const max = Math.max(rn, gn, bn);
  const min = Math.min(rn, gn, bn);
  const delta = max - min;
  let h = 0;
  if (delta > 0) {
    if (max === rn) h = 60 * (((gn - bn) / delta) % 6);
    else if (max === gn) h = 60 * ((bn - rn) / delta + 2);
    else h = 60 * ((rn - gn) / delta + 4);
  }
  if (h < 0) h += 360;
  return { h, s: max === 0 ? 0 : delta / max, v: max };
}

/**
 * Closed-interval range test. A hue interval with min > max wraps through
 * 0 degrees (for reds), e.g. [350, 10] covers 350..360 and 0..10.
 */
export function inRange(c: Hsv, range: HsvRange): boolean {
  const [hLo, hHi] = range.hue;
  const hueOk = hLo <= hHi ? c.h >= hLo && c.h <= hHi : c.h >= hLo || c.h <= hHi;
  return (
    hueOk &&
    c.s >= range.sat[0] &&
    c.s <= range.sat[1] &&
    c.v >= range.val[0] &&
    c.v <= range.val[1]
  );
}
