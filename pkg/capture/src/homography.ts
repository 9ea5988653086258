import { CaptureError, type Vec2 } from "./types.js";

/** Row-major 3x3 projective matrix with h33 fixed to 1. */
export type Homography = readonly [number, number, number, number, number, number, number, number];

export function applyHomography(h: Homography, p: Vec2): Vec2 {
  const w = h[6] * p[0] + h[7] * p[1] + 1;
  return [(h[0] * p[0] + h[1] * p[1] + h[2]) / w, (h[3] * p[0] + h[4] * p[1] + h[5]) / w];
}

/**
 * Gaussian elimination with partial pivoting on an n x (n+1) system.
 * A near-zero pivot means the correspondences do not pin a projective map.
 */
function solve(a: number[][]): number[] {
  const n = a.length;
  // scale reference for the singularity test
  let scale = 0;
  for (const row of a) for (let j = 0; j < n; j++) scale = Math.max(scale, Math.abs(row[j]!));
  for (let col = 0; col < n; col++) {
    let pivot = col;
    for (let r = col + 1; r < n; r++) {
      if (Math.abs(a[r]![col]!) > Math.abs(a[pivot]![col]!)) pivot = r;
    }
    if (Math.abs(a[pivot]![col]!) <= scale * 1e-12) {
      throw new CaptureError(
        "degenerate-configuration",
        "gate corners do not define a projective mapping (collinear or coincident points)",
      );
    }
    [a[col], a[pivot]] = [a[pivot]!, a[col]!];
    const lead = a[col]![col]!;
    for (let r = col + 1; r < n; r++) {
      const factor = a[r]![col]! / lead;
      if (factor === 0) continue;
      for (let j = col; j <= n; j++) a[r]![j]! -= factor * a[col]![j]!;
    }
  }
  const x = new Array<number>(n).fill(0);
  for (let r = n - 1; r >= 0; r--) {
    let acc = a[r]![n]!;
    for (let j = r + 1; j < n; j++) acc -= a[r]![j]! * x[j]!;
    x[r] = acc / a[r]![r]!;
  }
  return x;
}

/**
 * Direct linear transform from four pixel points to four world points.
 * Each correspondence contributes two rows of the 8x8 system; the result
 * reproduces the defining points, which is verified to under half a pixel.
 */
export function computeHomography(pixels: readonly Vec2[], world: readonly Vec2[]): Homography {
  if (pixels.length !== 4 || world.length !== 4) {
    throw new CaptureError("degenerate-configuration", "exactly four corner correspondences required");
  }
  const rows: number[][] = [];
  for (let i = 0; i < 4; i++) {
    const [u, v] = pixels[i]!;
    const [x, y] = world[i]!;
    rows.push([u, v, 1, 0, 0, 0, -x * u, -x * v, x]);
    rows.push([0, 0, 0, u, v, 1, -y * u, -y * v, y]);
  }
  const h = solve(rows) as unknown as Homography;

  // Residual guard in pixel-equivalent units: world error scaled back by
  // the mean pixels-per-world-unit of the corner quadrilateral.
  let pxSpan = 0;
  let worldSpan = 0;
  for (let i = 0; i < 4; i++) {
    const j = (i + 1) % 4;
    pxSpan += Math.hypot(pixels[j]![0] - pixels[i]![0], pixels[j]![1] - pixels[i]![1]);
    worldSpan += Math.hypot(world[j]![0] - world[i]![0], world[j]![1] - world[i]![1]);
  }
  const pxPerUnit = pxSpan / worldSpan;
  for (let i = 0; i < 4; i++) {
    const mapped = applyHomography(h, pixels[i]!);
    const err = Math.hypot(mapped[0] - world[i]![0], mapped[1] - world[i]![1]) * pxPerUnit;
    if (!(err < 0.5)) {
      throw new CaptureError(
        "degenerate-configuration",
        `calibration residual ${err.toFixed(3)} px on corner ${i}`,
      );
    }
  }
  return h;
}
