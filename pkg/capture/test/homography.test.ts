import { describe, expect, it } from "vitest";

import { applyHomography, computeHomography, type Homography } from "../src/homography.js";
import { CaptureError, type Vec2 } from "../src/types.js";

describe("computeHomography", () => {
  it("recovers the identity map", () => {
    const corners: Vec2[] = [
      [0, 0],
      [10, 0],
      [10, 5],
      [0, 5],
    ];
    const h = computeHomography(corners, corners);
    for (const p of [[3.25, 4.1], [0, 0], [9.9, 0.1]] as Vec2[]) {
      const q = applyHomography(h, p);
      expect(Math.abs(q[0] - p[0])).toBeLessThan(1e-9);
      expect(Math.abs(q[1] - p[1])).toBeLessThan(1e-9);
    }
  });

  it("calibrates a fronto-parallel rectangle", () => {
    const pixels: Vec2[] = [
      [10, 10],
      [410, 10],
      [410, 310],
      [10, 310],
    ];
    const world: Vec2[] = [
      [0, 0],
      [2, 0],
      [2, 1.5],
      [0, 1.5],
    ];
    const h = computeHomography(pixels, world);
    pixels.forEach((px, i) => {
      const w = applyHomography(h, px);
      expect(Math.abs(w[0] - world[i]![0])).toBeLessThan(1e-6);
      expect(Math.abs(w[1] - world[i]![1])).toBeLessThan(1e-6);
    });
    const center = applyHomography(h, [210, 160]);
    expect(Math.abs(center[0] - 1.0)).toBeLessThan(1e-6);
    expect(Math.abs(center[1] - 0.75)).toBeLessThan(1e-6);
  });

  it("inverts a perspective view exactly at non-corner points", () => {
    // world -> pixel map with shear and a mild projective row
    const hTrue: Homography = [120, 8, 40, -5, 115, 30, 1e-4, -8e-5];
    const world: Vec2[] = [
      [0, 0],
      [2, 0],
      [2, 1.5],
      [0, 1.5],
    ];
    const pixels = world.map((w) => applyHomography(hTrue, w));
    const h = computeHomography(pixels, world);
    for (const w of [[0.3, 0.4], [1.7, 1.1], [1.0, 0.75]] as Vec2[]) {
      const back = applyHomography(h, applyHomography(hTrue, w));
      expect(Math.abs(back[0] - w[0])).toBeLessThan(1e-8);
      expect(Math.abs(back[1] - w[1])).toBeLessThan(1e-8);
    }
  });

  it("rejects collinear corners", () => {
    const pixels: Vec2[] = [
      [0, 0],
      [10, 10],
      [20, 20],
      [30, 30],
    ];
    const world: Vec2[] = [
      [0, 0],
      [1, 0],
      [1, 1],
      [0, 1],
    ];
    try {
      computeHomography(pixels, world);
      throw new Error("expected a CaptureError");
    } catch (err) {
      expect(err).toBeInstanceOf(CaptureError);
      expect((err as CaptureError).code).toBe("degenerate-configuration");
    }
  });

  it("rejects a repeated corner", () => {
    const pixels: Vec2[] = [
      [0, 0],
      [100, 0],
      [100, 0],
      [0, 80],
    ];
    const world: Vec2[] = [
      [0, 0],
      [1, 0],
      [1, 1],
      [0, 1],
    ];
    expect(() => computeHomography(pixels, world)).toThrowError(CaptureError);
  });
});
