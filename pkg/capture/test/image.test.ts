import { describe, expect, it } from "vitest";
import { PNG } from "pngjs";

import { decodeImage, decodePpm, encodePpm } from "../src/image.js";
import { CaptureError } from "../src/types.js";
import { createImage, drawSquare } from "./render.js";

function captureCode(fn: () => unknown): string {
  try {
    fn();
  } catch (err) {
    expect(err).toBeInstanceOf(CaptureError);
    return (err as CaptureError).code;
  }
  throw new Error("expected a CaptureError");
}

describe("ppm", () => {
  it("round-trips encode -> decode", () => {
    const img = createImage(7, 5, [10, 20, 30]);
    drawSquare(img, 3, 2, 3, [200, 100, 0]);
    const back = decodePpm(encodePpm(img));
    expect(back.width).toBe(7);
    expect(back.height).toBe(5);
    expect(back.data).toEqual(img.data);
  });

  it("accepts comments and loose whitespace in the header", () => {
    const header = "P6 # binary pixmap\n# full-line comment\n  2\t1 # size\n255\n";
    const pixels = new Uint8Array([1, 2, 3, 4, 5, 6]);
    const bytes = new Uint8Array([...new TextEncoder().encode(header), ...pixels]);
    const img = decodePpm(bytes);
    expect(img.width).toBe(2);
    expect(img.height).toBe(1);
    expect([...img.data]).toEqual([1, 2, 3, 4, 5, 6]);
  });

  it("rejects a non-P6 magic number", () => {
    const bytes = new TextEncoder().encode("P5\n2 2\n255\n" + "\0".repeat(4));
    expect(captureCode(() => decodePpm(bytes))).toBe("image-error");
  });

  it("rejects maxval other than 255", () => {
    const bytes = new TextEncoder().encode("P6\n1 1\n65535\n" + "\0".repeat(6));
    expect(captureCode(() => decodePpm(bytes))).toBe("image-error");
  });

  it("rejects truncated pixel data", () => {
    const full = encodePpm(createImage(4, 4, [9, 9, 9]));
    expect(captureCode(() => decodePpm(full.slice(0, full.length - 1)))).toBe("image-error");
  });
});

describe("decodeImage", () => {
  it("sniffs and decodes png input", () => {
    const png = new PNG({ width: 2, height: 1 });
    // RGBA pixels: red then teal
    png.data.set([255, 0, 0, 255, 0, 128, 128, 255]);
    const img = decodeImage(new Uint8Array(PNG.sync.write(png)));
    expect(img.width).toBe(2);
    expect(img.height).toBe(1);
    expect([...img.data]).toEqual([255, 0, 0, 0, 128, 128]);
  });

  it("decodes ppm input by magic", () => {
    const src = createImage(3, 2, [4, 5, 6]);
    const img = decodeImage(encodePpm(src));
    expect(img.data).toEqual(src.data);
  });

  it("rejects unknown formats", () => {
    expect(captureCode(() => decodeImage(new TextEncoder().encode("GIF89a....")))).toBe("image-error");
  });
});
