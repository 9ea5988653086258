import { inRange, rgbToHsv } from "./color.js";
import type { CaptureConfig } from "./config.js";
import type { RasterImage } from "./image.js";
import { CaptureError } from "./types.js";

export interface DetectedMarker {
  readonly className: string;
  /** Area-weighted mean of member pixel coordinates (u right, v down). */
  readonly centroid: readonly [number, number];
  readonly area: number;
}

/**
 * Connected components (4-connectivity) of the class's color mask,
 * discovered in row-major order, blobs below minBlobArea dropped.
 */
function blobsForClass(image: RasterImage, mask: Uint8Array, minArea: number, className: string): DetectedMarker[] {
  const { width, height } = image;
  const labeled = new Uint8Array(mask.length); // 1 once a pixel joins a blob
  const out: DetectedMarker[] = [];
  const stack: number[] = [];
  for (let start = 0; start < mask.length; start++) {
    if (!mask[start] || labeled[start]) continue;
    let area = 0;
    let sumU = 0;
    let sumV = 0;
    stack.push(start);
    labeled[start] = 1;
    while (stack.length > 0) {
      const p = stack.pop()!;
      const u = p % width;
      const v = (p / width) | 0;
      area++;
      sumU += u;
      sumV += v;
      if (u > 0 && mask[p - 1] && !labeled[p - 1]) { labeled[p - 1] = 1; stack.push(p - 1); }
      if (u + 1 < width && mask[p + 1] && !labeled[p + 1]) { labeled[p + 1] = 1; stack.push(p + 1); }
      if (v > 0 && mask[p - width] && !labeled[p - width]) { labeled[p - width] = 1; stack.push(p - width); }
      if (v + 1 < height && mask[p + width] && !labeled[p + width]) { labeled[p + width] = 1; stack.push(p + width); }
    }
    if (area >= minArea) {
      out.push({ className, centroid: [sumU / area, sumV / area], area });
    }
  }
  return out;
}

/**
 * Detect every configured color class in one image.
 * Returns all surviving blobs per class, in discovery order; callers decide
 * which classes are required and how many instances are legal.
 */
export function detectMarkers(image: RasterImage, cfg: CaptureConfig): Map<string, DetectedMarker[]> {
  const classNames = Object.keys(cfg.colors);
  const nPixels = image.width * image.height;
  // classify each pixel once; a pixel can satisfy several ranges
  const masks = new Map<string, Uint8Array>(classNames.map((n) => [n, new Uint8Array(nPixels)]));
  for (let p = 0, i = 0; p < nPixels; p++, i += 3) {
    const hsv = rgbToHsv(image.data[i]!, image.data[i + 1]!, image.data[i + 2]!);
    for (const name of classNames) {
      if (inRange(hsv, cfg.colors[name]!)) masks.get(name)![p] = 1;
    }
  }
  const detections = new Map<string, DetectedMarker[]>();
  for (const name of classNames) {
    detections.set(name, blobsForClass(image, masks.get(name)!, cfg.minBlobArea, name));
  }
  return detections;
}

/**
 * The single detection for a class that must appear exactly once.
 * `required` distinguishes "must exist here" from "may be absent".
 */
export function singleMarker(
  detections: Map<string, DetectedMarker[]>,
  className: string,
  view: string,
  required: boolean,
): DetectedMarker | undefined {
  const found = detections.get(className) ?? [];
  if (found.length > 1) {
    throw new CaptureError(
      "ambiguous-markers",
      `class "${className}" has ${found.length} blobs in the ${view} view; expected one`,
    );
  }
  if (found.length === 0) {
    if (!required) return undefined;
    throw new CaptureError("missing-markers", `class "${className}" not found in the ${view} view`);
  }
  return found[0];
}

/** All classes that found nothing in this view; for whole-image diagnostics. */
export function missingClasses(detections: Map<string, DetectedMarker[]>, required: string[]): string[] {
  return required.filter((name) => (detections.get(name) ?? []).length === 0);
}
