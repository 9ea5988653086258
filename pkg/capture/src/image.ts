import { readFileSync } from "node:fs";
import { PNG } from "pngjs";

import { CaptureError } from "./types.js";

/** Decoded raster: tightly packed 8-bit RGB rows, top to bottom. */
export interface RasterImage {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array; // length = width * height * 3
}

const PNG_SIGNATURE = [0x89, 0x50, 0x4e, 0x47];

function isPng(bytes: Uint8Array): boolean {
  return PNG_SIGNATURE.every((b, i) => bytes[i] === b);
}

/**
 * Decode a binary PPM (P6) image.
 * Header tokens may be separated by any whitespace and # comments.
 */
export function decodePpm(bytes: Uint8Array): RasterImage {
  if (bytes[0] !== 0x50 || bytes[1] !== 0x36) {
    throw new CaptureError("image-error", "not a P6 PPM file");
  }
  let pos = 2;
  const tokens: number[] = [];
  while (tokens.length < 3) {
    // skip whitespace and comment lines
    while (pos < bytes.length) {
      const c = bytes[pos]!;
      if (c === 0x23) {
        while (pos < bytes.length && bytes[pos] !== 0x0a) pos++;
      } else if (c === 0x20 || c === 0x09 || c === 0x0a || c === 0x0d) {
        pos++;
      } else {
        break;
      }
    }
    let value = 0;
    let digits = 0;
    while (pos < bytes.length) {
      const c = bytes[pos]!;
      if (c < 0x30 || c > 0x39) break;
      value = value * 10 + (c - 0x30);
      digits++;
      pos++;
    }
    if (digits === 0) {
      throw new CaptureError("image-error", "truncated PPM header");
    }
    tokens.push(value);
  }
  const [width, height, maxval] = tokens as [number, number, number];
  if (width <= 0 || height <= 0) {
    throw new CaptureError("image-error", `bad PPM dimensions ${width}x${height}`);
  }
  if (maxval !== 255) {
    throw new CaptureError("image-error", `unsupported PPM maxval ${maxval}`);
  }
  pos++; // single whitespace byte after maxval
  const expected = width * height * 3;
  if (bytes.length - pos < expected) {
    throw new CaptureError("image-error", "truncated PPM pixel data");
  }
  return { width, height, data: bytes.subarray(pos, pos + expected) };
}

/** Encode as binary PPM (P6); inverse of decodePpm for maxval 255. */
export function encodePpm(image: RasterImage): Uint8Array {
  const header = Buffer.from(`P6\n${image.width} ${image.height}\n255\n`, "ascii");
  const out = new Uint8Array(header.length + image.data.length);
  out.set(header, 0);
  out.set(image.data, header.length);
  return out;
}

function decodePng(bytes: Uint8Array): RasterImage {
  let png: PNG;
  try {
    png = PNG.sync.read(Buffer.from(bytes));
  } catch (err) {
    throw new CaptureError("image-error", `PNG decode failed: ${(err as Error).message}`);
  }
  // pngjs yields RGBA; drop alpha
  const data = new Uint8Array(png.width * png.height * 3);
  for (let p = 0, s = 0, d = 0; p < png.width * png.height; p++, s += 4, d += 3) {
    data[d] = png.data[s]!;
    data[d + 1] = png.data[s + 1]!;
    data[d + 2] = png.data[s + 2]!;
  }
  return { width: png.width, height: png.height, data };
}

/** Decode PPM (P6) or PNG, sniffed by magic bytes. */
export function decodeImage(bytes: Uint8Array): RasterImage {
  if (isPng(bytes)) return decodePng(bytes);
  return decodePpm(bytes);
}

export function loadImage(path: string): RasterImage {
  return decodeImage(new Uint8Array(readFileSync(path)));
}
