export type Vec2 = readonly [number, number];
export type Vec3 = readonly [number, number, number];

export type CaptureErrorCode =
  | "image-error"
  | "config-error"
  | "missing-markers"
  | "ambiguous-markers"
  | "degenerate-configuration"
  | "class-missing-in-view"
  | "x-inconsistency";

/** All failures surface as one error type with a machine-readable code. */
export class CaptureError extends Error {
  readonly code: CaptureErrorCode;

  constructor(code: CaptureErrorCode, message: string) {
    super(message);
    this.name = "CaptureError";
    this.code = code;
  }
}
