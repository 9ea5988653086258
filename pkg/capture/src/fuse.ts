import { CaptureError, type Vec2, type Vec3 } from "./types.js";

/**
 * Join per-class world positions from the two views into 3D points.
 *
 * The top view supplies (x, y), the side view supplies z; both measure x
 * independently, and the two estimates must agree within
 * xTolerance * gateWidth or the class is rejected as inconsistent.
 * A class seen in only one view is an error; a class seen in neither is
 * simply absent from the result.
 */
export function fuseViews(
  topPoints: ReadonlyMap<string, Vec2>,
  sidePoints: ReadonlyMap<string, Vec2>,
  gateWidth: number,
  xTolerance: number,
): Map<string, Vec3> {
  const fused = new Map<string, Vec3>();
  const names = new Set([...topPoints.keys(), ...sidePoints.keys()]);
  const limit = xTolerance * gateWidth;
  for (const name of names) {
    const top = topPoints.get(name);
    const side = sidePoints.get(name);
    if (!top || !side) {
      const seen = top ? "top" : "side";
      const missing = top ? "side" : "top";
      throw new CaptureError(
        "class-missing-in-view",
        `class "${name}" was detected in the ${seen} view but not the ${missing} view`,
      );
    }
    const gap = Math.abs(top[0] - side[0]);
    if (gap > limit) {
      throw new CaptureError(
        "x-inconsistency",
        `class "${name}": top view x=${top[0]} vs side view x=${side[0]} ` +
          `differ by ${gap}, over the ${limit} limit`,
      );
    }
    fused.set(name, [top[0], top[1], side[1]]);
  }
  return fused;
}
