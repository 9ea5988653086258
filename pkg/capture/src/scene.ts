import type { CaptureConfig, ViewConfig } from "./config.js";
import { detectMarkers, missingClasses, singleMarker, type DetectedMarker } from "./detect.js";
import { fuseViews } from "./fuse.js";
import { applyHomography, computeHomography } from "./homography.js";
import type { RasterImage } from "./image.js";
import { CaptureError, type Vec2, type Vec3 } from "./types.js";

function round6(x: number): number {
  return Number(x.toFixed(6));
}

/** World rectangle the four gate corners map onto, in gateOrder. */
function cornerRectangle(view: ViewConfig): Vec2[] {
  const [w, h] = view.extent;
  return [
    [0, 0],
    [w, 0],
    [w, h],
    [0, h],
  ];
}

/**
 * Detect, calibrate, and project one view: every non-gate class that
 * appears becomes a world-plane point.
 */
function processView(
  image: RasterImage,
  cfg: CaptureConfig,
  view: ViewConfig,
  viewName: string,
): Map<string, Vec2> {
  const detections = detectMarkers(image, cfg);

  const nonGate = Object.entries(cfg.colors)
    .filter(([, c]) => c.role !== "gate-marker")
    .map(([name]) => name);
  const required = [
    ...view.gateOrder,
    ...nonGate.filter((name) => cfg.colors[name]!.role !== "obstacle"),
  ];
  const missing = missingClasses(detections, required);
  if (missing.length > 0) {
    throw new CaptureError(
      "missing-markers",
      `${viewName} view: no blobs for required class(es) ${missing.map((n) => `"${n}"`).join(", ")}`,
    );
  }

  const cornerPixels = view.gateOrder.map(
    (name) => singleMarker(detections, name, viewName, true)!.centroid as Vec2,
  );
  const h = computeHomography(cornerPixels, cornerRectangle(view));

  const points = new Map<string, Vec2>();
  for (const name of nonGate) {
    const required = cfg.colors[name]!.role !== "obstacle";
    const marker: DetectedMarker | undefined = singleMarker(detections, name, viewName, required);
    if (marker) points.set(name, applyHomography(h, marker.centroid as Vec2));
  }
  return points;
}

/**
 * Two images in, one scene file out.
 *
 * The gate box spans [0,0,0] .. [top width, top depth, side height] from the
 * measured view extents; start and goal come from their fused markers, and
 * each obstacle marker becomes an axis-aligned cube of cfg.obstacleEdge
 * centered on its fused point. The emitted text is not validated against
 * planner-side rules (a goal outside the gate stays outside; downstream
 * validation is the planner's job).
 */
export function buildScene(top: RasterImage, side: RasterImage, cfg: CaptureConfig): string {
  const topPoints = processView(top, cfg, cfg.views.top, "top");
  const sidePoints = processView(side, cfg, cfg.views.side, "side");

  const gateWidth = cfg.views.top.extent[0];
  const fused = fuseViews(topPoints, sidePoints, gateWidth, cfg.xTolerance);

  const byRole = (role: "start" | "goal"): Vec3 => {
    const name = Object.keys(cfg.colors).find((n) => cfg.colors[n]!.role === role)!;
    return fused.get(name)!;
  };

  const obstacles = Object.keys(cfg.colors)
    .filter((name) => cfg.colors[name]!.role === "obstacle" && fused.has(name))
    .map((name) => {
      const c = fused.get(name)!;
      const r = cfg.obstacleEdge / 2;
      return {
        min: c.map((v) => round6(v - r)),
        max: c.map((v) => round6(v + r)),
      };
    });

  const doc = {
    gate: {
      min: [0, 0, 0],
      max: [
        round6(cfg.views.top.extent[0]),
        round6(cfg.views.top.extent[1]),
        round6(cfg.views.side.extent[1]),
      ],
    },
    start: byRole("start").map(round6),
    goal: byRole("goal").map(round6),
    obstacles,
  };
  return JSON.stringify(doc, null, 2) + "\n";
}

/**
 * Structural check that emitted text fits the planner's scene grammar:
 * known keys only, points are 3 finite numbers, boxes carry min/max points.
 * Deliberately free of planner imports so this package tests alone.
 */
export function assertSceneShape(text: string): void {
  const fail = (msg: string): never => {
    throw new CaptureError("config-error", `scene shape: ${msg}`);
  };
  const isPoint = (v: unknown): boolean =>
    Array.isArray(v) && v.length === 3 && v.every((c) => typeof c === "number" && Number.isFinite(c));
  const isBox = (v: unknown): boolean => {
    if (typeof v !== "object" || v === null || Array.isArray(v)) return false;
    const keys = Object.keys(v as object);
    const box = v as { min?: unknown; max?: unknown };
    return keys.every((k) => k === "min" || k === "max") && isPoint(box.min) && isPoint(box.max);
  };

  const doc: unknown = JSON.parse(text);
  if (typeof doc !== "object" || doc === null || Array.isArray(doc)) fail("root must be an object");
  const obj = doc as Record<string, unknown>;
  const allowed = ["gate", "start", "goal", "obstacles", "params"];
  for (const key of Object.keys(obj)) {
    if (!allowed.includes(key)) fail(`unknown key "${key}"`);
  }
  if (!isBox(obj["gate"])) fail("gate must be {min, max} of 3-vectors");
  if (!isPoint(obj["start"])) fail("start must be a 3-vector");
  if (!isPoint(obj["goal"])) fail("goal must be a 3-vector");
  if (obj["obstacles"] !== undefined) {
    if (!Array.isArray(obj["obstacles"]) || !obj["obstacles"].every(isBox)) {
      fail("obstacles must be a list of {min, max} boxes");
    }
  }
}
