import type { HsvRange } from "./color.js";
import { CaptureError } from "./types.js";

export type Role = "gate-marker" | "obstacle" | "start" | "goal";

export interface ColorClass extends HsvRange {
  readonly role: Role;
}

/**
 * One camera view. gateOrder names the four gate-marker classes in the
 * order that maps them onto the measured rectangle's corners
 * (0,0) -> (w,0) -> (w,h) -> (0,h); extent is that rectangle [w, h] in
 * world units (top view: width x depth along y; side view: width x height
 * along z).
 */
export interface ViewConfig {
  readonly gateOrder: readonly [string, string, string, string];
  readonly extent: readonly [number, number];
}

export interface CaptureConfig {
  readonly colors: Readonly<Record<string, ColorClass>>;
  readonly views: { readonly top: ViewConfig; readonly side: ViewConfig };
  /** Edge length of the cube reconstructed around each obstacle marker. */
  readonly obstacleEdge: number;
  /** Blobs smaller than this many pixels are noise. */
  readonly minBlobArea: number;
  /** Allowed gap between the two views' x estimates, as a fraction of gate width. */
  readonly xTolerance: number;
}

const ROLES: readonly Role[] = ["gate-marker", "obstacle", "start", "goal"];

function fail(message: string): never {
  throw new CaptureError("config-error", message);
}

function expectKeys(obj: Record<string, unknown>, allowed: string[], where: string): void {
  for (const key of Object.keys(obj)) {
    if (!allowed.includes(key)) fail(`${where}: unknown key "${key}"`);
  }
}

function asObject(value: unknown, where: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    fail(`${where}: expected an object`);
  }
  return value as Record<string, unknown>;
}

function asNumber(value: unknown, where: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    fail(`${where}: expected a finite number`);
  }
  return value;
}

function asPair(value: unknown, where: string): [number, number] {
  if (!Array.isArray(value) || value.length !== 2) {
    fail(`${where}: expected [min, max]`);
  }
  return [asNumber(value[0], `${where}[0]`), asNumber(value[1], `${where}[1]`)];
}

function asRange(value: unknown, where: string, lo: number, hi: number, wrap: boolean): [number, number] {
  const [a, b] = asPair(value, where);
  if (a < lo || a > hi || b < lo || b > hi) fail(`${where}: bounds must lie in [${lo}, ${hi}]`);
  if (!wrap && a > b) fail(`${where}: min exceeds max`);
  return [a, b];
}

function parseColorClass(value: unknown, where: string): ColorClass {
  const obj = asObject(value, where);
  expectKeys(obj, ["role", "hue", "sat", "val"], where);
  const role = obj["role"];
  if (typeof role !== "string" || !ROLES.includes(role as Role)) {
    fail(`${where}.role: expected one of ${ROLES.join(", ")}`);
  }
  return {
    role: role as Role,
    hue: asRange(obj["hue"], `${where}.hue`, 0, 360, true),
    sat: asRange(obj["sat"], `${where}.sat`, 0, 1, false),
    val: asRange(obj["val"], `${where}.val`, 0, 1, false),
  };
}

function parseView(
  value: unknown,
  where: string,
  colors: Record<string, ColorClass>,
): ViewConfig {
  const obj = asObject(value, where);
  expectKeys(obj, ["gateOrder", "extent"], where);
  const order = obj["gateOrder"];
  if (!Array.isArray(order) || order.length !== 4) {
    fail(`${where}.gateOrder: expected exactly 4 class names`);
  }
  for (const name of order) {
    if (typeof name !== "string") fail(`${where}.gateOrder: names must be strings`);
    const cls = colors[name];
    if (!cls) fail(`${where}.gateOrder: unknown color class "${name}"`);
    if (cls.role !== "gate-marker") fail(`${where}.gateOrder: "${name}" is not a gate-marker class`);
  }
  if (new Set(order).size !== 4) fail(`${where}.gateOrder: corner classes must be distinct`);
  const extent = asPair(obj["extent"], `${where}.extent`);
  if (extent[0] <= 0 || extent[1] <= 0) fail(`${where}.extent: measured distances must be positive`);
  return { gateOrder: order as [string, string, string, string], extent };
}

/** Parse and validate a capture-config document (strict; unknown keys rejected). */
export function parseConfig(text: string): CaptureConfig {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (err) {
    fail(`not valid JSON: ${(err as Error).message}`);
  }
  const root = asObject(doc, "config");
  expectKeys(root, ["colors", "views", "obstacleEdge", "minBlobArea", "xTolerance"], "config");

  const colorsIn = asObject(root["colors"], "colors");
  const colors: Record<string, ColorClass> = {};
  for (const [name, value] of Object.entries(colorsIn)) {
    colors[name] = parseColorClass(value, `colors.${name}`);
  }
  for (const role of ["start", "goal"] as const) {
    const count = Object.values(colors).filter((c) => c.role === role).length;
    if (count !== 1) {
      fail(`colors: exactly one class with role "${role}" is required, found ${count}`);
    }
  }

  const viewsIn = asObject(root["views"], "views");
  expectKeys(viewsIn, ["top", "side"], "views");
  const top = parseView(viewsIn["top"], "views.top", colors);
  const side = parseView(viewsIn["side"], "views.side", colors);

  const obstacleEdge = asNumber(root["obstacleEdge"] ?? 0.1, "obstacleEdge");
  if (obstacleEdge <= 0) fail("obstacleEdge: must be positive");
  const minBlobArea = asNumber(root["minBlobArea"] ?? 1, "minBlobArea");
  if (!Number.isInteger(minBlobArea) || minBlobArea < 1) fail("minBlobArea: must be a positive integer");
  const xTolerance = asNumber(root["xTolerance"] ?? 0.05, "xTolerance");
  if (xTolerance <= 0 || xTolerance >= 1) fail("xTolerance: must lie in (0, 1)");

  return { colors, views: { top, side }, obstacleEdge, minBlobArea, xTolerance };
}
