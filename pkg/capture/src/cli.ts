#!/usr/bin/env node
/**
 * capture --top IMG --side IMG --config CFG --out SCENE
 *
 * Reads a top-view and a side-view image of the marked-up workspace plus a
 * capture config, writes the reconstructed scene file.
 * Exit codes: 0 success, 1 usage error, 2 capture error (config, detection,
 * calibration, fusion), 4 I/O error.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { parseConfig } from "./config.js";
import { loadImage } from "./image.js";
import { buildScene } from "./scene.js";
import { CaptureError } from "./types.js";

export function run(argv: string[]): number {
  let args: { top?: string; side?: string; config?: string; out?: string };
  try {
    args = parseArgs({
      args: argv,
      options: {
        top: { type: "string" },
        side: { type: "string" },
        config: { type: "string" },
        out: { type: "string" },
      },
    }).values;
  } catch (err) {
    console.error(`usage error: ${(err as Error).message}`);
    return 1;
  }
  const missing = (["top", "side", "config", "out"] as const).filter((k) => !args[k]);
  if (missing.length > 0) {
    console.error(`usage error: missing ${missing.map((k) => `--${k}`).join(", ")}`);
    return 1;
  }

  try {
    const cfg = parseConfig(readFileSync(args.config!, "utf-8"));
    const scene = buildScene(loadImage(args.top!), loadImage(args.side!), cfg);
    writeFileSync(args.out!, scene, "utf-8");
    console.log(`wrote ${args.out}`);
    return 0;
  } catch (err) {
    if (err instanceof CaptureError) {
      console.error(`capture error [${err.code}]: ${err.message}`);
      return 2;
    }
    if (err instanceof Error && "code" in err && typeof err.code === "string") {
      console.error(`i/o error: ${err.message}`);
      return 4;
    }
    throw err;
  }
}

const invokedDirectly = process.argv[1] && import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
