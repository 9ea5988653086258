export { inRange, rgbToHsv, type Hsv, type HsvRange } from "./color.js";
export { parseConfig, type CaptureConfig, type ColorClass, type Role, type ViewConfig } from "./config.js";
export { detectMarkers, missingClasses, singleMarker, type DetectedMarker } from "./detect.js";
export { fuseViews } from "./fuse.js";
export { applyHomography, computeHomography, type Homography } from "./homography.js";
export { decodeImage, decodePpm, encodePpm, loadImage, type RasterImage } from "./image.js";
export { assertSceneShape, buildScene } from "./scene.js";
export { CaptureError, type CaptureErrorCode, type Vec2, type Vec3 } from "./types.js";
export { run } from "./cli.js";
