"""Command-line interface.

Commands:
    plan      full pipeline; writes fields, all three path stages, a summary
    fields    field generation only
    validate  report scene violations without planning
    demo      write the bundled demo scenes and plan each of them

Exit codes: 0 success, 1 usage error, 2 scene format/validation error,
3 planning failure (no reachable field / stuck), 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath

from .fields import dump_fields, generate_field
from .fixtures import DEMO_SCENES
from .planner import (
    PlanningError,
    SMOOTH_COLLISION_WARNING,
    dump_path,
    filter_path,
    path_length,
    search_path,
    smooth_path,
)
from .scene import (
    PARAM_KEYS,
    Scene,
    SceneFormatError,
    SceneValidationError,
    load_scene,
    serialize_scene,
    validate_scene,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SCENE = 2
EXIT_PLANNING = 3
EXIT_IO = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route it to our own code.
    def error(self, message):
        raise _UsageError(message)


def _add_common(p: argparse.ArgumentParser, with_scene=True) -> None:
    if with_scene:
        p.add_argument("--scene", required=True, help="scene file to load")
    p.add_argument("--out-dir", default="out", help="directory for output files")
    p.add_argument("--preset", help="named parameter bundle, e.g. paper-120")
    p.add_argument("--growth-step", type=float, dest="growth_step")
    p.add_argument("--min-separation", type=float, dest="min_separation")
    p.add_argument("--max-fields", type=int, dest="max_fields")
    p.add_argument("--w-step", type=float, dest="w_step")
    p.add_argument("--w-goal", type=float, dest="w_goal")
    p.add_argument("--goal-tolerance", type=float, dest="goal_tolerance")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--smooth-tol", type=float, dest="smooth_tolerance")
    p.add_argument("--smooth-iters", type=int, dest="smooth_max_iters")


def _build_parser() -> _Parser:
    parser = _Parser(prog="meroplan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("plan", "run the full pipeline on a scene"),
        ("fields", "generate and dump the potential fields only"),
        ("validate", "check a scene file and report violations"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        if name == "plan":
            p.add_argument(
                "--fallback-on-smooth-collision",
                action="store_true",
                help="write the filtered path as the smoothed output when "
                "smoothing introduced an obstacle crossing",
            )
            p.add_argument(
                "--emit-trace",
                action="store_true",
                help="write the visited field sequence, also on failure",
            )
    demo = sub.add_parser("demo", help="write and plan the bundled demo scenes")
    _add_common(demo, with_scene=False)
    return parser


def _overrides(args: argparse.Namespace) -> dict:
    return {k: getattr(args, k, None) for k in PARAM_KEYS}


def _load(args: argparse.Namespace) -> Scene:
    path = FsPath(args.scene)
    text = path.read_text(encoding="utf-8")
    return load_scene(
        text, name=path.name, preset=args.preset, overrides=_overrides(args)
    )


def _write(out_dir: FsPath, name: str, text: str) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(text, encoding="utf-8")


def _plan_into(scene: Scene, out_dir: FsPath, args: argparse.Namespace) -> None:
    """Run the pipeline for `scene`, writing outputs as stages complete."""
    emit_trace = getattr(args, "emit_trace", False)
    fallback = getattr(args, "fallback_on_smooth_collision", False)

    fs = generate_field(scene)
    _write(out_dir, "fields.txt", dump_fields(fs))
    try:
        raw = search_path(fs, scene)
    except PlanningError as exc:
        if emit_trace:
            trace = "".join(f"{seq}\n" for seq in exc.trace)
            _write(out_dir, "trace.txt", f"# scene={scene.name} outcome=failed\n" + trace)
        raise

    obstacles = scene.active_obstacles
    filtered = filter_path(raw, scene.goal, obstacles)
    smoothed = smooth_path(filtered, scene.params, obstacles)
    warnings = list(smoothed.warnings)
    smoothed_out = smoothed
    used_fallback = False
    if fallback and SMOOTH_COLLISION_WARNING in smoothed.warnings:
        smoothed_out = filtered
        used_fallback = True

    _write(out_dir, "path_raw.txt", dump_path(raw, scene.name))
    _write(out_dir, "path_filtered.txt", dump_path(filtered, scene.name))
    _write(out_dir, "path_smoothed.txt", dump_path(smoothed_out, scene.name))
    if emit_trace:
        seqs = "".join(f"{s}\n" for s in raw.trace)
        _write(out_dir, "trace.txt", f"# scene={scene.name} outcome=ok\n" + seqs)

    summary = {
        "scene": scene.name,
        "field_count": len(fs),
        "truncated": fs.truncated,
        "waypoints": {
            "raw": len(raw),
            "filtered": len(filtered),
            "smoothed": len(smoothed_out),
        },
        "lengths": {
            "raw": path_length(raw),
            "filtered": path_length(filtered),
            "smoothed": path_length(smoothed_out),
        },
        "guard_points": list(filtered.guard_points),
        "warnings": warnings,
        "smoothed_fallback": used_fallback,
    }
    _write(out_dir, "summary.json", json.dumps(summary, indent=2) + "\n")
    print(
        f"{scene.name or 'scene'}: {len(fs)} fields, "
        f"{len(raw)} raw -> {len(filtered)} filtered waypoints, "
        f"lengths {path_length(raw):.3f} -> {path_length(smoothed_out):.3f}"
    )


def _cmd_plan(args) -> int:
    scene = _load(args)
    _plan_into(scene, FsPath(args.out_dir), args)
    return EXIT_OK


def _cmd_fields(args) -> int:
    scene = _load(args)
    fs = generate_field(scene)
    _write(FsPath(args.out_dir), "fields.txt", dump_fields(fs))
    print(f"{scene.name or 'scene'}: {len(fs)} fields" + (" (truncated)" if fs.truncated else ""))
    return EXIT_OK


def _cmd_validate(args) -> int:
    path = FsPath(args.scene)
    text = path.read_text(encoding="utf-8")
    try:
        scene = load_scene(text, name=path.name, preset=args.preset, overrides=_overrides(args))
    except SceneValidationError as exc:
        for v in exc.violations:
            print(f"error {v.code} ({v.subject}): {v.message}")
        return EXIT_SCENE
    findings = validate_scene(scene)
    for v in findings:
        print(f"{v.severity} {v.code} ({v.subject}): {v.message}")
    if not findings:
        print("ok")
    return EXIT_OK


def _cmd_demo(args) -> int:
    base = FsPath(args.out_dir)
    for name, factory in DEMO_SCENES.items():
        scene = factory()
        scene_dir = base / name
        _write(scene_dir, "scene.json", serialize_scene(scene))
        _plan_into(scene, scene_dir, args)
    return EXIT_OK


_COMMANDS = {
    "plan": _cmd_plan,
    "fields": _cmd_fields,
    "validate": _cmd_validate,
    "demo": _cmd_demo,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        return _COMMANDS[args.command](args)
    except (SceneFormatError, SceneValidationError) as exc:
        print(f"scene error: {exc}", file=sys.stderr)
        return EXIT_SCENE
    except PlanningError as exc:
        print(f"planning failed: {exc}", file=sys.stderr)
        return EXIT_PLANNING
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
