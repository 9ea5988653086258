"""End-to-end tests for the console entry point.

Everything drives run() in-process, which is the same code path the
installed script takes, and checks exit codes, emitted files, and
byte-level determinism.
"""

import json

from meroplan.cli import EXIT_IO, EXIT_OK, EXIT_PLANNING, EXIT_SCENE, EXIT_USAGE, run
from meroplan.fixtures import separating_wall
from meroplan.scene import serialize_scene

OPEN_DOC = {
    "gate": {"min": [0, 0, 0], "max": [12, 12, 12]},
    "start": [2, 2, 2],
    "goal": [9, 9, 9],
    "obstacles": [],
    "params": {"growth_step": 1.0},
}

PLAN_FILES = ["fields.txt", "path_raw.txt", "path_filtered.txt", "path_smoothed.txt", "summary.json"]


def write_scene(tmp_path, doc, name="scene.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------- plan

def test_plan_open_scene_success(tmp_path, capsys):
    scene = write_scene(tmp_path, OPEN_DOC)
    out = tmp_path / "out"
    assert run(["plan", "--scene", scene, "--out-dir", str(out)]) == EXIT_OK
    for name in PLAN_FILES:
        assert (out / name).is_file(), name
    summary = json.loads((out / "summary.json").read_text())
    assert summary["scene"] == "scene.json"
    assert summary["field_count"] >= 1
    assert summary["lengths"]["filtered"] <= summary["lengths"]["raw"] + 1e-9
    assert summary["waypoints"]["filtered"] <= summary["waypoints"]["raw"]
    assert summary["warnings"] == []
    assert summary["smoothed_fallback"] is False
    assert "fields" in capsys.readouterr().out


def test_plan_path_files_share_waypoint_counts(tmp_path):
    scene = write_scene(tmp_path, OPEN_DOC)
    out = tmp_path / "out"
    run(["plan", "--scene", scene, "--out-dir", str(out)])
    summary = json.loads((out / "summary.json").read_text())
    for stage in ("raw", "filtered", "smoothed"):
        text = (out / f"path_{stage}.txt").read_text()
        lines = text.splitlines()
        assert lines[0] == f"# stage={stage} scene=scene.json"
        assert len(lines) - 1 == summary["waypoints"][stage]


def test_plan_emit_trace(tmp_path):
    scene = write_scene(tmp_path, OPEN_DOC)
    out = tmp_path / "out"
    run(["plan", "--scene", scene, "--out-dir", str(out), "--emit-trace"])
    lines = (out / "trace.txt").read_text().splitlines()
    assert lines[0] == "# scene=scene.json outcome=ok"
    seqs = [int(s) for s in lines[1:]]
    assert seqs and len(seqs) == len(set(seqs))


def test_plan_stuck_scene_exits_three(tmp_path, capsys):
    scene_path = tmp_path / "wall.json"
    scene_path.write_text(serialize_scene(separating_wall()), encoding="utf-8")
    out = tmp_path / "out"
    code = run(["plan", "--scene", str(scene_path), "--out-dir", str(out), "--emit-trace"])
    assert code == EXIT_PLANNING
    assert "planning failed" in capsys.readouterr().err
    # Fields were generated before the failure; the trace records the attempt.
    assert (out / "fields.txt").is_file()
    lines = (out / "trace.txt").read_text().splitlines()
    assert lines[0] == "# scene=wall.json outcome=failed"
    assert len(lines) > 1
    assert not (out / "path_raw.txt").exists()


def test_plan_invalid_scene_exits_two(tmp_path, capsys):
    doc = dict(OPEN_DOC, goal=[13, 13, 13])  # outside the gate
    scene = write_scene(tmp_path, doc)
    assert run(["plan", "--scene", scene, "--out-dir", str(tmp_path / "o")]) == EXIT_SCENE
    assert "goal-outside-gate" in capsys.readouterr().err


def test_plan_fallback_flag_accepted(tmp_path):
    scene = write_scene(tmp_path, OPEN_DOC)
    out = tmp_path / "out"
    code = run([
        "plan", "--scene", scene, "--out-dir", str(out), "--fallback-on-smooth-collision",
    ])
    assert code == EXIT_OK
    summary = json.loads((out / "summary.json").read_text())
    assert summary["smoothed_fallback"] is False  # nothing to fall back from


# ---------------------------------------------------------------- determinism

def test_plan_twice_is_byte_identical(tmp_path):
    scene = write_scene(tmp_path, OPEN_DOC)
    outs = []
    for sub in ("a", "b"):
        out = tmp_path / sub
        run(["plan", "--scene", scene, "--out-dir", str(out), "--emit-trace"])
        outs.append(out)
    names = sorted(p.name for p in outs[0].iterdir())
    assert names == sorted(p.name for p in outs[1].iterdir())
    for name in names:
        assert (outs[0] / name).read_bytes() == (outs[1] / name).read_bytes(), name


# ---------------------------------------------------------------- fields

def test_fields_command_writes_only_field_dump(tmp_path, capsys):
    scene = write_scene(tmp_path, OPEN_DOC)
    out = tmp_path / "out"
    assert run(["fields", "--scene", scene, "--out-dir", str(out)]) == EXIT_OK
    assert [p.name for p in out.iterdir()] == ["fields.txt"]
    assert "fields" in capsys.readouterr().out


def test_fields_override_flag_reaches_params(tmp_path):
    scene = write_scene(tmp_path, OPEN_DOC)
    out = tmp_path / "out"
    run(["fields", "--scene", scene, "--out-dir", str(out), "--growth-step", "2.0"])
    header = (out / "fields.txt").read_text().splitlines()[0]
    assert "growth_step=2.0" in header


def test_fields_preset_flag(tmp_path):
    doc = {
        "gate": {"min": [0, 0, 0], "max": [60, 60, 60]},
        "start": [5, 5, 5],
        "goal": [30, 30, 30],
    }
    scene = write_scene(tmp_path, doc)
    out = tmp_path / "out"
    assert run(["fields", "--scene", scene, "--out-dir", str(out), "--preset", "paper-120"]) == EXIT_OK
    header = (out / "fields.txt").read_text().splitlines()[0]
    assert "growth_step=5.0" in header
    assert "min_separation=15.0" in header


def test_unknown_preset_exits_two(tmp_path, capsys):
    scene = write_scene(tmp_path, OPEN_DOC)
    code = run(["fields", "--scene", scene, "--out-dir", str(tmp_path / "o"), "--preset", "nope"])
    assert code == EXIT_SCENE
    assert "unknown preset" in capsys.readouterr().err


# ---------------------------------------------------------------- validate

def test_validate_clean_scene(tmp_path, capsys):
    scene = write_scene(tmp_path, OPEN_DOC)
    assert run(["validate", "--scene", scene]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "ok"


def test_validate_goal_in_obstacle(tmp_path, capsys):
    doc = dict(OPEN_DOC, obstacles=[{"min": [8, 8, 8], "max": [10, 10, 10]}])
    scene = write_scene(tmp_path, doc)
    assert run(["validate", "--scene", scene]) == EXIT_SCENE
    out = capsys.readouterr().out
    assert "goal-in-obstacle" in out
    assert out.startswith("error ")


def test_validate_reports_warning_without_failing(tmp_path, capsys):
    doc = dict(OPEN_DOC, obstacles=[{"min": [13, 13, 13], "max": [15, 15, 15]}])
    scene = write_scene(tmp_path, doc)
    assert run(["validate", "--scene", scene]) == EXIT_OK
    assert "warning obstacle-outside-gate" in capsys.readouterr().out


def test_validate_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert run(["validate", "--scene", str(path)]) == EXIT_SCENE
    assert "scene error" in capsys.readouterr().err


# ---------------------------------------------------------------- demo

def test_demo_writes_and_plans_every_fixture(tmp_path, capsys):
    out = tmp_path / "demos"
    assert run(["demo", "--out-dir", str(out)]) == EXIT_OK
    subdirs = sorted(p.name for p in out.iterdir())
    assert subdirs == ["open-gate", "single-obstacle", "three-obstacles"]
    for sub in subdirs:
        for name in ["scene.json"] + PLAN_FILES:
            assert (out / sub / name).is_file(), f"{sub}/{name}"
    assert len(capsys.readouterr().out.splitlines()) == 3


# ---------------------------------------------------------------- exit codes

def test_usage_errors_exit_one(capsys):
    assert run([]) == EXIT_USAGE
    assert run(["bogus"]) == EXIT_USAGE
    assert run(["plan"]) == EXIT_USAGE  # --scene is required
    assert run(["plan", "--scene", "x.json", "--max-fields", "many"]) == EXIT_USAGE
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert run(["--help"]) == EXIT_OK
    capsys.readouterr()


def test_missing_scene_file_exits_four(tmp_path, capsys):
    code = run(["plan", "--scene", str(tmp_path / "absent.json"), "--out-dir", str(tmp_path)])
    assert code == EXIT_IO
    assert "i/o error" in capsys.readouterr().err
