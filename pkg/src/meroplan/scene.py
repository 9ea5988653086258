"""Scene model: planning parameters, the scene document format, validation.

A scene file is a strict JSON document:

    {
      "gate":      {"min": [x, y, z], "max": [x, y, z]},
      "start":     [x, y, z],
      "goal":      [x, y, z],
      "obstacles": [{"min": [...], "max": [...]}, ...],
      "params":    {"growth_step": 0.5, ...}
    }

`obstacles` and `params` are optional; unknown keys anywhere are rejected so
typos fail loudly instead of silently planning with defaults.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields as dc_fields
from typing import Any, Mapping

from .geometry import Box3, Point3, Weights

# Named parameter bundles for common map scales.  "paper-120" suits maps a few
# hundred units across with a 15-unit field separation.
PRESETS: dict[str, dict[str, float]] = {
    "paper-120": {"growth_step": 5.0, "min_separation": 15.0},
}

_REAL_PARAMS = (
    "growth_step",
    "min_separation",
    "w_step",
    "w_goal",
    "goal_tolerance",
    "alpha",
    "beta",
    "smooth_tolerance",
)
_INT_PARAMS = ("max_fields", "smooth_max_iters")
PARAM_KEYS = _REAL_PARAMS + _INT_PARAMS


class SceneFormatError(ValueError):
    """The scene document is malformed: bad syntax, types, or unknown keys."""


@dataclass(frozen=True)
class Violation:
    """One validation finding; `severity` is "error" or "warning"."""

    code: str
    severity: str
    subject: str
    message: str


class SceneValidationError(ValueError):
    """The scene parsed but violates a structural invariant."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        lines = "; ".join(f"{v.code} ({v.subject}): {v.message}" for v in violations)
        super().__init__(lines)


@dataclass(frozen=True)
class PlanConfig:
    """All tunables of the pipeline.

    min_separation and goal_tolerance default to growth_step when not given
    explicitly (pass None to request that).
    """

    growth_step: float = 0.5
    min_separation: float | None = None
    max_fields: int = 200000
    weights: Weights = field(default_factory=Weights)
    goal_tolerance: float | None = None
    alpha: float = 0.5
    beta: float = 0.1
    smooth_tolerance: float = 1e-6
    smooth_max_iters: int = 10000

    def __post_init__(self) -> None:
        if self.min_separation is None:
            object.__setattr__(self, "min_separation", self.growth_step)
        if self.goal_tolerance is None:
            object.__setattr__(self, "goal_tolerance", self.growth_step)
        for name in ("growth_step", "min_separation", "goal_tolerance", "smooth_tolerance"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v) or v <= 0:
                raise ValueError(f"{name} must be a positive finite real, got {v!r}")
        for name in ("max_fields", "smooth_max_iters"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not (0.0 <= v < 1.0):
                raise ValueError(f"{name} must lie in [0, 1), got {v!r}")
        if self.alpha + self.beta >= 1.0:
            raise ValueError(
                f"alpha + beta must stay below 1 for the smoother to contract, "
                f"got {self.alpha + self.beta}"
            )

    @classmethod
    def from_mapping(cls, params: Mapping[str, Any]) -> "PlanConfig":
        """Build a config from flat scene-file keys (w_step/w_goal for weights)."""
        unknown = set(params) - set(PARAM_KEYS)
        if unknown:
            raise SceneFormatError(f"unknown params keys: {sorted(unknown)}")
        kwargs: dict[str, Any] = {}
        for key in _REAL_PARAMS:
            if key in params:
                v = params[key]
                if isinstance(v, bool) or not isinstance(v, (int, float)):
                    raise SceneFormatError(f"params.{key} must be a number, got {v!r}")
                kwargs[key] = float(v)
        for key in _INT_PARAMS:
            if key in params:
                v = params[key]
                if isinstance(v, bool) or not isinstance(v, int):
                    raise SceneFormatError(f"params.{key} must be an integer, got {v!r}")
                kwargs[key] = v
        w_step = kwargs.pop("w_step", None)
        w_goal = kwargs.pop("w_goal", None)
        if w_step is not None or w_goal is not None:
            kwargs["weights"] = Weights(
                w_step if w_step is not None else 0.5,
                w_goal if w_goal is not None else 1.0,
            )
        try:
            return cls(**kwargs)
        except ValueError as exc:
            raise SceneFormatError(f"params: {exc}") from exc

    def as_flat_dict(self) -> dict[str, Any]:
        return {
            "growth_step": self.growth_step,
            "min_separation": self.min_separation,
            "max_fields": self.max_fields,
            "w_step": self.weights.w_step,
            "w_goal": self.weights.w_goal,
            "goal_tolerance": self.goal_tolerance,
            "alpha": self.alpha,
            "beta": self.beta,
            "smooth_tolerance": self.smooth_tolerance,
            "smooth_max_iters": self.smooth_max_iters,
        }


@dataclass(frozen=True)
class Scene:
    """A planning problem: bounding gate, obstacles, endpoints, parameters."""

    gate: Box3
    start: Point3
    goal: Point3
    obstacles: tuple[Box3, ...] = ()
    params: PlanConfig = field(default_factory=PlanConfig)
    name: str = ""

    @property
    def active_obstacles(self) -> tuple[Box3, ...]:
        """Obstacles clipped to the gate; zero-volume leftovers are dropped."""
        out = []
        for ob in self.obstacles:
            clipped = ob.intersect(self.gate)
            if clipped is not None and clipped.volume > 0.0:
                out.append(clipped)
        return tuple(out)


def validate_scene(scene: Scene) -> list[Violation]:
    """All structural findings, errors first within each subject group."""
    found: list[Violation] = []
    if scene.gate.volume <= 0.0:
        found.append(
            Violation("degenerate-gate", "error", "gate", "gate must have positive volume")
        )
    if not scene.gate.contains(scene.start):
        found.append(
            Violation("start-outside-gate", "error", "start", "start must lie inside the gate")
        )
    if not scene.gate.contains(scene.goal):
        found.append(
            Violation("goal-outside-gate", "error", "goal", "goal must lie inside the gate")
        )
    active = scene.active_obstacles
    for label, point, code in (
        ("start", scene.start, "start-in-obstacle"),
        ("goal", scene.goal, "goal-in-obstacle"),
    ):
        for ob in active:
            if ob.contains(point):
                found.append(
                    Violation(
                        code,
                        "error",
                        label,
                        f"{label} touches obstacle "
                        f"[{ob.min.as_tuple()}, {ob.max.as_tuple()}]",
                    )
                )
                break
    for i, ob in enumerate(scene.obstacles):
        clipped = ob.intersect(scene.gate)
        if clipped is None or clipped.volume <= 0.0:
            found.append(
                Violation(
                    "obstacle-outside-gate",
                    "warning",
                    f"obstacles[{i}]",
                    "no overlap with the gate; the obstacle is ignored",
                )
            )
    return found


def _expect_keys(obj: Mapping[str, Any], allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SceneFormatError(f"unknown keys in {where}: {sorted(unknown)}")


def _as_point(value: Any, where: str) -> Point3:
    if (
        not isinstance(value, list)
        or len(value) != 3
        or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in value)
    ):
        raise SceneFormatError(f"{where} must be an array of 3 numbers")
    try:
        return Point3(float(value[0]), float(value[1]), float(value[2]))
    except ValueError as exc:
        raise SceneFormatError(f"{where}: {exc}") from exc


def _as_box(value: Any, where: str) -> Box3:
    if not isinstance(value, dict):
        raise SceneFormatError(f"{where} must be an object with min and max")
    _expect_keys(value, {"min", "max"}, where)
    if "min" not in value or "max" not in value:
        raise SceneFormatError(f"{where} needs both min and max")
    try:
        return Box3(_as_point(value["min"], f"{where}.min"), _as_point(value["max"], f"{where}.max"))
    except SceneFormatError:
        raise
    except ValueError as exc:
        raise SceneFormatError(f"{where}: {exc}") from exc


def load_scene(
    text: str,
    name: str = "",
    preset: str | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> Scene:
    """Parse, resolve parameters, and validate a scene document.

    Parameter precedence: file params, then `preset`, then `overrides`.
    Raises SceneFormatError for structural problems and SceneValidationError
    when any error-level invariant fails; warnings never block loading.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneFormatError(f"parse error: {exc}") from exc
    if not isinstance(doc, dict):
        raise SceneFormatError("scene document must be a top-level object")
    _expect_keys(doc, {"gate", "start", "goal", "obstacles", "params"}, "scene")
    for key in ("gate", "start", "goal"):
        if key not in doc:
            raise SceneFormatError(f"scene is missing required key {key!r}")

    gate = _as_box(doc["gate"], "gate")
    start = _as_point(doc["start"], "start")
    goal = _as_point(doc["goal"], "goal")

    raw_obstacles = doc.get("obstacles", [])
    if not isinstance(raw_obstacles, list):
        raise SceneFormatError("obstacles must be an array")
    obstacles = tuple(
        _as_box(ob, f"obstacles[{i}]") for i, ob in enumerate(raw_obstacles)
    )

    raw_params = doc.get("params", {})
    if not isinstance(raw_params, dict):
        raise SceneFormatError("params must be an object")
    merged: dict[str, Any] = dict(raw_params)
    if preset is not None:
        if preset not in PRESETS:
            raise SceneFormatError(
                f"unknown preset {preset!r}; available: {sorted(PRESETS)}"
            )
        merged.update(PRESETS[preset])
    if overrides:
        merged.update({k: v for k, v in overrides.items() if v is not None})
    params = PlanConfig.from_mapping(merged)

    scene = Scene(gate=gate, start=start, goal=goal, obstacles=obstacles, params=params, name=name)
    errors = [v for v in validate_scene(scene) if v.severity == "error"]
    if errors:
        raise SceneValidationError(errors)
    return scene


def serialize_scene(scene: Scene) -> str:
    """Scene back to document text; params are written fully resolved."""
    doc = {
        "gate": {
            "min": list(scene.gate.min.as_tuple()),
            "max": list(scene.gate.max.as_tuple()),
        },
        "start": list(scene.start.as_tuple()),
        "goal": list(scene.goal.as_tuple()),
        "obstacles": [
            {"min": list(ob.min.as_tuple()), "max": list(ob.max.as_tuple())}
            for ob in scene.obstacles
        ],
        "params": scene.params.as_flat_dict(),
    }
    return json.dumps(doc, indent=2) + "\n"
