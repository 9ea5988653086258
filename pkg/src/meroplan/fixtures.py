"""Bundled demo scenes.

One source of truth for documentation, the CLI demo command, and the
acceptance suite: a 240-unit cubic gate with the goal at its center and zero,
one, or three obstacles, plus a separating-wall scene that cannot be solved.
"""

from __future__ import annotations

from .geometry import Box3, Point3
from .scene import PlanConfig, Scene

_GATE = Box3(Point3(0, 0, 0), Point3(240, 240, 240))
_PARAMS = PlanConfig(growth_step=5.0, min_separation=15.0)


def open_gate() -> Scene:
    """No obstacles: the wavefront fills the whole gate."""
    return Scene(
        gate=_GATE,
        start=Point3(20, 20, 20),
        goal=Point3(120, 120, 120),
        params=_PARAMS,
        name="open-gate",
    )


def single_obstacle() -> Scene:
    """One box sitting on the straight start-goal diagonal."""
    return Scene(
        gate=_GATE,
        start=Point3(20, 20, 20),
        goal=Point3(120, 120, 120),
        obstacles=(Box3(Point3(60, 60, 60), Point3(100, 100, 100)),),
        params=_PARAMS,
        name="single-obstacle",
    )


def three_obstacles() -> Scene:
    """Three boxes spread around the goal."""
    return Scene(
        gate=_GATE,
        start=Point3(20, 20, 20),
        goal=Point3(120, 120, 120),
        obstacles=(
            Box3(Point3(40, 40, 40), Point3(70, 70, 70)),
            Box3(Point3(140, 60, 100), Point3(180, 100, 140)),
            Box3(Point3(90, 150, 60), Point3(130, 190, 100)),
        ),
        params=_PARAMS,
        name="three-obstacles",
    )


def separating_wall() -> Scene:
    """A wall splits the gate completely; planning must fail as stuck."""
    return Scene(
        gate=Box3(Point3(0, 0, 0), Point3(150, 150, 150)),
        start=Point3(20, 75, 75),
        goal=Point3(115, 75, 75),
        obstacles=(Box3(Point3(60, 0, 0), Point3(68, 150, 150)),),
        params=_PARAMS,
        name="separating-wall",
    )


DEMO_SCENES = {
    "open-gate": open_gate,
    "single-obstacle": single_obstacle,
    "three-obstacles": three_obstacles,
}
