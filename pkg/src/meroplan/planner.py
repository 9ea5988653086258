"""Path planning over a generated field set: greedy search, monotonic
filtering, and iterative smoothing.

The search hops between fields, always taking the unvisited field with the
lowest weighted score whose connecting segment stays clear of obstacles.
Filtering keeps the goal-distance sequence strictly decreasing except where a
removal would bridge across an obstacle.  Smoothing relaxes interior
waypoints toward a balance of the original geometry and low curvature;
smoothed segments are NOT re-guaranteed collision-free, only flagged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .fields import FieldSet, PotentialField, generate_field
from .geometry import (
    Box3,
    Point3,
    Segment3,
    euclidean_distance,
    segment_intersects_box,
    weighted_distance,
)
from .scene import PlanConfig, Scene

SMOOTH_COLLISION_WARNING = "smoothed-path-crosses-obstacle"


class PathStage(Enum):
    RAW = "raw"
    FILTERED = "filtered"
    SMOOTHED = "smoothed"


@dataclass(frozen=True)
class Path:
    """A waypoint sequence at one pipeline stage.

    guard_points lists waypoint indices kept only because removing them would
    have dragged a bridging segment through an obstacle.  Raw paths also carry
    the seq values of the fields visited by the search, in visit order.
    """

    waypoints: tuple[Point3, ...]
    stage: PathStage
    guard_points: tuple[int, ...] = ()
    warnings: tuple[str, ...] = ()
    trace: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.waypoints)


@dataclass
class SearchState:
    """Mutable bookkeeping of the greedy hop loop."""

    actual: PotentialField
    visited: set[int] = field(default_factory=set)
    trace: list[int] = field(default_factory=list)


class PlanningError(Exception):
    """Base class for search failures; carries the partial hop trace."""

    def __init__(self, message: str, trace: list[int]):
        super().__init__(message)
        self.trace = list(trace)


class NoReachableFieldError(PlanningError):
    """No field can be connected to the start without crossing an obstacle."""


class StuckError(PlanningError):
    """The hop loop ran out of admissible candidates before reaching the goal."""


def _segment_clear(a: Point3, b: Point3, obstacles: tuple[Box3, ...]) -> bool:
    seg = Segment3(a, b)
    for ob in obstacles:
        if segment_intersects_box(seg, ob):
            return False
    return True


def search_path(fs: FieldSet, scene: Scene) -> Path:
    """Greedy field-hopping from scene.start until within goal tolerance.

    Raises NoReachableFieldError when the start sees no field at all and
    StuckError when every remaining field is blocked; both carry the trace
    of field seq values visited so far.
    """
    cfg = scene.params
    obstacles = scene.active_obstacles
    goal = scene.goal
    start = scene.start
    tolerance = cfg.goal_tolerance

    def finish(waypoints: list[Point3], trace: list[int]) -> Path:
        last = waypoints[-1]
        if last != goal and _segment_clear(last, goal, obstacles):
            waypoints.append(goal)
        return Path(waypoints=tuple(waypoints), stage=PathStage.RAW, trace=tuple(trace))

    if euclidean_distance(start, goal) <= tolerance:
        return finish([start], [])

    def order_key(f: PotentialField):
        return (euclidean_distance(start, f.position), f.seq, f.position.as_tuple())

    first = None
    for f in sorted(fs.fields, key=order_key):
        if _segment_clear(start, f.position, obstacles):
            first = f
            break
    if first is None:
        raise NoReachableFieldError("no field is reachable from the start", [])

    state = SearchState(actual=first, visited={first.seq}, trace=[first.seq])
    waypoints = [start, first.position]
    weights = cfg.weights

    while True:
        here = state.actual.position
        if euclidean_distance(here, goal) <= tolerance:
            return finish(waypoints, state.trace)
        ranked = sorted(
            (f for f in fs.fields if f.seq not in state.visited),
            key=lambda f: (
                weighted_distance(here, f.position, goal, weights),
                f.seq,
                f.position.as_tuple(),
            ),
        )
        chosen = None
        for f in ranked:
            if _segment_clear(here, f.position, obstacles):
                chosen = f
                break
        if chosen is None:
            raise StuckError(
                "no admissible field remains before reaching the goal", state.trace
            )
        state.actual = chosen
        state.visited.add(chosen.seq)
        state.trace.append(chosen.seq)
        waypoints.append(chosen.position)


def _collapse_distance_ties(dists: list[float]) -> list[int]:
    """Indices surviving the tie rule: inside a run of consecutive equal
    distances only the member whose original neighbors lie closest to the
    goal is kept.  Runs touching an endpoint collapse to that endpoint."""
    n = len(dists)
    keep = []
    i = 0
    while i < n:
        j = i
        while j + 1 < n and dists[j + 1] == dists[i]:
            j += 1
        if j == i:
            keep.append(i)
        elif i == 0:
            keep.append(0)
        elif j == n - 1:
            keep.append(n - 1)
        else:
            best = min(
                range(i, j + 1),
                key=lambda k: (dists[k - 1] + dists[k + 1], k),
            )
            keep.append(best)
        i = j + 1
    return keep


def filter_path(p: Path, goal: Point3, obstacles: tuple[Box3, ...] = ()) -> Path:
    """Drop waypoints that do not strictly approach the goal.

    Points whose removal would route the bridging segment through an obstacle
    are retained and reported in guard_points.  Endpoints always survive.
    """
    if p.stage is not PathStage.RAW:
        raise ValueError(f"filter_path expects a raw path, got {p.stage.value}")
    n = len(p.waypoints)
    if n <= 2:
        return Path(waypoints=p.waypoints, stage=PathStage.FILTERED)

    dists = [euclidean_distance(w, goal) for w in p.waypoints]
    survivors = _collapse_distance_ties(dists)
    if survivors[0] != 0:
        survivors.insert(0, 0)
    if survivors[-1] != n - 1:
        survivors.append(n - 1)

    kept = [0]
    last_dist = dists[0]
    for idx in survivors[1:-1]:
        if dists[idx] < last_dist:
            kept.append(idx)
            last_dist = dists[idx]
    kept.append(n - 1)

    if not obstacles:
        return Path(waypoints=tuple(p.waypoints[i] for i in kept), stage=PathStage.FILTERED)

    # Feasibility repair: where a bridge crosses an obstacle, re-insert the
    # dropped originals up to the first point that can see the far end.
    final: list[int] = [kept[0]]
    guards: list[int] = []
    for nxt in kept[1:]:
        cur = final[-1]
        if not _segment_clear(p.waypoints[cur], p.waypoints[nxt], obstacles):
            k = cur + 1
            while k < nxt and not _segment_clear(p.waypoints[k], p.waypoints[nxt], obstacles):
                k += 1
            for idx in range(cur + 1, k + 1):
                final.append(idx)
                guards.append(idx)
        final.append(nxt)

    positions = {orig: out for out, orig in enumerate(final)}
    return Path(
        waypoints=tuple(p.waypoints[i] for i in final),
        stage=PathStage.FILTERED,
        guard_points=tuple(positions[g] for g in guards),
    )


def smooth_path(p: Path, cfg: PlanConfig, obstacles: tuple[Box3, ...] = ()) -> Path:
    """Relax interior waypoints: y_k += alpha*(x_k - y_k) + beta*(y_{k-1} + y_{k+1} - 2*y_k).

    Endpoints never move.  Sweeps run until the largest per-coordinate change
    drops below smooth_tolerance or smooth_max_iters sweeps have run.  If the
    smoothed polyline crosses an obstacle the path carries a warning; the
    caller decides whether to fall back to its input.
    """
    if p.stage is not PathStage.FILTERED:
        raise ValueError(f"smooth_path expects a filtered path, got {p.stage.value}")
    n = len(p.waypoints)
    if n < 3:
        return Path(waypoints=p.waypoints, stage=PathStage.SMOOTHED)

    x = [list(w.as_tuple()) for w in p.waypoints]
    y = [list(row) for row in x]
    alpha = cfg.alpha
    beta = cfg.beta
    for _ in range(cfg.smooth_max_iters):
        max_change = 0.0
        for k in range(1, n - 1):
            yk = y[k]
            xk = x[k]
            prev = y[k - 1]
            nxt = y[k + 1]
            for c in range(3):
                delta = alpha * (xk[c] - yk[c]) + beta * (prev[c] + nxt[c] - 2.0 * yk[c])
                yk[c] += delta
                if delta < 0.0:
                    delta = -delta
                if delta > max_change:
                    max_change = delta
        if max_change < cfg.smooth_tolerance:
            break

    waypoints = tuple(
        p.waypoints[k] if k in (0, n - 1) else Point3(*y[k]) for k in range(n)
    )
    warnings: tuple[str, ...] = ()
    for a, b in zip(waypoints, waypoints[1:]):
        if not _segment_clear(a, b, obstacles):
            warnings = (SMOOTH_COLLISION_WARNING,)
            break
    return Path(waypoints=waypoints, stage=PathStage.SMOOTHED, warnings=warnings)


@dataclass(frozen=True)
class PlanResult:
    """Everything one full pipeline run produces."""

    field_set: FieldSet
    raw: Path
    filtered: Path
    smoothed: Path


def plan(scene: Scene) -> PlanResult:
    """Run the full pipeline: generate fields, search, filter, smooth."""
    fs = generate_field(scene)
    obstacles = scene.active_obstacles
    raw = search_path(fs, scene)
    filtered = filter_path(raw, scene.goal, obstacles)
    smoothed = smooth_path(filtered, scene.params, obstacles)
    return PlanResult(field_set=fs, raw=raw, filtered=filtered, smoothed=smoothed)


def path_length(p: Path) -> float:
    return sum(euclidean_distance(a, b) for a, b in zip(p.waypoints, p.waypoints[1:]))


def dump_path(p: Path, scene_ref: str = "") -> str:
    """Plot-ready text: stage header, then one `index x y z` per line."""
    lines = [f"# stage={p.stage.value} scene={scene_ref or 'unnamed'}"]
    for i, w in enumerate(p.waypoints):
        lines.append(f"{i} {w.x} {w.y} {w.z}")
    return "\n".join(lines) + "\n"


def dump_path_json(p: Path, scene_ref: str = "") -> str:
    """The same waypoints as a structured document."""
    doc = {
        "stage": p.stage.value,
        "scene": scene_ref,
        "waypoints": [list(w.as_tuple()) for w in p.waypoints],
        "guard_points": list(p.guard_points),
        "warnings": list(p.warnings),
    }
    return json.dumps(doc, indent=2) + "\n"
