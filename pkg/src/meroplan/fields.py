"""Potential-field generation: a FIFO wavefront grown outward from the goal.

Each processed field spawns up to 24 neighbor candidates (the 26-cell cube
ring without the two pure-z moves) in a fixed orientation that alternates
between a clockwise and an anticlockwise sweep on every processed field.
Candidates are kept only when they stay inside the gate, clear of obstacles,
and at least min_separation away from every field accepted so far.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .geometry import Box3, Point3
from .scene import PlanConfig, Scene

# In-plane sweep orders; layers follow at z=0, z-offset, z+offset.
_RING_CW = ((-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1))
_RING_ACW = ((-1, -1), (0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0))
_LAYERS = (0, -1, 1)

_OFFSETS_CW = tuple((sx, sy, sz) for sz in _LAYERS for sx, sy in _RING_CW)
_OFFSETS_ACW = tuple((sx, sy, sz) for sz in _LAYERS for sx, sy in _RING_ACW)


class Orientation(Enum):
    CLOCKWISE = "clockwise"
    ANTICLOCKWISE = "anticlockwise"

    @property
    def flipped(self) -> "Orientation":
        if self is Orientation.CLOCKWISE:
            return Orientation.ANTICLOCKWISE
        return Orientation.CLOCKWISE


@dataclass(frozen=True)
class PotentialField:
    """A field sample: position, distance value d, and creation rank seq."""

    position: Point3
    d: float
    seq: int


@dataclass(frozen=True)
class FieldSet:
    """All accepted fields in creation order plus provenance.

    `truncated` is set when the max_fields budget stopped the expansion while
    work was still queued; it is a size cap, not an error.
    """

    fields: tuple[PotentialField, ...]
    scene_ref: str
    params_used: PlanConfig
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.fields)


@dataclass
class GenerationHooks:
    """Optional observers for the expansion loop.

    field_processed(step, field, orientation) fires when a queued field is
    popped; field_accepted(child, parent) fires for every accepted candidate.
    """

    field_processed: Callable[[int, PotentialField, Orientation], None] | None = None
    field_accepted: Callable[[PotentialField, PotentialField], None] | None = None


def generate_neighbors(center: Point3, offset: float, orientation: Orientation) -> list[Point3]:
    """The 24 candidate positions around `center`, in sweep order."""
    table = _OFFSETS_CW if orientation is Orientation.CLOCKWISE else _OFFSETS_ACW
    cx, cy, cz = center.x, center.y, center.z
    return [Point3(cx + sx * offset, cy + sy * offset, cz + sz * offset) for sx, sy, sz in table]


class _SeparationGrid:
    """Uniform hash grid answering "is any stored point closer than r"."""

    def __init__(self, r: float):
        self._inv = 1.0 / r
        self._r2 = r * r
        self._cells: dict[tuple[int, int, int], list[tuple[float, float, float]]] = {}

    def add(self, p: Point3) -> None:
        key = (
            math.floor(p.x * self._inv),
            math.floor(p.y * self._inv),
            math.floor(p.z * self._inv),
        )
        self._cells.setdefault(key, []).append((p.x, p.y, p.z))

    def any_within(self, p: Point3) -> bool:
        px, py, pz = p.x, p.y, p.z
        kx = math.floor(px * self._inv)
        ky = math.floor(py * self._inv)
        kz = math.floor(pz * self._inv)
        cells = self._cells
        r2 = self._r2
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for dz in (-1, 0, 1):
                    bucket = cells.get((kx + dx, ky + dy, kz + dz))
                    if not bucket:
                        continue
                    for x, y, z in bucket:
                        ex = x - px
                        ey = y - py
                        ez = z - pz
                        if ex * ex + ey * ey + ez * ez < r2:
                            return True
        return False


def generate_field(scene: Scene, hooks: GenerationHooks | None = None) -> FieldSet:
    """Grow the potential field set from scene.goal.

    The seed field sits at the goal with d = 0.  Children of a field with
    distance value d get d + growth_step, placed at that same spatial offset
    from their parent, floored at min_separation so a separation larger than
    the growth step cannot strangle the expansion at the seed.
    """
    cfg = scene.params
    gate = scene.gate
    obstacles = scene.active_obstacles
    on_processed = hooks.field_processed if hooks else None
    on_accepted = hooks.field_accepted if hooks else None

    seed = PotentialField(position=scene.goal, d=0.0, seq=0)
    fields: list[PotentialField] = [seed]
    grid = _SeparationGrid(cfg.min_separation)
    grid.add(seed.position)
    queue: deque[PotentialField] = deque([seed])

    orientation = Orientation.CLOCKWISE
    step = 0
    budget = cfg.max_fields
    while queue and len(fields) < budget:
        parent = queue.popleft()
        if on_processed:
            on_processed(step, parent, orientation)
        child_d = parent.d + cfg.growth_step
        offset = child_d if child_d >= cfg.min_separation else cfg.min_separation
        for pos in generate_neighbors(parent.position, offset, orientation):
            if len(fields) >= budget:
                break
            if not gate.contains(pos):
                continue
            hit = False
            for ob in obstacles:
                if ob.contains(pos):
                    hit = True
                    break
            if hit:
                continue
            if grid.any_within(pos):
                continue
            child = PotentialField(position=pos, d=child_d, seq=len(fields))
            fields.append(child)
            grid.add(pos)
            queue.append(child)
            if on_accepted:
                on_accepted(child, parent)
        orientation = orientation.flipped
        step += 1

    return FieldSet(
        fields=tuple(fields),
        scene_ref=scene.name,
        params_used=cfg,
        truncated=bool(queue),
    )


def dump_fields(fs: FieldSet) -> str:
    """Plot-ready text: a parameter header, then one `seq x y z d` per line."""
    cfg = fs.params_used
    header = "# scene={} {}".format(
        fs.scene_ref or "unnamed",
        " ".join(f"{k}={v}" for k, v in cfg.as_flat_dict().items()),
    )
    lines = [header]
    for f in fs.fields:
        p = f.position
        lines.append(f"{f.seq} {p.x} {p.y} {p.z} {f.d}")
    return "\n".join(lines) + "\n"
