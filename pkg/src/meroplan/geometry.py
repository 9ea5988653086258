"""Geometric kernel: points, axis-aligned boxes, segments, distance measures,
rough-inclusion / proximity of box regions, and segment-box intersection.

Everything here is a pure function over immutable values; collision tests use
closed-set semantics (boundary contact counts as contact).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class InvalidRegionError(ValueError):
    """An operation required a region of positive volume and did not get one."""


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} must have finite coordinates, got {v!r}")


@dataclass(frozen=True)
class Point3:
    """A position in map units."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        # Coerce ints so equality, hashing, and text dumps are uniform.
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not isinstance(v, float):
                object.__setattr__(self, name, float(v))
        _require_finite("Point3", self.x, self.y, self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Segment3:
    """Straight segment between two endpoints (may be degenerate)."""

    a: Point3
    b: Point3


@dataclass(frozen=True)
class Box3:
    """Axis-aligned box spanning [min, max] on every axis.

    Zero extent on an axis is legal; operations that need volume reject
    degenerate boxes themselves.
    """

    min: Point3
    max: Point3

    def __post_init__(self) -> None:
        if (
            self.min.x > self.max.x
            or self.min.y > self.max.y
            or self.min.z > self.max.z
        ):
            raise ValueError("box min must not exceed max on any axis")

    @property
    def volume(self) -> float:
        return (
            (self.max.x - self.min.x)
            * (self.max.y - self.min.y)
            * (self.max.z - self.min.z)
        )

    def contains(self, p: Point3) -> bool:
        """Closed containment: points on a face count as inside."""
        return (
            self.min.x <= p.x <= self.max.x
            and self.min.y <= p.y <= self.max.y
            and self.min.z <= p.z <= self.max.z
        )

    def intersect(self, other: "Box3") -> "Box3 | None":
        """Overlap box, or None when the boxes are strictly apart on an axis.

        Face contact yields a zero-volume box rather than None.
        """
        lx = max(self.min.x, other.min.x)
        ly = max(self.min.y, other.min.y)
        lz = max(self.min.z, other.min.z)
        hx = min(self.max.x, other.max.x)
        hy = min(self.max.y, other.max.y)
        hz = min(self.max.z, other.max.z)
        if lx > hx or ly > hy or lz > hz:
            return None
        return Box3(Point3(lx, ly, lz), Point3(hx, hy, hz))


@dataclass(frozen=True)
class Weights:
    """Scoring weights for the path search: step cost vs. pull toward the goal."""

    w_step: float = 0.5
    w_goal: float = 1.0

    def __post_init__(self) -> None:
        for name, v in (("w_step", self.w_step), ("w_goal", self.w_goal)):
            if not math.isfinite(v) or v <= 0:
                raise ValueError(f"{name} must be a positive finite real, got {v!r}")


def euclidean_distance(p: Point3, q: Point3) -> float:
    dx = p.x - q.x
    dy = p.y - q.y
    dz = p.z - q.z
    return math.sqrt(dx * dx + dy * dy + dz * dz)


def weighted_distance(current: Point3, candidate: Point3, goal: Point3, w: Weights) -> float:
    """Score of moving from `current` to `candidate` while heading for `goal`:
    w_step * d(current, candidate) + w_goal * d(candidate, goal)."""
    return w.w_step * euclidean_distance(current, candidate) + w.w_goal * euclidean_distance(
        candidate, goal
    )


def rough_inclusion_degree(x: Box3, y: Box3) -> float:
    """Degree to which region x is included in region y: vol(x & y) / vol(x).

    The maximal r with "x is part of y to degree r" in the rough-mereology
    sense.  Raises InvalidRegionError when x has zero volume.
    """
    vx = x.volume
    if vx <= 0.0:
        raise InvalidRegionError("inclusion degree needs x with positive volume")
    overlap = x.intersect(y)
    if overlap is None:
        return 0.0
    return min(1.0, overlap.volume / vx)


def mereo_proximity(x: Box3, y: Box3) -> float:
    """Symmetric closeness of two regions: min of the two inclusion degrees.

    1.0 iff the regions coincide, 0.0 iff their interiors are disjoint.
    """
    if x.volume <= 0.0 or y.volume <= 0.0:
        raise InvalidRegionError("proximity needs regions with positive volume")
    return min(rough_inclusion_degree(x, y), rough_inclusion_degree(y, x))


def segment_intersects_box(s: Segment3, box: Box3) -> bool:
    """Closed-set segment/box test via slab clipping.

    Grazing a face or touching a corner counts as an intersection.  A
    degenerate segment reduces to a point-containment test.
    """
    t0 = 0.0
    t1 = 1.0
    for lo, hi, origin, delta in (
        (box.min.x, box.max.x, s.a.x, s.b.x - s.a.x),
        (box.min.y, box.max.y, s.a.y, s.b.y - s.a.y),
        (box.min.z, box.max.z, s.a.z, s.b.z - s.a.z),
    ):
        if delta == 0.0:
            # Parallel to this slab: either always inside it or never.
            if origin < lo or origin > hi:
                return False
            continue
        inv = 1.0 / delta
        tn = (lo - origin) * inv
        tf = (hi - origin) * inv
        if tn > tf:
            tn, tf = tf, tn
        if tn > t0:
            t0 = tn
        if tf < t1:
            t1 = tf
        if t0 > t1:
            return False
    return True
