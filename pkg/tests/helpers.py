"""Shared test utilities: independent oracles and random fixture builders.

The oracles deliberately avoid the library's own formulas so agreement is
meaningful: volumes come from voxel counting / Monte-Carlo sampling, segment
tests from dense point sampling.
"""

import math
import random

import numpy as np

from meroplan.geometry import Box3, Point3


def box_from_bounds(lo, hi):
    return Box3(Point3(*lo), Point3(*hi))


def lattice_box(rng, step=0.25, span=16):
    """Random box whose coordinates are multiples of `step` inside [0, step*span]^3."""
    lo = [rng.randrange(0, span) for _ in range(3)]
    hi = [rng.randrange(l + 1, span + 1) for l in lo]
    return box_from_bounds([v * step for v in lo], [v * step for v in hi])


def voxel_overlap_fraction(x: Box3, y: Box3, step=0.25):
    """Exact vol(x & y) / vol(x) for boxes aligned to a `step` lattice.

    Counts voxels of x whose centers fall in y; alignment makes every voxel
    fully inside or fully outside, so the count is exact.
    """
    nx = round((x.max.x - x.min.x) / step)
    ny = round((x.max.y - x.min.y) / step)
    nz = round((x.max.z - x.min.z) / step)
    total = nx * ny * nz
    if total == 0:
        raise ValueError("degenerate x")
    cx = x.min.x + (np.arange(nx) + 0.5) * step
    cy = x.min.y + (np.arange(ny) + 0.5) * step
    cz = x.min.z + (np.arange(nz) + 0.5) * step
    inside = (
        ((cx >= y.min.x) & (cx <= y.max.x)).sum()
        * ((cy >= y.min.y) & (cy <= y.max.y)).sum()
        * ((cz >= y.min.z) & (cz <= y.max.z)).sum()
    )
    return inside / total


def sample_segment_points(a: Point3, b: Point3, n=10000):
    """n points evenly spaced along the segment, endpoints included."""
    t = np.linspace(0.0, 1.0, n)[:, None]
    pa = np.array(a.as_tuple())
    pb = np.array(b.as_tuple())
    return pa[None, :] + t * (pb - pa)[None, :]


def points_in_box_mask(points, box: Box3):
    lo = np.array(box.min.as_tuple())
    hi = np.array(box.max.as_tuple())
    return np.all((points >= lo) & (points <= hi), axis=1)


def sampled_segment_hits_box(a: Point3, b: Point3, box: Box3, n=10000):
    """Dense-sampling oracle for segment/box intersection (closed test)."""
    return bool(points_in_box_mask(sample_segment_points(a, b, n), box).any())


def min_sample_distance_to_box(a: Point3, b: Point3, box: Box3, n=10000):
    """Smallest distance from any sample point to the box (0 when inside)."""
    pts = sample_segment_points(a, b, n)
    lo = np.array(box.min.as_tuple())
    hi = np.array(box.max.as_tuple())
    d = np.maximum(np.maximum(lo - pts, pts - hi), 0.0)
    return float(np.sqrt((d * d).sum(axis=1)).min())


def random_point(rng, lo=0.0, hi=10.0):
    return Point3(rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))


def random_box(rng, lo=0.0, hi=10.0):
    a = [rng.uniform(lo, hi) for _ in range(3)]
    b = [rng.uniform(lo, hi) for _ in range(3)]
    return box_from_bounds(
        [min(p, q) for p, q in zip(a, b)], [max(p, q) for p, q in zip(a, b)]
    )


def min_pairwise_distance(positions):
    """Minimum pairwise Euclidean distance over an (n, 3) float array."""
    pts = np.asarray(positions, dtype=float)
    n = len(pts)
    if n < 2:
        return math.inf
    best = math.inf
    chunk = 512
    for i in range(0, n, chunk):
        block = pts[i : i + chunk]
        d2 = ((block[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
        rows = np.arange(len(block))
        d2[rows, i + rows] = np.inf
        best = min(best, float(d2.min()))
    return math.sqrt(best)


def seeded_rng(seed):
    return random.Random(seed)
