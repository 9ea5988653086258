"""
Fields, then a path, then a better path
=======================================

Walks the whole pipeline once on the bundled single-obstacle scene and
writes plot-ready text files under out/single-obstacle/.
"""

from pathlib import Path

from meroplan import (
    dump_fields,
    dump_path,
    euclidean_distance,
    generate_field,
    filter_path,
    path_length,
    search_path,
    single_obstacle,
    smooth_path,
)

out = Path("out/single-obstacle")
out.mkdir(parents=True, exist_ok=True)

# The scene: a 240-unit cube, one box obstacle sitting between the start
# in the lower corner and the goal at the center of the cube.
scene = single_obstacle()
print(f"gate {scene.gate.min.as_tuple()} .. {scene.gate.max.as_tuple()}")
print(f"start {scene.start.as_tuple()}, goal {scene.goal.as_tuple()}")

# Fields grow outward from the goal in waves; each field remembers how far
# (in growth steps) it is from the goal.
fs = generate_field(scene)
print(f"\n{len(fs)} potential fields, d up to {max(f.d for f in fs.fields)}")
(out / "fields.txt").write_text(dump_fields(fs))

# The raw path hops greedily from field to field, always toward the goal,
# never through the obstacle.
raw = search_path(fs, scene)
print(f"\nraw path: {len(raw)} waypoints, length {path_length(raw):.2f}")
for i, w in enumerate(raw.waypoints):
    print(f"  {i}: {w.as_tuple()}  (to goal: {euclidean_distance(w, scene.goal):.1f})")

# Filtering drops every hop that fails to make strict progress.
filtered = filter_path(raw, scene.goal, scene.active_obstacles)
print(f"\nfiltered: {len(filtered)} waypoints, length {path_length(filtered):.2f}")
if filtered.guard_points:
    print(f"  kept for clearance: indices {list(filtered.guard_points)}")

# Smoothing relaxes the interior waypoints; endpoints stay pinned.
smoothed = smooth_path(filtered, scene.params, scene.active_obstacles)
print(f"\nsmoothed: length {path_length(smoothed):.2f}")
for w in smoothed.waypoints:
    print(f"  {tuple(round(c, 2) for c in w.as_tuple())}")

(out / "path_raw.txt").write_text(dump_path(raw, scene.name))
(out / "path_filtered.txt").write_text(dump_path(filtered, scene.name))
(out / "path_smoothed.txt").write_text(dump_path(smoothed, scene.name))
print(f"\nwrote fields + three path stages to {out}/")
