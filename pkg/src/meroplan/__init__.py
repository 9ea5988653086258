"""Mereological potential-field path planning in bounded 3D scenes.

The package builds a goal-seeded set of potential fields inside an
axis-aligned gate, searches the fields for a collision-free waypoint
path, filters that path down to strictly goal-approaching hops, and
smooths the survivors.  Scenes travel as a small JSON document; the
``meroplan`` console script drives the same pipeline from files.
"""

from .fields import (
    FieldSet,
    GenerationHooks,
    Orientation,
    PotentialField,
    dump_fields,
    generate_field,
    generate_neighbors,
)
from .fixtures import DEMO_SCENES, open_gate, separating_wall, single_obstacle, three_obstacles
from .geometry import (
    Box3,
    InvalidRegionError,
    Point3,
    Segment3,
    Weights,
    euclidean_distance,
    mereo_proximity,
    rough_inclusion_degree,
    segment_intersects_box,
    weighted_distance,
)
from .planner import (
    SMOOTH_COLLISION_WARNING,
    NoReachableFieldError,
    Path,
    PathStage,
    PlanningError,
    PlanResult,
    StuckError,
    dump_path,
    dump_path_json,
    filter_path,
    path_length,
    plan,
    search_path,
    smooth_path,
)
from .scene import (
    PARAM_KEYS,
    PRESETS,
    PlanConfig,
    Scene,
    SceneFormatError,
    SceneValidationError,
    Violation,
    load_scene,
    serialize_scene,
    validate_scene,
)

__version__ = "0.1.0"

__all__ = [
    "Box3",
    "DEMO_SCENES",
    "FieldSet",
    "GenerationHooks",
    "InvalidRegionError",
    "NoReachableFieldError",
    "Orientation",
    "PARAM_KEYS",
    "PRESETS",
    "Path",
    "PathStage",
    "PlanConfig",
    "PlanResult",
    "PlanningError",
    "Point3",
    "PotentialField",
    "SMOOTH_COLLISION_WARNING",
    "Scene",
    "SceneFormatError",
    "SceneValidationError",
    "Segment3",
    "StuckError",
    "Violation",
    "Weights",
    "dump_fields",
    "dump_path",
    "dump_path_json",
    "euclidean_distance",
    "filter_path",
    "generate_field",
    "generate_neighbors",
    "load_scene",
    "mereo_proximity",
    "open_gate",
    "path_length",
    "plan",
    "rough_inclusion_degree",
    "search_path",
    "segment_intersects_box",
    "separating_wall",
    "serialize_scene",
    "single_obstacle",
    "smooth_path",
    "three_obstacles",
    "validate_scene",
    "weighted_distance",
]
