"""
Reasoning about boxes as parts of other boxes
=============================================

The planner's spatial vocabulary: a region is "part of" another to the
degree that their overlap fills it.  Proximity takes the weaker of the
two directions, so it is 1 only for identical regions and 0 only for
regions with disjoint interiors.
"""

from meroplan import Box3, Point3, mereo_proximity, rough_inclusion_degree

room = Box3(Point3(0, 0, 0), Point3(10, 10, 3))
rug = Box3(Point3(2, 2, 0), Point3(6, 8, 3))          # fully inside the room
doorway = Box3(Point3(9, 4, 0), Point3(11, 6, 3))     # half in, half out
outside = Box3(Point3(20, 0, 0), Point3(25, 5, 3))    # beyond the far wall

pairs = [("rug", rug), ("doorway", doorway), ("outside", outside)]

for name, region in pairs:
    fwd = rough_inclusion_degree(region, room)
    rev = rough_inclusion_degree(room, region)
    prox = mereo_proximity(region, room)
    print(f"{name:>8}: {fwd:.3f} of it lies in the room, "
          f"which is {rev:.3f} inside it; proximity {prox:.3f}")

# Inclusion is directional; proximity is not.
assert mereo_proximity(rug, room) == mereo_proximity(room, rug)
assert mereo_proximity(room, room) == 1.0
assert mereo_proximity(rug, outside) == 0.0
print("\nsymmetry, identity, and disjointness all behave as promised")
