#!/usr/bin/env python3
"""Truncating the r = 2, n = 2 fan into the octagon.

Each of the eight maximal cones is cut by subset-sum inequalities at heights
2 (single factors) and 3 (both factors), giving eight quadrilateral cells.
Their union is the octagon whose extreme points are the signed permutations
of (1, 2).
"""

from cyclic_wonderful import (
    ArrangementSpec,
    complex_cells,
    delta,
    in_delta,
    union_extreme_points,
)

spec = ArrangementSpec(r=2, n=2)
print("truncation heights: size 1 ->", delta(2, 1), ", size 2 ->", delta(2, 2))

nc = complex_cells(spec)
print(f"\n{len(nc.cells)} cells, one per maximal chain:")
for cell in nc.cells:
    verts = " ".join(
        "(" + ",".join(str(x) for x in v) + ")" for v in cell.v_rep
    )
    print(f"  {cell.label.text():22s} {verts}")

print("\nextreme points of the union:")
for p in union_extreme_points(spec):
    print("  (" + ",".join(str(x) for x in p) + ")")

print("\nmembership agrees with the subset-sum description:")
for point in [(0, 0), (-2, -1), (-2, -2), (1, 2)]:
    cells = nc.contains(point)
    direct = in_delta(point, spec)
    assert cells == direct
    print(f"  {point}: {'inside' if direct else 'outside'}")
