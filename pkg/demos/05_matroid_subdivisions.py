"""Grassmannian weight sets and matroid subdivisions of the octahedron.

The weight set of the Pluecker embedding of Gr(2,4) is the hypersimplex
slice of the unit 4-cube; its regular subdivisions into matroid polytopes
are the trivial one and the three hyperplane splits.
"""

from ssvlib import (
    GradedShape,
    RankFunctionData,
    enumerate_matroid_subdivisions,
    is_matroid_polytope,
    thin_cell_weight_set,
    weight_set,
)

shape = GradedShape(2, (1, 1, 1, 1))
points = weight_set(shape)
print("== weight set of corank 2 on four lines ==")
print("points:", points)

print()
print("== thin cell for d_{01} = 1 ==")
data = RankFunctionData(shape, {(0, 1): 1})
kept, full, witness = thin_cell_weight_set(shape, data)
print("kept:", kept)
print("full (all hull lattice points):", full)

print()
print("== matroid subdivisions ==")
subdivisions = enumerate_matroid_subdivisions(shape, cap=2)
print("count:", len(subdivisions))
for i, cells in enumerate(subdivisions):
    kinds = [f"{len(c.vertices)} vertices (matroid={is_matroid_polytope(c)})" for c in cells]
    print(f"  subdivision {i}: {len(cells)} cell(s): {kinds}")
