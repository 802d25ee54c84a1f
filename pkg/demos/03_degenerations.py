"""One-parameter degenerations from piecewise-linear heights.

A height function on the weight cone encodes a flat family; the special
fiber is reduced iff the heights are integral on the weight monoid, and its
cell complex is the induced regular subdivision.
"""

from fractions import Fraction

from ssvlib import (
    AffineMonoid,
    Cone,
    HeightFunction,
    Lattice,
    base_change_exponent,
    cone_over,
    convex_hull,
    graph_cone,
    hilbert_basis,
    special_fiber_complex,
    special_fiber_reduced,
)
from ssvlib.complexes import degree_slice

print("== the weight cone of the affine line, height lambda/2 ==")
ray = Cone.from_rays(1, [(1,)])
half = HeightFunction.from_pieces([(ray, (Fraction(1, 2),))])
print("graph cone rays:", graph_cone(ray, half).rays)
monoid = AffineMonoid(Lattice.standard(1), ((1,),))
flag, witness = special_fiber_reduced(half, monoid)
print("special fiber reduced:", flag, "| witness:", witness)
print("minimal base change:", base_change_exponent(half, monoid))

print()
print("== degenerating an interval into a chain ==")
gamma = Lattice(2, [(1, 0), (0, 2)])
segment = convex_hull([(0,), (4,)])
fiber = special_fiber_complex(gamma, segment, [(0,), (2,), (4,)], [0, 0, 1])
print("special fiber cells:")
for cell in fiber.sorted_cells():
    print("  ", cell.id, [tuple(int(x) for x in v) for v in cell.polytope.vertices])
print("fiber validates:", fiber.validate().passed)
for n in range(3):
    print(f"degree-{n} weights preserved:", degree_slice(fiber, n))

print()
print("== the weight monoid is visible through its Hilbert basis ==")
cone = cone_over(segment)
print("hilbert basis of the graded monoid:", hilbert_basis(cone, gamma))
