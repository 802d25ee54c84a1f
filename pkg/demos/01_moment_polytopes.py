"""Moment polytopes of dominant weights for small groups.

The convex hull of a Weyl orbit intersected with the dominant chamber is
the moment polytope of the corresponding projective variety; its vertices
can be non-integral even though the input weight is integral.
"""

from ssvlib import convex_hull, dominant_hull, is_w_admissible, root_datum, weyl_dimension, weyl_orbit

a2 = root_datum("A2")

print("== the first fundamental weight of A2 ==")
orbit = weyl_orbit(a2, (1, 0))
print("orbit:", [tuple(map(str, w)) for w in orbit])
hull = dominant_hull(a2, (1, 0))
print("moment polytope vertices:", [tuple(map(str, v)) for v in hull.vertices])
print("  note the half-integral vertex (0, 1/2)")
print("module dimension:", weyl_dimension(a2, (1, 0)))

print()
print("== admissibility ==")
for interval in ([(-2,), (2,)], [(1,), (3,)], [(-1,), (2,)]):
    a1 = root_datum("A1")
    poly = convex_hull(interval)
    verdict = is_w_admissible(a1, poly)
    print(f"A1 interval {interval}: admissible = {verdict}")

print()
print("== dimensions along a grid ==")
for m in range(0, 4):
    row = [weyl_dimension(a2, (m, n)) for n in range(0, 4)]
    print(f"dim V({m}, n) for n=0..3:", row)
