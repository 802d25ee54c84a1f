"""A two-cell complex of moment polytopes and its section modules.

Builds the glued pair of triangles, validates it, inspects the orbit poset,
counts sections degreewise on a chain of intervals, and shows how the
multiplication map degenerates across cells.
"""

from ssvlib import (
    MultiplicationBehavior,
    multiplication_behavior,
    orbit_poset,
    root_datum,
    section_module,
    vq_module_data,
)
from ssvlib.fixtures import sl2_chain_complex, triangle_pair_complex

x = triangle_pair_complex()
report = x.validate()
print("== glued triangles ==")
print("validation passed:", report.passed)
print("moment set convex:", report.moment_set_convex, "| Cohen-Macaulay:", report.cohen_macaulay)
poset = orbit_poset(x)
print("orbit poset size:", len(poset), "| minimal cells:", poset.minimal_ids())

for lam, mu in (((1, 0, 0), (1, 2, 0)), ((1, 0, 0), (1, 4, 0))):
    behavior = multiplication_behavior(x, lam, mu)
    word = "isomorphism" if behavior is MultiplicationBehavior.ISOMORPHISM else "zero"
    print(f"multiplication at {lam} * {mu}: {word}")

print()
print("== chain of intervals under A1 ==")
chain = sl2_chain_complex()
a1 = root_datum("A1")
for degree in range(0, 4):
    summary = section_module(chain, degree, a1)
    weights = [w[0] for w, _, _ in summary.weights]
    print(f"degree {degree}: weights {weights}, total dimension {summary.total_dimension}")

weights, dims, total = vq_module_data(chain, a1)
print("degree-1 slice:", [w[0] for w in weights], "-> sum of squared dimensions:", total)
