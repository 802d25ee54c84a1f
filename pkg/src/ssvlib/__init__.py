"""Exact combinatorics of stable spherical varieties.

Moment polytope complexes with weight groups, section modules, gluing
cohomology of diagonalizable automorphism groups, one-parameter
degenerations via piecewise-linear heights, and grassmannian/matroid
weight sets -- all in exact rational arithmetic.
"""

__version__ = "0.1.0"

from .lattice import (
    AbelianInvariants,
    Lattice,
    SmithDecomposition,
    is_direct_summand,
    saturation_and_index,
    smith_normal_form,
)
from .polyhedral import (
    AffineMonoid,
    Cone,
    FacePoset,
    Polytope,
    cone_over,
    convex_hull,
    enumerate_faces,
    graded_lattice_points,
    hilbert_basis,
    intersect_polytopes,
    is_saturated_monoid,
)
from .rootdata import (
    RootDatum,
    dominant_hull,
    is_w_admissible,
    root_datum,
    weyl_dimension,
    weyl_orbit,
)
from .complexes import (
    AutData,
    AutRestriction,
    Cell,
    MultiplicationBehavior,
    SSVComplex,
    SectionModuleSummary,
    ValidationReport,
    complete_faces,
    multiplication_behavior,
    orbit_poset,
    section_module,
    singleton_complex,
    sl2_catalog,
    validate_complex,
    vq_module_data,
)
from .cohomology import (
    DiagGroup,
    DiagHom,
    GluingComplex,
    build_gluing_complex,
    cohomology_invariants,
    diag_cohomology,
)
from .degeneration import (
    HeightFunction,
    base_change_exponent,
    graph_cone,
    regular_subdivision,
    special_fiber_complex,
    special_fiber_reduced,
)
from .matroid import (
    GradedShape,
    RankFunctionData,
    enumerate_matroid_subdivisions,
    is_matroid_polytope,
    thin_cell_weight_set,
    weight_set,
)
