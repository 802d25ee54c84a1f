"""Built-in example complexes used by tests, demos and golden files."""

from .complexes import AutData, AutRestriction, Cell, SSVComplex, sl2_catalog
from .lattice import Lattice
from .polyhedral import convex_hull


def triangle_pair_complex():
    """Two triangles glued along a diagonal segment, with automorphism data.

    The moment set is the triangle (0,0), (4,0), (4,2), partially subdivided
    into seven cells; every automorphism group is a two-torus and the
    restriction maps are identities on character groups.
    """
    gamma = Lattice(3, [(1, 0, 0), (1, 2, 0), (1, 4, 2)])
    ident = ((1, 0), (0, 1))
    cells = (
        Cell(
            "t1",
            convex_hull([(0, 0), (2, 0), (4, 2)]),
            gamma,
            AutData(2, (), (AutRestriction("s12", ident),)),
        ),
        Cell(
            "t2",
            convex_hull([(2, 0), (4, 2), (4, 0)]),
            gamma,
            AutData(2, (), (AutRestriction("s12", ident),)),
        ),
        Cell("s1", convex_hull([(0, 0), (2, 0)]), Lattice(3, [(1, 0, 0), (1, 2, 0)])),
        Cell(
            "s12",
            convex_hull([(2, 0), (4, 2)]),
            Lattice(3, [(1, 2, 0), (1, 4, 2)]),
            AutData(2),
        ),
        Cell("s3", convex_hull([(4, 0), (4, 2)]), Lattice(3, [(1, 4, 0), (0, 0, 2)])),
        Cell("p1", convex_hull([(2, 0)]), Lattice(3, [(1, 2, 0)])),
        Cell("p2", convex_hull([(4, 2)]), Lattice(3, [(1, 4, 2)])),
    )
    return SSVComplex(2, gamma, cells, ("t1", "t2"))


def sl2_chain_complex():
    """Two moment intervals [0,2], [2,4] glued at the shared endpoint."""
    gamma = Lattice(2, [(1, 0), (0, 2)])
    cells = (
        Cell("c1", convex_hull([(0,), (2,)]), Lattice(2, [(1, 2), (0, 2)])),
        Cell("c2", convex_hull([(2,), (4,)]), Lattice(2, [(1, 4), (0, 2)])),
        Cell("v0", convex_hull([(0,)]), Lattice(2, [(1, 0)])),
        Cell("v2", convex_hull([(2,)]), Lattice(2, [(1, 2)])),
        Cell("v4", convex_hull([(4,)]), Lattice(2, [(1, 4)])),
    )
    return SSVComplex(1, gamma, cells, ("c1", "c2"))


def segre_quadric_cell():
    """The diagonal quadric surface with its degree (1,1) polarization."""
    return sl2_catalog("P1xP1", m=1, n=1)


def triangle_frame_complex():
    """Subdivision of the size-4 triangle whose gluing H^1 is a one-torus.

    Heights 0 on the three interior lattice points and 2 on the boundary cut
    the triangle into three trapezoids around an inner triangle; the ring of
    trapezoids supports a one-parameter family of twisted gluings.
    """
    from .degeneration import special_fiber_complex

    gamma = Lattice.standard(3)
    triangle = convex_hull([(0, 0), (4, 0), (0, 4)])
    points = [(x, y) for x in range(5) for y in range(5) if x + y <= 4]
    heights = [0 if (x > 0 and y > 0 and x + y < 4) else 2 for (x, y) in points]
    return special_fiber_complex(gamma, triangle, points, heights)


def overlapping_squares_complex():
    """Invalid fixture: two unit squares overlapping in a two-dimensional set."""
    from fractions import Fraction

    gamma = Lattice.standard(3)
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    shift = Fraction(1, 2)
    cells = (
        Cell("a", convex_hull(square), gamma),
        Cell("b", convex_hull([(x + shift, y) for x, y in square]), gamma),
    )
    return SSVComplex(2, gamma, cells, ("a", "b"))
