"""One-parameter degenerations driven by piecewise-linear heights.

A height function is a lower-convex, positively homogeneous PL function on a
pointed cone, given either by linear pieces on subcones or by lifting
heights at finitely many points of the degree-one slice.  It encodes a
degeneration: the graph cone is the weight cone of the total space, the
special fiber is reduced iff the function is integral on the weight monoid,
and the induced regular subdivision is the special fiber's cell complex.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .complexes import Cell, SSVComplex, complete_faces
from .errors import DegenerateLiftError, DomainError, NotReducedError
from .linalg import vec_dot
from .polyhedral import (
    _AffineFrame,
    AffineMonoid,
    Cone,
    DIMENSION_CAP,
    cone_from_halfspaces,
    cone_over,
    convex_hull,
    hilbert_basis,
)


@dataclass(frozen=True)
class HeightPiece:
    domain: Cone
    functional: tuple  # rational coefficients; value is functional . x

    def value(self, point):
        return vec_dot(self.functional, point)


class HeightFunction:
    """Lower-convex piecewise-linear function on a union of cones."""

    __slots__ = ("ambient_rank", "pieces")

    def __init__(self, pieces):
        pieces = tuple(pieces)
        if not pieces:
            raise ValueError("need at least one piece")
        rank = pieces[0].domain.ambient_rank
        for p in pieces:
            if p.domain.ambient_rank != rank or len(p.functional) != rank:
                raise ValueError("inconsistent piece dimensions")
        object.__setattr__(self, "ambient_rank", rank)
        object.__setattr__(self, "pieces", pieces)
        self._check_consistency()

    def __setattr__(self, name, value):
        raise AttributeError("HeightFunction is immutable")

    def _check_consistency(self):
        """Pieces agree on overlaps and dominate each other on own domains."""
        for i, a in enumerate(self.pieces):
            for j, b in enumerate(self.pieces):
                if i == j:
                    continue
                for r in a.domain.rays:
                    if b.domain.contains(r) and a.value(r) != b.value(r):
                        raise DomainError(
                            f"pieces {i} and {j} disagree at {r}"
                        )
                    if a.value(r) < b.value(r):
                        raise DomainError(
                            f"pieces are not lower convex at {r}"
                        )

    @classmethod
    def from_pieces(cls, pieces):
        return cls(
            HeightPiece(domain, tuple(Fraction(x) for x in functional))
            for domain, functional in pieces
        )

    @classmethod
    def from_lifted(cls, points, heights):
        """The lower-hull function of lifted slice points, homogenized.

        ``points`` live in R^r; the function lives on the cone over their
        hull in R^(1+r), with value height_i at (1, point_i) for lifted
        points on the lower hull.
        """
        points = [tuple(Fraction(x) for x in p) for p in points]
        heights = [Fraction(h) for h in heights]
        if len(points) != len(heights):
            raise ValueError("points and heights must have equal lengths")
        hull = convex_hull(points)
        cells = regular_subdivision(hull, points, heights)
        value_at = dict(zip(points, heights))
        pieces = []
        for cell in cells:
            rows = []
            rhs = []
            for v in cell.vertices:
                rows.append((Fraction(1),) + v)
                rhs.append(value_at[v])
            functional = _affine_functional(rows, rhs, hull.ambient_rank + 1)
            pieces.append(HeightPiece(cone_over(cell), functional))
        return cls(pieces)

    def value(self, point):
        for p in self.pieces:
            if p.domain.contains(point):
                return p.value(point)
        raise DomainError(f"point {tuple(point)} is outside every piece")

    def covers(self, point):
        return any(p.domain.contains(point) for p in self.pieces)

    def scaled(self, factor):
        factor = Fraction(factor)
        return HeightFunction(
            HeightPiece(p.domain, tuple(factor * x for x in p.functional))
            for p in self.pieces
        )


def _affine_functional(rows, rhs, width):
    """Solve rows . f = rhs for a homogeneous functional of given width."""
    from .linalg import solve_rational

    sol = solve_rational(rows, rhs)
    if sol is None:
        raise DegenerateLiftError("cell values do not lie on a hyperplane")
    return tuple(sol[:width])


def _max_domains(cone, height):
    """Subcones of ``cone`` where each piece functional is the maximum."""
    out = []
    for j, pj in enumerate(height.pieces):
        normals = list(cone.inequalities)
        equations = list(cone.equations)
        for i, pi in enumerate(height.pieces):
            if i == j:
                continue
            diff = tuple(a - b for a, b in zip(pj.functional, pi.functional))
            if any(x != 0 for x in diff):
                normals.append(_clear(diff))
        out.append(cone_from_halfspaces(cone.ambient_rank, normals, equations))
    return out


def _clear(vec):
    from .linalg import clear_denominators

    ints = clear_denominators(vec)
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    if g > 1:
        ints = tuple(a // g for a in ints)
    return ints


def _check_coverage(cone, height):
    """DomainError unless the pieces cover the cone.

    On each region where a fixed piece functional realizes the global max,
    all extreme rays must lie in a single piece domain with matching values;
    the regions tile the cone, so this certifies coverage exactly.
    """
    for dom, pj in zip(_max_domains(cone, height), height.pieces):
        if not dom.rays:
            continue
        covered = False
        for pi in height.pieces:
            if all(
                pi.domain.contains(r) and pi.value(r) == pj.value(r)
                for r in dom.rays
            ):
                covered = True
                break
        if not covered:
            raise DomainError("height pieces do not cover the cone")


def graph_cone(cone, height):
    """The cone {(t, x) : x in C, h(x) <= t} in one dimension more.

    Since the height is lower convex, it is the maximum of its piece
    functionals, so the epigraph is cut out by the lifted constraints.
    """
    if height.ambient_rank != cone.ambient_rank:
        raise ValueError("height and cone dimensions differ")
    _check_coverage(cone, height)
    d = cone.ambient_rank
    normals = [(0,) + tuple(n) for n in cone.inequalities]
    equations = [(0,) + tuple(n) for n in cone.equations]
    for p in height.pieces:
        normals.append(_clear((Fraction(1),) + tuple(-x for x in p.functional)))
    return cone_from_halfspaces(d + 1, normals, equations)


def _piece_monoid_bases(height, monoid):
    """Hilbert bases of the monoid pieces, with their height values."""
    mcone = monoid.cone()
    if not mcone.rays:
        return
    for piece in height.pieces:
        overlap = piece.domain.intersect(mcone)
        if not overlap.rays:
            continue
        for b in hilbert_basis(overlap, monoid.ambient):
            yield b, piece.value(b)


def special_fiber_reduced(height, monoid):
    """(flag, witness): integrality of the height on the whole monoid.

    The height is linear on each piece, so integrality at the Hilbert basis
    of each piece of the monoid decides integrality everywhere; the witness
    is a monoid element with non-integral height.
    """
    _check_monoid_coverage(height, monoid)
    for b, v in _piece_monoid_bases(height, monoid):
        if Fraction(v).denominator != 1:
            return False, b
    return True, None


def _check_monoid_coverage(height, monoid):
    mcone = monoid.cone()
    if not mcone.rays:
        return
    _check_coverage(mcone, height)


def base_change_exponent(height, monoid):
    """Least N with N * height integral on the monoid."""
    _check_monoid_coverage(height, monoid)
    n = 1
    for _, v in _piece_monoid_bases(height, monoid):
        den = Fraction(v).denominator
        n = n * den // gcd(n, den)
    return n


def regular_subdivision(polytope, points, heights):
    """Cells of the regular subdivision induced by lifted heights.

    Cells are the projections of the lower-hull facets of the lifted point
    set (equivalently the linearity domains of the lower envelope); all
    heights affinely dependent yields the trivial subdivision.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    hts = [Fraction(h) for h in heights]
    if len(pts) != len(hts):
        raise ValueError("points and heights must have equal lengths")
    if len(set(pts)) != len(pts):
        raise DegenerateLiftError("duplicate lift points")
    for p in pts:
        if not polytope.contains_point(p):
            raise DegenerateLiftError(f"lift point {p} is outside the polytope")
    if convex_hull(pts) != polytope:
        raise DegenerateLiftError("lift points must span the polytope")
    frame = _AffineFrame(sorted(pts))
    reduced = [frame.coords(p) for p in sorted(pts)]
    by_coord = dict(zip(sorted(pts), reduced))
    lifted = [by_coord[p] + (h,) for p, h in zip(pts, hts)]
    k = len(reduced[0]) if reduced else 0
    hull = convex_hull(lifted, dimension_cap=DIMENSION_CAP + 1)
    if hull.dim < k + 1:
        return [polytope]
    cells = []
    inverse = {coord: p for p, coord in by_coord.items()}
    for n, c in hull.inequalities:
        if n[-1] <= 0:
            continue  # inward normal points up exactly on lower facets
        facet_pts = [
            v for v in hull.vertices if vec_dot(n, v) == c
        ]
        ambient_pts = []
        for v in facet_pts:
            coord = v[:-1]
            base = inverse.get(coord)
            if base is None:
                base = _frame_point(frame, coord)
            ambient_pts.append(base)
        cells.append(convex_hull(ambient_pts))
    cells.sort(key=lambda p: (p.dim, p.vertices))
    return cells


def _frame_point(frame, coords):
    point = [Fraction(x) for x in frame.base]
    for t, direction in zip(coords, frame.directions):
        for i in range(len(point)):
            point[i] += t * direction[i]
    return tuple(point)


def special_fiber_complex(gamma, polytope, points, heights):
    """The cell complex of the special fiber of a standard degeneration.

    Requires the special fiber to be reduced (base-change first otherwise).
    Maximal cells are the regular-subdivision cells; faces are completed
    with saturated weight groups, so the result passes validation.
    """
    height = HeightFunction.from_lifted(points, heights)
    monoid = AffineMonoid(gamma, hilbert_basis(cone_over(polytope), gamma))
    reduced, witness = special_fiber_reduced(height, monoid)
    if not reduced:
        raise NotReducedError(
            f"special fiber is non-reduced at weight {witness}", witness
        )
    cells = regular_subdivision(polytope, points, heights)
    rank = polytope.ambient_rank
    wrapped = []
    for i, cell in enumerate(cells):
        group = gamma.intersect_subspace(cone_over(cell).rays)
        wrapped.append(Cell(f"c{i}", cell, group))
    base = SSVComplex(rank, gamma, wrapped, tuple(c.id for c in wrapped))
    return complete_faces(base, full=True)
