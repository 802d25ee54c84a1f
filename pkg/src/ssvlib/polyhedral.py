"""Exact rational convex geometry at desk scale.

Polytopes and cones carry both a vertex/ray and a halfspace description,
derived from one another by exhaustive supporting-hyperplane search.  The
search is combinatorial in the input size, which is fine under the ambient
dimension cap (6) and the small example sizes this library targets.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionError, NotPointedError
from .lattice import Lattice, integer_kernel, smith_normal_form, solve_integer
from .linalg import (
    canonical_direction,
    clear_denominators,
    mat_inverse_unimodular,
    mat_rank,
    primitive,
    rational_nullspace,
    rational_rref,
    solve_rational,
    vec_dot,
    vec_sub,
)

DIMENSION_CAP = 6


def _nullspace(rows, ncols):
    if not rows:
        return [
            tuple(Fraction(1 if i == j else 0) for j in range(ncols))
            for i in range(ncols)
        ]
    return rational_nullspace(rows)


def _norm_constraint(normal, offset):
    """Canonical integer form of normal . x >= offset (or == offset)."""
    vec = clear_denominators(tuple(normal) + (offset,))
    g = 0
    for a in vec:
        g = gcd(g, abs(a))
    if g > 1:
        vec = tuple(a // g for a in vec)
    return vec[:-1], vec[-1]


class _AffineFrame:
    """Exact coordinates on the affine hull of a point set."""

    def __init__(self, points):
        self.base = points[0]
        diffs = [vec_sub(p, self.base) for p in points[1:]]
        rows, pivots = rational_rref(diffs) if diffs else ([], [])
        self.directions = rows  # rref basis of the direction space
        self.pivots = pivots
        self.dim = len(rows)

    def coords(self, point):
        """Coordinates of a point in the frame; None if off the hull."""
        diff = vec_sub(point, self.base)
        t = tuple(Fraction(diff[p]) for p in self.pivots)
        check = list(diff)
        for ti, d in zip(t, self.directions):
            for k in range(len(check)):
                check[k] -= ti * d[k]
        if any(x != 0 for x in check):
            return None
        return t

    def hull_equations(self):
        """Integer equations (n, c) with n.x == c cutting out the hull."""
        eqs = []
        for n in _nullspace(self.directions, len(self.base)):
            nn = canonical_direction(n)
            eqs.append((nn, vec_dot(nn, self.base)))
        return sorted(eqs)

    def pull_constraint(self, normal, offset):
        """Ambient constraint restricting to normal.t >= offset on the hull.

        In the rref frame, coordinate i of a hull point x is
        (x - base)[pivots[i]].
        """
        amb = [Fraction(0)] * len(self.base)
        c = Fraction(offset)
        for ni, p in zip(normal, self.pivots):
            amb[p] += ni
            c += ni * Fraction(self.base[p])
        return _norm_constraint(amb, c)


def _facets_from_points(coords, dim):
    """Facet inequalities of a full-dimensional hull in reduced coords."""
    if dim == 0:
        return []
    facets = set()
    for combo in itertools.combinations(range(len(coords)), dim):
        diffs = [vec_sub(coords[c], coords[combo[0]]) for c in combo[1:]]
        if diffs and mat_rank(diffs) != dim - 1:
            continue
        ns = _nullspace(diffs, dim)
        if len(ns) != 1:
            continue
        normal = ns[0]
        base = vec_dot(normal, coords[combo[0]])
        below = above = False
        for p in coords:
            val = vec_dot(normal, p)
            if val > base:
                above = True
            elif val < base:
                below = True
            if below and above:
                break
        if below and above:
            continue
        if below:
            normal = tuple(-x for x in normal)
            base = -base
        facets.add(_norm_constraint(normal, base))
    return sorted(facets)


class Polytope:
    """A nonempty rational convex polytope with exact dual descriptions.

    ``inequalities`` are the facet-defining halfspaces (normal . x >= offset)
    and ``equations`` cut out the affine hull; together they describe the
    polytope exactly.  Vertices are exactly the extreme points.
    """

    __slots__ = ("ambient_rank", "vertices", "inequalities", "equations", "_dim")

    def __init__(self, ambient_rank, vertices, inequalities, equations, dim):
        object.__setattr__(self, "ambient_rank", ambient_rank)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "inequalities", inequalities)
        object.__setattr__(self, "equations", equations)
        object.__setattr__(self, "_dim", dim)

    def __setattr__(self, name, value):
        raise AttributeError("Polytope is immutable")

    @property
    def dim(self):
        return self._dim

    @property
    def halfspaces(self):
        """All constraints as inequalities (equations contribute both signs)."""
        hs = list(self.inequalities)
        for n, c in self.equations:
            hs.append((n, c))
            hs.append((tuple(-x for x in n), -c))
        return tuple(hs)

    def __eq__(self, other):
        return (
            isinstance(other, Polytope)
            and self.ambient_rank == other.ambient_rank
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.vertices))

    def __repr__(self):
        return f"Polytope({self.ambient_rank}, vertices={list(self.vertices)})"

    def contains_point(self, point):
        return all(vec_dot(n, point) == c for n, c in self.equations) and all(
            vec_dot(n, point) >= c for n, c in self.inequalities
        )

    def relint_contains(self, point):
        return all(vec_dot(n, point) == c for n, c in self.equations) and all(
            vec_dot(n, point) > c for n, c in self.inequalities
        )

    def contains_polytope(self, other):
        return all(self.contains_point(v) for v in other.vertices)

    def barycenter(self):
        k = len(self.vertices)
        return tuple(
            sum(Fraction(v[i]) for v in self.vertices) / k
            for i in range(self.ambient_rank)
        )

    def is_lattice_polytope(self):
        return all(Fraction(x).denominator == 1 for v in self.vertices for x in v)

    def facet_vertex_sets(self):
        return [
            frozenset(i for i, v in enumerate(self.vertices) if vec_dot(n, v) == c)
            for n, c in self.inequalities
        ]

    def face_vertex_sets(self):
        """All nonempty faces as vertex-index sets (including the body)."""
        full = frozenset(range(len(self.vertices)))
        facet_sets = self.facet_vertex_sets()
        faces = {full}
        fresh = set(facet_sets)
        while fresh:
            faces |= fresh
            nxt = set()
            for f in fresh:
                for g in facet_sets:
                    h = f & g
                    if h and h not in faces:
                        nxt.add(h)
            fresh = nxt
        return faces

    def face_polytope(self, vertex_indices):
        return convex_hull([self.vertices[i] for i in sorted(vertex_indices)])

    def face_polytopes(self):
        out = [self.face_polytope(f) for f in self.face_vertex_sets()]
        return sorted(out, key=lambda p: (p.dim, p.vertices))

    def is_face_of(self, other):
        """True iff this polytope is a face of the other one."""
        if self.ambient_rank != other.ambient_rank:
            return False
        mine = set(self.vertices)
        return any(
            {other.vertices[i] for i in f} == mine for f in other.face_vertex_sets()
        )

    def scaled(self, factor):
        """The dilate factor * P for a positive rational factor."""
        return convex_hull(
            [tuple(Fraction(factor) * x for x in v) for v in self.vertices]
        )

    def transformed(self, matrix):
        """Image under an invertible linear map given by rows."""
        return convex_hull(
            [tuple(vec_dot(row, v) for row in matrix) for v in self.vertices]
        )


@dataclass(frozen=True)
class FacePoset:
    """Faces of a polytope as (dimension, vertex-index frozenset) pairs.

    Ordered by containment of vertex sets; the full polytope is the unique
    maximal element and the empty face is omitted by convention.
    """

    faces: tuple

    def __len__(self):
        return len(self.faces)

    def of_dimension(self, d):
        return [f for f in self.faces if f[0] == d]

    def counts(self):
        out = {}
        for d, _ in self.faces:
            out[d] = out.get(d, 0) + 1
        return out

    def leq(self, a, b):
        return self.faces[a][1] <= self.faces[b][1]


def convex_hull(points, dimension_cap=DIMENSION_CAP):
    """Both descriptions of the hull of finitely many rational points."""
    if not points:
        raise ValueError("need at least one point")
    ambient = len(points[0])
    if ambient > dimension_cap:
        raise DimensionError(f"ambient rank {ambient} exceeds the cap {dimension_cap}")
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    frame = _AffineFrame(pts)
    coords = [frame.coords(p) for p in pts]
    facets_red = _facets_from_points(coords, frame.dim)
    if frame.dim == 0:
        vertices = tuple(pts)
    else:
        vertices = tuple(
            pts[i]
            for i, t in enumerate(coords)
            if mat_rank([n for n, c in facets_red if vec_dot(n, t) == c]) == frame.dim
        )
    inequalities = tuple(sorted(frame.pull_constraint(n, c) for n, c in facets_red))
    equations = tuple(frame.hull_equations())
    return Polytope(ambient, vertices, inequalities, equations, frame.dim)


def from_halfspaces(ambient_rank, inequalities, equations=()):
    """Polytope cut out by the constraints, or None when empty.

    The constraint region must be bounded; every caller intersects bounded
    sets (or a bounded set with a chamber that leaves it bounded).
    """
    eq_rows = [n for n, _ in equations]
    eq_rhs = [c for _, c in equations]
    if eq_rows:
        part = solve_rational(eq_rows, eq_rhs)
        if part is None:
            return None
        dirs = _nullspace(eq_rows, ambient_rank)
    else:
        part = tuple(Fraction(0) for _ in range(ambient_rank))
        dirs = _nullspace([], ambient_rank)
    k = len(dirs)
    red = []
    for n, c in inequalities:
        rn = tuple(vec_dot(n, d) for d in dirs)
        rc = Fraction(c) - vec_dot(n, part)
        red.append((rn, rc))
    if k == 0:
        if all(c <= 0 for _, c in red):
            return convex_hull([part])
        return None
    candidates = set()
    for combo in itertools.combinations(range(len(red)), k):
        rows = [red[i][0] for i in combo]
        rhs = [red[i][1] for i in combo]
        if mat_rank(rows) != k:
            continue
        sol = solve_rational(rows, rhs)
        if sol is None:
            continue
        if all(vec_dot(n, sol) >= c for n, c in red):
            candidates.add(sol)
    if not candidates:
        return None
    lifted = []
    for t in candidates:
        point = list(part)
        for ti, d in zip(t, dirs):
            for i in range(ambient_rank):
                point[i] += ti * d[i]
        lifted.append(tuple(point))
    return convex_hull(lifted)


def intersect_polytopes(p, q):
    """Intersection polytope, or None when empty."""
    if p.ambient_rank != q.ambient_rank:
        raise ValueError("ambient ranks differ")
    return from_halfspaces(
        p.ambient_rank,
        tuple(p.inequalities) + tuple(q.inequalities),
        tuple(p.equations) + tuple(q.equations),
    )


def relative_interiors_meet(p, q):
    """Exact test that relint(p) and relint(q) intersect.

    The barycenter of the intersection lies in its relative interior, and a
    convex subset of a polytope that misses the relative interior lies inside
    a single facet; so testing the barycenter against both facet systems is
    exact.
    """
    inter = intersect_polytopes(p, q)
    if inter is None:
        return False
    b = inter.barycenter()
    return p.relint_contains(b) and q.relint_contains(b)


def enumerate_faces(polytope):
    """All faces of all dimensions, including the body, no empty face."""
    faces = []
    for f in polytope.face_vertex_sets():
        sub = [polytope.vertices[i] for i in sorted(f)]
        d = mat_rank([vec_sub(v, sub[0]) for v in sub[1:]]) if len(sub) > 1 else 0
        faces.append((d, f))
    faces.sort(key=lambda df: (df[0], tuple(sorted(df[1]))))
    return FacePoset(tuple(faces))


class Cone:
    """A rational polyhedral cone with exact dual descriptions."""

    __slots__ = ("ambient_rank", "rays", "inequalities", "equations")

    def __init__(self, ambient_rank, rays, inequalities, equations):
        object.__setattr__(self, "ambient_rank", ambient_rank)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "inequalities", inequalities)
        object.__setattr__(self, "equations", equations)

    def __setattr__(self, name, value):
        raise AttributeError("Cone is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Cone)
            and self.ambient_rank == other.ambient_rank
            and self.rays == other.rays
            and self.equations == other.equations
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.rays, self.equations))

    def __repr__(self):
        return f"Cone({self.ambient_rank}, rays={list(self.rays)})"

    @property
    def dim(self):
        return self.ambient_rank - len(self.equations)

    @property
    def halfspaces(self):
        hs = list(self.inequalities)
        for n in self.equations:
            hs.append(n)
            hs.append(tuple(-x for x in n))
        return tuple(hs)

    def contains(self, point):
        return all(vec_dot(n, point) == 0 for n in self.equations) and all(
            vec_dot(n, point) >= 0 for n in self.inequalities
        )

    def lineality_rank(self):
        rows = list(self.inequalities) + list(self.equations)
        if not rows:
            return self.ambient_rank if self.rays else 0
        return len(rows[0]) - mat_rank(rows)

    @property
    def is_pointed(self):
        if not self.rays:
            return True
        return self.lineality_rank() == 0

    def spanning_vectors(self):
        return self.rays

    def intersect(self, other):
        return cone_from_halfspaces(
            self.ambient_rank,
            list(self.inequalities) + list(other.inequalities),
            list(self.equations) + list(other.equations),
        )

    @classmethod
    def from_rays(cls, ambient_rank, rays, _canonicalize=True):
        prim = sorted({primitive(r) for r in rays if any(x != 0 for x in r)})
        if not prim:
            eqs = tuple(
                tuple(1 if i == j else 0 for j in range(ambient_rank))
                for i in range(ambient_rank)
            )
            return cls(ambient_rank, (), (), eqs)
        rows, pivots = rational_rref(prim)
        k = len(rows)
        coords = [tuple(Fraction(r[p]) for p in pivots) for r in prim]
        facets_red = set()
        for combo in itertools.combinations(range(len(coords)), k - 1):
            chosen = [coords[i] for i in combo]
            if chosen and mat_rank(chosen) != k - 1:
                continue
            ns = _nullspace(chosen, k)
            if len(ns) != 1:
                continue
            normal = ns[0]
            below = above = False
            for p in coords:
                val = vec_dot(normal, p)
                if val > 0:
                    above = True
                elif val < 0:
                    below = True
                if below and above:
                    break
            if below and above:
                continue
            if below:
                normal = tuple(-x for x in normal)
            facets_red.add(primitive(normal))
        pointed = bool(facets_red) and mat_rank(sorted(facets_red)) == k
        ineqs = tuple(
            sorted(_pull_linear(n, pivots, ambient_rank) for n in facets_red)
        )
        eqs = tuple(sorted(canonical_direction(n) for n in _nullspace(prim, ambient_rank)))
        if pointed and k > 0:
            extreme = [
                prim[i]
                for i, t in enumerate(coords)
                if mat_rank([n for n in facets_red if vec_dot(n, t) == 0]) >= k - 1
            ]
        elif _canonicalize and k > 0:
            # canonical generators for a cone with lineality: reconstruct
            # from the (complete) halfspace description
            extreme = cone_from_halfspaces(ambient_rank, ineqs, eqs).rays
        else:
            extreme = prim
        return cls(ambient_rank, tuple(sorted(extreme)), ineqs, eqs)


def _pull_linear(normal, pivots, ambient_rank):
    amb = [Fraction(0)] * ambient_rank
    for ni, p in zip(normal, pivots):
        amb[p] += ni
    return primitive(amb)


def cone_from_halfspaces(ambient_rank, inequality_normals, equation_normals=()):
    """Cone cut out by normal.x >= 0 constraints and equations.

    Handles lineality by splitting off line directions one at a time.
    """
    # normalize and sort so the canonical output is construction-path free
    ineqs = sorted({primitive(n) for n in inequality_normals if any(x != 0 for x in n)})
    eqs = sorted({canonical_direction(n) for n in equation_normals if any(x != 0 for x in n)})
    lin = _nullspace(ineqs + eqs, ambient_rank)
    if lin and len(lin) > 0 and any(any(x != 0 for x in v) for v in lin):
        v = primitive(lin[0])
        sub = cone_from_halfspaces(ambient_rank, ineqs, eqs + [v])
        return Cone.from_rays(
            ambient_rank,
            list(sub.rays) + [v, tuple(-x for x in v)],
            _canonicalize=False,
        )
    span = _nullspace(eqs, ambient_rank)
    k = len(span)
    if k == 0:
        return Cone.from_rays(ambient_rank, ())
    red = [tuple(vec_dot(n, d) for d in span) for n in ineqs]
    rays = set()
    for combo in itertools.combinations(range(len(red)), k - 1):
        chosen = [red[i] for i in combo]
        if chosen and mat_rank(chosen) != k - 1:
            continue
        ns = _nullspace(chosen, k)
        if len(ns) != 1:
            continue
        for cand in (ns[0], tuple(-x for x in ns[0])):
            if all(vec_dot(n, cand) >= 0 for n in red):
                rays.add(primitive(cand))
    lifted = []
    for r in rays:
        point = [Fraction(0)] * ambient_rank
        for ti, d in zip(r, span):
            for i in range(ambient_rank):
                point[i] += ti * d[i]
        lifted.append(tuple(point))
    return Cone.from_rays(ambient_rank, lifted, _canonicalize=False)


def cone_over(polytope):
    """The cone in R^(1+r) generated by {1} x Q, with primitive rays."""
    rays = [(Fraction(1),) + v for v in polytope.vertices]
    return Cone.from_rays(polytope.ambient_rank + 1, rays)


def graded_lattice_points(polytope, gamma, degree):
    """Elements of gamma with first coordinate ``degree`` over degree * Q.

    gamma lives in Z^(1+r) and the polytope in R^r.  Output is sorted
    lexicographically.
    """
    d = gamma.ambient_rank
    if polytope.ambient_rank + 1 != d:
        raise ValueError("polytope rank incompatible with the graded group")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return [tuple(0 for _ in range(d))]
    if gamma.is_zero:
        return []
    first = tuple(row[0] for row in gamma.basis)
    part_coords = solve_integer((first,), (degree,))
    if part_coords is None:
        return []
    base_point = gamma.member(part_coords)
    kernel = [gamma.member(k) for k in integer_kernel((first,))]
    sub = [k[1:] for k in kernel]
    target_proj = [Fraction(x) for x in base_point[1:]]
    eqs = [(n, Fraction(c) * degree) for n, c in polytope.equations]
    ineqs = [(n, Fraction(c) * degree) for n, c in polytope.inequalities]

    def admissible(proj):
        return all(vec_dot(n, proj) == c for n, c in eqs) and all(
            vec_dot(n, proj) >= c for n, c in ineqs
        )

    if not sub:
        return [base_point] if admissible(base_point[1:]) else []
    lo = [min(Fraction(v[i]) * degree for v in polytope.vertices) for i in range(d - 1)]
    hi = [max(Fraction(v[i]) * degree for v in polytope.vertices) for i in range(d - 1)]
    pseudo = _left_inverse(sub)
    ranges = []
    for row in pseudo:
        lo_c = hi_c = Fraction(0)
        for j in range(d - 1):
            a = row[j] * (lo[j] - target_proj[j])
            b = row[j] * (hi[j] - target_proj[j])
            lo_c += min(a, b)
            hi_c += max(a, b)
        ranges.append(range(math.ceil(lo_c), math.floor(hi_c) + 1))
    out = []
    for combo in itertools.product(*ranges):
        point = list(base_point)
        for c, kvec in zip(combo, kernel):
            for i in range(d):
                point[i] += c * kvec[i]
        if admissible(tuple(point[1:])):
            out.append(tuple(point))
    return sorted(out)


def _left_inverse(rows):
    """Rational matrix recovering coefficients of combinations of the rows.

    rows must be linearly independent; row i of the result pairs to 1 with
    rows[i] and to 0 with the others.
    """
    gram = [[vec_dot(a, b) for b in rows] for a in rows]
    out = []
    for i in range(len(rows)):
        e = tuple(Fraction(1 if j == i else 0) for j in range(len(rows)))
        sol = solve_rational(gram, e)
        m = [Fraction(0)] * len(rows[0])
        for cj, rj in zip(sol, rows):
            for kk in range(len(m)):
                m[kk] += cj * rj[kk]
        out.append(tuple(m))
    return out


@dataclass(frozen=True)
class AffineMonoid:
    """A finitely generated submonoid of a lattice, given by generators."""

    ambient: Lattice
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        for g in gens:
            if g not in self.ambient:
                raise ValueError(f"generator {g} is outside the ambient group")
        object.__setattr__(self, "generators", gens)

    def cone(self):
        return Cone.from_rays(self.ambient.ambient_rank, self.generators)


def _reduced_cone_data(cone, gamma):
    """Lattice of gamma on span(cone) and the cone rays in its coordinates."""
    lat = gamma.intersect_subspace(cone.spanning_vectors())
    if lat.is_zero:
        return lat, []
    basis_cols = [tuple(b[i] for b in lat.basis) for i in range(lat.ambient_rank)]
    rays_red = []
    for r in cone.rays:
        sol = solve_rational(basis_cols, r)
        if sol is None:
            raise ValueError("ray outside the rational span of the lattice")
        rays_red.append(primitive(sol))
    return lat, sorted(set(rays_red))


def _simplicial_box_points(rays):
    """Lattice points of Z^k in the half-open parallelepiped of the rays."""
    k = len(rays)
    snf = smith_normal_form(rays)
    rinv = mat_inverse_unimodular(snf.right)
    # Z^k modulo the row lattice of the rays is generated by the rows of
    # right^-1, with orders given by the diagonal.
    reps = []
    axes = [range(dd if dd > 0 else 1) for dd in snf.diag]
    for combo in itertools.product(*axes):
        rep = [0] * k
        for a, w in zip(combo, rinv):
            for i in range(k):
                rep[i] += a * w[i]
        reps.append(tuple(rep))
    ray_cols = [tuple(r[i] for r in rays) for i in range(k)]
    points = set()
    for rep in reps:
        t = solve_rational(ray_cols, rep)
        shifted = list(rep)
        for ti, row in zip(t, rays):
            fl = math.floor(ti)
            if fl:
                for i in range(k):
                    shifted[i] -= fl * row[i]
        points.add(tuple(shifted))
    return points


def _triangulate_rays(rays):
    """Index sets of a triangulation of a pointed full-rank ray list."""
    k = mat_rank(rays)

    def recurse(active, rank_needed):
        if len(active) == rank_needed:
            return [tuple(active)]
        sub = Cone.from_rays(len(rays[0]), [rays[i] for i in active])
        apex = active[0]
        out = []
        for n in sub.inequalities:
            if vec_dot(n, rays[apex]) == 0:
                continue
            wall = [i for i in active if vec_dot(n, rays[i]) == 0]
            for simplex in recurse(wall, rank_needed - 1):
                out.append(tuple([apex] + list(simplex)))
        return out

    return recurse(list(range(len(rays))), k)


def hilbert_basis(cone, gamma=None):
    """The minimal generating set of gamma intersected with a pointed cone."""
    if gamma is None:
        gamma = Lattice.standard(cone.ambient_rank)
    if not cone.is_pointed:
        raise NotPointedError("the cone contains a line")
    if not cone.rays:
        return ()
    lat, rays_red = _reduced_cone_data(cone, gamma)
    if lat.is_zero:
        return ()
    k = lat.rank
    red_cone = Cone.from_rays(k, rays_red)
    ray_list = list(red_cone.rays)
    candidates = set()
    for simplex in _triangulate_rays(ray_list):
        gens = [ray_list[i] for i in simplex]
        candidates.update(_simplicial_box_points(gens))
        candidates.update(gens)
    candidates.discard(tuple(0 for _ in range(k)))
    candidates = sorted(candidates)
    basis = []
    for g in candidates:
        reducible = False
        for m in candidates:
            if m == g:
                continue
            diff = vec_sub(g, m)
            if any(x != 0 for x in diff) and red_cone.contains(diff):
                reducible = True
                break
        if not reducible:
            basis.append(g)
    lifted = [
        tuple(
            sum(c * b[i] for c, b in zip(x, lat.basis))
            for i in range(lat.ambient_rank)
        )
        for x in basis
    ]
    return tuple(sorted(lifted))


def monoid_membership(generators, target, cone=None):
    """True iff target is a nonnegative integer combination of generators.

    The cone spanned by the generators must be pointed; the search then
    terminates because any strictly positive functional drops along it.
    """
    gens = [tuple(g) for g in generators if any(x != 0 for x in g)]
    if all(x == 0 for x in target):
        return True
    if not gens:
        return False
    if cone is None:
        cone = Cone.from_rays(len(target), gens)
    if not cone.is_pointed:
        raise NotPointedError("membership search needs a pointed cone")
    seen = set()

    def search(rest):
        if all(x == 0 for x in rest):
            return True
        if rest in seen:
            return False
        seen.add(rest)
        for g in gens:
            diff = vec_sub(rest, g)
            if cone.contains(diff) and search(diff):
                return True
        return False

    return search(tuple(target))


def is_saturated_monoid(monoid):
    """(flag, witness): flag true iff the monoid equals gamma cap its cone.

    On failure the witness is the lexicographically least Hilbert-basis
    element of the saturation missing from the monoid.
    """
    gens = [g for g in monoid.generators if any(x != 0 for x in g)]
    if not gens:
        return True, None
    cone = Cone.from_rays(monoid.ambient.ambient_rank, gens)
    if not cone.is_pointed:
        raise NotPointedError("saturation test supports pointed monoids only")
    for h in hilbert_basis(cone, monoid.ambient):
        if not monoid_membership(gens, h, cone):
            return False, h
    return True, None


def in_convex_hull(point, points):
    """Exact membership of a point in the hull of the given points.

    Phase-one simplex with Bland's rule on the convex-combination system;
    used instead of a full hull when the point set is large.
    """
    pts = list(points)
    if not pts:
        return False
    d = len(point)
    # sum mu_i p_i = point, sum mu_i = 1, mu >= 0.
    rows = [[Fraction(p[i]) for p in pts] for i in range(d)]
    rhs = [Fraction(point[i]) for i in range(d)]
    rows.append([Fraction(1)] * len(pts))
    rhs.append(Fraction(1))
    return _lp_feasible(rows, rhs)


def _lp_feasible(rows, rhs):
    """Feasibility of rows . x = rhs, x >= 0 (exact phase-one simplex).

    Bland's rule guarantees termination.
    """
    m = len(rows)
    n = len(rows[0])
    tab = []
    for i in range(m):
        if rhs[i] < 0:
            row = [-Fraction(x) for x in rows[i]]
            b = -Fraction(rhs[i])
        else:
            row = [Fraction(x) for x in rows[i]]
            b = Fraction(rhs[i])
        tab.append(row + [Fraction(1 if j == i else 0) for j in range(m)] + [b])
    # Minimize the sum of artificials; z tracks reduced costs, z[-1] the
    # negated objective.
    z = [Fraction(0)] * (n + m + 1)
    for j in list(range(n)) + [n + m]:
        z[j] = -sum(tab[i][j] for i in range(m))
    basis = list(range(n, n + m))
    while True:
        enter = next((j for j in range(n + m) if z[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                key = (tab[i][-1] / tab[i][enter], basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            break  # cannot happen: phase one is bounded below
        piv = best[1]
        pv = tab[piv][enter]
        tab[piv] = [x / pv for x in tab[piv]]
        for i in range(m):
            if i != piv and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[piv])]
        if z[enter] != 0:
            f = z[enter]
            z = [a - f * b for a, b in zip(z, tab[piv])]
        basis[piv] = enter
    return z[-1] == 0
