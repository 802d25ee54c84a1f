"""Complexes of moment polytopes with weight groups.

The central data model: an ambient graded weight group inside Z^(1+r)
together with a poset of cells, each carrying a moment polytope in R^r and
a weight group whose rational span matches the cone over the polytope.
Cells may also carry automorphism-group data consumed by the gluing
cohomology module.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ContainmentError,
    OutsideSupportError,
    ParamError,
    ValidationError,
)
from .lattice import Lattice, is_direct_summand
from .linalg import mat_det, solve_rational, vec_sub
from .polyhedral import (
    _AffineFrame,
    cone_over,
    convex_hull,
    graded_lattice_points,
    intersect_polytopes,
)
from .rootdata import weyl_dimension


@dataclass(frozen=True)
class AutRestriction:
    """Character-group map to this cell from a smaller cell's automorphisms."""

    to: str
    matrix: tuple  # rows: images in Z^{rank(cell)} of the face's generators


@dataclass(frozen=True)
class AutData:
    """Automorphism group of a cell: character group as a cokernel."""

    rank: int
    relations: tuple = ()
    restrictions: tuple = ()

    def restriction_to(self, face_id):
        for r in self.restrictions:
            if r.to == face_id:
                return r
        return None


class Cell:
    """One cell: moment polytope plus its graded weight group."""

    __slots__ = ("id", "polytope", "weight_group", "aut")

    def __init__(self, cell_id, polytope, weight_group, aut=None):
        if weight_group.ambient_rank != polytope.ambient_rank + 1:
            raise ValueError("weight group must live in Z^(1+r)")
        object.__setattr__(self, "id", cell_id)
        object.__setattr__(self, "polytope", polytope)
        object.__setattr__(self, "weight_group", weight_group)
        object.__setattr__(self, "aut", aut)

    def __setattr__(self, name, value):
        raise AttributeError("Cell is immutable")

    def __repr__(self):
        return f"Cell({self.id!r}, vertices={list(self.polytope.vertices)})"

    def cone(self):
        return cone_over(self.polytope)

    def span_matches_weight_group(self):
        """Rational span of the cone equals the span of the weight group."""
        rays = self.cone().rays
        if self.weight_group.rank != self.polytope.dim + 1:
            return False
        basis_cols = [
            tuple(b[i] for b in self.weight_group.basis)
            for i in range(self.weight_group.ambient_rank)
        ]
        return all(solve_rational(basis_cols, r) is not None for r in rays)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple
    moment_set_convex: bool
    cohen_macaulay: bool

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


class SSVComplex:
    """A validated-on-demand complex of moment polytopes."""

    __slots__ = ("rank", "gamma", "cells", "maximal_ids", "_by_id", "_report")

    def __init__(self, rank, gamma, cells, maximal_ids):
        if gamma.ambient_rank != rank + 1:
            raise ValueError("gamma must live in Z^(1+rank)")
        by_id = {}
        for cell in cells:
            if cell.id in by_id:
                raise ValueError(f"duplicate cell id {cell.id!r}")
            if cell.polytope.ambient_rank != rank:
                raise ValueError(f"cell {cell.id!r} has wrong ambient rank")
            by_id[cell.id] = cell
        for mid in maximal_ids:
            if mid not in by_id:
                raise ValueError(f"maximal id {mid!r} is not a cell")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "cells", tuple(cells))
        object.__setattr__(self, "maximal_ids", tuple(sorted(maximal_ids)))
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_report", None)

    def __setattr__(self, name, value):
        raise AttributeError("SSVComplex is immutable")

    def cell(self, cell_id):
        return self._by_id[cell_id]

    def maximal_cells(self):
        return [self._by_id[i] for i in self.maximal_ids]

    def sorted_cells(self):
        return sorted(self.cells, key=lambda c: c.id)

    def cell_with_polytope(self, polytope):
        for c in self.sorted_cells():
            if c.polytope == polytope:
                return c
        return None

    def validate(self):
        report = object.__getattribute__(self, "_report")
        if report is None:
            report = validate_complex(self)
            object.__setattr__(self, "_report", report)
        return report

    def ensure_valid(self):
        report = self.validate()
        if not report.passed:
            fails = "; ".join(
                f"{c.name}: {c.witness}" for c in report.failures()
            )
            raise ValidationError(f"complex failed validation ({fails})", report)
        return report


def singleton_complex(cell, gamma=None):
    """Wrap one cell as a complex (ambient group defaults to the cell's)."""
    gamma = gamma if gamma is not None else cell.weight_group
    return SSVComplex(cell.polytope.ambient_rank, gamma, (cell,), (cell.id,))


def _restricted_weight_group(gamma, cone):
    """gamma cap the span of the cone: the saturated face weight group."""
    return gamma.intersect_subspace(cone.rays)


def _frame_volume(frame, polytope):
    """Volume of the polytope in the coordinates of the given frame."""
    coords = [frame.coords(v) for v in polytope.vertices]
    if any(c is None for c in coords):
        return None
    return _volume_of_points(coords)


def _volume_of_points(points):
    """Exact d-dimensional volume of a full-dimensional hull in Q^d."""
    d = len(points[0]) if points else 0
    if d == 0:
        return Fraction(1)
    hull = convex_hull(points, dimension_cap=16)
    if hull.dim < d:
        return Fraction(0)
    verts = hull.vertices
    apex = verts[0]
    total = Fraction(0)
    for facet_set in hull.facet_vertex_sets():
        fverts = [verts[i] for i in sorted(facet_set)]
        if apex in fverts:
            continue
        fframe = _AffineFrame(fverts)
        fcoords = [fframe.coords(v) for v in fverts]
        for simplex in _triangulate_full(fcoords):
            pts = [_frame_lift(fframe, s) for s in simplex]
            mat = [vec_sub(p, apex) for p in pts]
            total += abs(mat_det(mat))
    factorial = 1
    for i in range(2, d + 1):
        factorial *= i
    return total / factorial


def _frame_lift(frame, coords):
    point = [Fraction(x) for x in frame.base]
    for t, direction in zip(coords, frame.directions):
        for k in range(len(point)):
            point[k] += t * direction[k]
    return tuple(point)


def _triangulate_full(coords):
    """Triangulation of a full-dimensional hull in Q^d (pulling scheme)."""
    d = len(coords[0]) if coords else 0
    if d == 0:
        return [[coords[0]]] if coords else []
    hull = convex_hull(coords, dimension_cap=16)
    verts = hull.vertices
    if len(verts) == d + 1:
        return [list(verts)]
    apex = verts[0]
    out = []
    for facet_set in hull.facet_vertex_sets():
        fverts = [verts[i] for i in sorted(facet_set)]
        if apex in fverts:
            continue
        fframe = _AffineFrame(fverts)
        fcoords = [fframe.coords(v) for v in fverts]
        for simplex in _triangulate_full(fcoords):
            out.append([apex] + [_frame_lift(fframe, s) for s in simplex])
    return out


def moment_set_is_convex(complex_):
    """True iff the union of the maximal cell polytopes is convex."""
    maximal = complex_.maximal_cells()
    if len(maximal) == 1:
        return True
    dims = {c.polytope.dim for c in maximal}
    if len(dims) != 1:
        return False
    d = dims.pop()
    all_vertices = [v for c in maximal for v in c.polytope.vertices]
    hull = convex_hull(all_vertices)
    if hull.dim != d:
        return False
    frame = _AffineFrame(hull.vertices)
    total = Fraction(0)
    for c in maximal:
        vol = _frame_volume(frame, c.polytope)
        if vol is None:
            return False
        total += vol
    hull_vol = _volume_of_points([frame.coords(v) for v in hull.vertices])
    return total == hull_vol


def validate_complex(complex_):
    """Structural validation; failures carry concrete witnesses.

    Checks: cell spans match weight groups; pairwise polytope intersections
    are common faces and stored cells; containment agrees with the face
    relation; weight groups are direct summands of the ambient group and
    restrict consistently to common faces.  The convexity flag decides the
    Cohen-Macaulay flag.
    """
    checks = []
    cells = complex_.sorted_cells()

    span_witness = ""
    for c in cells:
        if not c.span_matches_weight_group():
            span_witness = f"cell {c.id}"
            break
    checks.append(CheckResult("cell-spans", span_witness == "", span_witness))

    inter_witness = ""
    face_groups = {}
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            a, b = cells[i], cells[j]
            if a.polytope == b.polytope:
                inter_witness = f"cells {a.id},{b.id} share a polytope"
                break
            inter = intersect_polytopes(a.polytope, b.polytope)
            if inter is None:
                continue
            if not (inter.is_face_of(a.polytope) and inter.is_face_of(b.polytope)):
                inter_witness = (
                    f"cells {a.id},{b.id} intersect but not in a common face"
                )
                break
            stored = complex_.cell_with_polytope(inter)
            if stored is None:
                inter_witness = f"intersection of {a.id},{b.id} is not a cell"
                break
            face_groups.setdefault(stored.id, []).append((a, b, inter))
        if inter_witness:
            break
    checks.append(
        CheckResult("pairwise-intersections", inter_witness == "", inter_witness)
    )

    order_witness = ""
    for a in cells:
        for b in cells:
            if a.id == b.id:
                continue
            if b.polytope.contains_polytope(a.polytope):
                if not a.polytope.is_face_of(b.polytope):
                    order_witness = f"{a.id} inside {b.id} but not a face"
                    break
        if order_witness:
            break
    checks.append(CheckResult("containment-is-face", order_witness == "", order_witness))

    summand_witness = ""
    for c in cells:
        try:
            if not is_direct_summand(c.weight_group, complex_.gamma):
                summand_witness = f"cell {c.id} weight group has torsion quotient"
                break
        except ContainmentError:
            summand_witness = f"cell {c.id} weight group is not inside gamma"
            break
    checks.append(
        CheckResult("weight-groups-direct-summands", summand_witness == "", summand_witness)
    )

    restrict_witness = ""
    if not inter_witness:
        for face_id, pairs in sorted(face_groups.items()):
            face_cell = complex_.cell(face_id)
            span_cone = face_cell.cone()
            expected = face_cell.weight_group
            for a, b, _inter in pairs:
                ra = _restricted_weight_group(a.weight_group, span_cone)
                rb = _restricted_weight_group(b.weight_group, span_cone)
                if ra != rb or ra != expected:
                    restrict_witness = (
                        f"cells {a.id},{b.id} restrict differently on face {face_id}"
                    )
                    break
            if restrict_witness:
                break
    checks.append(
        CheckResult("face-restrictions-agree", restrict_witness == "", restrict_witness)
    )

    convex = moment_set_is_convex(complex_)
    return ValidationReport(tuple(checks), convex, convex)


@dataclass(frozen=True)
class SectionModuleSummary:
    """Multiplicity-free module of sections in one degree."""

    degree: int
    weights: tuple  # (weight, multiplicity=1, dimension)
    total_dimension: int


def degree_slice(complex_, degree):
    """Points of gamma in degree ``degree`` over the union of maximal cells."""
    points = set()
    for cell in complex_.maximal_cells():
        points.update(
            graded_lattice_points(cell.polytope, complex_.gamma, degree)
        )
    return sorted(points)


def section_module(complex_, degree, datum):
    """Weights and dimensions of the degree-n sections."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    complex_.ensure_valid()
    weights = []
    total = 0
    for point in degree_slice(complex_, degree):
        lam = point[1:]
        dim = weyl_dimension(datum, lam)
        weights.append((lam, 1, dim))
        total += dim
    return SectionModuleSummary(degree, tuple(weights), total)


class MultiplicationBehavior(enum.Enum):
    ISOMORPHISM = "isomorphism"
    ZERO = "zero"


def multiplication_behavior(complex_, lam, mu):
    """Isomorphism iff one maximal cell cone contains both weights."""
    complex_.ensure_valid()
    lam, mu = tuple(lam), tuple(mu)
    for w in (lam, mu):
        if len(w) != complex_.rank + 1:
            raise ValueError(f"weight {w} has wrong length")
        if w[0] < 0:
            raise ValueError(f"weight {w} has negative degree")
        if w not in complex_.gamma:
            raise OutsideSupportError(f"weight {w} is not in the ambient group")
    cones = [(c.id, c.cone()) for c in complex_.maximal_cells()]
    in_lam = {cid for cid, cone in cones if cone.contains(lam)}
    in_mu = {cid for cid, cone in cones if cone.contains(mu)}
    if not in_lam:
        raise OutsideSupportError(f"weight {lam} lies in no maximal cell cone")
    if not in_mu:
        raise OutsideSupportError(f"weight {mu} lies in no maximal cell cone")
    if in_lam & in_mu:
        return MultiplicationBehavior.ISOMORPHISM
    return MultiplicationBehavior.ZERO


@dataclass(frozen=True)
class OrbitPoset:
    """Cell ids ordered by the face relation of their polytopes."""

    ids: tuple
    relations: frozenset  # (lower, upper) strict pairs

    def leq(self, a, b):
        return a == b or (a, b) in self.relations

    @property
    def simple(self):
        return len(self.minimal_ids()) == 1

    def minimal_ids(self):
        out = []
        for i in self.ids:
            if not any(a != i and self.leq(a, i) for a in self.ids):
                out.append(i)
        return out

    def __len__(self):
        return len(self.ids)


def orbit_poset(complex_):
    complex_.ensure_valid()
    cells = complex_.sorted_cells()
    relations = set()
    for a in cells:
        for b in cells:
            if a.id != b.id and b.polytope.contains_polytope(a.polytope):
                relations.add((a.id, b.id))
    return OrbitPoset(tuple(c.id for c in cells), frozenset(relations))


def vq_module_data(complex_, datum):
    """Degree-1 weights over the moment set and the induced module dimension.

    Returns (weights, dims, total) with total the sum of squared dimensions.
    """
    complex_.ensure_valid()
    weights = [p[1:] for p in degree_slice(complex_, 1)]
    dims = [weyl_dimension(datum, w) for w in weights]
    return weights, dims, sum(d * d for d in dims)


def sl2_catalog(kind, **params):
    """Catalog cells for the projective homogeneous SL(2) examples.

    Kinds and parameters:
      P1     n >= 1
      Fe     e >= 1, 1 <= n_minus < n_plus, e divides n_plus - n_minus
      Se     e >= 1, n >= 1, e divides n
      P1xP1  m, n >= 1
      P2     n >= 1
    """

    def need(cond, message):
        if not cond:
            raise ParamError(message)

    def ival(name):
        if name not in params:
            raise ParamError(f"{kind} needs parameter {name}")
        v = params[name]
        if not isinstance(v, int):
            raise ParamError(f"parameter {name} must be an integer")
        return v

    if kind == "P1":
        n = ival("n")
        need(n >= 1, "P1 needs n >= 1")
        polytope = convex_hull([(n,)])
        group = Lattice(2, [(1, n)])
        label = f"P1(n={n})"
    elif kind == "Fe":
        e, n_minus, n_plus = ival("e"), ival("n_minus"), ival("n_plus")
        need(e >= 1, "Fe needs e >= 1")
        need(1 <= n_minus < n_plus, "Fe needs 1 <= n_minus < n_plus")
        need((n_plus - n_minus) % e == 0, "Fe needs e | (n_plus - n_minus)")
        polytope = convex_hull([(n_minus,), (n_plus,)])
        group = Lattice(2, [(1, n_plus), (0, e)])
        label = f"Fe(e={e},n_minus={n_minus},n_plus={n_plus})"
    elif kind == "Se":
        e, n = ival("e"), ival("n")
        need(e >= 1 and n >= 1, "Se needs e, n >= 1")
        need(n % e == 0, "Se needs e | n")
        polytope = convex_hull([(0,), (n,)])
        group = Lattice(2, [(1, n), (0, e)])
        label = f"Se(e={e},n={n})"
    elif kind == "P1xP1":
        m, n = ival("m"), ival("n")
        need(m >= 1 and n >= 1, "P1xP1 needs m, n >= 1")
        polytope = convex_hull([(abs(m - n),), (m + n,)])
        group = Lattice(2, [(1, m + n), (0, 2)])
        label = f"P1xP1(m={m},n={n})"
    elif kind == "P2":
        n = ival("n")
        need(n >= 1, "P2 needs n >= 1")
        polytope = convex_hull([(0,), (2 * n,)])
        group = Lattice(2, [(1, 2 * n), (0, 4)])
        label = f"P2(n={n})"
    else:
        raise ParamError(f"unknown catalog kind {kind!r}")
    return Cell(label, polytope, group)


def complete_faces(complex_, full=True):
    """Add missing face cells, inheriting saturated weight groups.

    With ``full`` every face of every cell is added; otherwise only pairwise
    intersections.  New cells get ids "face0", "face1", ... in a
    deterministic order, and weight groups gamma cap span(cone(face)).
    """
    cells = list(complex_.sorted_cells())
    polytopes = {c.polytope for c in cells}
    fresh = []
    if full:
        for c in cells:
            for face in c.polytope.face_polytopes():
                if face not in polytopes:
                    polytopes.add(face)
                    fresh.append(face)
    changed = True
    while changed:
        changed = False
        current = sorted(polytopes, key=lambda p: (p.dim, p.vertices))
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                inter = intersect_polytopes(current[i], current[j])
                if inter is not None and inter not in polytopes:
                    polytopes.add(inter)
                    fresh.append(inter)
                    changed = True
    fresh.sort(key=lambda p: (p.dim, p.vertices))
    new_cells = cells[:]
    taken = {c.id for c in cells}
    k = 0
    for face in fresh:
        while f"face{k}" in taken:
            k += 1
        group = _restricted_weight_group(complex_.gamma, cone_over(face))
        new_cells.append(Cell(f"face{k}", face, group))
        taken.add(f"face{k}")
    return SSVComplex(complex_.rank, complex_.gamma, new_cells, complex_.maximal_ids)
