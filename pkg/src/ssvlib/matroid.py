"""Weight sets of graded modules and matroid-polytope subdivisions."""

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidRankDataError, NonLatticeError, SearchBudgetError
from .linalg import canonical_direction, vec_sub
from .polyhedral import convex_hull, enumerate_faces, in_convex_hull
from .degeneration import regular_subdivision

SEARCH_BUDGET = 200_000
SYMMETRY_GROUP_CAP = 5_000


@dataclass(frozen=True)
class GradedShape:
    """Corank and the ranks of the graded parts."""

    r: int
    ranks: tuple

    def __post_init__(self):
        ranks = tuple(int(x) for x in self.ranks)
        if any(x < 1 for x in ranks):
            raise ValueError("all ranks must be positive")
        if not 0 <= self.r <= sum(ranks):
            raise ValueError("need 0 <= r <= sum of ranks")
        object.__setattr__(self, "ranks", ranks)

    @property
    def positions(self):
        return len(self.ranks)


def weight_set(shape):
    """Integer tuples in the rank box with coordinate sum r, lex order."""
    out = []
    for combo in itertools.product(*(range(m + 1) for m in shape.ranks)):
        if sum(combo) == shape.r:
            out.append(combo)
    return out


def weight_set_size_oracle(shape):
    """Coefficient of x^r in prod (1 + x + ... + x^rank); test oracle."""
    poly = [1]
    for m in shape.ranks:
        fresh = [0] * (len(poly) + m)
        for i, c in enumerate(poly):
            for j in range(m + 1):
                fresh[i + j] += c
        poly = fresh
    return poly[shape.r] if shape.r < len(poly) else 0


class RankFunctionData:
    """Lower bounds d_I on coordinate sums over subsets of positions.

    Unspecified subsets default to the trivial bounds implied by the box;
    the full table must satisfy the boundary conditions and submodularity.
    """

    __slots__ = ("shape", "table")

    def __init__(self, shape, entries=None):
        object.__setattr__(self, "shape", shape)
        n = shape.positions
        table = {}
        for subset in _all_subsets(n):
            complement_rank = sum(
                shape.ranks[i] for i in range(n) if i not in subset
            )
            table[subset] = max(0, shape.r - complement_rank)
        for key, value in (entries or {}).items():
            subset = frozenset(key)
            if not subset <= set(range(n)):
                raise InvalidRankDataError(f"subset {sorted(subset)} out of range")
            table[subset] = int(value)
        object.__setattr__(self, "table", table)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("RankFunctionData is immutable")

    def _validate(self):
        n = self.shape.positions
        full = frozenset(range(n))
        if self.table[frozenset()] != 0:
            raise InvalidRankDataError("d(empty set) must be 0")
        if self.table[full] != self.shape.r:
            raise InvalidRankDataError("d(full set) must equal r")
        subsets = _all_subsets(n)
        for a in subsets:
            if self.table[a] < 0:
                raise InvalidRankDataError(f"d{sorted(a)} is negative")
            for b in subsets:
                lhs = self.table[a] + self.table[b]
                rhs = self.table[a | b] + self.table[a & b]
                if lhs > rhs:
                    raise InvalidRankDataError(
                        f"submodularity fails at {sorted(a)}, {sorted(b)}"
                    )

    def bound(self, subset):
        return self.table[frozenset(subset)]


def _all_subsets(n):
    out = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            out.append(frozenset(combo))
    return out


def thin_cell_weight_set(shape, rank_data):
    """(points, full_flag, witness) for the thin-cell weight subset.

    The flag records whether the subset is all lattice points of its own
    convex hull; on failure the witness is a hull lattice point missing
    from the subset.
    """
    points = weight_set(shape)
    kept = []
    for p in points:
        ok = True
        for subset, bound in rank_data.table.items():
            if sum(p[i] for i in subset) < bound:
                ok = False
                break
        if ok:
            kept.append(p)
    for p in points:
        if p in kept:
            continue
        if in_convex_hull(p, kept):
            return kept, False, p
    return kept, True, None


def is_matroid_polytope(polytope):
    """True iff every edge direction is a difference of coordinate vectors."""
    for v in polytope.vertices:
        for x in v:
            if Fraction(x).denominator != 1:
                raise NonLatticeError(f"vertex {v} is not integral")
    n = polytope.ambient_rank
    allowed = set()
    for i in range(n):
        for j in range(n):
            if i != j:
                allowed.add(
                    canonical_direction(
                        tuple(1 if k == i else (-1 if k == j else 0) for k in range(n))
                    )
                )
    poset = enumerate_faces(polytope)
    for dim, vertex_set in poset.faces:
        if dim != 1:
            continue
        idx = sorted(vertex_set)
        extremes = [polytope.vertices[i] for i in idx]
        ends = convex_hull(extremes).vertices
        direction = canonical_direction(vec_sub(ends[1], ends[0]))
        if direction not in allowed:
            return False
    return True


def _rank_preserving_permutations(shape):
    """Permutations of positions preserving the rank vector, or None if huge."""
    order = 1
    seen = {}
    for m in shape.ranks:
        seen[m] = seen.get(m, 0) + 1
    for count in seen.values():
        for i in range(2, count + 1):
            order *= i
    if order > SYMMETRY_GROUP_CAP:
        return None
    perms = []
    for perm in itertools.permutations(range(shape.positions)):
        if all(shape.ranks[perm[i]] == shape.ranks[i] for i in range(shape.positions)):
            perms.append(perm)
    return perms


def _permute_point(point, perm):
    # position i of the image reads position perm[i] of the original
    return tuple(point[perm[i]] for i in range(len(point)))


def _subdivision_key(cells):
    return frozenset(cell.vertices for cell in cells)


def enumerate_matroid_subdivisions(shape, cap=2, workers=1, budget=SEARCH_BUDGET):
    """All regular subdivisions into matroid polytopes, heights in [0, cap].

    The search runs over integer height assignments up to coordinate
    permutations preserving the ranks, then closes the result under those
    permutations; output is deterministic and sorted regardless of the
    worker count.
    """
    points = weight_set(shape)
    if not points:
        return []
    if len(points) > 12:
        raise SearchBudgetError(f"weight set of size {len(points)} exceeds 12")
    perms = _rank_preserving_permutations(shape)
    hull = convex_hull(points)
    total = (cap + 1) ** len(points)
    index_of = {p: i for i, p in enumerate(points)}
    if perms and len(perms) > 1:
        point_perms = [
            tuple(index_of[_permute_point(p, perm)] for p in points)
            for perm in perms
        ]
    else:
        point_perms = []

    def canonical(heights):
        for pperm in point_perms:
            image = tuple(heights[i] for i in pperm)
            if image < heights:
                return False
        return True

    assignments = [
        h
        for h in itertools.product(range(cap + 1), repeat=len(points))
        if canonical(h)
    ]
    if total > budget and len(assignments) > budget:
        raise SearchBudgetError(
            f"{len(assignments)} height assignments exceed the budget {budget}"
        )

    def evaluate(heights):
        cells = regular_subdivision(hull, points, heights)
        return tuple(sorted(cells, key=lambda c: c.vertices))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            evaluated = list(pool.map(evaluate, assignments))
    else:
        evaluated = [evaluate(h) for h in assignments]

    found = {}
    for cells in evaluated:
        key = _subdivision_key(cells)
        if key not in found and all(is_matroid_polytope(c) for c in cells):
            found[key] = cells
    # close under the symmetry group
    if point_perms:
        frontier = list(found.values())
        while frontier:
            fresh = []
            for cells in frontier:
                for perm in perms:
                    image = tuple(
                        sorted(
                            (
                                convex_hull(
                                    [_permute_point(v, perm) for v in c.vertices]
                                )
                                for c in cells
                            ),
                            key=lambda c: c.vertices,
                        )
                    )
                    key = _subdivision_key(image)
                    if key not in found:
                        found[key] = image
                        fresh.append(image)
            frontier = fresh
    out = list(found.values())
    out.sort(key=lambda cells: (len(cells), [c.vertices for c in cells]))
    return out
