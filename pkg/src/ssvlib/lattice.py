"""Exact integer-lattice algebra: Smith and Hermite forms, subgroups of Z^d.

Everything uses arbitrary-precision Python ints.  Subgroups are represented
by a canonical Hermite-form basis, so equality of subgroups is equality of
representations.
"""

from dataclasses import dataclass

from .errors import ContainmentError
from .linalg import (
    canonical_direction,
    mat_identity,
    mat_inverse_unimodular,
    mat_transpose,
    mat_vec,
    rational_nullspace,
)


@dataclass(frozen=True)
class SmithDecomposition:
    """left * matrix * right is diagonal; left and right are unimodular."""

    left: tuple
    diag: tuple
    right: tuple


def smith_normal_form(matrix):
    """Smith normal form with transforms.

    Returns SmithDecomposition(L, diag, R) with L*M*R diagonal, diagonal
    entries nonnegative and each dividing the next.
    """
    rows = [list(r) for r in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    left = [list(r) for r in mat_identity(m)]
    right = [list(r) for r in mat_identity(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]
        left[i] = [a - q * b for a, b in zip(left[i], left[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in rows:
            r[i] -= q * r[j]
        for r in right:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in rows:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        rows[i] = [-a for a in rows[i]]
        left[i] = [-a for a in left[i]]

    t = 0
    while t < min(m, n):
        # Locate a minimal nonzero entry in the remaining block.
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if rows[i][j] != 0 and (best is None or abs(rows[i][j]) < best[0]):
                    best = (abs(rows[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        if rows[t][t] < 0:
            negate_row(t)

        dirty = False
        for i in range(t + 1, m):
            if rows[i][t] != 0:
                q = rows[i][t] // rows[t][t]
                row_op(i, t, q)
                if rows[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if rows[t][j] != 0:
                q = rows[t][j] // rows[t][t]
                col_op(j, t, q)
                if rows[t][j] != 0:
                    dirty = True
        if dirty:
            continue

        # Enforce divisibility of the rest of the block by the pivot.
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if rows[i][j] % rows[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)
            continue
        t += 1

    diag = tuple(rows[i][i] for i in range(min(m, n)))
    return SmithDecomposition(
        tuple(tuple(r) for r in left), diag, tuple(tuple(r) for r in right)
    )


def invariant_factors(matrix):
    """Nonzero diagonal entries of the Smith form."""
    return tuple(d for d in smith_normal_form(matrix).diag if d != 0)


def hermite_basis(generators, width):
    """Canonical row-Hermite basis of the subgroup spanned by the rows.

    Pivots are positive, entries above each pivot are reduced into [0, pivot).
    """
    rows = [list(g) for g in generators if any(x != 0 for x in g)]
    basis = []
    for col in range(width):
        carrier = None
        for r in rows:
            if r[col] != 0:
                carrier = r
                break
        if carrier is None:
            continue
        rows.remove(carrier)
        # Fold every other row with a nonzero entry in this column into it.
        for r in rows:
            while r[col] != 0:
                if abs(r[col]) < abs(carrier[col]):
                    carrier, r[:] = r[:], carrier
                q = r[col] // carrier[col]
                for k in range(width):
                    r[k] -= q * carrier[k]
        if carrier[col] < 0:
            carrier = [-x for x in carrier]
        basis.append(carrier)
        rows = [r for r in rows if any(x != 0 for x in r)]
    # Reduce entries above pivots.
    for i in reversed(range(len(basis))):
        pcol = next(c for c in range(width) if basis[i][c] != 0)
        for j in range(i):
            q = basis[j][pcol] // basis[i][pcol]
            if q != 0:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[i])]
    return tuple(tuple(r) for r in basis)


def integer_kernel(matrix):
    """Basis of the integer solutions of matrix * x = 0."""
    if not matrix:
        return ()
    n = len(matrix[0])
    snf = smith_normal_form(matrix)
    rank = sum(1 for d in snf.diag if d != 0)
    cols = mat_transpose(snf.right)
    return tuple(cols[j] for j in range(rank, n))


def solve_integer(matrix, target):
    """One integer solution of matrix * x = target, or None."""
    if not matrix:
        return None
    snf = smith_normal_form(matrix)
    lb = mat_vec(snf.left, target)
    n = len(matrix[0])
    y = [0] * n
    for i, v in enumerate(lb):
        d = snf.diag[i] if i < len(snf.diag) else 0
        if d == 0:
            if v != 0:
                return None
        else:
            if v % d != 0:
                return None
            y[i] = v // d
    return mat_vec(snf.right, tuple(y))


@dataclass(frozen=True)
class AbelianInvariants:
    """Finitely generated abelian group: Z^free_rank + sum Z/t, t | next."""

    free_rank: int
    torsion: tuple

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self):
        return not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel_invariants(relation_rows, ambient_rank):
    """Invariants of Z^ambient_rank modulo the row span of relation_rows."""
    if not relation_rows:
        return AbelianInvariants(ambient_rank, ())
    factors = invariant_factors(relation_rows)
    torsion = tuple(d for d in factors if d > 1)
    return AbelianInvariants(ambient_rank - len(factors), torsion)


class Lattice:
    """A finitely generated subgroup of Z^d in canonical Hermite form."""

    __slots__ = ("ambient_rank", "basis")

    def __init__(self, ambient_rank, generators=()):
        for g in generators:
            if len(g) != ambient_rank:
                raise ValueError("generator length does not match ambient rank")
            if any(not isinstance(x, int) for x in g):
                raise ValueError("lattice generators must be integers")
        object.__setattr__(self, "ambient_rank", ambient_rank)
        object.__setattr__(self, "basis", hermite_basis(generators, ambient_rank))

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    @classmethod
    def standard(cls, d):
        return cls(d, mat_identity(d))

    @property
    def rank(self):
        return len(self.basis)

    @property
    def is_zero(self):
        return not self.basis

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.ambient_rank == other.ambient_rank
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.basis))

    def __repr__(self):
        return f"Lattice({self.ambient_rank}, {list(self.basis)})"

    def coordinates(self, vector):
        """Integer coordinates of vector in the canonical basis, or None."""
        if len(vector) != self.ambient_rank:
            raise ValueError("vector has wrong length")
        residue = list(vector)
        coords = []
        for row in self.basis:
            pcol = next(c for c in range(self.ambient_rank) if row[c] != 0)
            if residue[pcol] % row[pcol] != 0:
                return None
            q = residue[pcol] // row[pcol]
            coords.append(q)
            residue = [a - q * b for a, b in zip(residue, row)]
        if any(x != 0 for x in residue):
            return None
        return tuple(coords)

    def __contains__(self, vector):
        return self.coordinates(vector) is not None

    def member(self, coords):
        """The lattice element with the given basis coordinates."""
        v = [0] * self.ambient_rank
        for c, row in zip(coords, self.basis):
            for k in range(self.ambient_rank):
                v[k] += c * row[k]
        return tuple(v)

    def contains_lattice(self, other):
        return all(g in self for g in other.basis)

    def intersect(self, other):
        """Intersection with another subgroup of the same ambient Z^d."""
        if self.ambient_rank != other.ambient_rank:
            raise ValueError("ambient ranks differ")
        if self.is_zero or other.is_zero:
            return Lattice(self.ambient_rank)
        # Solve a*B1 - b*B2 = 0; columns are the stacked coefficients.
        k1, k2 = self.rank, other.rank
        matrix = tuple(
            tuple(self.basis[i][r] for i in range(k1))
            + tuple(-other.basis[j][r] for j in range(k2))
            for r in range(self.ambient_rank)
        )
        gens = []
        for sol in integer_kernel(matrix):
            a = sol[:k1]
            gens.append(self.member(a))
        return Lattice(self.ambient_rank, gens)

    def intersect_subspace(self, spanning_vectors):
        """Sublattice of elements lying in the rational span of the vectors."""
        span_rows = [tuple(v) for v in spanning_vectors if any(x != 0 for x in v)]
        if not span_rows:
            return Lattice(self.ambient_rank)
        # Equations cutting out the span: vectors orthogonal to every row.
        nullspace = rational_nullspace(span_rows)
        equations = [canonical_direction(v) for v in nullspace]
        if not equations:
            return self
        if self.is_zero:
            return self
        coeff = tuple(
            tuple(sum(e[k] * row[k] for k in range(self.ambient_rank)) for row in self.basis)
            for e in equations
        )
        gens = [self.member(sol) for sol in integer_kernel(coeff)]
        return Lattice(self.ambient_rank, gens)


def coordinate_matrix(sub, ambient):
    """Rows: coordinates of sub's basis in ambient's basis.

    Raises ContainmentError if a generator of sub is outside ambient.
    """
    rows = []
    for g in sub.basis:
        c = ambient.coordinates(g)
        if c is None:
            raise ContainmentError(f"generator {g} is not in the ambient subgroup")
        rows.append(c)
    return tuple(rows)


def quotient_invariants(sub, ambient):
    """Invariants of ambient/sub (sub must be contained in ambient)."""
    if sub.is_zero:
        return AbelianInvariants(ambient.rank, ())
    return cokernel_invariants(coordinate_matrix(sub, ambient), ambient.rank)


def is_direct_summand(sub, ambient):
    """True iff ambient/sub is torsion-free."""
    return quotient_invariants(sub, ambient).is_free


def saturation_and_index(sub, ambient):
    """Saturation of sub in ambient and the index of sub in it.

    The saturation is ambient intersected with the rational span of sub; the
    index of sub inside it is always finite.
    """
    if sub.is_zero:
        return Lattice(ambient.ambient_rank), 1
    coords = coordinate_matrix(sub, ambient)
    snf = smith_normal_form(coords)
    rank = sum(1 for d in snf.diag if d != 0)
    rinv = mat_inverse_unimodular(snf.right)
    gens = [ambient.member(rinv[i]) for i in range(rank)]
    index = 1
    for d in snf.diag[:rank]:
        index *= d
    return Lattice(ambient.ambient_rank, gens), index


def saturation(sub, ambient):
    return saturation_and_index(sub, ambient)[0]


def lattice_index(sub, ambient):
    """Index [ambient : sub]; None when infinite."""
    inv = quotient_invariants(sub, ambient)
    if inv.free_rank:
        return None
    idx = 1
    for t in inv.torsion:
        idx *= t
    return idx
