import random

import pytest

from ssvlib.lattice import (
    AbelianInvariants,
    Lattice,
    cokernel_invariants,
    integer_kernel,
    invariant_factors,
    is_direct_summand,
    lattice_index,
    quotient_invariants,
    saturation_and_index,
    smith_normal_form,
    solve_integer,
)
from ssvlib.linalg import mat_det, mat_mul
from ssvlib.errors import ContainmentError


def reconstruct(snf, matrix):
    return mat_mul(mat_mul(snf.left, matrix), snf.right)


def assert_valid_snf(matrix):
    snf = smith_normal_form(matrix)
    prod = reconstruct(snf, matrix)
    for i, row in enumerate(prod):
        for j, entry in enumerate(row):
            expected = snf.diag[i] if i == j and i < len(snf.diag) else 0
            assert entry == expected
    for a, b in zip(snf.diag, snf.diag[1:]):
        assert a >= 0 and b >= 0
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    assert abs(mat_det(snf.left)) == 1
    assert abs(mat_det(snf.right)) == 1
    return snf


def test_snf_identity():
    snf = assert_valid_snf(((1, 0), (0, 1)))
    assert snf.diag == (1, 1)


def test_snf_diagonal_2_3():
    # gcd 1, product of invariant factors 6
    snf = assert_valid_snf(((2, 0), (0, 3)))
    assert snf.diag == (1, 6)


def test_snf_2x2_dense():
    # d1 = gcd of entries = 2, d1*d2 = |det| = 8
    snf = assert_valid_snf(((2, 4), (6, 8)))
    assert snf.diag == (2, 4)


def test_snf_rectangular_and_zero():
    assert assert_valid_snf(((0, 0), (0, 0))).diag == (0, 0)
    assert assert_valid_snf(((4, 6, 10),)).diag == (2,)
    snf = assert_valid_snf(((2,), (3,), (4,)))
    assert snf.diag == (1,)


def test_snf_randomized_reconstruction():
    rng = random.Random(7)
    for _ in range(200):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        matrix = tuple(
            tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(m)
        )
        assert_valid_snf(matrix)


def random_unimodular(rng, n):
    # Product of elementary shears and swaps.
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-3, 3)
        rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    return tuple(tuple(r) for r in rows)


def test_snf_invariant_under_unimodular_multiplication():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 4)
        matrix = tuple(tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(n))
        u = random_unimodular(rng, n)
        v = random_unimodular(rng, n)
        transformed = mat_mul(mat_mul(u, matrix), v)
        assert smith_normal_form(matrix).diag == smith_normal_form(transformed).diag


def test_integer_kernel_and_solve():
    matrix = ((2, 4, 6), (1, 2, 3))
    for k in integer_kernel(matrix):
        assert all(sum(row[i] * k[i] for i in range(3)) == 0 for row in matrix)
    assert len(integer_kernel(matrix)) == 2
    sol = solve_integer(((2, 0), (0, 3)), (4, 9))
    assert sol == (2, 3)
    assert solve_integer(((2,),), (3,)) is None


def test_hermite_canonical_and_membership():
    l1 = Lattice(2, [(1, 1), (1, -1)])
    l2 = Lattice(2, [(1, -1), (2, 0)])
    assert l1 == l2
    assert (2, 0) in l1
    assert (1, 0) not in l1
    assert l1.coordinates((3, 1)) is not None


def test_zero_lattice():
    z = Lattice(3)
    assert z.is_zero and z.rank == 0
    sat, idx = saturation_and_index(z, Lattice.standard(3))
    assert sat.is_zero and idx == 1


def test_direct_summand_examples():
    z2 = Lattice.standard(2)
    assert is_direct_summand(Lattice(2, [(1, 0)]), z2)
    assert not is_direct_summand(Lattice(1, [(2,)]), Lattice.standard(1))
    assert not is_direct_summand(Lattice(2, [(1, 1), (1, -1)]), z2)


def test_direct_summand_containment_error():
    with pytest.raises(ContainmentError):
        is_direct_summand(Lattice(1, [(1,)]), Lattice(1, [(2,)]))


def test_saturation_examples():
    z1 = Lattice.standard(1)
    sat, idx = saturation_and_index(Lattice(1, [(2,)]), z1)
    assert sat == z1 and idx == 2

    z2 = Lattice.standard(2)
    sat, idx = saturation_and_index(Lattice(2, [(2, 0), (0, 3)]), z2)
    assert sat == z2 and idx == 6

    diag = Lattice(2, [(1, 1)])
    sat, idx = saturation_and_index(diag, z2)
    assert sat == diag and idx == 1


def test_saturation_idempotent_and_index_matches_torsion():
    rng = random.Random(23)
    z3 = Lattice.standard(3)
    for _ in range(60):
        gens = [tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(rng.randint(1, 3))]
        sub = Lattice(3, gens)
        sat, idx = saturation_and_index(sub, z3)
        again, idx2 = saturation_and_index(sat, z3)
        assert again == sat and idx2 == 1
        inv = quotient_invariants(sub, sat)
        prod = 1
        for t in inv.torsion:
            prod *= t
        assert inv.free_rank == 0 and prod == idx


def test_direct_summand_agrees_with_torsion_freeness():
    rng = random.Random(5)
    z3 = Lattice.standard(3)
    for _ in range(80):
        gens = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(rng.randint(1, 3))]
        sub = Lattice(3, gens)
        assert is_direct_summand(sub, z3) == quotient_invariants(sub, z3).is_free


def test_lattice_intersection():
    a = Lattice(2, [(2, 0), (0, 1)])
    b = Lattice(2, [(3, 0), (0, 1)])
    assert a.intersect(b) == Lattice(2, [(6, 0), (0, 1)])


def test_intersect_subspace():
    gamma = Lattice(3, [(1, 0, 0), (1, 2, 0), (1, 4, 2)])
    # span of the cone over the segment [(2,0),(4,2)]
    sub = gamma.intersect_subspace([(1, 2, 0), (1, 4, 2)])
    assert sub == Lattice(3, [(1, 2, 0), (1, 4, 2)])
    # span of the cone over the segment [(4,0),(4,2)]
    sub2 = gamma.intersect_subspace([(1, 4, 0), (1, 4, 2)])
    assert sub2 == Lattice(3, [(1, 4, 0), (0, 0, 2)])


def test_cokernel_invariants():
    inv = cokernel_invariants(((2, 0), (0, 3)), 2)
    assert inv == AbelianInvariants(0, (6,))
    assert str(inv) == "Z/6"
    assert lattice_index(Lattice(2, [(2, 0), (0, 3)]), Lattice.standard(2)) == 6
    assert lattice_index(Lattice(2, [(2, 0)]), Lattice.standard(2)) is None


def test_invariant_factors():
    assert invariant_factors(((2, 4), (6, 8))) == (2, 4)
