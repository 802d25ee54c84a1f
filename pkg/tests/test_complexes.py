import pytest

from ssvlib.complexes import (
    Cell,
    MultiplicationBehavior,
    SSVComplex,
    complete_faces,
    multiplication_behavior,
    orbit_poset,
    section_module,
    singleton_complex,
    sl2_catalog,
    validate_complex,
    vq_module_data,
)
from ssvlib.errors import OutsideSupportError, ParamError, ValidationError
from ssvlib.fixtures import (
    overlapping_squares_complex,
    segre_quadric_cell,
    sl2_chain_complex,
    triangle_pair_complex,
)
from ssvlib.lattice import Lattice
from ssvlib.polyhedral import convex_hull
from ssvlib.rootdata import root_datum


def test_singleton_complex_validates():
    cell = sl2_catalog("Se", e=1, n=3)
    x = singleton_complex(cell)
    report = x.validate()
    assert report.passed
    assert report.moment_set_convex and report.cohen_macaulay


def test_triangle_pair_validates():
    x = triangle_pair_complex()
    report = x.validate()
    assert report.passed, report.failures()
    assert report.moment_set_convex
    assert report.cohen_macaulay


def test_triangle_pair_poset():
    x = triangle_pair_complex()
    poset = orbit_poset(x)
    assert len(poset) == 7
    assert not poset.simple
    assert poset.minimal_ids() == ["p1", "p2"]
    assert poset.leq("p1", "t1") and poset.leq("s12", "t2")
    assert not poset.leq("s1", "t2")


def test_chain_validates_and_poset():
    x = sl2_chain_complex()
    assert x.validate().passed
    poset = orbit_poset(x)
    assert len(poset) == 5
    assert not poset.simple
    assert poset.minimal_ids() == ["v0", "v2", "v4"]


def test_overlapping_squares_fail():
    x = overlapping_squares_complex()
    report = x.validate()
    assert not report.passed
    names = [c.name for c in report.failures()]
    assert "pairwise-intersections" in names
    failure = next(c for c in report.failures() if c.name == "pairwise-intersections")
    assert "a" in failure.witness and "b" in failure.witness
    with pytest.raises(ValidationError):
        x.ensure_valid()


def test_missing_face_cell_fails():
    gamma = Lattice(2, [(1, 0), (0, 2)])
    cells = (
        Cell("c1", convex_hull([(0,), (2,)]), Lattice(2, [(1, 2), (0, 2)])),
        Cell("c2", convex_hull([(2,), (4,)]), Lattice(2, [(1, 4), (0, 2)])),
    )
    x = SSVComplex(1, gamma, cells, ("c1", "c2"))
    report = validate_complex(x)
    assert not report.passed
    assert any(c.name == "pairwise-intersections" for c in report.failures())


def test_direct_summand_violation_detected():
    # index-2 weight subgroup of the ambient group is not a direct summand
    gamma = Lattice(2, [(1, 0), (0, 1)])
    cells = (Cell("c", convex_hull([(0,), (2,)]), Lattice(2, [(1, 0), (0, 2)])),)
    x = SSVComplex(1, gamma, cells, ("c",))
    report = validate_complex(x)
    assert any(c.name == "weight-groups-direct-summands" for c in report.failures())


def test_nonconvex_moment_set_flag():
    # an L-shape: two unit squares sharing only an edge segment of the corner
    gamma = Lattice.standard(3)
    sq1 = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    sq2 = convex_hull([(1, 0), (2, 0), (1, 1), (2, 1)])
    sq3 = convex_hull([(0, 1), (1, 1), (0, 2), (1, 2)])
    cells = [
        Cell("a", sq1, gamma),
        Cell("b", sq2, gamma),
        Cell("c", sq3, gamma),
    ]
    x = SSVComplex(2, gamma, cells, ("a", "b", "c"))
    x = complete_faces(x)
    report = x.validate()
    assert report.passed, report.failures()
    assert not report.moment_set_convex
    assert not report.cohen_macaulay


def test_section_module_segre():
    x = singleton_complex(segre_quadric_cell())
    a1 = root_datum("A1")
    summary = section_module(x, 1, a1)
    assert [w for w, _, _ in summary.weights] == [(0,), (2,)]
    assert summary.total_dimension == 4
    assert section_module(x, 0, a1).total_dimension == 1


def test_section_module_chain_and_mayer_vietoris():
    a1 = root_datum("A1")
    chain = sl2_chain_complex()
    summary = section_module(chain, 1, a1)
    assert [w for w, _, _ in summary.weights] == [(0,), (2,), (4,)]
    assert summary.total_dimension == 9

    # Mayer-Vietoris: total = t1 + t2 - t12 degreewise
    c1 = singleton_complex(chain.cell("c1"))
    c2 = singleton_complex(chain.cell("c2"))
    v2 = singleton_complex(chain.cell("v2"))
    for n in range(0, 5):
        t = section_module(chain, n, a1).total_dimension
        t1 = section_module(c1, n, a1).total_dimension
        t2 = section_module(c2, n, a1).total_dimension
        t12 = section_module(v2, n, a1).total_dimension
        assert t == t1 + t2 - t12


def test_multiplication_behavior():
    x = triangle_pair_complex()
    assert (
        multiplication_behavior(x, (1, 0, 0), (1, 4, 0))
        is MultiplicationBehavior.ZERO
    )
    assert (
        multiplication_behavior(x, (1, 0, 0), (1, 2, 0))
        is MultiplicationBehavior.ISOMORPHISM
    )
    # symmetry
    assert (
        multiplication_behavior(x, (1, 4, 0), (1, 0, 0))
        is MultiplicationBehavior.ZERO
    )
    chain = sl2_chain_complex()
    assert (
        multiplication_behavior(chain, (1, 2), (1, 2))
        is MultiplicationBehavior.ISOMORPHISM
    )
    with pytest.raises(OutsideSupportError):
        multiplication_behavior(chain, (1, 6), (1, 0))


def test_vq_module_data():
    a1 = root_datum("A1")
    x = singleton_complex(segre_quadric_cell())
    weights, dims, total = vq_module_data(x, a1)
    assert weights == [(0,), (2,)]
    assert dims == [1, 3]
    assert total == 10

    chain = sl2_chain_complex()
    weights, dims, total = vq_module_data(chain, a1)
    assert weights == [(0,), (2,), (4,)]
    assert total == 35


def test_vq_empty_slice():
    # weight group with no degree-1 points: only even degrees occur
    cell = Cell(
        "c",
        convex_hull([(0,), (1,)]),
        Lattice(2, [(2, 0), (0, 1)]),
    )
    x = singleton_complex(cell)
    weights, dims, total = vq_module_data(x, root_datum("A1"))
    assert weights == [] and total == 0


def test_sl2_catalog_closed_forms():
    fe = sl2_catalog("Fe", e=2, n_minus=2, n_plus=4)
    assert [v[0] for v in fe.polytope.vertices] == [2, 4]
    assert fe.weight_group == Lattice(2, [(1, 4), (0, 2)])

    p2 = sl2_catalog("P2", n=1)
    assert [v[0] for v in p2.polytope.vertices] == [0, 2]
    assert p2.weight_group == Lattice(2, [(1, 2), (0, 4)])

    pp = sl2_catalog("P1xP1", m=2, n=1)
    assert [v[0] for v in pp.polytope.vertices] == [1, 3]
    assert pp.weight_group == Lattice(2, [(1, 3), (0, 2)])

    p1 = sl2_catalog("P1", n=5)
    assert [v[0] for v in p1.polytope.vertices] == [5]
    assert p1.weight_group == Lattice(2, [(1, 5)])

    se = sl2_catalog("Se", e=3, n=6)
    assert [v[0] for v in se.polytope.vertices] == [0, 6]
    assert se.weight_group == Lattice(2, [(1, 6), (0, 3)])


def test_sl2_catalog_param_errors():
    with pytest.raises(ParamError):
        sl2_catalog("Fe", e=2, n_minus=3, n_plus=4)  # e does not divide the gap
    with pytest.raises(ParamError):
        sl2_catalog("Fe", e=1, n_minus=3, n_plus=3)  # not increasing
    with pytest.raises(ParamError):
        sl2_catalog("Se", e=4, n=6)  # e does not divide n
    with pytest.raises(ParamError):
        sl2_catalog("P2", n=0)
    with pytest.raises(ParamError):
        sl2_catalog("nope", n=1)


def test_catalog_cells_validate_as_singletons():
    for cell in (
        sl2_catalog("P1", n=3),
        sl2_catalog("Fe", e=2, n_minus=1, n_plus=5),
        sl2_catalog("Se", e=2, n=4),
        sl2_catalog("P1xP1", m=3, n=2),
        sl2_catalog("P2", n=2),
    ):
        assert singleton_complex(cell).validate().passed


def test_combinatorial_data_does_not_separate():
    # the smooth quadric with O(1,1) and the quadric cone with O(2) share
    # their weight group and moment polytope
    smooth = sl2_catalog("P1xP1", m=1, n=1)
    cone = sl2_catalog("Se", e=2, n=2)
    assert smooth.polytope == cone.polytope
    assert smooth.weight_group == cone.weight_group
    # same for the Veronese plane with O(2) against the e=4 cone with O(4)
    veronese = sl2_catalog("P2", n=2)
    cone4 = sl2_catalog("Se", e=4, n=4)
    assert veronese.polytope == cone4.polytope
    assert veronese.weight_group == cone4.weight_group


def test_complete_faces_builds_chain():
    gamma = Lattice(2, [(1, 0), (0, 2)])
    cells = (
        Cell("c1", convex_hull([(0,), (2,)]), Lattice(2, [(1, 2), (0, 2)])),
        Cell("c2", convex_hull([(2,), (4,)]), Lattice(2, [(1, 4), (0, 2)])),
    )
    x = complete_faces(SSVComplex(1, gamma, cells, ("c1", "c2")))
    assert len(x.cells) == 5
    assert x.validate().passed
    # completed faces carry the saturated restricted weight groups
    v2 = x.cell_with_polytope(convex_hull([(2,)]))
    assert v2.weight_group == Lattice(2, [(1, 2)])


def test_degree_slice_union_deduplicates():
    chain = sl2_chain_complex()
    from ssvlib.complexes import degree_slice

    pts = degree_slice(chain, 2)
    assert pts == sorted(set(pts))
    assert (2, 4) in pts  # the shared face contributes once


def test_multiplication_symmetric_and_reflexive():
    import random

    x = triangle_pair_complex()
    gamma = x.gamma
    rng = random.Random(17)
    samples = []
    for _ in range(40):
        coeffs = tuple(rng.randint(0, 3) for _ in range(gamma.rank))
        w = gamma.member(coeffs)
        if w[0] < 0:
            continue
        try:
            multiplication_behavior(x, w, w)
        except OutsideSupportError:
            continue
        samples.append(w)
    for a in samples:
        # reflexive on weights inside one cell cone
        assert multiplication_behavior(x, a, a) is MultiplicationBehavior.ISOMORPHISM
        for b in samples:
            assert multiplication_behavior(x, a, b) is multiplication_behavior(x, b, a)
