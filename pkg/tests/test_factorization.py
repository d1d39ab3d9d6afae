import pytest

from higher_hochschild.cdga import dual_numbers, exterior_table
from higher_hochschild.factorization import (CechComplex, CombinatorialCover, CoverError,
                                             cech_compare, single_open_cover, structure_map,
                                             tuple_counts, two_arc_cover)
from higher_hochschild.hochschild import HochschildComplex, induced_map
from higher_hochschild.simplicial import (FiniteSimplicialSet, inclusion, polygon, product,
                                          standard_model, subcomplex)


def _points(n):
    return FiniteSimplicialSet([(f"p{i}", 0) for i in range(n)], {}, name=f"{n}pts")


def test_cover_validation():
    S = standard_model("circle_two_cell")
    with pytest.raises(CoverError):
        CombinatorialCover(S, {"U": ["x.[01]"]})
    with pytest.raises(CoverError):
        CombinatorialCover(S, {"U": ["nope"], "V": ["x.[01]", "y.[01]"]})
    cov = CombinatorialCover(S, {"U": ["x.[01]"], "V": ["y.[01]"]})
    assert cov.opens["U"] == frozenset({"x.[01]", "x.[0]", "x.[1]"})
    assert CombinatorialCover.from_json(S, cov.to_json()).opens == cov.opens


def test_factorizing_families():
    X = _points(2)
    cov = CombinatorialCover(X, {"a": ["p0"], "b": ["p1"], "X": ["p0", "p1"]})
    assert cov.factorizing_families() == [("a",), ("b",), ("X",), ("a", "b")]
    arcs = two_arc_cover(standard_model("circle_two_cell"))
    assert arcs.factorizing_families() == [("U1",), ("U2",)]


def test_two_arc_intersection_is_two_vertices():
    arcs = two_arc_cover(standard_model("circle_two_cell"))
    assert arcs.intersection([("U1",), ("U2",)]) == frozenset({"x.[0]", "x.[1]"})
    assert arcs.intersection([("U1",), ("U1",)]) == arcs.opens["U1"]
    with pytest.raises(CoverError):
        two_arc_cover(standard_model("circle_minimal"))


def test_tuple_counts():
    arcs = two_arc_cover(standard_model("circle_two_cell"))
    assert tuple_counts(arcs, 3) == {1: (2, 2), 2: (4, 4), 3: (8, 8)}
    X = _points(2)
    cov = CombinatorialCover(X, {"a": ["p0"], "b": ["p1"]})
    # families (a), (b), (a, b); a tuple is empty exactly when it mixes (a) with (b)
    counts = tuple_counts(cov, 2)
    assert counts[1] == (3, 3)
    assert counts[2] == (9, 7)


def test_torus_cover_by_two_cylinders():
    T = product(polygon(4), standard_model("circle_minimal"))

    def arc(edges):
        return [g for g, d in T.generators if d == 2 and any(f"(s{i}({e})," in g
                                                             for e in edges for i in (0, 1))]

    cov = CombinatorialCover(T, {"U": arc(["e0", "e1", "e2"]), "V": arc(["e2", "e3", "e0"])})
    assert cov.factorizing_families() == [("U",), ("V",)]
    inter = subcomplex(T, sorted(cov.intersection([("U",), ("V",)])))
    # the overlap is two disjoint cylinders e0 × S¹ and e2 × S¹
    assert len([g for g, d in inter.generators if d == 2]) == 4
    assert len([g for g, d in inter.generators if d == 0]) == 4
    assert tuple_counts(cov, 4) == {k: (2 ** k, 2 ** k) for k in range(1, 5)}


def test_structure_map_single_open_is_inclusion():
    S = standard_model("circle_two_cell")
    A = dual_numbers()
    U = ["x.[01]"]
    CU = HochschildComplex(subcomplex(S, U), A, window=-2)
    CX = HochschildComplex(S, A, window=-2)
    eps = A.index("eps")
    chain = {(1, tuple([eps] + [A.unit] * (len(CU.positions(1)) - 1))): 1}
    got = structure_map(S, [U], [g for g, _ in S.generators], A, -2, [chain])
    F = induced_map(inclusion(CU.X, CX.X), CU, CX)
    n = -1
    vec = F.matrix(n, 1).apply(CU.to_vector(chain, n, 1))
    assert CX.to_vector(got, n, 1) == vec


def test_structure_map_disjoint_points_is_monoidal():
    X = _points(2)
    A = dual_numbers()
    eps = A.index("eps")
    got = structure_map(X, [["p0"], ["p1"]], ["p0", "p1"], A, -1,
                        [{(0, (eps,)): 1}, {(0, (eps,)): 1}])
    assert got == {(0, (eps, eps)): 1}
    with pytest.raises(CoverError):
        structure_map(X, [["p0"], ["p0"]], ["p0", "p1"], A, -1, [{}, {}])
    with pytest.raises(CoverError):
        structure_map(X, [["p0", "p1"]], ["p0"], A, -1, [{}])


def test_structure_map_coherence():
    X = _points(3)
    A = exterior_table(1)
    x = A.index("x")
    V = ["p0", "p1", "p2"]
    a, b, c = {(0, (x,)): 1}, {(0, (x,)): 2}, {(0, (A.unit,)): 3}
    direct = structure_map(X, [["p0"], ["p1"], ["p2"]], V, A, -2, [a, b, c])
    inner = structure_map(X, [["p0"], ["p1"]], ["p0", "p1"], A, -2, [a, b])
    nested = structure_map(X, [["p0", "p1"], ["p2"]], V, A, -2, [inner, c])
    assert direct == nested
    assert direct == {(0, (x, x, A.unit)): 6}


@pytest.mark.parametrize("cover", ["single", "two_arc"])
def test_cech_complex_is_a_complex(cover):
    S = standard_model("circle_two_cell")
    cov = single_open_cover(S) if cover == "single" else two_arc_cover(S)
    C = CechComplex(cov, dual_numbers(), -3, 4)
    assert C.trusted_min == -2
    assert C.check_d_squared() == []
    assert C.augmentation().is_chain_map()


def test_cech_single_cover_is_quasi_iso():
    for name in ("circle_minimal", "circle_two_cell"):
        C = CechComplex(single_open_cover(standard_model(name)), dual_numbers(), -3, 5)
        assert all(cech_compare(C).values())


def test_cech_cap_validation():
    with pytest.raises(CoverError):
        CechComplex(single_open_cover(standard_model("point")), dual_numbers(), -2, 1)
