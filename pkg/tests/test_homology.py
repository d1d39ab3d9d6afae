import pytest

from higher_hochschild.cdga import as_table, builtin_algebra, dual_numbers, exterior_table
from higher_hochschild.hochschild import HochschildComplex, identity_map, induced_map
from higher_hochschild.homology import (NotAChainMap, homology, is_quasi_iso,
                                        ring_on_homology)
from higher_hochschild.simplicial import FiniteSimplicialSet, SimplicialMap, point, standard_model


def test_point_dims():
    rep = homology(HochschildComplex(point(), dual_numbers(), window=-4))
    assert rep.dims == {0: 2, -1: 0, -2: 0, -3: 0, -4: 0}
    assert rep.trusted_dims() == {0: 2, -1: 0, -2: 0, -3: 0}
    assert rep.as_list() == [2, 0, 0, 0]


def test_two_points():
    S0 = FiniteSimplicialSet([("a", 0), ("b", 0)], {}, name="S0")
    rep = homology(HochschildComplex(S0, dual_numbers(), window=-3))
    assert rep.trusted_dims() == {0: 4, -1: 0, -2: 0}


def test_circle_dual():
    rep = homology(HochschildComplex(standard_model("circle_minimal"), dual_numbers(), window=-5))
    assert rep.as_list() == [2, 1, 1, 1, 1]
    assert not rep.trusted(-5)


def test_jobs_give_same_result():
    C1 = HochschildComplex(standard_model("circle_two_cell"), dual_numbers(), window=-4)
    C2 = HochschildComplex(standard_model("circle_two_cell"), dual_numbers(), window=-4)
    assert homology(C1).dims == homology(C2, jobs=4).dims


def test_representatives_count():
    C = HochschildComplex(standard_model("circle_minimal"), dual_numbers(), window=-4)
    rep = homology(C, representatives=True)
    for n in range(0, -4, -1):
        assert len(rep.representatives.get(n, [])) == rep.dims[n]
        for w, v in rep.representatives.get(n, []):
            if n < 0:
                assert not C.differential(n, w).apply(v)


def test_ring_dual_numbers():
    C = HochschildComplex(point(), dual_numbers(), window=-2)
    labels, table = ring_on_homology(C, homology(C, representatives=True))
    assert len(labels) == 2
    eps_idx = dual_numbers().index("eps")
    unit = [i for i, (n, w, v) in enumerate(labels) if C.from_vector(n, w, v) == C.unit_chain()]
    eps = [i for i, (n, w, v) in enumerate(labels)
           if set(m for (_, m) in C.from_vector(n, w, v)) == {(eps_idx,)}]
    assert unit and eps
    u, e = unit[0], eps[0]
    assert table[(u, e)] == {e: 1} and table[(e, u)] == {e: 1}
    assert table[(e, e)] == {}


def test_ring_exterior_odd_square_zero():
    A = exterior_table(1)
    C = HochschildComplex(standard_model("circle_minimal"), A, window=-4)
    rep = homology(C, representatives=True)
    labels, table = ring_on_homology(C, rep)
    for i, (n, w, v) in enumerate(labels):
        if n % 2 and 2 * n >= C.trusted_min:
            assert table[(i, i)] == {}
        if 2 * n < C.trusted_min:
            assert table[(i, i)] is None


def test_identity_is_quasi_iso():
    C = HochschildComplex(standard_model("sphere(2)"), dual_numbers(), window=-3)
    assert is_quasi_iso(identity_map(C)) == {0: True, -1: True, -2: True}


def test_boundary_into_simplex():
    D = standard_model("delta(2)")
    B = standard_model("boundary_delta(2)")
    f = SimplicialMap(B, D, {g: D.simplex(g) for g, _ in B.generators})
    A = dual_numbers()
    F = induced_map(f, HochschildComplex(B, A, window=-3), HochschildComplex(D, A, window=-3))
    assert is_quasi_iso(F) == {0: True, -1: False, -2: False}


def test_circle_into_cylinder_is_quasi_iso():
    S = standard_model("circle_minimal")
    Cy = standard_model("cylinder")
    inc = SimplicialMap(S, Cy, {"v": Cy.simplex("00"), "e": Cy.simplex("h0")})
    A = as_table(builtin_algebra("exterior1"), -3)
    F = induced_map(inc, HochschildComplex(S, A, window=-3), HochschildComplex(Cy, A, window=-3))
    assert all(is_quasi_iso(F).values())


def test_not_a_chain_map():
    C = HochschildComplex(standard_model("circle_minimal"), dual_numbers(), window=-3)
    F = identity_map(C)
    n, w = next((n, w) for n in range(-3, 0) for w in C.weights(n)
                if not C.differential(n, w).is_zero())
    # doubling a single block breaks D∘F = F∘D
    F.blocks[(n, w)] = F.blocks[(n, w)].scale(2)
    assert not F.is_chain_map()
    with pytest.raises(NotAChainMap):
        is_quasi_iso(F)
