import random

import pytest

from higher_hochschild.cdga import (as_table, augmentation_module, builtin_algebra, dual_numbers,
                                    exterior_table, regular_module)
from higher_hochschild.hochschild import (BasisTooLarge, ComplexError, HochschildComplex,
                                          identity_map, induced_map, koszul_sign,
                                          pushout_comparison, shuffle_product)
from higher_hochschild.simplicial import (FiniteSimplicialSet, SimplicialMap, degenerate, delta,
                                          point, product, standard_model)


def _diff(a, b, s=-1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + s * v
        if not out[k]:
            del out[k]
    return out


def _random_chain(C, rng, max_level=2):
    nonunits = [b for b in range(C.A.dim) if b != C.A.unit and C.A.degrees[b] >= -2]
    chain = {}
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(0, max_level)
        npos = len(C.positions(k))
        mono = [C.A.unit] * npos
        for p in rng.sample(range(npos), min(npos, rng.randint(0, 2))):
            mono[p] = rng.choice(nonunits)
        key = (k, tuple(mono))
        chain[key] = chain.get(key, 0) + rng.choice((-1, 1, 2))
    return {k: v for k, v in chain.items() if v}


def _circle_cylinder():
    S = standard_model("circle_minimal")
    Cy = standard_model("cylinder")
    inc = SimplicialMap(S, Cy, {"v": Cy.simplex("00"), "e": Cy.simplex("h0")})
    v, e = S.simplex("v"), S.simplex("e")
    proj = SimplicialMap(Cy, S, {"00": v, "01": v, "h0": e, "h1": e, "diag": e,
                                 "v0": degenerate(v, 0), "ta": degenerate(e, 1),
                                 "tb": degenerate(e, 0)})
    return S, Cy, inc, proj


def test_point_complex():
    C = HochschildComplex(point(), dual_numbers(), window=-4)
    for k in range(5):
        assert len(C.positions(k)) == 1
        assert C.dim(-k) == 2
    for k in range(1, 5):
        for i in range(k + 1):
            assert C.face_matrix(k, i, 0) == C.face_matrix(k, 0, 0)


def test_square_level_dims():
    C = HochschildComplex(standard_model("square"), dual_numbers(), window=-1)
    for k in (0, 1):
        total = sum(len(C.basis(k, 0, w)) for w in C.all_weights())
        assert total == 2 ** ((k + 2) ** 2)


def test_koszul_sign_examples():
    assert koszul_sign([-1, -1], [0, 1]) == 1
    assert koszul_sign([-1, -1], [1, 0]) == -1
    assert koszul_sign([-2, -1], [1, 0]) == 1
    assert koszul_sign([-1, -2, -1], [2, 1, 0]) == -1
    with pytest.raises(ValueError):
        koszul_sign([0, 0], [0, 0])


@pytest.mark.parametrize("name", ["circle_minimal", "sphere(2)", "circle_two_cell"])
@pytest.mark.parametrize("alg", ["dual_numbers", "exterior1", "koszul"])
def test_d_squared(name, alg):
    C = HochschildComplex(standard_model(name), builtin_algebra(alg), window=-4)
    assert C.check_d_squared() == []


@pytest.mark.parametrize("M", [regular_module, augmentation_module])
def test_d_squared_with_modules(M):
    D = dual_numbers()
    for name in ("circle_minimal", "sphere(2)"):
        C = HochschildComplex(standard_model(name), D, M(D), window=-4)
        assert C.check_d_squared() == []


def test_module_needs_basepoint():
    D = dual_numbers()
    Z = FiniteSimplicialSet([("a", 0), ("b", 0)], {}, name="S0")
    if Z.basepoint is None:
        with pytest.raises(ComplexError):
            HochschildComplex(Z, D, regular_module(D), window=-2)


def test_window_validation():
    with pytest.raises(ComplexError):
        HochschildComplex(point(), dual_numbers(), window=1)
    with pytest.raises(ComplexError):
        HochschildComplex(point(), dual_numbers())


def test_basis_cap(monkeypatch):
    C = HochschildComplex(standard_model("square"), dual_numbers(), window=-2, basis_cap=100)
    with pytest.raises(BasisTooLarge):
        C.dim(-2)
    monkeypatch.setenv("HH_MAX_BASIS", "50")
    C = HochschildComplex(standard_model("sphere(2)"), dual_numbers(), window=-4)
    with pytest.raises(BasisTooLarge):
        C.dim(-4)


def test_normalized_point_is_the_algebra():
    A = exterior_table(1)
    C = HochschildComplex(point(), A, window=-4, normalized=True)
    assert C.dim(0) == 1 and C.dim(-1) == 1
    assert all(C.dim(n) == 0 for n in range(-4, -1))


def test_identity_and_collapse():
    D = dual_numbers()
    S = standard_model("circle_minimal")
    C = HochschildComplex(S, D, window=-3)
    assert identity_map(C).is_chain_map()
    assert induced_map(SimplicialMap.identity(S), C, C) == identity_map(C)
    col = SimplicialMap.collapse(S)
    P = HochschildComplex(col.target, D, window=-3)
    c = induced_map(col, C, P)
    assert c.is_chain_map()
    eps = D.index("eps")
    # collapsing multiplies the factors: eps ⊗ eps -> 0, eps ⊗ 1 -> eps
    assert c.matrix(-1, 0).cols == C.dim(-1, 0)
    img = P.project(C.push((eps, D.unit), C.map_phi(col, P, 1), 1))
    assert img == {(eps,): 1}
    img = P.project(C.push((eps, eps), C.map_phi(col, P, 1), 1))
    assert img == {}


@pytest.mark.parametrize("alg", ["dual_numbers", "exterior1"])
def test_functoriality_circle_cylinder(alg):
    S, Cy, inc, proj = _circle_cylinder()
    window = -2 if alg == "dual_numbers" else -3
    A = as_table(builtin_algebra(alg), window)
    CS = HochschildComplex(S, A, window=window)
    CC = HochschildComplex(Cy, A, window=window)
    i_star = induced_map(inc, CS, CC)
    p_star = induced_map(proj, CC, CS)
    assert i_star.is_chain_map() and p_star.is_chain_map()
    assert p_star.compose(i_star) == induced_map(proj.compose(inc), CS, CS)
    assert p_star.compose(i_star) == identity_map(CS)


def test_induced_map_commutes_with_shuffle():
    S, Cy, inc, proj = _circle_cylinder()
    A = exterior_table(1)
    CC = HochschildComplex(Cy, A, window=-2)
    CS = HochschildComplex(S, A, window=-2)
    rng = random.Random(7)
    for _ in range(15):
        u, v = _random_chain(CC, rng, 1), _random_chain(CC, rng, 1)

        def push(chain):
            out = {}
            for (k, m), c in chain.items():
                for t, e in CC.push(m, CC.map_phi(proj, CS, k), len(CS.positions(k))).items():
                    out[(k, t)] = out.get((k, t), 0) + c * e
            return CS.project({key: c for key, c in out.items() if c})

        lhs = push(shuffle_product(CC, u, v))
        rhs = shuffle_product(CS, push(u), push(v))
        assert _diff(lhs, rhs) == {}


def test_shuffle_on_point_is_algebra_product():
    A = builtin_algebra("koszul")
    C = HochschildComplex(point(), A, window=-6)
    x, y = C.A.index("x"), C.A.index("y")
    xy = C.A.index("x*y")
    assert shuffle_product(C, {(0, (x,)): 1}, {(0, (y,)): 1}) == {(0, (xy,)): 1}
    assert shuffle_product(C, {(0, (x,)): 1}, {(0, (x,)): 1}) == {}


def test_shuffle_with_module_action():
    D = dual_numbers()
    S = standard_model("circle_minimal")
    L = HochschildComplex(S, D, window=-3)
    C = HochschildComplex(S, D, regular_module(D), window=-3)
    one_mod = {(0, (0,)): 1}
    assert shuffle_product(C, L.unit_chain(), one_mod, left=L) == one_mod
    with pytest.raises(ComplexError):
        shuffle_product(L, one_mod, L.unit_chain(), left=C)


def test_pushout_coproduct():
    Z = FiniteSimplicialSet([], {}, name="empty")
    X, Y = standard_model("circle_minimal"), point()
    f = SimplicialMap(Z, X, {})
    g = SimplicialMap(Z, Y, {})
    cmp = pushout_comparison(f, g, dual_numbers(), max_level=3)
    assert cmp.iso
    for lv in cmp.levels:
        assert lv.domain_dim == lv.target_dim == 2 ** (lv.level + 2)


def test_pushout_two_intervals():
    Z = FiniteSimplicialSet([("a", 0), ("b", 0)], {}, name="S0")
    I1, I2 = delta(1), delta(1)
    f = SimplicialMap(Z, I1, {"a": I1.simplex("[0]"), "b": I1.simplex("[1]")})
    g = SimplicialMap(Z, I2, {"a": I2.simplex("[0]"), "b": I2.simplex("[1]")})
    cmp = pushout_comparison(f, g, dual_numbers(), max_level=3)
    assert cmp.injective_side == "f"
    assert cmp.iso
    for lv in cmp.levels:
        assert lv.target_dim == 2 ** (2 * (lv.level + 1))
        assert lv.classes == 2 * (lv.level + 1)


def test_monoidal_product_dims():
    A = dual_numbers()
    S = standard_model("circle_minimal")
    T = product(point(), S)
    C1 = HochschildComplex(S, A, window=-3)
    C2 = HochschildComplex(T, A, window=-3)
    assert [C1.dim(n) for n in range(-3, 1)] == [C2.dim(n) for n in range(-3, 1)]
