import pytest

from higher_hochschild.bar import (classical_hochschild_oracle, enveloping_bar,
                                   periodic_tor_oracle, two_sided_bar)
from higher_hochschild.cdga import (as_table, augmentation_module, builtin_algebra, dual_numbers,
                                    ground_field, regular_module)
from higher_hochschild.hochschild import HochschildComplex
from higher_hochschild.homology import homology
from higher_hochschild.simplicial import standard_model


def _dims(rep, lo=None):
    lo = rep.trusted_min if lo is None else lo
    return tuple(rep.dims[n] for n in range(0, lo - 1, -1))


def test_bar_over_ground_field_is_tensor_product():
    R = ground_field()
    D = dual_numbers()
    # P ⊗_Q Q: over the ground field only the bar-length-zero part survives
    B = two_sided_bar(regular_module(R), R, regular_module(R), -3, 4)
    assert B.check_d_squared() == []
    assert _dims(homology(B)) == (1, 0, 0)
    B = two_sided_bar(regular_module(D), D, regular_module(D), -3, 4)
    assert _dims(homology(B)) == (2, 0, 0)


def test_tor_of_augmentation_modules():
    D = dual_numbers()
    Q = augmentation_module(D)
    B = two_sided_bar(Q, D, Q, -4, 6)
    assert B.check_d_squared() == []
    # Tor^{Q[ε]}(Q, Q) is one-dimensional in every degree
    assert _dims(homology(B)) == (1, 1, 1, 1)


def test_module_mismatch_rejected():
    with pytest.raises(ValueError):
        two_sided_bar(regular_module(dual_numbers()), dual_numbers(),
                      regular_module(dual_numbers()), -2, 3)


def test_enveloping_bar_dual_numbers():
    B = enveloping_bar(dual_numbers(), -4, 8)
    assert B.check_d_squared() == []
    assert _dims(homology(B)) == (2, 1, 1, 1)


@pytest.mark.parametrize("alg", ["dual_numbers", "exterior1", "poly2", "koszul"])
def test_enveloping_bar_matches_circle(alg):
    A = as_table(builtin_algebra(alg), -3)
    rb = homology(enveloping_bar(A, -3, 6))
    rc = homology(HochschildComplex(standard_model("circle_minimal"), A, window=-3))
    lo = max(rb.trusted_min, rc.trusted_min)
    assert _dims(rb, lo) == _dims(rc, lo)


def test_bar_cap_limits_trust():
    B = enveloping_bar(dual_numbers(), -6, 3)
    assert B.trusted_min == -2


def test_classical_oracle_ground_field():
    C = classical_hochschild_oracle(ground_field(), None, window=-4)
    assert _dims(homology(C)) == (1, 0, 0, 0)


def test_classical_oracle_dual_numbers():
    C = classical_hochschild_oracle(dual_numbers(), None, window=-5)
    assert C.check_d_squared() == []
    assert _dims(homology(C)) == (2, 1, 1, 1, 1)


def test_classical_oracle_with_module():
    D = dual_numbers()
    for M in (regular_module(D), augmentation_module(D)):
        C = classical_hochschild_oracle(D, M, window=-4)
        assert C.check_d_squared() == []
        H = HochschildComplex(standard_model("circle_minimal"), D, M, window=-4)
        assert _dims(homology(C)) == _dims(homology(H))


def test_periodic_oracle():
    tor = periodic_tor_oracle(-5)
    assert tor[0] == 2 and tor[-1] == 1 and tor[-4] == 1
    assert all(tor[n] == 1 for n in range(-1, -6, -1))
