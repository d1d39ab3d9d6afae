from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from higher_hochschild.exactla import (ContainmentError, SparseMatrix, Subspace, image_basis,
                                       kernel_basis, quotient_dim, rank, rank_of_vectors,
                                       representatives, solve_modulo)


def dense(rows):
    return SparseMatrix.from_dense(rows)


def test_rank_examples():
    assert rank(SparseMatrix.zero(3, 3)) == 0
    assert rank(SparseMatrix.identity(3)) == 3
    assert rank(dense([[1, 2], [2, 4]])) == 1


def test_no_stored_zeros():
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): Fraction(2, 4)})
    assert m.entries() == {(1, 1): Fraction(1, 2)}
    with pytest.raises(Exception):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_kernel_examples():
    assert kernel_basis(SparseMatrix.identity(2)).dim == 0
    assert kernel_basis(SparseMatrix.zero(2, 3)).dim == 3
    K = kernel_basis(dense([[1, 2], [2, 4]]))
    assert K.dim == 1
    v = K.basis[0]
    # spanned by (2, -1) up to scale
    assert v.get(0, 0) * -1 == v.get(1, 0) * 2


def test_quotient_examples():
    inside = Subspace.span(2, [{0: 1}, {1: 1}])
    assert quotient_dim(inside, inside) == 0
    assert quotient_dim(Subspace(2, ()), inside) == 2
    d = dense([[0, 1], [0, 0]])
    assert quotient_dim(image_basis(d), kernel_basis(d)) == 0


def test_quotient_requires_containment():
    with pytest.raises(ContainmentError):
        quotient_dim(Subspace.span(2, [{1: 1}]), Subspace.span(2, [{0: 1}]))


def test_representatives_examples():
    cyc = Subspace.span(3, [{0: 1}])
    assert representatives(cyc, cyc) == []
    assert representatives(cyc, Subspace(3, ())) == [{0: 1}]
    cyc3 = Subspace.span(4, [{0: 1}, {1: 1}, {2: 1, 3: 1}])
    bnd = Subspace.span(4, [{0: 1, 1: 1}])
    reps = representatives(cyc3, bnd)
    assert len(reps) == 2
    assert rank_of_vectors(reps + list(bnd.basis)) == 3


def test_solve_modulo():
    basis = [{0: 1}, {1: 1}]
    modulo = [{2: 1}]
    assert solve_modulo({0: 3, 1: -1, 2: 5}, basis, modulo) == [3, -1]
    assert solve_modulo({3: 1}, basis, modulo) is None


sparse_matrices = st.integers(1, 12).flatmap(lambda r: st.integers(1, 12).flatmap(
    lambda c: st.dictionaries(st.tuples(st.integers(0, r - 1), st.integers(0, c - 1)),
                              st.fractions(min_value=-5, max_value=5, max_denominator=7),
                              max_size=r * c).map(lambda e: SparseMatrix(r, c, e))))


@settings(max_examples=150, deadline=None)
@given(sparse_matrices)
def test_rank_nullity(m):
    K = kernel_basis(m)
    assert rank(m) + K.dim == m.cols
    for v in K.basis:
        assert not m.apply(v)


@settings(max_examples=150, deadline=None)
@given(sparse_matrices)
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=100, deadline=None)
@given(sparse_matrices, st.fractions(min_value=-9, max_value=9, max_denominator=11)
       .filter(lambda x: x != 0))
def test_rank_invariant_under_scaling(m, s):
    assert rank(m.scale(s)) == rank(m)


def test_rank_transpose_large_random():
    import random
    rng = random.Random(3)
    for n in (60, 200):
        entries = {(rng.randrange(n), rng.randrange(n)): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                   for _ in range(3 * n)}
        m = SparseMatrix(n, n, entries)
        assert rank(m) == rank(m.transpose())
        assert rank(m) + kernel_basis(m).dim == n
