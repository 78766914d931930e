from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfgauge.exact import (AxisClash, Coordinates, NotClosed, SparseTensor, determinant,
                             kernel_vectors, matrix, rank, restrict_algebra, rref, same_span,
                             tensor_product, vadd)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
vecs = st.lists(st.dictionaries(st.integers(0, 4), small, max_size=5), max_size=6)


def test_tensor_labels_clash():
    a = SparseTensor([("i", 2)], {(0,): 1})
    with pytest.raises(AxisClash):
        tensor_product(a, a)
    with pytest.raises(AxisClash):
        SparseTensor([("i", 2), ("i", 2)])


def test_tensor_drops_zeros_and_checks_range():
    t = SparseTensor([("i", 2)], {(0,): 0, (1,): Fraction(1, 3)})
    assert t.entries == {(1,): Fraction(1, 3)}
    with pytest.raises(IndexError):
        SparseTensor([("i", 2)], {(2,): 1})


def test_permute_roundtrip():
    t = matrix([[1, 2, 0], [0, 0, 3]])
    assert t.permute(["col", "row"]).permute(["row", "col"]) == t
    assert t.canonical().labels == ("col", "row")


def test_rank_and_kernel_of_singular_matrix():
    m = matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    assert determinant([[1, 2, 3], [2, 4, 6], [1, 0, 1]]) == 0
    assert determinant([[2, 1], [1, 1]]) == 1


@given(vecs)
@settings(max_examples=60, deadline=None)
def test_rref_is_canonical(vs):
    basis = rref(vs)
    assert rref(basis) == basis
    assert rref(reversed(vs)) == basis
    for i, row in enumerate(basis):
        pivot = min(row)
        assert row[pivot] == 1
        assert all(pivot not in other for j, other in enumerate(basis) if j != i)


@given(vecs)
@settings(max_examples=60, deadline=None)
def test_kernel_vectors_are_annihilated(cols):
    ker = kernel_vectors(cols, len(cols))
    for v in ker:
        acc = {}
        for j, c in v.items():
            vadd(acc, cols[j], c)
        assert acc == {}
    assert len(ker) + len(rref(cols)) == len(cols)


@given(vecs, st.lists(small, min_size=6, max_size=6))
@settings(max_examples=60, deadline=None)
def test_coordinates_recover_combination(vs, coeffs):
    basis = rref(vs)
    co = Coordinates(basis)
    target = {}
    for b, c in zip(basis, coeffs):
        vadd(target, b, c)
    got = co.coords(target)
    assert {i: c for i, c in got.items() if c} == {i: c for i, c in enumerate(coeffs[:len(basis)]) if c}


def test_coordinates_reject_dependent_basis():
    with pytest.raises(ValueError):
        Coordinates([{0: 1}, {0: 2}])


def test_restrict_algebra_detects_non_closure():
    # polynomials mod nothing: x * x leaves span{1, x}
    def mul(a, b):
        out = {}
        for i, x in a.items():
            for j, y in b.items():
                vadd(out, {i + j: x * y})
        return out
    assert restrict_algebra(mul, [{0: 1}])[(0, 0)] == {0: 1}
    with pytest.raises(NotClosed):
        restrict_algebra(mul, [{0: 1}, {1: 1}])


def test_same_span():
    assert same_span([{0: 1, 1: 1}, {1: 1}], [{0: 1}, {1: 2}])
    assert not same_span([{0: 1}], [{1: 1}])
