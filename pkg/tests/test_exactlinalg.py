import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from slicescope.exactlinalg import (RatMatrix, Subspace, bracket, kernel,
                                    rank_of_vectors, trace_form)


def test_kernel_identity_is_trivial():
    assert kernel(RatMatrix.identity(3)).dim == 0


def test_kernel_zero_matrix_is_everything():
    assert kernel(RatMatrix.zeros(2, 3)).dim == 3


def test_kernel_rank_one():
    ker = kernel(RatMatrix([[1, 1], [2, 2]]))
    assert ker.dim == 1
    (v,) = ker.basis
    assert v[0] == -v[1] != 0


def test_kernel_vectors_annihilate():
    a = RatMatrix([[1, 2, 3], [4, 5, 6]])
    for v in kernel(a).basis:
        col = RatMatrix([[x] for x in v])
        assert (a @ col).is_zero()


def test_contains_plane_and_axis():
    plane = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    x_axis = Subspace(3, [(1, 0, 0)])
    y_axis = Subspace(3, [(0, 1, 0)])
    z_axis = Subspace(3, [(0, 0, 1)])
    assert plane.contains(x_axis)
    assert not x_axis.contains(y_axis)
    assert x_axis.contains(x_axis)
    assert not plane.contains(z_axis)


def test_subspace_rejects_dependent_basis():
    with pytest.raises(ValueError):
        Subspace(2, [(1, 1), (2, 2)])


def test_span_deduplicates():
    s = Subspace.span(2, [(1, 1), (2, 2), (1, 0)])
    assert s.dim == 2


def test_coords_roundtrip():
    s = Subspace(3, [(1, 2, 0), (0, 1, 1)])
    v = (2, 5, 1)
    c = s.coords(v)
    assert c == [Fraction(2), Fraction(1)]
    assert s.coords((0, 0, 1)) is None


def test_bracket_gl2_units():
    e12 = RatMatrix([[0, 1], [0, 0]])
    e21 = RatMatrix([[0, 0], [1, 0]])
    assert bracket(e12, e21) == RatMatrix([[1, 0], [0, -1]])
    assert bracket(e12, e12).is_zero()
    assert trace_form(e12, e21) == 1


def test_bracket_size_mismatch():
    with pytest.raises(ValueError):
        bracket(RatMatrix.identity(2), RatMatrix.identity(3))


def _random_matrix(rng, rows, cols, lo=-4, hi=4):
    return RatMatrix([[rng.randint(lo, hi) for _ in range(cols)]
                      for _ in range(rows)])


@given(st.integers(0, 10_000), st.integers(1, 5), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_rank_nullity(seed, rows, cols):
    a = _random_matrix(random.Random(seed), rows, cols)
    assert a.rank() + kernel(a).dim == cols


@given(st.integers(0, 10_000), st.integers(2, 4))
@settings(max_examples=40, deadline=None)
def test_trace_form_symmetric_and_ad_invariant(seed, n):
    rng = random.Random(seed)
    x, y, z = (_random_matrix(rng, n, n) for _ in range(3))
    assert trace_form(x, y) == trace_form(y, x)
    assert trace_form(bracket(x, y), z) + trace_form(y, bracket(x, z)) == 0


def test_matmul_and_transpose():
    a = RatMatrix([[1, 2], [3, 4]])
    b = RatMatrix([[0, 1], [1, 0]])
    assert a @ b == RatMatrix([[2, 1], [4, 3]])
    assert a.transpose() == RatMatrix([[1, 3], [2, 4]])
    assert a.trace() == 5


def test_fractions_stay_exact():
    a = RatMatrix([[Fraction(1, 3), Fraction(1, 7)]])
    assert a.scale(21).data[0] == [Fraction(7), Fraction(3)]


def test_rank_of_vectors_empty():
    assert rank_of_vectors([]) == 0
