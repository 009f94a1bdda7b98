from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superschur.linalg import QMatrix


def matrices(max_rows=4, max_cols=4):
    return st.tuples(st.integers(0, max_rows), st.integers(0, max_cols)).flatmap(
        lambda s: st.lists(st.lists(st.integers(-3, 3), min_size=s[1], max_size=s[1]), min_size=s[0], max_size=s[0]).map(
            lambda rows, c=s[1]: QMatrix.from_rows(rows, c)
        )
    )


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        QMatrix.from_rows([[0.5]])


def test_basic_arithmetic():
    a = QMatrix.from_rows([[1, 2], [3, 4]])
    assert (a @ QMatrix.identity(2)) == a
    assert a.trace() == 5
    assert a.inverse() == QMatrix.from_rows([[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]])
    assert a.kron(QMatrix.identity(1)) == a
    assert a.T == QMatrix.from_rows([[1, 3], [2, 4]])


def test_rank_and_nullspace_example():
    a = QMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    assert a.rank() == 1
    n = a.nullspace()
    assert n.shape == (3, 2)
    assert (a @ n).is_zero()


def test_empty_shapes():
    z = QMatrix.zeros(0, 3)
    assert z.rank() == 0
    assert z.nullspace().shape == (3, 3)
    assert QMatrix.zeros(2, 0).left_nullspace().shape == (2, 2)


@settings(max_examples=150)
@given(matrices())
def test_rank_nullity(a):
    r, c = a.shape
    assert a.rank() + a.nullspace().shape[1] == c
    assert a.rank() + a.left_nullspace().shape[0] == r
    assert (a @ a.nullspace()).is_zero()
    assert (a.left_nullspace() @ a).is_zero()
    assert a.rank() == a.T.rank()


@settings(max_examples=150)
@given(matrices())
def test_column_basis_factorisation(a):
    c, r = a.column_basis()
    assert c @ r == a
    assert c.shape[1] == a.rank()


@settings(max_examples=100)
@given(matrices(), matrices())
def test_kron_is_multiplicative_on_rank(a, b):
    assert a.kron(b).rank() == a.rank() * b.rank()


@settings(max_examples=100)
@given(matrices())
def test_one_sided_inverses(a):
    r, c = a.shape
    if a.rank() == c:
        assert a.left_inverse() @ a == QMatrix.identity(c)
    if a.rank() == r:
        assert a @ a.right_inverse() == QMatrix.identity(r)
