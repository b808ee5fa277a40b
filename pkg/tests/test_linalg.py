from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helical.field import FieldError, PrimeField, RationalField
from helical.linalg import Matrix, kernel_basis, rank, solve

QQ = RationalField()


def mat(rows, field=QQ):
    return Matrix.from_rows(field, [[field.from_int(x) if isinstance(x, int) else x for x in row]
                                    for row in rows])


def test_rank_identity():
    assert rank(Matrix.identity(QQ, 2)) == 2


def test_rank_rank_one():
    # [[1,2],[2,4]] row-reduces to a single nonzero row
    assert rank(mat([[1, 2], [2, 4]])) == 1


def test_rank_empty():
    assert rank(Matrix(QQ, 0, 5)) == 0
    assert rank(Matrix(QQ, 5, 0)) == 0


def test_kernel_identity_empty():
    assert kernel_basis(Matrix.identity(QQ, 3)) == []


def test_kernel_rank_one():
    # hand elimination: x1 + 2 x2 = 0, kernel spanned by (2, -1) up to scale
    (v,) = kernel_basis(mat([[1, 2], [2, 4]]))
    assert v[0] * Fraction(-1) == v[1] * Fraction(2)
    m = mat([[1, 2], [2, 4]])
    assert m.apply(v) == [QQ.zero, QQ.zero]


def test_kernel_zero_matrix():
    vs = kernel_basis(Matrix(QQ, 2, 2))
    assert len(vs) == 2
    assert vs[0] != vs[1]


def test_solve_identity():
    b = [Fraction(3), Fraction(-1)]
    assert solve(Matrix.identity(QQ, 2), b) == b


def test_solve_consistent():
    m = mat([[1, 2], [2, 4]])
    x = solve(m, [Fraction(1), Fraction(2)])
    assert x is not None
    assert x[0] + 2 * x[1] == 1


def test_solve_inconsistent():
    m = mat([[1, 2], [2, 4]])
    assert solve(m, [Fraction(1), Fraction(3)]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(mat([[1, 2]]), [Fraction(1), Fraction(2)])


def test_prime_field_basics():
    F5 = PrimeField(5)
    assert F5.inv(2) == 3
    assert F5.parse("7") == 2
    assert F5.parse("1/2") == 3
    with pytest.raises(FieldError):
        PrimeField(6)


def test_rank_prime_field_differs_from_rational():
    F2 = PrimeField(2)
    m2 = Matrix.from_rows(F2, [[1, 1], [1, 1]])
    assert rank(m2) == 1
    m5 = Matrix.from_rows(PrimeField(5), [[1, 2], [3, 4]])
    assert rank(m5) == 2


small_entries = st.integers(min_value=-6, max_value=6)


@st.composite
def matrices(draw):
    r = draw(st.integers(min_value=0, max_value=5))
    c = draw(st.integers(min_value=0, max_value=5))
    rows = [[Fraction(draw(small_entries)) for _ in range(c)] for _ in range(r)]
    return Matrix.from_rows(QQ, rows) if r else Matrix(QQ, 0, c)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_equals_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_are_annihilated_and_independent(m):
    vs = kernel_basis(m)
    assert len(vs) == m.cols - rank(m)
    for v in vs:
        assert all(x == 0 for x in m.apply(v))
    if vs:
        stacked = Matrix.from_rows(QQ, vs)
        assert rank(stacked) == len(vs)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_elimination_deterministic(m):
    assert kernel_basis(m) == kernel_basis(m)
    assert rank(m) == rank(m)
