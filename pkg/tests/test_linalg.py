import random
from fractions import Fraction

import pytest

from planargca.linalg import (
    Matrix,
    SingularMatrix,
    SparseEchelon,
    determinant,
    matrix_inverse,
    matrix_nullspace,
    matrix_solve,
)
from planargca.scalars import ONE, ZERO, sc


def _mat(rows):
    return Matrix([[sc(entry) for entry in row] for row in rows])


def test_solve_identity():
    assert matrix_solve(Matrix.identity(2), [sc(3), sc(5)]) == [sc(3), sc(5)]


def test_solve_two_by_two():
    # The size-one normalization system with both I/J values 1 and
    # right-hand side (6, 0) has the solution (1, 1).
    solution = matrix_solve(_mat([[3, 3], [-1, 1]]), [sc(6), sc(0)])
    assert solution == [sc(1), sc(1)]


def test_solve_singular_rejected():
    with pytest.raises(SingularMatrix):
        matrix_solve(_mat([[1, 1], [1, 1]]), [sc(1), sc(0)])


def test_nullspace_injective():
    assert matrix_nullspace(Matrix.identity(3)) == []


def test_nullspace_zero_matrix():
    basis = matrix_nullspace(_mat([[0, 0], [0, 0]]))
    assert len(basis) == 2


def test_nullspace_vectors_are_in_kernel():
    rng = random.Random(5)
    for _ in range(10):
        rows = [
            [sc(rng.randint(-3, 3)) for _ in range(4)] for _ in range(3)
        ]
        matrix = Matrix(rows)
        for vector in matrix_nullspace(matrix):
            assert matrix.mat_vec(vector) == [ZERO] * 3


def test_solve_round_trip_random_up_to_8():
    rng = random.Random(11)
    for size in range(1, 9):
        while True:
            matrix = Matrix(
                [
                    [
                        sc(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
                        for _ in range(size)
                    ]
                    for _ in range(size)
                ]
            )
            if determinant(matrix):
                break
        x = [sc(rng.randint(-5, 5)) for _ in range(size)]
        assert matrix_solve(matrix, matrix.mat_vec(x)) == x


def test_determinant_and_inverse():
    matrix = _mat([[2, 1], [1, 1]])
    assert determinant(matrix) == ONE
    inverse = matrix_inverse(matrix)
    assert inverse == _mat([[1, -1], [-1, 2]])
    with pytest.raises(SingularMatrix):
        matrix_inverse(_mat([[1, 1], [1, 1]]))


def test_rectangular_validation():
    with pytest.raises(ValueError):
        Matrix([[ONE], [ONE, ZERO]])


def test_sparse_echelon_membership():
    echelon = SparseEchelon()
    assert echelon.insert({0: sc(1), 2: sc(2)})
    assert echelon.insert({1: sc(1)})
    assert not echelon.insert({0: sc(2), 1: sc(3), 2: sc(4)})
    assert echelon.dimension == 2
    assert echelon.contains({0: sc(-1), 2: sc(-2)})
    assert not echelon.contains({2: sc(1)})


def test_sparse_echelon_kernel_extraction():
    echelon = SparseEchelon(full_reduce=True)
    # Rows of [[1, 2, 3], [0, 1, 1]]; kernel spanned by (-1, -1, 1).
    echelon.insert({0: sc(1), 1: sc(2), 2: sc(3)})
    echelon.insert({1: sc(1), 2: sc(1)})
    kernel = echelon.kernel_vector_at_first_free_column(3)
    assert kernel == {2: ONE, 0: sc(-1), 1: sc(-1)}
    echelon.insert({2: sc(1)})
    assert echelon.kernel_vector_at_first_free_column(3) is None


def test_sparse_echelon_kernel_requires_full_mode():
    echelon = SparseEchelon()
    echelon.insert({0: ONE})
    with pytest.raises(ValueError):
        echelon.kernel_vector_at_first_free_column(1)
