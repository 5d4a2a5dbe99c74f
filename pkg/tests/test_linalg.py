from fractions import Fraction

import pytest

from qgroups.exceptions import DimensionError, ParseError
from qgroups.linalg import (entries, equal, evaluate_matrix, format_matrix,
                            identity, inverse, is_zero, kron, left_inverse,
                            matrix, nullspace, parse_matrix, rank, scale,
                            to_fraction)
from qgroups.scalar import generator

q = generator()


class TestMatrix:
    def test_ragged_rows(self):
        with pytest.raises(DimensionError):
            matrix([[1, 2], [3]])

    def test_equal_ignores_format(self):
        A = matrix([[1, 0], [0, 1]])
        assert equal(A, identity(2))
        assert equal(A.to_dense(), identity(2))

    def test_kron_index_convention(self):
        A = matrix([[0, 1], [0, 0]])
        B = matrix([[1, 0], [0, q]])
        K = entries(kron(A, B))
        assert K[0][2] == 1
        assert K[1][3] == q
        assert sum(1 for row in K for x in row if x) == 2

    def test_scale(self):
        A = matrix([[1, q]])
        assert entries(scale(A, q)) == [[q, q ** 2]]
        assert is_zero(scale(A, 0))


class TestSolving:
    def test_nullspace_has_one_at_the_free_column(self):
        M = matrix([[1, -q, 0]])
        basis = nullspace(M)
        assert len(basis) == 2
        assert entries(basis[0]) == [[q], [1], [0]]
        assert entries(basis[1]) == [[0], [0], [1]]

    def test_rank_and_inverse(self):
        M = matrix([[q, 1], [0, q]])
        assert rank(M) == 2
        assert equal(inverse(M).matmul(M), identity(2))

    def test_left_inverse(self):
        F = matrix([[1, 0], [0, -q], [0, 0]])
        assert equal(left_inverse(F).matmul(F), identity(2))


class TestText:
    def test_format(self):
        assert format_matrix(matrix([[q, 0], [1, -q ** -1]])) == '[["q", "0"], ["1", "-q^-1"]]'

    def test_parse(self):
        M = parse_matrix('[[1, "q"], ["1/(1+q^2)", 0]]')
        assert format_matrix(M) == '[["1", "q"], ["1/(1+q^2)", "0"]]'

    @pytest.mark.parametrize("text", ["[[1, 2]", "{}", "[[true]]", "[1, 2]"])
    def test_invalid(self, text):
        with pytest.raises(ParseError):
            parse_matrix(text)

    def test_evaluate(self):
        M = evaluate_matrix(matrix([[q, 1 / (1 + q ** 2)]]), Fraction(1, 2))
        assert [to_fraction(x) for x in entries(M)[0]] == [Fraction(1, 2), Fraction(4, 5)]
