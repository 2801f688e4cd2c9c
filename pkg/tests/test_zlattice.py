import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from helpers import enumerate_mod, is_hermite, is_smith, leibniz_det
from andegen.zlattice import (
    DimensionError, FailingCongruence, IntegerMatrix, Status, hnf, snf,
    solve_integer, solve_mod,
)


matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.integers(-20, 20), min_size=r * c, max_size=r * c).map(
        lambda e: IntegerMatrix(r, c, tuple(e)))))


class TestIntegerMatrix:
    def test_rejects_empty_and_bad_length(self):
        with pytest.raises(DimensionError):
            IntegerMatrix(0, 2, ())
        with pytest.raises(DimensionError):
            IntegerMatrix(2, 2, (1, 2, 3))

    def test_rejects_floats_and_bools(self):
        with pytest.raises(TypeError):
            IntegerMatrix(1, 1, (1.0,))
        with pytest.raises(TypeError):
            IntegerMatrix(1, 1, (True,))

    def test_json_accepts_big_decimal_strings(self):
        big = 2 ** 100 + 7
        A = IntegerMatrix.from_json({"rows": 1, "cols": 2, "entries": [str(big), -3]})
        assert A[0, 0] == big
        assert A.to_json() == {"rows": 1, "cols": 2, "entries": [big, -3]}

    def test_matmul_and_apply(self):
        A = IntegerMatrix.from_rows([[1, 2], [3, 4]])
        B = IntegerMatrix.from_rows([[0, 1], [1, 0]])
        assert (A @ B).tolist() == [[2, 1], [4, 3]]
        assert A.apply([1, -1]) == (-1, -1)
        with pytest.raises(DimensionError):
            A.apply([1, 2, 3])

    @given(st.integers(1, 5).flatmap(lambda n: st.lists(
        st.integers(-9, 9), min_size=n * n, max_size=n * n).map(
            lambda e: IntegerMatrix(n, n, tuple(e)))))
    def test_det_matches_leibniz(self, M):
        assert M.det() == leibniz_det(M)


class TestHNF:
    def test_identity(self):
        H, U, V = hnf(IntegerMatrix.identity(2))
        assert H == IntegerMatrix.identity(2)
        assert U == IntegerMatrix.identity(2)

    def test_two_by_two(self):
        A = IntegerMatrix.from_rows([[2, 4], [1, 3]])
        H, U, V = hnf(A)
        assert U @ A == H
        assert abs(U.det()) == 1
        assert V == IntegerMatrix.identity(2)
        # lattice basis (1,3),(0,-2) reduced by hand
        assert H.tolist() == [[1, 1], [0, 2]]

    def test_zero(self):
        H, U, _ = hnf(IntegerMatrix.zeros(2, 2))
        assert H == IntegerMatrix.zeros(2, 2)
        assert abs(U.det()) == 1

    @given(matrices)
    def test_properties(self, A):
        H, U, V = hnf(A)
        assert U @ A == H
        assert abs(U.det()) == 1
        assert is_hermite(H)


class TestSNF:
    def test_diag_2_3(self):
        A = IntegerMatrix.from_rows([[2, 0], [0, 3]])
        D, U, V = snf(A)
        assert D.tolist() == [[1, 0], [0, 6]]
        assert U @ A @ V == D
        assert abs(U.det()) == abs(V.det()) == 1

    def test_identity(self):
        assert snf(IntegerMatrix.identity(3)).D == IntegerMatrix.identity(3)

    def test_already_smith(self):
        A = IntegerMatrix.from_rows([[2, 0], [0, 0]])
        assert snf(A).D == A

    def test_rectangular(self):
        A = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        D, U, V = snf(A)
        # classic textbook example: invariant factors 2, 6, 12
        assert D.diagonal() == (2, 6, 12)

    def test_large_entries_stay_exact(self):
        big = 10 ** 30
        A = IntegerMatrix.from_rows([[big, big + 1], [big - 1, big]])
        D, U, V = snf(A)
        assert U @ A @ V == D
        assert D.diagonal() == (1, 1)  # det = 1

    @given(matrices)
    def test_properties(self, A):
        D, U, V = snf(A)
        assert U @ A @ V == D
        assert abs(U.det()) == 1 and abs(V.det()) == 1
        assert is_smith(D)


class TestSolveInteger:
    def test_identity(self):
        assert solve_integer(IntegerMatrix.identity(3), [1, 2, 3]) == (1, 2, 3)

    def test_scalar_not_divisible(self):
        assert solve_integer(IntegerMatrix.from_rows([[2]]), [3]) is None

    def test_back_substitution(self):
        A = IntegerMatrix.from_rows([[1, 1], [0, 2]])
        x = solve_integer(A, [3, 4])
        assert x == (1, 2)
        assert A.apply(x) == (3, 4)

    def test_inconsistent_overdetermined(self):
        A = IntegerMatrix.from_rows([[1], [1]])
        assert solve_integer(A, [1, 2]) is None

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            solve_integer(IntegerMatrix.identity(2), [1])

    @given(matrices, st.data())
    def test_witness_sound(self, A, data):
        x0 = data.draw(st.lists(st.integers(-5, 5), min_size=A.cols, max_size=A.cols))
        c = A.apply(x0)
        x = solve_integer(A, c)
        assert x is not None
        assert A.apply(x) == c


class TestSolveMod:
    def test_m_equal_one(self):
        out = solve_mod(IntegerMatrix.from_rows([[5, 7]]), [3], 1)
        assert out.status is Status.SOLVABLE and out.witness == (0, 0)

    def test_scalar_unsolvable(self):
        out = solve_mod(IntegerMatrix.from_rows([[2]]), [1], 4)
        assert out.status is Status.UNSOLVABLE
        assert out.certificate == FailingCongruence(2, 1, 4)
        assert out.certificate.is_valid()

    def test_scalar_solvable(self):
        out = solve_mod(IntegerMatrix.from_rows([[2]]), [1], 3)
        assert out.witness == (2,)

    def test_errors(self):
        with pytest.raises(ValueError):
            solve_mod(IntegerMatrix.identity(1), [1], 0)
        with pytest.raises(DimensionError):
            solve_mod(IntegerMatrix.identity(2), [1], 5)

    def test_json(self):
        out = solve_mod(IntegerMatrix.from_rows([[2]]), [1], 4)
        assert out.to_json() == {"status": "unsolvable",
                                 "certificate": {"diag": 2, "rhs": 1, "modulus": 4}}

    @settings(max_examples=300)
    @given(st.integers(1, 3), st.integers(1, 3), st.sampled_from([2, 3, 4]), st.data())
    def test_matches_enumeration(self, r, c, m, data):
        A = IntegerMatrix(r, c, tuple(data.draw(
            st.lists(st.integers(-3, 3), min_size=r * c, max_size=r * c))))
        rhs = data.draw(st.lists(st.integers(0, m - 1), min_size=r, max_size=r))
        out = solve_mod(A, rhs, m)
        expected = enumerate_mod(A, rhs, m)
        assert out.solvable == (expected is not None)
        if out.solvable:
            assert all(0 <= v < m for v in out.witness)
            assert all((v - ci) % m == 0 for v, ci in zip(A.apply(out.witness), rhs))
        else:
            cert = out.certificate
            assert cert.modulus == m
            assert cert.rhs % math.gcd(cert.diag, m) != 0
