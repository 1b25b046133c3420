import itertools

import numpy as np
import pytest

from fdhom import _kernels
from fdhom.linalg import (
    FpMatrix,
    ModulusMismatch,
    QuotientSpace,
    column_space_basis,
    extend_to_basis,
    kernel_basis,
    membership,
    rank,
    rref,
    solve,
)

PRIMES = [2, 3, 5]


def test_rref_identity_gf2():
    m = FpMatrix.identity(2, 2)
    red, piv = rref(m)
    assert red == m
    assert piv == [0, 1]


def test_rref_zero_gf3():
    m = FpMatrix.zeros(3, 3, 3)
    red, piv = rref(m)
    assert red == m
    assert piv == []


def test_rref_ones_gf2():
    m = FpMatrix([[1, 1], [1, 1]], 2)
    red, piv = rref(m)
    assert red == FpMatrix([[1, 1], [0, 0]], 2)
    assert piv == [0]


def test_kernel_identity_empty():
    assert kernel_basis(FpMatrix.identity(4, 5)).cols == 0


def test_kernel_zero_full():
    k = kernel_basis(FpMatrix.zeros(3, 3, 3))
    assert k.cols == 3
    assert rank(k) == 3


def test_kernel_gf2_row_by_enumeration():
    m = FpMatrix([[1, 1]], 2)
    k = kernel_basis(m)
    # oracle: enumerate all of GF(2)^2
    expected = [v for v in itertools.product(range(2), repeat=2)
                if (m.a @ np.array(v)) % 2 == 0]
    nonzero = [v for v in expected if any(v)]
    assert nonzero == [(1, 1)]
    assert k.cols == 1
    assert tuple(k.a[:, 0]) == (1, 1)


def test_solve_identity():
    b = FpMatrix([[1], [2]], 3)
    x = solve(FpMatrix.identity(2, 3), b)
    assert x == b


def test_solve_no_solution():
    assert solve(FpMatrix.zeros(2, 2, 5), FpMatrix([[1], [0]], 5)) is None


def test_solve_underdetermined_by_substitution():
    a = FpMatrix([[1, 1], [0, 0]], 2)
    b = FpMatrix([[0], [0]], 2)
    x = solve(a, b)
    assert x is not None
    assert a @ x == b


def test_solve_shape_mismatch():
    with pytest.raises(ValueError):
        solve(FpMatrix.zeros(2, 2, 3), FpMatrix.zeros(3, 1, 3))


def test_modulus_mixing_is_hard_error():
    with pytest.raises(ModulusMismatch):
        FpMatrix.identity(2, 2) @ FpMatrix.identity(2, 3)


def test_membership_mirrors_solve():
    span = FpMatrix([[1, 0], [1, 1], [0, 1]], 5)
    inside = span @ FpMatrix([[2], [3]], 5)
    assert membership(inside, span)
    assert not membership(FpMatrix([[1], [0], [0]], 5), span)


@pytest.mark.parametrize("p", PRIMES)
def test_random_matrix_properties(p):
    rng = np.random.default_rng(12345 + p)
    for _ in range(60):
        rows = int(rng.integers(1, 9))
        cols = int(rng.integers(1, 9))
        m = FpMatrix(rng.integers(0, p, size=(rows, cols)), p)
        red, piv = rref(m)
        red2, piv2 = rref(red)
        assert red2 == red and piv2 == piv  # idempotence
        assert rank(m) == rank(m.T)
        k = kernel_basis(m)
        assert k.cols == cols - len(piv)  # rank-nullity
        if k.cols:
            assert (m @ k).is_zero()
        x = FpMatrix(rng.integers(0, p, size=(cols, 2)), p)
        b = m @ x
        y = solve(m, b)
        assert y is not None and m @ y == b


def test_backends_agree_when_both_present():
    if _kernels.rref_numba is None:
        pytest.skip("numba backend unavailable")
    rng = np.random.default_rng(7)
    for p in PRIMES:
        for _ in range(25):
            a = rng.integers(0, p, size=(int(rng.integers(1, 10)), int(rng.integers(1, 10))))
            a1 = np.array(a, dtype=np.int64)
            a2 = np.array(a, dtype=np.int64)
            r1, p1 = _kernels.rref_numba(a1, p)
            r2, p2 = _kernels.rref_numpy(a2, p)
            assert r1 == r2
            assert np.array_equal(a1, a2)
            assert np.array_equal(p1, p2)


def test_charpoly_backends_and_companion():
    # companion matrix of x^3 + 2x + 1 over GF(5): charpoly is the polynomial
    comp = np.array([[0, 0, -1], [1, 0, -2], [0, 1, 0]], dtype=np.int64) % 5
    coeffs = _kernels.charpoly_numpy(comp.copy(), 5)
    assert list(coeffs) == [1, 0, 2, 1]
    if _kernels.charpoly_numba is not None:
        assert list(_kernels.charpoly_numba(comp.copy(), 5)) == [1, 0, 2, 1]
    rng = np.random.default_rng(11)
    for p in PRIMES:
        for n in (1, 2, 3, 5):
            a = rng.integers(0, p, size=(n, n)).astype(np.int64)
            got = _kernels.charpoly_numpy(a.copy(), p)
            # oracle: trace and determinant coefficients
            assert got[0] == 1
            assert got[1] == (-np.trace(a)) % p
            det = int(round(np.linalg.det(a.astype(float))))
            assert got[n] == ((-1) ** n * det) % p
            if _kernels.charpoly_numba is not None:
                assert np.array_equal(got, _kernels.charpoly_numba(a.copy(), p))


def test_quotient_space_roundtrip():
    rng = np.random.default_rng(3)
    for p in PRIMES:
        w = FpMatrix(rng.integers(0, p, size=(6, 2)), p)
        q = QuotientSpace(w)
        assert q.dim == 6 - rank(w)
        assert q.pi @ q.section == FpMatrix.identity(q.dim, p)
        assert (q.pi @ w).is_zero()


def test_extend_to_basis():
    cols = FpMatrix([[1, 0], [1, 1], [0, 1]], 3)
    comp = extend_to_basis(cols)
    full = FpMatrix.hstack([cols, comp])
    assert rank(full) == 3
    assert comp.cols == 1


def test_column_space_basis_picks_original_columns():
    m = FpMatrix([[1, 2, 0], [2, 4, 1]], 5)
    b = column_space_basis(m)
    assert b.cols == 2
    assert membership(m, b)
