import random

import numpy as np
import pytest

from finalg import gfp
from tests.conftest import brute_rank


def test_prime_checks():
    assert [n for n in range(2, 30) if gfp.is_prime(n)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not gfp.is_prime(1)
    with pytest.raises(ValueError):
        gfp.check_prime(6)


def test_inverse():
    for p in (2, 3, 5, 7, 13):
        for a in range(1, p):
            assert (a * gfp.inv_mod(a, p)) % p == 1


def test_rref_frozen_examples():
    R, pivots = gfp.rref([[1, 2], [2, 4]], 5)
    assert pivots == [0]
    assert R.tolist() == [[1, 2]]
    R, pivots = gfp.rref([[0, 1, 1], [1, 0, 1], [1, 1, 0]], 2)
    assert pivots == [0, 1]
    assert R.tolist() == [[1, 0, 1], [0, 1, 1]]
    R, pivots = gfp.rref([[0, 0], [0, 0]], 3)
    assert pivots == [] and R.shape[0] == 0


def test_rank_against_span_enumeration():
    rng = random.Random(11)
    for _ in range(120):
        p = rng.choice([2, 3, 5])
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        mat = [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
        assert gfp.rank(mat, p) == brute_rank(mat, p)


def test_rref_idempotent():
    rng = random.Random(5)
    for _ in range(60):
        p = rng.choice([2, 3])
        mat = [[rng.randrange(p) for _ in range(4)] for _ in range(3)]
        R1, piv1 = gfp.rref(mat, p)
        R2, piv2 = gfp.rref(R1, p)
        assert piv1 == piv2
        assert np.array_equal(R1, R2)


def test_solve_membership():
    rng = random.Random(7)
    for _ in range(80):
        p = rng.choice([2, 3, 5])
        span = np.array([[rng.randrange(p) for _ in range(4)]
                         for _ in range(3)], dtype=np.int64)
        coeffs = [rng.randrange(p) for _ in range(3)]
        v = (np.array(coeffs) @ span) % p
        got = gfp.solve_membership(span, v, p)
        assert got is not None
        assert np.array_equal((got @ span) % p, v)


def test_solve_membership_outside():
    span = [[1, 0, 0], [0, 1, 0]]
    assert gfp.solve_membership(span, [0, 0, 1], 2) is None
    assert gfp.solve_membership(span, [1, 1, 0], 2) is not None


def test_nullspace_properties():
    rng = random.Random(13)
    for _ in range(80):
        p = rng.choice([2, 3, 5])
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        mat = np.array([[rng.randrange(p) for _ in range(cols)]
                        for _ in range(rows)], dtype=np.int64)
        ker = gfp.nullspace(mat, p)
        assert ker.shape[0] == cols - gfp.rank(mat, p)
        if ker.shape[0]:
            assert not ((mat @ ker.T) % p).any()
            assert gfp.rank(ker, p) == ker.shape[0]


def test_nullspace_frozen():
    ker = gfp.nullspace([[1, 1]], 2)
    assert ker.tolist() == [[1, 1]]
    ker = gfp.nullspace([[1, 2, 0], [0, 0, 1]], 3)
    assert ker.shape[0] == 1
    assert ker[0].tolist() == [1, 1, 0]


def test_rowspace_incremental():
    rng = random.Random(3)
    for _ in range(40):
        p = rng.choice([2, 3])
        vecs = [[rng.randrange(p) for _ in range(5)] for _ in range(6)]
        rs = gfp.RowSpace(5, p)
        expected_rank = 0
        for i, v in enumerate(vecs):
            grew = rs.add(v)
            expected_rank = brute_rank(vecs[:i + 1], p)
            assert rs.dim == expected_rank
            assert grew == (brute_rank(vecs[:i], p) < expected_rank)
            assert rs.contains(v)
        other = rs.copy()
        assert other.dim == rs.dim
        other.add([1, 0, 0, 0, 0])
        assert rs.dim == expected_rank  # copy is independent


def test_rowspace_residual():
    rs = gfp.RowSpace(3, 2)
    rs.add([1, 1, 0])
    res = rs.residual([1, 0, 1])
    assert res.tolist() == [0, 1, 1]
    assert not rs.contains([1, 0, 1])
