import random

import numpy as np
import pytest

from finalg.errors import ResourceLimitError
from finalg.present import parse
from finalg.truncated import TruncatedAlgebra, default_bound, truncation_bound
from tests.conftest import free_algebra_dims


LAMBDA_TENSOR = """
algebra ext_poly
char 3
mode commutative
gen x 1
gen y 2
"""


def test_truncation_bound_examples():
    pres = parse("algebra a\nchar 2\nmode commutative\ngen x 1\ngen y 2\nrel x^2\n")
    assert truncation_bound(pres) == 2
    assert default_bound(pres) == 10
    free = parse("algebra f\nchar 2\nmode commutative\ngen x 1\n")
    assert truncation_bound(free) == 1
    d8ish = parse("algebra d\nchar 2\nmode commutative\n"
                  "gen x 1\ngen y 1\ngen w 2\nrel x*y\n")
    assert truncation_bound(d8ish) == 2


def test_fixture_dims_frozen(corpus):
    expected = {
        "c2": [1] * 11,
        "c4": [1] * 11,
        "c8": [1] * 11,
        "c2c2": [n + 1 for n in range(11)],
        "c4c2": [n + 1 for n in range(11)],
        "c2c2c2": [(n + 1) * (n + 2) // 2 for n in range(11)],
        "d8": [n + 1 for n in range(11)],
        "q8": [1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2],
    }
    for name, pres in corpus.items():
        T = TruncatedAlgebra(pres, 10)
        assert list(T.dims()) == expected[name], name


def test_free_algebra_dims_against_series_product():
    rng = random.Random(19)
    for _ in range(25):
        p = rng.choice([2, 3])
        n = rng.randint(1, 3)
        degrees = [rng.randint(1, 3) for _ in range(n)]
        lines = [f"algebra f\nchar {p}\nmode commutative\n"]
        lines += [f"gen g{i} {d}\n" for i, d in enumerate(degrees)]
        pres = parse("".join(lines))
        T = TruncatedAlgebra(pres, 7)
        # generator order does not affect counts; sort to match helper
        exterior = [p != 2 and d % 2 == 1 for d in sorted(degrees)]
        want = free_algebra_dims(sorted(degrees), exterior, 7)
        assert list(T.dims()) == want


def test_odd_characteristic_exterior_line():
    T = TruncatedAlgebra(parse(LAMBDA_TENSOR), 10)
    assert list(T.dims()) == [1] * 11


def test_multiplication_table_consistency(corpus):
    # (a*b)*c = a*(b*c) on random homogeneous elements of every fixture
    rng = random.Random(47)
    for name, pres in corpus.items():
        T = TruncatedAlgebra(pres, 8)
        for _ in range(10):
            da, db, dc = (rng.randint(1, 2) for _ in range(3))
            if da + db + dc > T.bound:
                continue
            va = np.array([rng.randrange(T.p) for _ in range(T.dim(da))])
            vb = np.array([rng.randrange(T.p) for _ in range(T.dim(db))])
            vc = np.array([rng.randrange(T.p) for _ in range(T.dim(dc))])
            ab = T.multiply_vec(da, va, db, vb)
            bc = T.multiply_vec(db, vb, dc, vc)
            left = T.multiply_vec(da + db, ab, dc, vc)
            right = T.multiply_vec(da, va, db + dc, bc)
            assert np.array_equal(left, right), name


def test_graded_commutativity_in_tables():
    pres = parse("algebra two_odds\nchar 3\nmode commutative\n"
                 "gen x 1\ngen y 1\n")
    T = TruncatedAlgebra(pres, 6)
    x = T.element(pres.parse_poly("x"))
    y = T.element(pres.parse_poly("y"))
    xy = T.multiply_vec(1, x[1], 1, y[1])
    yx = T.multiply_vec(1, y[1], 1, x[1])
    assert np.array_equal(yx, (-xy) % 3)
    xx = T.multiply_vec(1, x[1], 1, x[1])
    assert not xx.any()


def test_relations_reduce_to_zero(corpus):
    for name, pres in corpus.items():
        T = TruncatedAlgebra(pres, 10)
        for rel in pres.relations:
            assert T.is_zero(rel), name


def test_element_poly_roundtrip(corpus):
    rng = random.Random(59)
    for pres in corpus.values():
        T = TruncatedAlgebra(pres, 8)
        for n in range(1, 7):
            dim = T.dim(n)
            if dim == 0:
                continue
            vec = np.array([rng.randrange(T.p) for _ in range(dim)])
            poly = T.poly_of_vec(n, vec)
            back = T.element(poly)
            if not vec.any():
                assert back is None
            else:
                assert back[0] == n
                assert np.array_equal(back[1], vec)


def test_evaluate_identity_images(corpus):
    for pres in corpus.values():
        T = TruncatedAlgebra(pres, 10)
        images = [T.element(pres.parse_poly(name)) for name in pres.gens.names]
        for rel in pres.relations:
            out = T.evaluate(rel, pres, images)
            assert out is None or not out[1].any()
        assert T.generates(images)


def test_generates_needs_every_summand(corpus):
    c4 = corpus["c4"]
    T = TruncatedAlgebra(c4, 10)
    x = T.element(c4.parse_poly("x"))
    y = T.element(c4.parse_poly("y"))
    zero2 = (2, np.zeros(T.dim(2), dtype=np.int64))
    assert T.generates([x, y])
    assert not T.generates([x, zero2])


def test_power_filtration_frozen(corpus):
    T = TruncatedAlgebra(corpus["c2"], 10)
    assert T.power_filtration_dims() == [10 - c for c in range(10)]
    T = TruncatedAlgebra(corpus["c4"], 10)
    assert T.power_filtration_dims() == [10, 8, 6, 4, 2, 0, 0, 0, 0, 0]
    T = TruncatedAlgebra(corpus["c2c2"], 10)
    # I^c collects every component of degree >= c
    want = [sum(n + 1 for n in range(c, 11)) for c in range(1, 11)]
    assert T.power_filtration_dims() == want


def test_power_filtration_separates_equal_series(corpus):
    a = TruncatedAlgebra(corpus["c2"], 10).power_filtration_dims()
    b = TruncatedAlgebra(corpus["c4"], 10).power_filtration_dims()
    assert a != b


def test_monomial_ceiling():
    pres = parse("algebra wide\nchar 2\nmode commutative\n"
                 "gen x 1\ngen y 1\ngen z 1\n")
    with pytest.raises(ResourceLimitError):
        TruncatedAlgebra(pres, 10, monomial_ceiling=5)


def test_deterministic_rebuild(corpus):
    for pres in corpus.values():
        T1 = TruncatedAlgebra(pres, 6)
        T2 = TruncatedAlgebra(pres, 6)
        assert T1.dims() == T2.dims()
        for n in range(7):
            assert T1.basis(n) == T2.basis(n)
        assert np.array_equal(T1.table(1, 1), T2.table(1, 1))
