import random

import pytest

from finalg import hilbert
from finalg.errors import ParseError
from finalg.hilbert import (RationalSeries, TruncatedSeries,
                            count_nonzero_vectors, dims_from_series, equal,
                            equal_truncated, expand, format_int_poly,
                            monomial_ideal_numerator, parse_int_poly,
                            parse_series, quotient_series)
from tests.conftest import naive_division, quotient_monomial_dims


def test_parse_int_poly():
    assert parse_int_poly("1") == (1,)
    assert parse_int_poly("1-2t+t^2") == (1, -2, 1)
    assert parse_int_poly("t^3") == (0, 0, 0, 1)
    assert parse_int_poly("-t + 3") == (3, -1)
    assert parse_int_poly("2t^2+t^2") == (0, 0, 3)


def test_parse_int_poly_errors():
    for bad in ("", "t^", "2tt", "x+1", "t^-2", "+"):
        with pytest.raises(ParseError):
            parse_int_poly(bad)


def test_format_roundtrip():
    rng = random.Random(23)
    for _ in range(50):
        coeffs = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 6)))
        text = format_int_poly(coeffs)
        back = parse_int_poly(text)
        trimmed = coeffs
        while len(trimmed) > 1 and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        assert back == trimmed


def test_canonical_reduction():
    s = RationalSeries((2, -2), (2,)).canonical()
    assert (s.num, s.den) == ((1, -1), (1,))
    s = RationalSeries((1, 0, -1), (1, -1)).canonical()
    assert (s.num, s.den) == ((1, 1), (1,))
    # leading denominator sign normalizes positive at t=0
    s = RationalSeries((1,), (-1, 1)).canonical()
    assert s.den[0] > 0


def test_series_equality_cross_multiplication():
    a = RationalSeries((1,), (1, -1))
    b = RationalSeries((1, 1), (1, 0, -1))
    assert equal(a, b)
    assert not equal(a, RationalSeries((1,), (1, 0, -1)))


def test_dims_from_series_known():
    geo = RationalSeries((1,), (1, -1))
    assert dims_from_series(geo, 6) == [1] * 7
    plane = RationalSeries((1,), (1, -2, 1))
    assert dims_from_series(plane, 6) == [1, 2, 3, 4, 5, 6, 7]
    koszul = RationalSeries((1, 2, 2, 1), (1, 0, 0, 0, -1))
    assert dims_from_series(koszul, 9) == [1, 2, 2, 1, 1, 2, 2, 1, 1, 2]


def test_dims_from_series_matches_naive_division():
    rng = random.Random(41)
    for _ in range(60):
        num = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
        den = [rng.choice([1, -1])] + \
            [rng.randint(-3, 3) for _ in range(rng.randint(0, 4))]
        series = RationalSeries(tuple(num), tuple(den))
        assert dims_from_series(series, 20) == naive_division(num, den, 20)


def test_expand_truncated():
    t = TruncatedSeries((1, 2, 2), 2)
    assert expand(t, 2) == [1, 2, 2]
    with pytest.raises(hilbert.BoundExceededError):
        expand(t, 3)
    assert equal_truncated(t, RationalSeries((1, 2, 2), (1,)), 2)


def test_parse_series():
    s = parse_series("1+t / 1-t^2")
    assert isinstance(s, RationalSeries)
    assert dims_from_series(s, 4) == [1] * 5
    with pytest.raises(ParseError):
        parse_series("1+t")
    with pytest.raises(ParseError):
        parse_series("1 / 1-t / 1")


def test_count_nonzero_vectors_worked_values():
    # the worked candidate-space counts quote these exact factor values
    assert count_nonzero_vectors(2, 3) == 8
    assert count_nonzero_vectors(4, 3) == 80
    assert count_nonzero_vectors(6, 3) == 728
    assert count_nonzero_vectors(9, 3) == 19682
    assert count_nonzero_vectors(3, 2) == 7
    assert count_nonzero_vectors(7, 2) == 127
    assert count_nonzero_vectors(0, 5) == 0


def test_monomial_ideal_numerator_closed_forms():
    # principal ideal
    assert monomial_ideal_numerator([(2,)], (1,)) == (1, 0, -1)
    # pairwise coprime generators: product formula
    num = monomial_ideal_numerator([(2, 0), (0, 3)], (1, 1))
    expected = hilbert.poly_mul((1, 0, -1), (1, 0, 0, -1))
    assert num == expected
    # zero ideal
    assert monomial_ideal_numerator([], (1, 1)) == (1,)
    # whole ring: generator 1
    assert monomial_ideal_numerator([(0, 0)], (1, 1)) == (0,)


def test_quotient_series_examples():
    # one polynomial generator
    s = quotient_series([], (1,), (False,)).canonical()
    assert equal(s, RationalSeries((1,), (1, -1)))
    # square-zero class in degree 1 next to a polynomial class in degree 2
    s = quotient_series([(2, 0)], (1, 2), (False, False))
    assert equal(s, RationalSeries((1,), (1, -1)))
    # exterior generator contributes a (1 + t^d) factor
    s = quotient_series([], (1, 2), (True, False))
    assert equal(s, RationalSeries((1,), (1, -1)))
    s = quotient_series([], (1, 1), (True, True))
    assert equal(s, RationalSeries((1, 2, 1), (1,)))


def test_quotient_series_against_box_walk():
    rng = random.Random(97)
    for _ in range(40):
        nvars = rng.randint(1, 3)
        degrees = tuple(rng.randint(1, 2) for _ in range(nvars))
        exterior = tuple(rng.random() < 0.3 for _ in range(nvars))
        leads = []
        for _ in range(rng.randint(0, 2)):
            exps = tuple(rng.randint(0, 1 if exterior[i] else 3)
                         for i in range(nvars))
            if any(exps):
                leads.append(exps)
        series = quotient_series(leads, degrees, exterior)
        got = dims_from_series(series, 8)
        want = quotient_monomial_dims(degrees, leads, exterior, 8)
        assert got == want, (degrees, exterior, leads)
