from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galois_polylog.freelie import (LieElement, NotLieError, bch, bracket, bracket_polynomial, is_lie, is_lyndon,
                                    lie_to_series, lyndon_words, lyndon_words_of_degree, phi3, series_to_lie,
                                    standard_factorization, z_series)
from galois_polylog.ncpoly import NCSeries, X, Y
from galois_polylog.rings import QQ, PolynomialRing


def test_lyndon_counts_follow_necklace_formula():
    assert [len(lyndon_words_of_degree(n)) for n in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]
    assert lyndon_words(3) == ("X", "Y", "XY", "XXY", "XYY")


def test_lyndon_predicate():
    assert is_lyndon("XXY") and not is_lyndon("XYX") and not is_lyndon("YX")


def test_standard_factorization():
    assert standard_factorization("XXY") == ("X", "XY")
    assert standard_factorization("XYY") == ("XY", "Y")
    assert dict(bracket_polynomial("XXY")) == {"XXY": 1, "XYX": -2, "YXX": 1}


def test_z_series_low_terms():
    Z = z_series(4)
    assert Z.coeff("X") == -1 and Z.coeff("Y") == -1
    assert Z.coeff("XY") == Fraction(-1, 2)
    assert Z.coeff("XXY") == Fraction(-1, 12)
    assert Z.coeff("XYY") == Fraction(-1, 12)
    assert phi3(Z) == Fraction(-1, 12)
    x, y = X(QQ, 4), Y(QQ, 4)
    assert x.exp() * y.exp() * lie_to_series(Z).exp() == NCSeries.one(QQ, 4)


def test_bch_degree_two():
    x = LieElement.generator("X", trunc=3)
    y = LieElement.generator("Y", trunc=3)
    assert bch(x, y).coeff("XY") == Fraction(1, 2)


def test_not_lie():
    f = X(QQ, 2) * X(QQ, 2)
    with pytest.raises(NotLieError) as exc:
        series_to_lie(f)
    assert exc.value.witness == "XX"
    assert not is_lie(f)


def test_bracket_antisymmetric_and_symbolic():
    ring = PolynomialRing()
    a = LieElement(ring, 3, {"X": ring.var("s"), "XY": ring.var("t")})
    b = LieElement(ring, 3, {"Y": ring.one()})
    assert bracket(a, b) == -bracket(b, a)


lie_st = st.dictionaries(st.sampled_from(lyndon_words(5)),
                         st.fractions(min_value=-4, max_value=4, max_denominator=3), max_size=6)


@given(lie_st)
def test_lyndon_round_trip(d):
    L = LieElement(QQ, 5, d)
    assert series_to_lie(lie_to_series(L)) == L


@given(lie_st)
def test_exp_lie_group_like(d):
    assert lie_to_series(LieElement(QQ, 5, d)).exp().is_group_like().ok


@given(lie_st, lie_st, lie_st)
def test_bch_associative(a, b, c):
    A, B, C = (LieElement(QQ, 5, d) for d in (a, b, c))
    assert bch(bch(A, B), C) == bch(A, bch(B, C))


@given(lie_st, lie_st)
def test_jacobi_style_substitution(a, b):
    A, B = LieElement(QQ, 5, a), LieElement(QQ, 5, b)
    x = LieElement.generator("X", trunc=5)
    y = LieElement.generator("Y", trunc=5)
    assert A.substitute(x, y) == A
    assert lie_to_series(A.substitute(y, x)) == lie_to_series(A).swap()
    assert is_lie(lie_to_series(A) * lie_to_series(B) - lie_to_series(B) * lie_to_series(A))


def test_text_round_trip():
    L = z_series(4)
    assert LieElement.from_text(L.to_text()) == L
