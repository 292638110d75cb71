from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galois_polylog.ncpoly import (NCSeries, X, Y, all_words, regular_word, shuffle_dict, word_index,
                                   words_of_length)
from galois_polylog.rings import QQ, PolynomialRing

words = st.text(alphabet="XY", max_size=4)


def test_word_order():
    assert list(all_words(2)) == ["", "X", "Y", "XX", "XY", "YX", "YY"]
    assert len(words_of_length(5)) == 32


def test_regular_words():
    assert regular_word((1, 2)) == "XYY"
    assert regular_word((2, 1)) == "YXY"
    assert word_index("XXY") == (3,)
    with pytest.raises(ValueError):
        word_index("YX")


def test_shuffle_example():
    assert shuffle_dict("XY", "X") == {"XYX": 1, "XXY": 2}


@given(words, words)
def test_shuffle_commutative_and_counted(u, v):
    from math import comb
    d = shuffle_dict(u, v)
    assert d == shuffle_dict(v, u)
    assert sum(d.values()) == comb(len(u) + len(v), len(u))


def test_products_and_powers():
    x, y = X(QQ, 4), Y(QQ, 4)
    p = (x + y) ** 2
    assert p.coeff("XY") == 1 and p.coeff("YX") == 1 and p.coeff("XX") == 1
    with pytest.raises(ValueError, match="truncation mismatch"):
        X(QQ, 3) + X(QQ, 4)
    with pytest.raises(ValueError, match="coefficient ring mismatch"):
        X(QQ, 3) + X(PolynomialRing(), 3)


def test_exp_of_letter():
    e = X(QQ, 5).exp()
    assert e.coeff("XXXX") == Fraction(1, 24)
    assert e.is_group_like().ok


def test_not_group_like_witness():
    f = NCSeries(QQ, 2, {"": 1, "X": 1, "XX": 1})
    res = f.is_group_like()
    assert not res.ok and res.witness == ("X", "X")


def test_inverse_and_swap():
    f = (X(QQ, 4) + Y(QQ, 4).scale(3)).exp()
    assert f * f.inverse() == NCSeries.one(QQ, 4)
    assert f.swap().coeff("X") == 3


def test_substitute():
    f = (X(QQ, 3) * Y(QQ, 3))
    g = f.substitute(Y(QQ, 3), X(QQ, 3))
    assert g == Y(QQ, 3) * X(QQ, 3)


def test_text_round_trip():
    ring = PolynomialRing()
    a = ring.var("a")
    f = (X(ring, 3).scale(a) + Y(ring, 3)).exp()
    assert NCSeries.from_text(f.to_text(), ring) == f


series_st = st.dictionaries(st.text(alphabet="XY", min_size=1, max_size=4),
                            st.fractions(min_value=-3, max_value=3, max_denominator=4), max_size=6)


@given(series_st)
def test_exp_log_round_trip(d):
    f = NCSeries(QQ, 4, d)
    assert f.exp().log() == f
    g = f + NCSeries.one(QQ, 4)
    assert g.log().exp() == g


@given(series_st, series_st, series_st)
def test_associativity(a, b, c):
    f, g, h = (NCSeries(QQ, 4, d) for d in (a, b, c))
    assert (f * g) * h == f * (g * h)
