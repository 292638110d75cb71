import time
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galois_polylog import tensorcrit as tc
from galois_polylog.rings import PolynomialRing
from galois_polylog.symbols import NamedSymbols, Side

units = st.builds(tc.UnitGroupElement, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))


def test_tensor_criterion():
    start = time.perf_counter()
    res = tc.verify_tensor_criterion()
    assert time.perf_counter() - start < 0.1
    assert res.ok and res.five_term_matches
    assert res.reduced.is_zero()
    assert "modulo torsion: 0" in res.trace()


def test_free_sum_is_two_torsion():
    res = tc.verify_tensor_criterion()
    assert not res.free_sum.is_zero()
    assert res.free_sum.scale(2).reduce(2).is_zero()


def test_single_term_and_degeneracy():
    assert tc.AbTensor.tensor(tc.A, tc.A, tc.B) == tc.AbTensor.basis("a", "a", "b")
    assert not tc.AbTensor.tensor(tc.A, tc.A, tc.B).is_zero()
    assert tc.AbTensor.tensor(tc.B, tc.C, tc.C).is_zero()


@given(units, units, units, units)
def test_tensor_normal_form(x, y, z, y2):
    T = tc.AbTensor.tensor
    assert (T(x, y, z) + T(x, z, y)).is_zero()
    assert T(x, y + y2, z) == T(x, y, z) + T(x, y2, z)
    assert T(x + y2, y, z) == T(x, y, z) + T(y2, y, z)


def test_p3_examples():
    ring = PolynomialRing()
    x, y = ring.var("x"), ring.var("y")
    z0 = ring.zero()
    assert tc.p3((z0, z0, z0, x), (z0, z0, z0, z0)) == x
    assert tc.p3((x, z0, z0, z0), (z0, y, z0, z0)) == x ** 2 * y * Fraction(1, 12)


def test_p3_third_complex_term():
    ns = NamedSymbols(PolynomialRing(), Side.COMPLEX)
    li = [tc.li_complex(j, "w", ns) for j in range(4)]
    got = tc.p3(tc.li_vector("w", ns), tc.boundary(3, ns))
    expected = li[3] - li[2] * Fraction(1, 4) + li[1] * Fraction(1, 48) - li[1] * li[0] * Fraction(1, 24)
    assert got == expected


def test_ladic_lists():
    ns = NamedSymbols(PolynomialRing(), Side.LADIC)
    assert tc.li_ladic(2, "z", ns) == -ns.chit(2, "z") - ns.rho("z") * ns.rho("1mz") * Fraction(1, 2)
    assert tc.boundary(3, ns)[0] == (1 - ns.chi()) * Fraction(1, 2)
    assert tc.boundary(2, ns)[2] == ns.chit(2, "10")
    with pytest.raises(ValueError):
        tc.li_ladic(4, "z", ns)
    with pytest.raises(ValueError):
        tc.LiCoefficientVector((1, 2, 3), Side.LADIC)


def test_complex_lists():
    ns = NamedSymbols(PolynomialRing(), Side.COMPLEX)
    u = ns.ring.var("u_2pii")
    assert tc.li_complex(0, "z", ns) == -u * ns.log("z")
    assert tc.boundary(3, ns)[0] == Fraction(1, 2)


def test_error_term():
    ns = NamedSymbols(PolynomialRing(), Side.LADIC)
    parts = tc.error_term_summands(ns)
    assert parts[0].is_zero() and parts[1].is_zero()
    r, r1 = ns.rho("z"), ns.rho("1mz")
    assert tc.error_term(ns) == -r1 * Fraction(1, 12) + ns.chit(2, "z") * Fraction(1, 2) + r * r1 * Fraction(1, 4)
    assert tc.verify_error_term().ok


def test_first_ladic_term():
    ns = NamedSymbols(PolynomialRing(), Side.LADIC)
    r, r1 = ns.rho("z"), ns.rho("1mz")
    first = tc.landen_terms(ns)[0]
    assert first == (ns.chit(3, "z") * Fraction(1, 2) + r * ns.chit(2, "z") * Fraction(1, 2)
                     + r ** 2 * r1 * Fraction(1, 12))


def test_pipeline_ladic_default_axioms():
    rep = tc.pipeline_ladic()
    assert rep.ok, rep.summary()


def test_pipeline_ladic_without_axioms():
    ns = NamedSymbols(PolynomialRing(), Side.LADIC)
    rep = tc.pipeline_ladic({}, ns)
    assert rep.status == "fail"
    mons = tc.axiom_sensitive_monomials(rep, ns)
    assert mons and all("rho_w" in m or "rho_1mw" in m for m in mons)


@pytest.mark.parametrize("z", [0.06 + 0.0222 * i for i in range(20)] + [0.5])
def test_pipeline_complex(z):
    assert tc.pipeline_complex(z).residual < 1e-12


def test_pipeline_complex_domain():
    with pytest.raises(ValueError):
        tc.pipeline_complex(0.7)
