import time

import pytest

from galois_polylog import associator as asc
from galois_polylog import identities as ids
from galois_polylog.ncpoly import NCSeries
from galois_polylog.rings import PolynomialRing
from galois_polylog.symbols import NamedSymbols, Side


@pytest.mark.parametrize("which", ["G0", "phi", "f_sigma"])
@pytest.mark.parametrize("trunc", [3, 4])
def test_fixtures_group_like(which, trunc):
    assert asc.fixture(which, trunc).certify().ok


def test_fixture_coefficients():
    ns = NamedSymbols(PolynomialRing(), Side.COMPLEX)
    g = asc.fixture_G0(ns)
    assert g.coeff("XYX") == ns.li(3, "z") * 2 - ns.log("z") * ns.li(2, "z")
    assert asc.extract_polylog(g, 2).value == ns.li(2, "z")
    assert asc.extract_polylog(g, (1, 2)).value == ns.li((1, 2), "z")


@pytest.mark.parametrize("which", ["G0", "f_sigma"])
def test_xyx_sign_flip_breaks_group_likeness(which):
    f = asc.fixture(which, 3)
    coeffs = dict(f.series.coeffs)
    # XYX = -2 c_XXY + (log or rho term times Li_2); flip the sign of the product term
    product_part = coeffs["XYX"] + coeffs["XXY"] * 2
    coeffs["XYX"] = coeffs["XYX"] - product_part * 2
    bad = NCSeries(f.series.ring, 3, coeffs)
    res = bad.is_group_like(f.normalize)
    assert not res.ok
    assert len(res.witness[0] + res.witness[1]) == 3


def test_unknown_fixture():
    with pytest.raises(ValueError):
        asc.fixture("psi")


def test_two_cycle_relations_contain_zeta3_relation():
    ns = NamedSymbols(PolynomialRing(), Side.COMPLEX)
    rels = asc.two_cycle_relations(4, asc.fixture_phi(ns, 4))
    target = ns.zeta(3) - ns.zeta((1, 2))
    assert any(r == target or r == -target for r in rels)


def test_lmf_regular_coeff_on_fixture():
    f = asc.fixture("f_sigma", 3)
    for k in (1, 2, 3):
        got = asc.lmf_regular_coeff(f.series.map_coefficients(f.normalize), k)
        assert got is not None


@pytest.mark.parametrize("side", ["complex", "ladic"])
def test_landen3(side):
    start = time.perf_counter()
    rep = asc.verify_landen3(side)
    assert rep.ok, rep.summary()
    assert time.perf_counter() - start < 2


def test_swapped_square_variant_fails():
    rep = asc.verify_landen3("ladic", swapped_square=True)
    assert rep.status == "fail"
    assert not rep.intermediates[-1].ok


@pytest.mark.parametrize("k", [2, 3, 4, 5])
@pytest.mark.parametrize("side", ["complex", "ladic"])
def test_oiueno(k, side):
    rep = asc.verify_oiueno(k, side)
    assert rep.ok, rep.summary()


def test_oiueno_limits():
    with pytest.raises(ValueError):
        asc.verify_oiueno(9)
    with pytest.raises(ValueError):
        asc.verify_landen3("ladic", trunc=2)


def _route_b_residual(phi_factory, k=3):
    ns = NamedSymbols(PolynomialRing(), Side.LADIC)
    ring = ns.ring
    phi = phi_factory(ring, k)
    f1 = asc.generic_grouplike(ring, "q", k, "1mz", Side.LADIC)
    fz = asc.chain_rule_1mz(f1, phi)
    real = asc.Realization(ns, {"1mz": f1, "z": fz}, phi)
    return real(ids.oiueno_pre(ns, k).difference)


def test_route_b_needs_two_cycle():
    with_cycle = _route_b_residual(lambda ring, k: asc.two_cycle_phi(ring, "p", k))
    without = _route_b_residual(lambda ring, k: asc.generic_grouplike(ring, "p", k, "10", vanishing_linear=True))
    assert with_cycle.is_zero()
    assert not without.is_zero()


def test_chain_rule_requires_vanishing_linear_terms():
    ring = PolynomialRing()
    f = asc.generic_grouplike(ring, "q", 3)
    with pytest.raises(ValueError):
        asc.chain_rule_1mz(f, f)


def test_moebius_y_image_sides():
    ring = PolynomialRing()
    cx = asc.moebius_y_image(Side.COMPLEX, ring, 3)
    lz = asc.moebius_y_image(Side.LADIC, ring, 3)
    assert cx.coeff("XY") == 0
    assert lz.coeff("XY") != 0
