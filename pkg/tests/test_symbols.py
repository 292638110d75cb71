from fractions import Fraction

import pytest

from galois_polylog import identities as ids
from galois_polylog.rings import PolynomialRing
from galois_polylog.symbols import NamedSymbols, Side


@pytest.fixture(params=["complex", "ladic"])
def ns(request):
    return NamedSymbols(PolynomialRing(), request.param)


def test_depth_one_ones_are_powers_of_logs(ns):
    assert ns.li((1, 1, 1), "z") == (-ns.cy("z")) ** 3 * Fraction(1, 6)
    assert ns.li(1, "01") == 0 or ns.li(1, "01").is_zero()


def test_values_at_tangential_points(ns):
    assert ns.li(3, "10") == ns.zeta(3)
    assert ns.li((1, 2), "01").is_zero()
    assert ns.kummer("10").is_zero()


def test_coefficients_follow_shuffle(ns):
    # c_XY c_X = c_XYX + 2 c_XXY
    lhs = ns.coefficient("XY", "z") * ns.coefficient("X", "z")
    rhs = ns.coefficient("XYX", "z") + ns.coefficient("XXY", "z") * 2
    assert lhs == rhs


def test_relabel(ns):
    p = ns.li(2, "z") + ns.kummer("1mz")
    q = ns.relabel(p, {"z": "1mz", "1mz": "z"})
    assert q == ns.li(2, "1mz") + ns.kummer("z")


def test_unknown_point(ns):
    with pytest.raises(ValueError):
        ns.kummer("2")


def test_identity_sides():
    ns = NamedSymbols(PolynomialRing(), Side.LADIC)
    with pytest.raises(ValueError):
        ids.landen_trilog(ns)
    assert ids.one_two_index(4) == (1, 1, 2)
