from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galois_polylog import charconv
from galois_polylog import identities as ids
from galois_polylog.rings import PolynomialRing
from galois_polylog.symbols import NamedSymbols, Side


@pytest.fixture
def ns():
    return NamedSymbols(PolynomialRing(), Side.LADIC)


def test_weight_two_conversion(ns):
    r, r1 = ns.rho("z"), ns.rho("1mz")
    assert charconv.li_from_characters(2, "z", ns) == -ns.chit(2, "z") - r * r1
    assert charconv.li_from_characters(1, "z", ns) == r1


def test_weight_three_conversion(ns):
    r, r1 = ns.rho("z"), ns.rho("1mz")
    expected = ns.chit(3, "z") * Fraction(1, 2) + r * ns.chit(2, "z") + r ** 2 * r1 * Fraction(1, 2)
    assert charconv.li_from_characters(3, "z", ns) == expected


@pytest.mark.parametrize("m", range(1, 7))
def test_conversions_are_inverse(ns, m):
    chars = charconv.characters_from_li(m, "z", ns)
    back = {ns.li(j, "z").symbols()[0]: charconv.li_from_characters(j, "z", ns) for j in range(2, m + 1)}
    assert chars.substitute(back) == ns.chit(m, "z")


def test_known_value_and_axioms(ns):
    kv = charconv.known_values(ns)
    assert list(kv.values())[0] == (ns.chi() ** 2 - 1) * Fraction(1, 24)
    ax = charconv.default_axioms(ns)
    assert ax[ns.rho("1mw").symbols()[0]] == -ns.rho("1mz")


def test_unknown_symbol(ns):
    with pytest.raises(ValueError, match="unknown symbol"):
        charconv.to_character_form(ns.ring.var("mystery"), ns)
    with pytest.raises(ValueError):
        charconv.to_character_form(ns.li((1, 2), "z"), ns)


def test_character_forms(ns):
    rep = charconv.verify_dilog_forms(ns)
    assert rep.ok, rep.summary()


def test_character_form_of_swapped_square_differs(ns):
    forms = charconv.character_forms(ns)
    wrong = charconv.to_character_form(ids.galois_landen_trilog(ns, swapped_square=True).difference, ns,
                                       extra=charconv.known_values(ns))
    from galois_polylog.associator import proportional_residual
    assert proportional_residual(forms["landen3"][0], ids.character_landen3(ns).difference).is_zero()
    assert not proportional_residual(wrong, ids.character_landen3(ns).difference).is_zero()


@pytest.mark.parametrize("eq", ["4.5", "4.6", "4.7"])
@pytest.mark.parametrize("ell", [2, 3, 5, 7])
def test_integrality_tables(eq, ell):
    rows = charconv.integrality_table(eq, ell)
    assert rows and all(r.status == "integral" for r in rows)


def test_integrality_counterexample(ns):
    r = ns.rho("z")
    res = charconv.integrality_check(r ** 2 * Fraction(1, 4), charconv.IntegralityConstraint(2))
    assert not res.ok and res.witness == {"rho_z": 1}
    assert res.cases >= 1


def test_integrality_constraint_requires_prime():
    with pytest.raises(ValueError):
        charconv.IntegralityConstraint(6)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_landen3_cubic_term_integral_at_points(a, chi):
    # -(1/6) a (chi - a)(chi - 2a): the 2-part of the denominator cancels for odd chi,
    # the 3-part for chi prime to 3
    value = Fraction(-a * (chi - a) * (chi - 2 * a), 6)
    if chi % 2:
        assert value.denominator % 2
    if chi % 3:
        assert value.denominator % 3
