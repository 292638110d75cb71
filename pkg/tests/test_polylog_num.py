import mpmath
import pytest

from galois_polylog import polylog_num as pn

O = mpmath.MPContext()
O.prec = 200


def diff(a, b) -> float:
    """|a - b| evaluated at 200 bits."""
    return float(abs(O.mpc(a) - O.mpc(b)))


def test_li2_half():
    # frozen reference value
    assert diff(pn.polylog(2, 0.5), O.mpf("0.58224052646501250590265632015968010858")) < 1e-30


def test_li1_closed_form():
    assert diff(pn.polylog(1, 0.3), -O.log(1 - O.mpf(0.3))) < 1e-30


def test_values_at_one_and_minus_one():
    assert diff(pn.polylog(2, 1), O.pi ** 2 / 6) < 1e-30
    assert diff(pn.polylog(3, -1), -O.mpf(3) / 4 * O.zeta(3)) < 1e-30
    with pytest.raises(pn.DomainError):
        pn.polylog(1, 1)


def test_domain():
    with pytest.raises(pn.DomainError):
        pn.polylog(2, 0.9995)
    with pytest.raises(pn.DomainError):
        pn.mpl((2, 1), 1)


@pytest.mark.parametrize("k", range(2, 9))
def test_zeta_against_mpmath(k):
    assert diff(pn.zeta_value(k), O.zeta(k)) < 1e-35


def test_mpl_examples():
    x = 0.4
    assert diff(pn.mpl((1, 1, 1), x), -O.log(1 - O.mpf(x)) ** 3 / 6) < 1e-25
    assert abs(pn.mpl((1, 2), 1) - pn.polylog(3, 1)) < 1e-6
    assert diff(pn.mpl((2,), 0.7), pn.polylog(2, 0.7)) < 1e-30


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("x", [0.2, 0.5, 0.8])
def test_depth_one_agrees(k, x):
    assert diff(pn.mpl((k,), x), O.polylog(k, x)) < 1e-30


def test_tail_is_certified():
    a = pn.mpl((1, 2), 0.9, tol=1e-20)
    N = pn._tail_terms(2, 2, 0.9, 1e-20)
    ctx = pn._ctx(128)
    b = pn._nested_sum((1, 2), ctx.mpf(0.9), 2 * N, ctx)
    assert abs(a - b) < 1e-20


def test_multiple_zeta_duality():
    assert diff(pn.multiple_zeta((1, 1, 2)), O.zeta(4)) < 1e-8


@pytest.mark.parametrize("eq", ["euler-1.1", "landen-1.2", "landen-1.3", "L21-3.10", "L12-3.15"])
@pytest.mark.parametrize("z", [0.07, 0.2, 0.33, 0.5])
def test_numeric_checks(eq, z):
    row = pn.numeric_check(eq, z)
    assert row.ok, row


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_oiueno_numeric(k):
    assert pn.numeric_check("oiueno-1.4", 0.4, 1e-6, k=k).ok


def test_numeric_check_errors():
    with pytest.raises(pn.DomainError):
        pn.numeric_check("landen-1.3", 0.7)
    with pytest.raises(ValueError):
        pn.numeric_check("oiueno-1.4", 0.3, k=7)
    with pytest.raises(ValueError):
        pn.numeric_check("nope", 0.3)


def test_csv_row():
    row = pn.numeric_check("euler-1.1", 0.5)
    fields = row.to_csv_row()
    assert fields[0] == "euler-1.1" and "Li2_z=" in fields[3]
