"""Functional equations and coefficient identities, transcribed as stated.

Each function returns an :class:`Identity` built from the symbols of a
:class:`~galois_polylog.symbols.NamedSymbols` table.  These are the targets
that derivations are compared against; they are written out by hand and are
never produced by the derivation code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from math import factorial

from .rings import MPoly
from .symbols import NamedSymbols, Side


@dataclass(frozen=True)
class Identity:
    label: str
    ref: str
    lhs: MPoly
    rhs: MPoly

    @property
    def difference(self) -> MPoly:
        return self.lhs - self.rhs

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


def one_two_index(k: int) -> tuple[int, ...]:
    """The index (1, ..., 1, 2) of weight k."""
    if k < 2:
        raise ValueError("weight must be at least 2")
    return (1,) * (k - 2) + (2,)


def _need(ns: NamedSymbols, side: Side) -> None:
    if ns.side is not side:
        raise ValueError(f"identity is stated on the {side.value} side")


# -- statements valid on both sides (written through c_X of the path) --------

def oiueno(ns: NamedSymbols, k: int) -> Identity:
    """sum_j Li_{k-j}(z) u^j/j! + Li_{1,..,1,2}(1-z) = zeta(k), u = -log z (complex) or rho_z (l-adic)."""
    u = -ns.cx("z")
    lhs = ns.li(one_two_index(k), "1mz")
    for j in range(k):
        lhs = lhs + ns.li(k - j, "z") * u ** j * F(1, factorial(j))
    return Identity(f"oiueno-{k}", f"Oi-Ueno functional equation, weight {k}", lhs, ns.zeta(k))


def oiueno_pre(ns: NamedSymbols, k: int) -> Identity:
    """Same left side, right side zeta(1, ..., 1, 2) before the duality formula is used."""
    base = oiueno(ns, k)
    return Identity(f"oiueno-pre-{k}", f"Oi-Ueno equation with zeta(1,...,1,2), weight {k}",
                    base.lhs, ns.zeta(one_two_index(k)))


def duality(ns: NamedSymbols, k: int) -> Identity:
    return Identity(f"duality-{k}", f"duality zeta(1,...,1,2) = zeta({k})", ns.zeta(one_two_index(k)), ns.zeta(k))


def li12_reflection(ns: NamedSymbols) -> Identity:
    rho, rho1 = ns.kummer("z"), ns.kummer("1mz")
    if ns.ladic:
        rhs = ns.zeta(3) - (ns.li(3, "1mz") + ns.li(2, "1mz") * rho1 + rho * rho1 ** 2 * F(1, 2))
    else:
        rhs = ns.zeta(3) - (ns.li(3, "1mz") - ns.li(2, "1mz") * rho1 - rho * rho1 ** 2 * F(1, 2))
    return Identity("L12", "Li_{1,2}(z) through values at 1-z", ns.li((1, 2), "z"), rhs)


def li21_reflection(ns: NamedSymbols) -> Identity:
    rho1 = ns.kummer("1mz")
    if ns.ladic:
        rhs = ns.zeta(2) * rho1 + ns.zeta((2, 1)) + ns.li(2, "1mz") * rho1 + ns.li(3, "1mz") * 2
    else:
        rhs = -ns.zeta(2) * rho1 - ns.zeta(3) * 2 - ns.li(2, "1mz") * rho1 + ns.li(3, "1mz") * 2
    return Identity("L21", "Li_{2,1}(z) through values at 1-z", ns.li((2, 1), "z"), rhs)


def cyxy_reflection(ns: NamedSymbols) -> Identity:
    """c_YXY(z) = -zeta(2) c_X(1-z) - 2 zeta(3) + c_XYX(1-z)  (complex side)."""
    _need(ns, Side.COMPLEX)
    rhs = -ns.zeta(2) * ns.cword("X", "1mz") - ns.zeta(3) * 2 + ns.cword("XYX", "1mz")
    return Identity("cYXY", "YXY coefficient of the reflection chain rule", ns.cword("YXY", "z"), rhs)


def cxxy_moebius(ns: NamedSymbols) -> Identity:
    c = lambda w: ns.cword(w, "z")  # noqa: E731
    rhs = -c("XXY") - c("YYY") + c("XYY") + c("YXY")
    if ns.ladic:
        rhs = rhs - (c("XY") * F(1, 2) - c("YY") * F(1, 2) + c("Y") * F(1, 12))
    return Identity("cXXY", "XXY coefficient of the z/(z-1) chain rule", ns.cword("XXY", "w"), rhs)


def li3_moebius(ns: NamedSymbols) -> Identity:
    rest = ns.li(3, "z") + ns.li((1, 1, 1), "z") + ns.li((1, 2), "z") + ns.li((2, 1), "z")
    if ns.ladic:
        rho1 = ns.kummer("1mz")
        rhs = -rest - (ns.li(2, "z") * F(1, 2) + rho1 ** 2 * F(1, 4) + rho1 * F(1, 12))
        return Identity("Li3w", "Li_3(z/(z-1)) through values at z", ns.li(3, "w"), rhs)
    return Identity("Li3w", "Li_3(z/(z-1)) through values at z", -ns.li(3, "w"), rest)


# -- complex side -------------------------------------------------------------

def euler_dilog(ns: NamedSymbols) -> Identity:
    _need(ns, Side.COMPLEX)
    return Identity("euler", "Euler dilogarithm reflection", ns.li(2, "z") + ns.li(2, "1mz"),
                    ns.zeta(2) - ns.log("z") * ns.log("1mz"))


def landen_dilog(ns: NamedSymbols) -> Identity:
    _need(ns, Side.COMPLEX)
    return Identity("landen2", "Landen dilogarithm equation", ns.li(2, "z") + ns.li(2, "w"),
                    -ns.log("1mz") ** 2 * F(1, 2))


def landen_trilog(ns: NamedSymbols) -> Identity:
    """Complex Landen equation; the log term on the right is log(z)."""
    _need(ns, Side.COMPLEX)
    L, M = ns.log("z"), ns.log("1mz")
    rhs = ns.zeta(3) + ns.zeta(2) * M - L * M ** 2 * F(1, 2) + M ** 3 * F(1, 6)
    return Identity("landen3", "Landen trilogarithm equation", ns.li(3, "z") + ns.li(3, "1mz") + ns.li(3, "w"), rhs)


# -- l-adic side --------------------------------------------------------------

def galois_euler_dilog(ns: NamedSymbols) -> Identity:
    _need(ns, Side.LADIC)
    return Identity("euler-l", "l-adic dilogarithm reflection", ns.li(2, "z") + ns.li(2, "1mz"),
                    ns.zeta(2) - ns.rho("z") * ns.rho("1mz"))


def galois_landen_dilog(ns: NamedSymbols) -> Identity:
    _need(ns, Side.LADIC)
    r1 = ns.rho("1mz")
    return Identity("landen2-l", "l-adic Landen dilogarithm equation", ns.li(2, "z") + ns.li(2, "w"),
                    -(r1 ** 2 + r1) * F(1, 2))


def galois_landen_trilog(ns: NamedSymbols, swapped_square: bool = False) -> Identity:
    """l-adic Landen equation.

    The correct quadratic correction is -rho_{1-z}^2/4; ``swapped_square=True`` gives
    the variant with -rho_z^2/4, which is not an identity.
    """
    _need(ns, Side.LADIC)
    r, r1 = ns.rho("z"), ns.rho("1mz")
    quad = r ** 2 if swapped_square else r1 ** 2
    rhs = (ns.zeta(3) - ns.zeta(2) * r1 + r * r1 ** 2 * F(1, 2) - r1 ** 3 * F(1, 6)
           - ns.li(2, "z") * F(1, 2) - r1 * F(1, 12) - quad * F(1, 4))
    return Identity("landen3-l", "l-adic Landen trilogarithm equation",
                    ns.li(3, "z") + ns.li(3, "1mz") + ns.li(3, "w"), rhs)


def character_euler(ns: NamedSymbols) -> Identity:
    _need(ns, Side.LADIC)
    chi = ns.chi()
    return Identity("char-euler", "dilogarithm reflection in character form",
                    ns.chit(2, "z") + ns.chit(2, "1mz") + ns.rho("z") * ns.rho("1mz"), (chi ** 2 - 1) * F(1, 24))


def character_landen2(ns: NamedSymbols) -> Identity:
    _need(ns, Side.LADIC)
    r1, chi = ns.rho("1mz"), ns.chi()
    return Identity("char-landen2", "Landen dilogarithm equation in character form",
                    ns.chit(2, "z") + ns.chit(2, "w"), -r1 * (r1 - chi) * F(1, 2))


def character_landen3(ns: NamedSymbols) -> Identity:
    _need(ns, Side.LADIC)
    r, r1, chi = ns.rho("z"), ns.rho("1mz"), ns.chi()
    rhs = (ns.chit(3, "10") + chi * ns.chit(2, "z") + r * r1 ** 2 - r1 * (chi ** 2 - 1) * F(1, 12)
           - r1 * (chi - r1) * (chi - r1 * 2) * F(1, 6))
    return Identity("char-landen3", "Landen trilogarithm equation in character form",
                    ns.chit(3, "z") + ns.chit(3, "1mz") + ns.chit(3, "w"), rhs)
