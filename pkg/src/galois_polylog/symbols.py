"""Named symbols for associator coefficients on the complex and l-adic sides.

Points are short tags: ``z``, ``1mz`` (1 - z), ``w`` (z/(z-1)), ``1mw``
(1/(1-z)) and the tangential points ``10`` and ``01``.  The l-adic side uses
Kummer cocycles ``rho_*``, polylogarithms ``Lil*`` and zeta values ``zetal*``;
the complex side uses ``log_*``, ``Li*`` and ``zeta*``.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Iterable

from .ncpoly import check_word, is_regular, regular_word, shuffle, word_index
from .rings import MPoly, PolynomialRing, SymbolKind


class Side(str, Enum):
    COMPLEX = "complex"
    LADIC = "ladic"


POINTS = ("z", "1mz", "w", "1mw", "10", "01")
TANGENTIAL = ("10", "01")
COMPLEMENT = {"z": "1mz", "1mz": "z", "w": "1mw", "1mw": "w", "10": "01", "01": "10"}
POINT_TEXT = {"z": "z", "1mz": "1-z", "w": "z/(z-1)", "1mw": "1/(1-z)", "10": "->10", "01": "->01"}
# image of each point under t -> 1 - t
SWAP_Z = {"z": "1mz", "1mz": "z", "10": "10", "01": "01"}


def _index(k) -> tuple[int, ...]:
    k = (k,) if isinstance(k, int) else tuple(k)
    if not k or any(i < 1 or i > 9 for i in k):
        raise ValueError(f"unsupported index {k!r}")
    return k


def _index_text(k: tuple[int, ...]) -> str:
    return "".join(map(str, k))


class NamedSymbols:
    """Symbol table plus the coefficient dictionary of a group-like associator.

    ``coefficient(w, pt)`` gives the coefficient of the word ``w`` in the
    associator along the path to ``pt`` in terms of named symbols: X and Y
    powers through the Kummer/log values, regular words through polylogarithms
    and all other words by the shuffle relation with X.
    """

    def __init__(self, ring: PolynomialRing, side: Side | str):
        self.ring = ring
        self.side = Side(side)
        self.meta: dict[str, tuple] = {}
        self._coeff_cache: dict[tuple[str, str], MPoly] = {}

    # -- basic symbols -------------------------------------------------------
    def _sym(self, name: str, kind: SymbolKind, meta: tuple) -> MPoly:
        self.meta[name] = meta
        return self.ring.var(name, kind)

    @property
    def ladic(self) -> bool:
        return self.side is Side.LADIC

    def kummer(self, pt: str) -> MPoly:
        """rho_pt on the l-adic side, log(pt) on the complex side."""
        if pt not in POINTS:
            raise ValueError(f"unknown point {pt!r}")
        if pt in TANGENTIAL:
            return self.ring.zero()
        if self.ladic:
            return self._sym(f"rho_{pt}", SymbolKind.KUMMER, ("kummer", pt))
        return self._sym(f"log_{pt}", SymbolKind.LOG, ("kummer", pt))

    rho = kummer
    log = kummer

    def cx(self, pt: str) -> MPoly:
        """Coefficient of X in the associator along the path to ``pt``."""
        return -self.kummer(pt) if self.ladic else self.kummer(pt)

    def cy(self, pt: str) -> MPoly:
        return self.cx(COMPLEMENT[pt])

    def li(self, k, pt: str) -> MPoly:
        """(Multiple) polylogarithm at ``pt``; zeta values at the tangential point 10."""
        k = _index(k)
        if all(i == 1 for i in k):
            m = len(k)
            return (-self.cy(pt)) ** m * Fraction(1, factorial(m))
        if pt == "10":
            return self.zeta(k)
        if pt == "01":
            return self.ring.zero()
        prefix = "Lil" if self.ladic else "Li"
        return self._sym(f"{prefix}{_index_text(k)}_{pt}", SymbolKind.POLYLOG, ("li", k, pt))

    def zeta(self, k) -> MPoly:
        k = _index(k)
        if all(i == 1 for i in k):
            return self.ring.zero()
        prefix = "zetal" if self.ladic else "zeta"
        return self._sym(f"{prefix}{_index_text(k)}", SymbolKind.ZETA, ("zeta", k))

    def chi(self) -> MPoly:
        return self._sym("chi", SymbolKind.CYCLOTOMIC, ("chi",))

    def chit(self, m: int, pt: str) -> MPoly:
        """Polylogarithmic character of weight ``m`` at ``pt``; weight 1 is rho of the complement."""
        if m < 1:
            raise ValueError("character weight must be positive")
        if m == 1:
            return self.kummer(COMPLEMENT[pt])
        if pt == "01":
            return self.ring.zero()
        return self._sym(f"chit{m}_{pt}", SymbolKind.CHARACTER, ("chit", m, pt))

    def axial(self) -> MPoly:
        """Coefficient a of the correction factor exp(aX) in the Moebius chain rule."""
        if self.ladic:
            return self._sym("a_0inf", SymbolKind.AXIAL, ("axial",))
        return self._sym("pi_i", SymbolKind.AXIAL, ("axial",))

    def cword(self, w: str, pt: str) -> MPoly:
        """Opaque symbol for the coefficient of ``w`` (used for literal coefficient identities)."""
        check_word(w)
        return self._sym(f"c_{w}@{pt}", SymbolKind.COORDINATE, ("cword", w, pt))

    # -- coefficient dictionary ----------------------------------------------
    def coefficient(self, w: str, pt: str) -> MPoly:
        check_word(w)
        key = (w, pt)
        if key in self._coeff_cache:
            return self._coeff_cache[key]
        if w == "":
            val = self.ring.one()
        elif set(w) == {"X"}:
            val = self.cx(pt) ** len(w) * Fraction(1, factorial(len(w)))
        elif is_regular(w):
            k = word_index(w)
            val = self.li(k, pt) * (-1) ** len(k)
        else:
            # shuffle with X: c_u c_X = sum over insertions of X into u
            u = w[:-1]
            t = len(u) - len(u.rstrip("X"))
            acc = self.coefficient(u, pt) * self.cx(pt)
            for i in range(len(u) - t):
                acc = acc - self.coefficient(u[:i] + "X" + u[i:], pt)
            val = acc * Fraction(1, t + 1)
        self._coeff_cache[key] = val
        return val

    def relabel_map(self, mapping: dict[str, str], symbols: Iterable | None = None) -> dict:
        """Substitution renaming the point of every registered point-dependent symbol."""
        out = {}
        for name, meta in list(self.meta.items()):
            role = meta[0]
            if role == "kummer" and meta[1] in mapping:
                out[name] = self.kummer(mapping[meta[1]])
            elif role == "li" and meta[2] in mapping:
                out[name] = self.li(meta[1], mapping[meta[2]])
            elif role == "chit" and meta[2] in mapping:
                out[name] = self.chit(meta[1], mapping[meta[2]])
        return out

    def relabel(self, poly: MPoly, mapping: dict[str, str]) -> MPoly:
        return poly.substitute(self.relabel_map(mapping))


def word_of(k) -> str:
    return regular_word(_index(k))


__all__ = ["Side", "NamedSymbols", "POINTS", "COMPLEMENT", "POINT_TEXT", "SWAP_Z", "TANGENTIAL", "word_of", "shuffle"]
