"""Polylogarithmic characters.

Conversion between l-adic polylogarithms Li_m and polylogarithmic characters
chit_m at a point (two mutually inverse triangular systems), rewriting
functional equations in character form, and Z_l-integrality checks by
enumerating residues.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import identities as ids
from .rings import MPoly, PolynomialRing
from .report import VerificationReport, make_report
from .symbols import NamedSymbols, Side


def _ladic(ns: NamedSymbols | None) -> NamedSymbols:
    ns = ns or NamedSymbols(PolynomialRing(), Side.LADIC)
    if ns.side is not Side.LADIC:
        raise ValueError("characters live on the l-adic side")
    return ns


def li_from_characters(m: int, pt: str = "z", ns: NamedSymbols | None = None) -> MPoly:
    """``Li_m = (-1)^{m+1} sum_k rho^k/k! * chit_{m-k}/(m-1-k)!`` at ``pt``."""
    if m < 1:
        raise ValueError("weight must be positive")
    ns = _ladic(ns)
    rho = ns.rho(pt)
    total = ns.ring.zero()
    for k in range(m):
        total = total + rho ** k * ns.chit(m - k, pt) * Fraction(1, factorial(k) * factorial(m - 1 - k))
    return total * (-1) ** (m + 1)


def characters_from_li(m: int, pt: str = "z", ns: NamedSymbols | None = None) -> MPoly:
    """``chit_m = (-1)^{m+1} (m-1)! sum_k Li_{m-k} rho^k/k!`` at ``pt``."""
    if m < 1:
        raise ValueError("weight must be positive")
    ns = _ladic(ns)
    rho = ns.rho(pt)
    total = ns.ring.zero()
    for k in range(m):
        total = total + ns.li(m - k, pt) * rho ** k * Fraction(1, factorial(k))
    return total * ((-1) ** (m + 1) * factorial(m - 1))


def default_axioms(ns: NamedSymbols) -> dict:
    """Kummer cocycles along the path to z/(z-1) in terms of those along the path to z.

    ``rho_{1/(1-z)} = -rho_{1-z}`` and ``rho_{z/(z-1)} = rho_z - rho_{1-z} + (chi - 1)/2``.
    """
    ns = _ladic(ns)
    r, r1, chi = ns.rho("z"), ns.rho("1mz"), ns.chi()
    return {ns.rho("1mw").symbols()[0]: -r1,
            ns.rho("w").symbols()[0]: r - r1 + (chi - 1) * Fraction(1, 2)}


def known_values(ns: NamedSymbols) -> dict:
    """Value of the weight 2 character at ->10: chit_2 = (chi^2 - 1)/24."""
    ns = _ladic(ns)
    return {ns.chit(2, "10").symbols()[0]: (ns.chi() ** 2 - 1) * Fraction(1, 24)}


def to_character_form(expr: MPoly, ns: NamedSymbols, axioms: dict | None = None,
                      extra: dict | None = None) -> MPoly:
    """Rewrite an l-adic expression through characters.

    Depth-one polylogarithms become characters at the same point; zeta values
    become characters at ->10 (where rho vanishes).  ``axioms`` (default:
    :func:`default_axioms`) and ``extra`` substitutions are applied after the
    conversion.  Symbols outside the table raise ``ValueError``.
    """
    ns = _ladic(ns)
    mapping = {}
    for s in expr.symbols():
        meta = ns.meta.get(s.name)
        if meta is None:
            raise ValueError(f"unknown symbol {s.name}")
        role = meta[0]
        if role == "li":
            k, pt = meta[1], meta[2]
            if len(k) != 1:
                raise ValueError(f"unknown symbol {s.name}: no character form for depth {len(k)}")
            mapping[s] = li_from_characters(k[0], pt, ns)
        elif role == "zeta":
            k = meta[1]
            if len(k) != 1:
                raise ValueError(f"unknown symbol {s.name}: no character form for depth {len(k)}")
            mapping[s] = li_from_characters(k[0], "10", ns)
        elif role not in ("kummer", "chi", "chit"):
            raise ValueError(f"unknown symbol {s.name}")
    out = expr.substitute(mapping)
    out = out.substitute(default_axioms(ns) if axioms is None else axioms)
    if extra:
        out = out.substitute(extra)
    return out


def solve_for(identity_difference: MPoly, symbol: MPoly) -> MPoly:
    """Value of ``symbol`` forced by ``identity_difference = 0`` (must be linear in it)."""
    sym = symbol.symbols()[0]
    lin, rest = identity_difference.linear_in({sym.sid})
    if sym.sid not in lin:
        raise ValueError(f"{sym.name} does not occur in the identity")
    return -rest * (Fraction(1) / lin[sym.sid])


def character_forms(ns: NamedSymbols | None = None) -> dict[str, tuple[MPoly, ids.Identity]]:
    """Convert the dilogarithm equations and the Landen trilogarithm equation.

    Returns ``name -> (converted difference, target identity)``.
    """
    ns = _ladic(ns)
    known = known_values(ns)
    euler = to_character_form(ids.galois_euler_dilog(ns).difference, ns, extra=known)
    landen2 = to_character_form(ids.galois_landen_dilog(ns).difference, ns, extra=known)
    # the trilogarithm form keeps one weight 2 character: eliminate those at 1-z and z/(z-1)
    elim = {ns.chit(2, "1mz").symbols()[0]: solve_for(euler, ns.chit(2, "1mz")),
            ns.chit(2, "w").symbols()[0]: solve_for(landen2, ns.chit(2, "w"))}
    landen3 = to_character_form(ids.galois_landen_trilog(ns).difference, ns, extra=known).substitute(elim)
    return {
        "euler": (euler, ids.character_euler(ns)),
        "landen2": (landen2, ids.character_landen2(ns)),
        "landen3": (landen3, ids.character_landen3(ns)),
    }


def verify_dilog_forms(ns: NamedSymbols | None = None) -> VerificationReport:
    from .associator import proportional_residual

    ns = _ladic(ns)
    forms = character_forms(ns)
    residuals = {k: proportional_residual(v[0], v[1].difference) for k, v in forms.items()}
    total = sum((r for r in residuals.values()), ns.ring.zero())
    rep = make_report("dilog-forms", "character forms of the l-adic dilogarithm and Landen equations",
                      total if any(not r.is_zero() for r in residuals.values()) else 0)
    labels = {"euler": "dilogarithm reflection", "landen2": "Landen dilogarithm equation",
              "landen3": "Landen trilogarithm equation"}
    for k, r in residuals.items():
        rep.add(f"{labels[k]} rewritten through characters", forms[k][1].ref, r)
    return rep


# -- integrality ----------------------------------------------------------------

def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


def _valuation(n: int, ell: int) -> int:
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


@dataclass
class IntegralityConstraint:
    """Residue constraints for the symbols: ``units`` range over Z_l^x (odd when l = 2)."""

    ell: int
    units: set[str] = field(default_factory=lambda: {"chi"})

    def __post_init__(self):
        if not _is_prime(self.ell):
            raise ValueError(f"{self.ell} is not a prime")


@dataclass
class IntegralityResult:
    ok: bool
    witness: dict[str, int] | None
    modulus: int
    cases: int

    def __bool__(self) -> bool:
        return self.ok


def integrality_check(expr: MPoly, constraint: IntegralityConstraint) -> IntegralityResult:
    """Decide whether ``expr`` takes Z_l values on Z_l points satisfying ``constraint``.

    With ``e`` the largest l-valuation of a denominator, all residues modulo
    ``l^(e + ceil(log_l deg) + 1)`` are tried.
    """
    ell = constraint.ell
    e = max((_valuation(d, ell) for d in expr.denominators()), default=0)
    if e == 0:
        return IntegralityResult(True, None, 1, 0)
    deg = max(expr.degree(), 1)
    margin = 0
    while ell ** margin < deg:
        margin += 1
    modulus = ell ** (e + margin + 1)
    syms = expr.symbols()
    ranges = []
    for s in syms:
        if s.name in constraint.units:
            ranges.append([r for r in range(modulus) if r % ell])
        else:
            ranges.append(range(modulus))
    cases = 0
    for values in itertools.product(*ranges):
        cases += 1
        val = Fraction(0)
        for mono, c in expr.monomials():
            term = c
            for s, k in mono:
                term *= values[syms.index(s)] ** k
            val += term
        if val.denominator % ell == 0:
            return IntegralityResult(False, {s.name: v for s, v in zip(syms, values)}, modulus, cases)
    return IntegralityResult(True, None, modulus, cases)


CHARACTER_EQUATIONS = {"4.5": "euler", "4.6": "landen2", "4.7": "landen3"}


def rhs_terms(which: str, ns: NamedSymbols | None = None) -> list[MPoly]:
    """Right-hand side summands of a character-form equation, as displayed."""
    ns = _ladic(ns)
    r, r1, chi = ns.rho("z"), ns.rho("1mz"), ns.chi()
    if which == "euler":
        return [(chi ** 2 - 1) * Fraction(1, 24)]
    if which == "landen2":
        return [-r1 * (r1 - chi) * Fraction(1, 2)]
    if which == "landen3":
        return [ns.chit(3, "10"), chi * ns.chit(2, "z"), r * r1 ** 2,
                -r1 * (chi ** 2 - 1) * Fraction(1, 12), -r1 * (chi - r1) * (chi - r1 * 2) * Fraction(1, 6)]
    raise ValueError(f"unknown equation {which!r}")


@dataclass
class IntegralityRow:
    term: str
    ell: int
    modulus: int
    cases: int
    status: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"term": self.term, "ell": self.ell, "modulus": self.modulus,
                "cases-checked": self.cases, "status": self.status, "witness": self.witness}


def integrality_table(eq: str, ell: int) -> list[IntegralityRow]:
    """Check every right-hand term of a character-form equation (``eq`` in 4.5, 4.6, 4.7)."""
    if eq not in CHARACTER_EQUATIONS:
        raise ValueError(f"unknown equation {eq!r}")
    ns = _ladic(None)
    which = CHARACTER_EQUATIONS[eq]
    target = {"euler": ids.character_euler, "landen2": ids.character_landen2, "landen3": ids.character_landen3}[which](ns)
    terms = rhs_terms(which, ns)
    if sum(terms, ns.ring.zero()) != target.rhs:
        raise AssertionError("displayed terms do not add up to the right-hand side")
    con = IntegralityConstraint(ell)
    rows = []
    for t in terms:
        res = integrality_check(t, con)
        rows.append(IntegralityRow(str(t), ell, res.modulus, res.cases, "integral" if res.ok else "NOT integral", res.witness))
    return rows
