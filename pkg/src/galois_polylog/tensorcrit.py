"""Tensor criterion, the weight 3 polylog-BCH polynomial and the Landen assembly.

The unit group of ``K[t, 1/t, 1/(1-t)]`` modulo constants other than -1 is
written additively with generators ``a = t``, ``b = t - 1`` and ``c = -1``.
The Landen trilogarithm equation is then assembled from the three summands
``P3(li(f_i(z)), -li(boundary_i))`` on the complex side (numerically) and on
the l-adic side (symbolically, with an error term computed from the
Campbell-Hausdorff element).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import charconv
from . import identities as ids
from .associator import proportional_residual
from .freelie import LieElement, phi3, z_series
from .polylog_num import DomainError, _ctx, polylog
from .report import VerificationReport, make_report
from .rings import MPoly, PolynomialRing, SymbolKind
from .symbols import COMPLEMENT, NamedSymbols, Side

GENERATORS = ("a", "b", "c")
TORSION = {"c": 2}  # -1 has order 2


# -- tensors ------------------------------------------------------------------

@dataclass(frozen=True)
class UnitGroupElement:
    """Integer exponents of t, t - 1 and -1, written additively."""

    a: int = 0
    b: int = 0
    c: int = 0

    def __add__(self, other: "UnitGroupElement") -> "UnitGroupElement":
        return UnitGroupElement(self.a + other.a, self.b + other.b, self.c + other.c)

    def __neg__(self) -> "UnitGroupElement":
        return UnitGroupElement(-self.a, -self.b, -self.c)

    def __sub__(self, other: "UnitGroupElement") -> "UnitGroupElement":
        return self + (-other)

    def items(self):
        return ((g, getattr(self, g)) for g in GENERATORS if getattr(self, g))

    def __str__(self) -> str:
        return _lin_text(dict(self.items())) or "0"


A = UnitGroupElement(1, 0, 0)
B = UnitGroupElement(0, 1, 0)
C = UnitGroupElement(0, 0, 1)


def _lin_text(d: dict) -> str:
    out = ""
    for g, n in d.items():
        sign = "-" if n < 0 else ("+" if out else "")
        out += f"{sign}{'' if abs(n) == 1 else abs(n)}{g}"
    return out


class AbTensor:
    """Element of F (x) (F ^ F) for F free on a, b, c, in normal form.

    Basis tensors ``g (x) (h ^ k)`` with ``h < k`` in the order a < b < c.
    ``reduce(modulus)`` reduces coefficients of basis tensors involving ``c``
    modulo ``modulus`` (2 models -1 as 2-torsion; 1 discards torsion).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[str, str, str], int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, g: str, h: str, k: str) -> "AbTensor":
        if h == k:
            return cls()
        if GENERATORS.index(h) > GENERATORS.index(k):
            return cls({(g, k, h): -1})
        return cls({(g, h, k): 1})

    @classmethod
    def tensor(cls, x: UnitGroupElement, y: UnitGroupElement, z: UnitGroupElement) -> "AbTensor":
        """x (x) (y ^ z), expanded multilinearly."""
        out = cls()
        for (g, m), (h, n), (k, p) in itertools.product(x.items(), y.items(), z.items()):
            out = out + cls.basis(g, h, k).scale(m * n * p)
        return out

    def __add__(self, other: "AbTensor") -> "AbTensor":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AbTensor(out)

    def __neg__(self) -> "AbTensor":
        return self.scale(-1)

    def __sub__(self, other: "AbTensor") -> "AbTensor":
        return self + (-other)

    def scale(self, n: int) -> "AbTensor":
        return AbTensor({k: v * n for k, v in self.terms.items()})

    def reduce(self, modulus: int) -> "AbTensor":
        out = {}
        for key, v in self.terms.items():
            out[key] = v % modulus if "c" in key else v
        return AbTensor(out)

    def modulo_torsion(self) -> "AbTensor":
        return self.reduce(1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, AbTensor) and (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (g, h, k) in sorted(self.terms, key=lambda t: [GENERATORS.index(x) for x in t]):
            v = self.terms[(g, h, k)]
            coef = "" if abs(v) == 1 else f"{abs(v)}*"
            parts.append(("- " if v < 0 else "+ ") + f"{coef}{g}(x)({h}^{k})")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__


# f and f - 1 for f = t, 1 - t, t/(t - 1)
LANDEN_FUNCTIONS = (
    ("t", A, B),
    ("1-t", B + C, A + C),
    ("t/(t-1)", A - B, -B),
)


def five_term_expression() -> AbTensor:
    """b(x)(c^a) + b(x)(b^c) + c(x)(a^b) + c(x)(a^c) + c(x)(b^c)."""
    T = AbTensor.tensor
    return T(B, C, A) + T(B, B, C) + T(C, A, B) + T(C, A, C) + T(C, B, C)


@dataclass
class TensorCriterionResult:
    ok: bool
    summands: list[tuple[str, AbTensor]]
    free_sum: AbTensor
    five_term: AbTensor
    five_term_matches: bool
    reduced: AbTensor

    def __bool__(self) -> bool:
        return self.ok

    def trace(self) -> str:
        lines = [f"f = {name}: f(x)(f^(f-1)) = {t}" for name, t in self.summands]
        lines.append(f"sum = {self.free_sum}")
        lines.append(f"five-term expression = {self.five_term} "
                     f"({'agrees' if self.five_term_matches else 'DISAGREES'} with the sum modulo 2c)")
        lines.append(f"modulo torsion: {self.reduced}")
        return "\n".join(lines)


def verify_tensor_criterion() -> TensorCriterionResult:
    """Sum of f (x) (f ^ (f - 1)) over the three Landen arguments.

    The sum agrees with the five-term expression once ``c = -1`` is treated
    as 2-torsion, and every basis tensor in it involves ``c``, so it vanishes
    modulo torsion.
    """
    summands = [(name, AbTensor.tensor(f, f, g)) for name, f, g in LANDEN_FUNCTIONS]
    total = sum((t for _, t in summands), AbTensor())
    five = five_term_expression()
    matches = (total - five).reduce(TORSION["c"]).is_zero()
    reduced = total.modulo_torsion()
    return TensorCriterionResult(matches and reduced.is_zero() and five.modulo_torsion().is_zero(),
                                 summands, total, five, matches, reduced)


def tensor_criterion_report() -> VerificationReport:
    res = verify_tensor_criterion()
    rep = make_report("tensor-criterion", "tensor criterion for the Landen trilogarithm equation", str(res.reduced))
    rep.add("sum minus five-term expression, -1 as 2-torsion", "five-term identity",
            str((res.free_sum - res.five_term).reduce(2)))
    rep.add("five-term expression modulo torsion", "five-term identity", str(res.five_term.modulo_torsion()))
    return rep


# -- polylog-BCH polynomial -------------------------------------------------------

@dataclass(frozen=True)
class LiCoefficientVector:
    """Entries (a0, a1, a2, a3) of a graded polylogarithm list."""

    entries: tuple
    side: Side

    def __post_init__(self):
        if len(self.entries) != 4:
            raise ValueError("a coefficient list has exactly 4 entries")

    def __getitem__(self, j: int):
        return self.entries[j]

    def __neg__(self) -> "LiCoefficientVector":
        return LiCoefficientVector(tuple(-x for x in self.entries), self.side)


def _q(x, q: Fraction):
    if isinstance(x, MPoly):
        return x * q
    return x * q.numerator / q.denominator


def p3(A, B):
    """a3 + b3 + (a0 b2 - b0 a2)/2 + (a0^2 b1 - a0 a1 b0 - a0 b0 b1 + a1 b0^2)/12."""
    a0, a1, a2, a3 = A[0], A[1], A[2], A[3]
    b0, b1, b2, b3 = B[0], B[1], B[2], B[3]
    return (a3 + b3 + _q(a0 * b2 - b0 * a2, Fraction(1, 2))
            + _q(a0 * a0 * b1 - a0 * a1 * b0 - a0 * b0 * b1 + a1 * b0 * b0, Fraction(1, 12)))


def _u(ns: NamedSymbols) -> MPoly:
    """The symbol 1/(2 pi i)."""
    ns.meta["u_2pii"] = ("const",)
    return ns.ring.var("u_2pii", SymbolKind.GENERIC)


def li_complex(j: int, pt: str, ns: NamedSymbols) -> MPoly:
    """Graded complex polylogarithm li_j at ``pt``, written with u = 1/(2 pi i)."""
    if ns.side is not Side.COMPLEX:
        raise ValueError("li_complex needs complex symbols")
    u = _u(ns)
    L0, L1 = ns.log(pt), ns.log(COMPLEMENT[pt])
    if j == 0:
        return -u * L0
    if j == 1:
        return -u * L1
    if j == 2:
        # 1/(4 pi^2) = -u^2
        return -u ** 2 * (ns.li(2, pt) + L0 * L1 * Fraction(1, 2))
    if j == 3:
        return u ** 3 * (ns.li(3, pt) - L0 * ns.li(2, pt) * Fraction(1, 2) - L0 ** 2 * L1 * Fraction(1, 12))
    raise ValueError("li_j is only tabulated for j <= 3")


def li_complex_numeric(j: int, log0, log1, li2, li3, ctx):
    u = 1 / (2 * ctx.pi * ctx.j)
    if j == 0:
        return -u * log0
    if j == 1:
        return -u * log1
    if j == 2:
        return (li2 + log0 * log1 / 2) / (4 * ctx.pi ** 2)
    if j == 3:
        return u ** 3 * (li3 - log0 * li2 / 2 - log0 ** 2 * log1 / 12)
    raise ValueError("li_j is only tabulated for j <= 3")


def li_ladic(j: int, pt: str, ns: NamedSymbols) -> MPoly:
    """Graded l-adic polylogarithm at ``pt`` through Kummer cocycles and characters."""
    if ns.side is not Side.LADIC:
        raise ValueError("li_ladic needs l-adic symbols")
    r, r1 = ns.rho(pt), ns.rho(COMPLEMENT[pt])
    if j == 0:
        return r
    if j == 1:
        return r1
    if j == 2:
        return -ns.chit(2, pt) - r * r1 * Fraction(1, 2)
    if j == 3:
        return (ns.chit(3, pt) * Fraction(1, 2) + r * ns.chit(2, pt) * Fraction(1, 2)
                + r ** 2 * r1 * Fraction(1, 12))
    raise ValueError("l i_j is only tabulated for j <= 3")


def li_vector(pt: str, ns: NamedSymbols) -> LiCoefficientVector:
    f = li_ladic if ns.side is Side.LADIC else li_complex
    return LiCoefficientVector(tuple(f(j, pt, ns) for j in range(4)), ns.side)


LANDEN_POINTS = ("z", "1mz", "w")


def boundary(i: int, ns: NamedSymbols) -> LiCoefficientVector:
    """Negated graded polylogarithms of the i-th boundary path (i = 1, 2, 3)."""
    zero = ns.ring.zero()
    if i == 1:
        vec = (zero, zero, zero, zero)
    elif i == 2:
        if ns.side is Side.LADIC:
            vec = (zero, zero, ns.chit(2, "10"), -ns.chit(3, "10") * Fraction(1, 2))
        else:
            u = _u(ns)
            vec = (zero, zero, u ** 2 * ns.zeta(2), -u ** 3 * ns.zeta(3))
    elif i == 3:
        half = ns.ring.one() * Fraction(1, 2)
        vec = ((1 - ns.chi()) * Fraction(1, 2) if ns.side is Side.LADIC else half, zero, zero, zero)
    else:
        raise ValueError("boundary index must be 1, 2 or 3")
    return LiCoefficientVector(vec, ns.side)


def landen_terms(ns: NamedSymbols) -> list[MPoly]:
    """The three weight 3 summands.

    The complex side pairs (point list, boundary); the l-adic side pairs
    (boundary, point list).
    """
    out = []
    for i, pt in enumerate(LANDEN_POINTS, start=1):
        li, bd = li_vector(pt, ns), boundary(i, ns)
        out.append(p3(li, bd) if ns.side is Side.COMPLEX else p3(bd, li))
    return out


# -- complex pipeline ---------------------------------------------------------------

@dataclass
class PipelineValue:
    z: float
    terms: tuple
    residual: float


def pipeline_complex(z, prec: int = 128) -> PipelineValue:
    """|sum of the three P3 terms| at a real 0 < z <= 1/2.

    Branches: log z and log(1 - z) are real, log(z/(z-1)) = log(z/(1-z)) + i pi
    and log(1/(1-z)) = -log(1-z).
    """
    ctx = _ctx(prec)
    z = ctx.mpf(z)
    if not 0 < z <= 0.5:
        raise DomainError(f"z = {z} outside (0, 1/2]")
    w = z / (z - 1)
    lz, l1 = ctx.log(z), ctx.log(1 - z)
    data = {
        "z": (lz, l1, polylog(2, z, prec=prec), polylog(3, z, prec=prec)),
        "1mz": (l1, lz, polylog(2, 1 - z, prec=prec), polylog(3, 1 - z, prec=prec)),
        "w": (ctx.log(z / (1 - z)) + ctx.pi * ctx.j, -l1, polylog(2, w, prec=prec), polylog(3, w, prec=prec)),
    }
    u = 1 / (2 * ctx.pi * ctx.j)
    bd = {
        1: (0, 0, 0, 0),
        2: (0, 0, -polylog(2, 1, prec=prec) / (4 * ctx.pi ** 2), -polylog(3, 1, prec=prec) * u ** 3),
        3: (ctx.mpf(1) / 2, 0, 0, 0),
    }
    terms = []
    for i, pt in enumerate(LANDEN_POINTS, start=1):
        li = tuple(li_complex_numeric(j, *data[pt], ctx) for j in range(4))
        terms.append(p3(li, bd[i]))
    return PipelineValue(float(z), tuple(complex(t) for t in terms), float(abs(ctx.fsum(terms))))


# -- l-adic pipeline ----------------------------------------------------------------

def _li2_symbol(ns: NamedSymbols) -> MPoly:
    ns.meta["elli2_z"] = ("opaque",)
    return ns.ring.var("elli2_z", SymbolKind.POLYLOG)


def error_term_summands(ns: NamedSymbols | None = None) -> list[MPoly]:
    """phi3 of rho_z X + rho_{1-z} Y + li2 [X,Y] under X,Y -> (X,Y), (Y,X), (X,Z).

    ``li2`` is left as the opaque symbol ``elli2_z``.
    """
    ns = ns or NamedSymbols(PolynomialRing(), Side.LADIC)
    ring = ns.ring
    x = LieElement.generator("X", ring, 3)
    y = LieElement.generator("Y", ring, 3)
    Z = z_series(3, ring)
    L = LieElement(ring, 3, {"X": ns.rho("z"), "Y": ns.rho("1mz"), "XY": _li2_symbol(ns)})
    return [phi3(L.substitute(ix, iy)) for ix, iy in ((x, y), (y, x), (x, Z))]


def error_term(ns: NamedSymbols | None = None) -> MPoly:
    """Error term with li2(z) = -chit_2^z - rho_z rho_{1-z}/2 substituted."""
    ns = ns or NamedSymbols(PolynomialRing(), Side.LADIC)
    total = sum(error_term_summands(ns), ns.ring.zero())
    return total.substitute({_li2_symbol(ns).symbols()[0]: li_ladic(2, "z", ns)})


def stated_error_term(ns: NamedSymbols) -> MPoly:
    r, r1 = ns.rho("z"), ns.rho("1mz")
    return -r1 * Fraction(1, 12) + ns.chit(2, "z") * Fraction(1, 2) + r * r1 * Fraction(1, 4)


def verify_error_term(ns: NamedSymbols | None = None) -> VerificationReport:
    ns = ns or NamedSymbols(PolynomialRing(), Side.LADIC)
    parts = error_term_summands(ns)
    rep = make_report("error-term", "l-adic error term of the Landen assembly", error_term(ns) - stated_error_term(ns))
    rep.add("identity summand vanishes", "error term proof", parts[0])
    rep.add("swap summand vanishes", "error term proof", parts[1])
    expected = -ns.rho("1mz") * Fraction(1, 12) - _li2_symbol(ns) * Fraction(1, 2)
    rep.add("(X,Z) summand", "error term proof", parts[2] - expected)
    return rep


def displayed_ladic_terms(ns: NamedSymbols) -> list[MPoly]:
    """The three l-adic summands written out term by term, as displayed."""
    r, r1, chi = ns.rho("z"), ns.rho("1mz"), ns.chi()
    rw, r1w = ns.rho("w"), ns.rho("1mw")
    c2, c3 = ns.chit, ns.chit
    h = Fraction(1, 2)
    t1 = c3(3, "z") * h + r * c2(2, "z") * h + r ** 2 * r1 * Fraction(1, 12)
    t2 = (c3(3, "1mz") * h + r1 * c2(2, "1mz") * h + r1 ** 2 * r * Fraction(1, 12)
          - c3(3, "10") * h - r1 * c2(2, "10") * h)
    a = (1 - chi) * h
    t3 = (c3(3, "w") * h + rw * c2(2, "w") * h + rw ** 2 * r1w * Fraction(1, 12)
          + a * h * (-c2(2, "w") - rw * r1w * h)
          + a ** 2 * r1w * Fraction(1, 12) - a * rw * r1w * Fraction(1, 12))
    return [t1, t2, t3]


def _eliminations(ns: NamedSymbols) -> dict:
    """Weight 2 characters at 1 - z and z/(z-1) through the dilogarithm character forms."""
    euler = ids.character_euler(ns).difference
    landen2 = ids.character_landen2(ns).difference
    return {ns.chit(2, "1mz").symbols()[0]: charconv.solve_for(euler, ns.chit(2, "1mz")),
            ns.chit(2, "w").symbols()[0]: charconv.solve_for(landen2, ns.chit(2, "w"))}


def ladic_assembly(ns: NamedSymbols, axioms: dict | None = None) -> MPoly:
    """sum of the three summands minus the error term, rewritten through base symbols."""
    total = sum(landen_terms(ns), ns.ring.zero()) - error_term(ns)
    if axioms is None:
        axioms = charconv.default_axioms(ns)
    total = total.substitute(axioms)
    total = total.substitute(_eliminations(ns))
    return total.substitute(charconv.known_values(ns))


def pipeline_ladic(axioms: dict | None = None, ns: NamedSymbols | None = None) -> VerificationReport:
    """Assemble the l-adic Landen equation and compare with its character form.

    ``axioms`` rewrites the Kummer cocycles at z/(z-1) and 1/(1-z); ``None``
    uses :func:`charconv.default_axioms`, ``{}`` applies none.
    """
    ns = ns or NamedSymbols(PolynomialRing(), Side.LADIC)
    target = ids.character_landen3(ns)
    derived = ladic_assembly(ns, axioms)
    residual = proportional_residual(derived, target.difference)
    rep = make_report("pipeline-ladic", "l-adic Landen equation from the weight 3 assembly", residual)
    for i, (got, shown) in enumerate(zip(landen_terms(ns), displayed_ladic_terms(ns)), start=1):
        rep.add(f"summand {i} against its displayed expansion", "weight 3 summands", got - shown)
    rep.add("error term", "l-adic error term", error_term(ns) - stated_error_term(ns))
    converted = charconv.character_forms(ns)["landen3"][0]
    rep.add("character form of the l-adic Landen equation matches the assembly", "character conversion",
            proportional_residual(converted, derived))
    return rep


def axiom_sensitive_monomials(rep: VerificationReport, ns: NamedSymbols) -> list[str]:
    """Monomials of a failed residual that involve cocycles at z/(z-1) or 1/(1-z)."""
    poly = ns.ring.parse(rep.residual)
    names = {"rho_w", "rho_1mw"}
    return [str(MPoly(poly.registry, {m: c})) for m, c in poly.terms.items()
            if any(poly.registry[sid].name in names for sid, _ in m)]


def pipeline_complex_report(zs, tol: float = 1e-12) -> tuple[VerificationReport, list[PipelineValue]]:
    """Numeric complex assembly at each z; the report carries the worst residual."""
    vals = [pipeline_complex(z) for z in zs]
    worst = max(v.residual for v in vals)
    rep = make_report("pipeline-complex", "complex Landen equation from the weight 3 assembly", f"{worst:.3e}")
    rep.tol = tol
    return rep, vals
