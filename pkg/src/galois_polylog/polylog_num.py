"""High-precision evaluation of classical and multiple polylogarithms on the real line.

Arguments are restricted to ``|x| <= 0.999``, ``x = -1`` and ``x = 1`` (with a
last index part of at least 2), so no analytic continuation is needed.  For
``|x| < 1`` the series is summed until a certified geometric tail bound drops
below the tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
import numpy as np

from . import identities as ids
from .rings import MPoly, PolynomialRing
from .symbols import NamedSymbols, Side

DEFAULT_PREC = 128
MAX_ABS = 0.999


class DomainError(ValueError):
    """Argument outside the supported real domain."""


@lru_cache(maxsize=8)
def _ctx(prec: int) -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def _check_index(k) -> tuple[int, ...]:
    k = (k,) if isinstance(k, int) else tuple(k)
    if not k or any(not isinstance(i, int) or i < 1 for i in k):
        raise ValueError(f"bad index {k!r}")
    return k


@lru_cache(maxsize=64)
def zeta_value(k: int, prec: int = DEFAULT_PREC):
    """Riemann zeta(k), k >= 2, by Euler-Maclaurin summation."""
    if k < 2:
        raise DomainError("zeta(k) needs k >= 2")
    ctx = _ctx(prec)
    with ctx.workprec(prec + 20):
        n = max(20, prec // 4)
        s = ctx.fsum(ctx.mpf(j) ** -k for j in range(1, n))
        N = ctx.mpf(n)
        s += N ** (1 - k) / (k - 1) + N ** -k / 2
        # Bernoulli correction terms B_{2j}/(2j)! * k(k+1)...(k+2j-2) N^{-k-2j+1}
        rising = ctx.mpf(k)
        for j in range(1, prec // 4):
            term = ctx.bernoulli(2 * j) / ctx.factorial(2 * j) * rising * N ** (-k - 2 * j + 1)
            s += term
            if abs(term) < ctx.mpf(2) ** (-prec - 10):
                break
            rising *= (k + 2 * j - 1) * (k + 2 * j)
    return +s


def _tail_terms(depth: int, last: int, ax: float, tol: float) -> int:
    """Smallest N with a certified tail bound below ``tol`` for |x| = ax < 1.

    The n-th term is bounded by b_n = (1 + log n)^(depth-1) ax^n / n^last;
    for n >= N consecutive bounds shrink by at least q = ax (1 + 1/N), so the
    tail is at most b_{N+1} / (1 - q).
    """
    N = 8
    while True:
        q = ax * (1 + 1 / N)
        if q < 1:
            b = (1 + math.log(N + 1)) ** (depth - 1) * math.exp((N + 1) * math.log(ax)) / (N + 1) ** last
            if b / (1 - q) < tol:
                return N
        N = int(N * 1.25) + 1


def _nested_sum(k: tuple[int, ...], x, N: int, ctx):
    """Sum over 0 < n_1 < ... < n_d <= N of x^{n_d} / prod n_i^{k_i}."""
    d = len(k)
    inner = [ctx.mpf(1)] * (N + 1)  # inner[n] = nested sum over indices < n
    for j in range(d - 1):
        acc = ctx.mpf(0)
        nxt = [ctx.mpf(0)] * (N + 1)
        for n in range(1, N + 1):
            nxt[n] = acc
            acc += inner[n] / ctx.mpf(n) ** k[j]
        inner = nxt
    total = ctx.mpf(0)
    p = ctx.mpf(1)
    for n in range(1, N + 1):
        p *= x
        total += inner[n] * p / ctx.mpf(n) ** k[-1]
    return total


def mpl(k, x, tol: float = 1e-30, prec: int = DEFAULT_PREC):
    """Multiple polylogarithm Li_k(x) = sum_{0<n_1<...<n_d} x^{n_d}/(n_1^{k_1}...n_d^{k_d})."""
    k = _check_index(k)
    ctx = _ctx(prec)
    x = ctx.mpf(x)
    if x == 1:
        if k[-1] < 2:
            raise DomainError("divergent at x = 1: last index part must be at least 2")
        if len(k) == 1:
            return ctx.mpc(zeta_value(k[0], prec))
        return ctx.mpc(multiple_zeta(k))
    if x == -1 and len(k) == 1:
        return polylog(k[0], x, tol, prec)
    ax = float(abs(x))
    if ax > MAX_ABS:
        raise DomainError(f"|x| = {ax} outside the supported domain |x| <= {MAX_ABS}")
    if x == 0:
        return ctx.mpc(0)
    N = _tail_terms(len(k), k[-1], ax, tol)
    with ctx.workprec(prec + 10):
        val = _nested_sum(k, x, N, ctx)
    return ctx.mpc(+val)


def polylog(k: int, x, tol: float = 1e-30, prec: int = DEFAULT_PREC):
    """Classical polylogarithm Li_k(x) for |x| <= 0.999, x = -1 or x = 1 (k >= 2)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("weight must be a positive integer")
    ctx = _ctx(prec)
    x = ctx.mpf(x)
    if x == 1:
        if k < 2:
            raise DomainError("Li_1 diverges at x = 1")
        return ctx.mpc(zeta_value(k, prec))
    if x == -1:
        if k == 1:
            return ctx.mpc(-ctx.log(2))
        return ctx.mpc(-(1 - ctx.mpf(2) ** (1 - k)) * zeta_value(k, prec))
    return mpl((k,), x, tol, prec)


def multiple_zeta(k, n_max: int = 10 ** 6) -> float:
    """zeta(k_1, ..., k_d) with k_d >= 2, to about 1e-9.

    Partial sums up to ``n_max`` are computed in double precision and the
    limit is extrapolated by a least-squares fit in (log N)^i / N^j.
    """
    k = _check_index(k)
    if k[-1] < 2:
        raise DomainError("last index part must be at least 2")
    n = np.arange(1, n_max + 1, dtype=np.float64)
    inner = np.ones(n_max)
    for kj in k[:-1]:
        cs = np.cumsum(inner / n ** kj)
        inner = np.concatenate(([0.0], cs[:-1]))
    partial = np.cumsum(inner / n ** k[-1])
    grid = np.unique(np.geomspace(n_max // 100, n_max, 60).astype(np.int64))
    S = partial[grid - 1]
    N = grid.astype(np.float64)
    cols = [np.ones_like(N)]
    for j in (1, 2):
        for i in range(len(k)):
            cols.append(np.log(N) ** i / N ** j)
    A = np.stack(cols, axis=1)
    coef, *_ = np.linalg.lstsq(A, S, rcond=None)
    return float(coef[0])


# -- numeric checks of the functional equations ---------------------------------

EQUATIONS = ("euler-1.1", "landen-1.2", "landen-1.3", "oiueno-1.4", "L21-3.10", "L12-3.15")
_USES_MOEBIUS = {"landen-1.2", "landen-1.3"}


@dataclass
class NumericRow:
    equation_id: str
    z: float
    residual: float
    tol: float
    terms: dict[str, complex] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.residual < self.tol

    def to_csv_row(self) -> list[str]:
        terms = ";".join(f"{k}={_fmt(v)}" for k, v in self.terms.items())
        return [self.equation_id, repr(self.z), f"{self.residual:.3e}", terms]


def _fmt(v: complex) -> str:
    return f"{v.real:.15g}" if v.imag == 0 else f"{v.real:.15g}{v.imag:+.15g}j"


def evaluate(poly: MPoly, values: dict[str, object], ctx):
    """Evaluate a polynomial at numeric values given by symbol name."""
    total = ctx.mpc(0)
    for mono, c in poly.monomials():
        term = ctx.mpf(c.numerator) / c.denominator
        for s, e in mono:
            term *= values[s.name] ** e
        total += term
    return total


def _point_value(pt: str, z):
    return {"z": z, "1mz": 1 - z, "w": z / (z - 1)}[pt]


def _symbol_values(poly: MPoly, ns: NamedSymbols, z, tol: float, prec: int) -> dict:
    ctx = _ctx(prec)
    out = {}
    for s in poly.symbols():
        meta = ns.meta[s.name]
        if meta[0] == "kummer":
            x = _point_value(meta[1], z)
            if x <= 0:
                raise DomainError(f"log of non-positive argument {x}")
            out[s.name] = ctx.log(x)
        elif meta[0] == "li":
            out[s.name] = mpl(meta[1], _point_value(meta[2], z), tol, prec)
        elif meta[0] == "zeta":
            kk = meta[1]
            out[s.name] = zeta_value(kk[0], prec) if len(kk) == 1 else ctx.mpf(multiple_zeta(kk))
        else:
            raise ValueError(f"no numeric value for {s.name}")
    return out


def _identity(eq_id: str, ns: NamedSymbols, k: int | None) -> ids.Identity:
    if eq_id == "euler-1.1":
        return ids.euler_dilog(ns)
    if eq_id == "landen-1.2":
        return ids.landen_dilog(ns)
    if eq_id == "landen-1.3":
        return ids.landen_trilog(ns)
    if eq_id == "oiueno-1.4":
        if k is None or not 2 <= k <= 5:
            raise ValueError("oiueno-1.4 needs 2 <= k <= 5")
        return ids.oiueno(ns, k)
    if eq_id == "L21-3.10":
        return ids.li21_reflection(ns)
    if eq_id == "L12-3.15":
        return ids.li12_reflection(ns)
    raise ValueError(f"unknown equation id {eq_id!r}; expected one of {', '.join(EQUATIONS)}")


def numeric_check(eq_id: str, z: float, tol: float = 1e-12, k: int | None = None,
                  prec: int = DEFAULT_PREC) -> NumericRow:
    """|LHS - RHS| of a complex functional equation at the real point z."""
    hi = 0.5 if eq_id in _USES_MOEBIUS else 0.95
    if not 0.05 < z <= hi:
        raise DomainError(f"z = {z} outside (0.05, {hi}] for {eq_id}")
    ns = NamedSymbols(PolynomialRing(), Side.COMPLEX)
    ident = _identity(eq_id, ns, k)
    ctx = _ctx(prec)
    zz = ctx.mpf(z)
    values = _symbol_values(ident.difference, ns, zz, min(tol, 1e-20) / 100, prec)
    residual = float(abs(evaluate(ident.difference, values, ctx)))
    label = eq_id if k is None else f"{eq_id}(k={k})"
    return NumericRow(label, float(z), residual, tol, {n: complex(v) for n, v in values.items()})
