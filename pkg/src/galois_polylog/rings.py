"""Coefficient rings.

Three rings are provided: exact rationals (``QQ``), sparse multivariate
polynomials with rational coefficients over a registry of named symbols
(``PolynomialRing``), and complex floating point numbers of configurable
precision (``ComplexField``).  Series code only relies on the small ``Ring``
interface plus the ordinary arithmetic operators of the elements.
"""

from __future__ import annotations

import functools
import itertools
import re
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

import mpmath

Scalar = Union[int, Fraction]


class SymbolKind(str, Enum):
    GENERIC = "generic"
    KUMMER = "kummer"          # rho_x, Kummer characters
    CYCLOTOMIC = "cyclotomic"  # chi
    CHARACTER = "character"    # polylogarithmic characters
    POLYLOG = "polylog"        # Li values at a path
    ZETA = "zeta"
    LOG = "log"
    AXIAL = "axial"            # coefficient of the correction factor exp(aX)
    COORDINATE = "coordinate"  # coordinates of generic series


_registry_serial = itertools.count(1)


@dataclass(frozen=True)
class Symbol:
    name: str
    kind: SymbolKind
    sid: int
    registry: int

    def __repr__(self) -> str:
        return f"Symbol({self.name!r})"


_NAME_OK = re.compile(r"^[^\s*+^/\-0-9][^\s*+^]*$")


class Registry:
    """Append-only table of symbols.  Names are unique within a registry."""

    def __init__(self) -> None:
        self.serial = next(_registry_serial)
        self._symbols: list[Symbol] = []
        self._by_name: dict[str, Symbol] = {}
        self._lock = threading.Lock()

    def symbol(self, name: str, kind: SymbolKind = SymbolKind.GENERIC) -> Symbol:
        """Return the symbol called ``name``, creating it on first use."""
        with self._lock:
            sym = self._by_name.get(name)
            if sym is not None:
                if sym.kind != kind:
                    raise ValueError(f"symbol {name!r} already registered with kind {sym.kind.value}")
                return sym
            if not _NAME_OK.match(name):
                raise ValueError(f"invalid symbol name {name!r}")
            sym = Symbol(name, SymbolKind(kind), len(self._symbols), self.serial)
            self._symbols.append(sym)
            self._by_name[name] = sym
            return sym

    def get(self, name: str) -> Symbol | None:
        return self._by_name.get(name)

    def __getitem__(self, sid: int) -> Symbol:
        return self._symbols[sid]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(list(self._symbols))

    def var(self, name: str, kind: SymbolKind = SymbolKind.GENERIC) -> "MPoly":
        return MPoly.variable(self.symbol(name, kind), self)


# A monomial is a tuple of (symbol id, exponent) pairs sorted by symbol id.
Monomial = tuple


@functools.lru_cache(maxsize=1 << 18)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        sa, ea = a[i]
        sb, eb = b[j]
        if sa == sb:
            out.append((sa, ea + eb))
            i += 1
            j += 1
        elif sa < sb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class MPoly:
    """Sparse polynomial with rational coefficients.

    Instances are immutable.  Two polynomials can only be combined when they
    share the same registry.
    """

    __slots__ = ("registry", "terms", "_hash")

    def __init__(self, registry: Registry, terms: Mapping[Monomial, Fraction] | None = None):
        self.registry = registry
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[m] = c
        self._hash = None

    @classmethod
    def _raw(cls, registry: Registry, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p.registry = registry
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, registry: Registry, value: Scalar) -> "MPoly":
        value = Fraction(value)
        return cls._raw(registry, {(): value} if value else {})

    @classmethod
    def variable(cls, sym: Symbol, registry: Registry) -> "MPoly":
        if sym.registry != registry.serial:
            raise ValueError("symbol registry mismatch")
        return cls._raw(registry, {((sym.sid, 1),): Fraction(1)})

    # -- coercion ----------------------------------------------------------
    def _other(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            if other.registry is not self.registry:
                raise ValueError("symbol registry mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.registry, other)
        return None

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        terms = dict(self.terms)
        for m, c in o.terms.items():
            v = terms.get(m)
            if v is None:
                terms[m] = c
            else:
                v += c
                if v:
                    terms[m] = v
                else:
                    del terms[m]
        return MPoly._raw(self.registry, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.registry, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly._raw(self.registry, {})
            return MPoly._raw(self.registry, {m: c * other for m, c in self.terms.items()})
        o = self._other(other)
        if o is None:
            return NotImplemented
        if len(o.terms) == 1 and () in o.terms:
            return self * o.terms[()]
        if len(self.terms) == 1 and () in self.terms:
            return o * self.terms[()]
        terms: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in o.terms.items():
                m = _mono_mul(ma, mb)
                v = terms.get(m)
                terms[m] = ca * cb if v is None else v + ca * cb
        return MPoly._raw(self.registry, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if not other.is_constant():
                raise ValueError("division by a non-constant polynomial")
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.constant(self.registry, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "MPoly":
        if not self.terms:
            raise ZeroDivisionError("division by zero")
        if not self.is_constant():
            raise ValueError("only nonzero constants are invertible")
        return MPoly.constant(self.registry, 1 / self.terms[()])

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.registry, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.registry is other.registry and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def symbols(self) -> list[Symbol]:
        sids = sorted({s for m in self.terms for s, _ in m})
        return [self.registry[s] for s in sids]

    def coefficient(self, monomial: Iterable[tuple[Symbol, int]]) -> Fraction:
        key = tuple(sorted((s.sid, e) for s, e in monomial if e))
        return self.terms.get(key, Fraction(0))

    def monomials(self) -> Iterator[tuple[tuple[tuple[Symbol, int], ...], Fraction]]:
        for m, c in self.terms.items():
            yield tuple((self.registry[s], e) for s, e in m), c

    def denominators(self) -> list[int]:
        return [c.denominator for c in self.terms.values()]

    def linear_in(self, unknowns: set[int]) -> tuple[dict[int, Fraction], "MPoly"]:
        """Split into ``sum c_s * s + rest`` for symbol ids ``s`` in ``unknowns``.

        Raises ``ValueError`` if some unknown occurs non-linearly.
        """
        lin: dict[int, Fraction] = {}
        rest = {}
        for m, c in self.terms.items():
            hits = [s for s, _ in m if s in unknowns]
            if not hits:
                rest[m] = c
            elif len(m) == 1 and m[0][1] == 1:
                lin[m[0][0]] = c
            else:
                raise ValueError("unknown occurs non-linearly")
        return lin, MPoly._raw(self.registry, rest)

    # -- substitution ------------------------------------------------------
    def substitute(self, mapping: Mapping) -> "MPoly":
        """Replace symbols by polynomials or scalars.

        Keys may be ``Symbol`` objects or symbol names.  Symbols not in the
        mapping are left alone.
        """
        images: dict[int, MPoly] = {}
        for key, val in mapping.items():
            sym = self.registry.get(key) if isinstance(key, str) else key
            if sym is None:
                continue
            if sym.registry != self.registry.serial:
                raise ValueError("symbol registry mismatch")
            if not isinstance(val, MPoly):
                val = MPoly.constant(self.registry, val)
            elif val.registry is not self.registry:
                raise ValueError("symbol registry mismatch")
            images[sym.sid] = val
        if not images:
            return self
        powers: dict[tuple[int, int], MPoly] = {}

        def power(sid: int, e: int) -> MPoly:
            key = (sid, e)
            if key not in powers:
                powers[key] = images[sid] if e == 1 else power(sid, e - 1) * images[sid]
            return powers[key]

        out = MPoly._raw(self.registry, {})
        for m, c in self.terms.items():
            kept = tuple((s, e) for s, e in m if s not in images)
            term = MPoly._raw(self.registry, {kept: c})
            for s, e in m:
                if s in images:
                    term = term * power(s, e)
            out = out + term
        return out

    # -- text --------------------------------------------------------------
    def _sort_key(self, m: Monomial):
        return (-sum(e for _, e in m), tuple((s, -e) for s, e in m))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self._sort_key):
            c = self.terms[m]
            factors = [self.registry[s].name + (f"^{e}" if e > 1 else "") for s, e in m]
            mag = abs(c)
            if not factors:
                body = _fmt_fraction(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_fmt_fraction(mag)] + factors)
            parts.append((c < 0, body))
        neg, body = parts[0]
        text = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str, registry: Registry, kind: SymbolKind = SymbolKind.GENERIC) -> "MPoly":
        """Inverse of ``str``.  Unknown names are registered with ``kind``."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        pieces = re.split(r"\s+([+-])\s+", text)
        signs = ["+"] + pieces[1::2]
        out = cls.constant(registry, 0)
        for sign, term in zip(signs, pieces[0::2]):
            neg = sign == "-"
            if term.startswith("-"):
                neg = not neg
                term = term[1:]
            value = cls.constant(registry, -1 if neg else 1)
            for factor in term.split("*"):
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    value = value * Fraction(factor)
                    continue
                name, _, exp = factor.partition("^")
                sym = registry.get(name) or registry.symbol(name, kind)
                value = value * cls.variable(sym, registry) ** (int(exp) if exp else 1)
            out = out + value
        return out


class Ring:
    """Minimal interface used by the series code."""

    name = "ring"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == 0

    def scale(self, x, q: Fraction):
        return x * q

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        raise NotImplementedError


class RationalField(Ring):
    name = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, MPoly):
            if not x.is_constant():
                raise TypeError("cannot coerce a non-constant polynomial to a rational")
            return x.constant_value()
        return Fraction(x)

    def format(self, x) -> str:
        return _fmt_fraction(Fraction(x))

    def parse(self, text: str):
        return Fraction(text.strip())

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PolynomialRing(Ring):
    """Polynomials over the symbols of one registry."""

    def __init__(self, registry: Registry | None = None):
        self.registry = registry if registry is not None else Registry()
        self.name = f"QQ[registry {self.registry.serial}]"
        self._zero = MPoly.constant(self.registry, 0)
        self._one = MPoly.constant(self.registry, 1)

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def coerce(self, x):
        if isinstance(x, MPoly):
            if x.registry is not self.registry:
                raise ValueError("symbol registry mismatch")
            return x
        if isinstance(x, (int, Fraction)):
            return MPoly.constant(self.registry, x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self.name}")

    def is_zero(self, x) -> bool:
        return not x.terms

    def var(self, name: str, kind: SymbolKind = SymbolKind.GENERIC) -> MPoly:
        return self.registry.var(name, kind)

    def parse(self, text: str):
        return MPoly.parse(text, self.registry)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.registry is self.registry

    def __hash__(self):
        return hash(("poly", self.registry.serial))


class ComplexField(Ring):
    """Complex numbers with ``prec`` bits of binary precision (at least 64)."""

    def __init__(self, prec: int = 128):
        if prec < 64:
            raise ValueError("precision must be at least 64 bits")
        self.prec = prec
        self.ctx = mpmath.MPContext()
        self.ctx.prec = prec
        self.name = f"CC[{prec}]"

    def zero(self):
        return self.ctx.mpc(0)

    def one(self):
        return self.ctx.mpc(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return self.ctx.mpc(self.ctx.mpf(x.numerator) / x.denominator)
        if isinstance(x, MPoly):
            return self.coerce(RationalField().coerce(x))
        return self.ctx.mpc(x)

    def scale(self, x, q: Fraction):
        return x * (self.ctx.mpf(q.numerator) / q.denominator)

    def format(self, x) -> str:
        return self.ctx.nstr(x, self.prec * 3 // 10)

    def parse(self, text: str):
        return self.ctx.mpc(self.ctx.mpmathify(text.replace(" ", "")))

    def __eq__(self, other):
        return isinstance(other, ComplexField) and other.prec == self.prec

    def __hash__(self):
        return hash(("CC", self.prec))
