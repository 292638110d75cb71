"""Free Lie algebra on X, Y with the Lyndon basis.

A Lyndon word ``w`` stands for the bracket obtained from its standard
factorization ``w = uv`` (``v`` the longest proper Lyndon suffix), so that
``XY -> [X, Y]`` and ``XYY -> [[X, Y], Y]``.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterator, Mapping

from .ncpoly import NCSeries, check_word, word_key
from .rings import QQ, PolynomialRing, Ring, SymbolKind


class NotLieError(ValueError):
    """Raised when a series is not a Lie element.  ``witness`` is a word with a nonzero residual."""

    def __init__(self, witness: str, residual):
        super().__init__(f"series is not a Lie element (residual at word {witness!r})")
        self.witness = witness
        self.residual = residual


def is_lyndon(w: str) -> bool:
    check_word(w)
    if not w:
        return False
    return all(w < w[i:] for i in range(1, len(w)))


def _duval(n: int, alphabet: str = "XY") -> Iterator[str]:
    # Duval's algorithm: all Lyndon words of length <= n in lexicographic order.
    k = len(alphabet)
    w = [-1]
    while w:
        w[-1] += 1
        yield "".join(alphabet[i] for i in w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


@functools.lru_cache(maxsize=None)
def lyndon_words(n: int) -> tuple[str, ...]:
    """Lyndon words of length at most ``n``, ordered by length then lexicographically."""
    if n < 1:
        return ()
    return tuple(sorted(_duval(n), key=word_key))


def lyndon_words_of_degree(n: int) -> tuple[str, ...]:
    return tuple(w for w in lyndon_words(n) if len(w) == n)


@functools.lru_cache(maxsize=None)
def standard_factorization(w: str) -> tuple[str, str]:
    if len(w) < 2 or not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word of length >= 2")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable")


@functools.lru_cache(maxsize=None)
def bracket_polynomial(w: str) -> tuple[tuple[str, int], ...]:
    """Expansion of the Lyndon bracket ``P_w`` as ``((word, integer), ...)``."""
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    pu, pv = bracket_polynomial(u), bracket_polynomial(v)
    acc: dict[str, int] = {}
    for a, ca in pu:
        for b, cb in pv:
            acc[a + b] = acc.get(a + b, 0) + ca * cb
            acc[b + a] = acc.get(b + a, 0) - ca * cb
    return tuple(sorted(((x, c) for x, c in acc.items() if c), key=lambda t: word_key(t[0])))


def bracket_string(w: str) -> str:
    if len(w) == 1:
        return w
    u, v = standard_factorization(w)
    return f"[{bracket_string(u)},{bracket_string(v)}]"


class LieElement:
    """Finite combination of Lyndon basis brackets, truncated above ``trunc``."""

    __slots__ = ("ring", "trunc", "coeffs")

    def __init__(self, ring: Ring, trunc: int, coeffs: Mapping[str, object] | None = None):
        self.ring = ring
        self.trunc = trunc
        self.coeffs: dict[str, object] = {}
        for w, c in (coeffs or {}).items():
            if not is_lyndon(w):
                raise ValueError(f"{w!r} is not a Lyndon word")
            if len(w) > trunc:
                raise ValueError(f"word {w!r} exceeds truncation degree {trunc}")
            c = ring.coerce(c)
            if not ring.is_zero(c):
                self.coeffs[w] = c

    @classmethod
    def zero(cls, ring: Ring = QQ, trunc: int = 6) -> "LieElement":
        return cls(ring, trunc)

    @classmethod
    def generator(cls, a: str, ring: Ring = QQ, trunc: int = 6) -> "LieElement":
        return cls(ring, trunc, {a: ring.one()})

    def coeff(self, w: str):
        return self.coeffs.get(w, self.ring.zero())

    def _compatible(self, other: "LieElement") -> None:
        if other.trunc != self.trunc:
            raise ValueError("truncation mismatch")
        if other.ring != self.ring:
            raise ValueError("coefficient ring mismatch")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._compatible(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return LieElement(self.ring, self.trunc, out)

    def __neg__(self) -> "LieElement":
        return LieElement(self.ring, self.trunc, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scale(self, c) -> "LieElement":
        if isinstance(c, (int, Fraction)):
            return LieElement(self.ring, self.trunc, {w: self.ring.scale(v, Fraction(c)) for w, v in self.coeffs.items()})
        c = self.ring.coerce(c)
        return LieElement(self.ring, self.trunc, {w: v * c for w, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.trunc == other.trunc and self.ring == other.ring and not (self - other).coeffs

    def degree_part(self, n: int) -> "LieElement":
        return LieElement(self.ring, self.trunc, {w: c for w, c in self.coeffs.items() if len(w) == n})

    def truncate(self, n: int) -> "LieElement":
        return LieElement(self.ring, n, {w: c for w, c in self.coeffs.items() if len(w) <= n})

    def to_series(self) -> NCSeries:
        return lie_to_series(self)

    def bracket(self, other: "LieElement") -> "LieElement":
        return bracket(self, other)

    def substitute(self, image_x: "LieElement", image_y: "LieElement") -> "LieElement":
        return lie_substitute(self, image_x, image_y)

    def __repr__(self) -> str:
        items = sorted(self.coeffs, key=word_key)
        body = " + ".join(f"({self.ring.format(self.coeffs[w])})*{bracket_string(w)}" for w in items)
        return f"LieElement({body or '0'}, trunc={self.trunc})"

    def to_text(self) -> str:
        lines = [f"# truncation {self.trunc}"]
        for w in sorted(self.coeffs, key=word_key):
            lines.append(f"{w}\t{self.ring.format(self.coeffs[w])}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, ring: Ring = QQ, trunc: int | None = None) -> "LieElement":
        coeffs = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "truncation" and trunc is None:
                    trunc = int(parts[1])
                continue
            w, _, c = line.partition("\t")
            if not c:
                raise ValueError(f"malformed Lie line: {line!r}")
            coeffs[w.strip()] = ring.parse(c)
        if trunc is None:
            trunc = max((len(w) for w in coeffs), default=1)
        return cls(ring, trunc, coeffs)


def lie_to_series(L: LieElement) -> NCSeries:
    out: dict[str, object] = {}
    for w, c in L.coeffs.items():
        for v, m in bracket_polynomial(w):
            t = L.ring.scale(c, Fraction(m))
            out[v] = out[v] + t if v in out else t
    return NCSeries(L.ring, L.trunc, out)


def series_to_lie(f: NCSeries) -> LieElement:
    """Inverse of :func:`lie_to_series`.  Raises :class:`NotLieError` if ``f`` is not Lie."""
    ring = f.ring
    if not ring.is_zero(f.constant_term()):
        raise NotLieError("", f.constant_term())
    residual = dict(f.coeffs)
    coeffs: dict[str, object] = {}
    for u in lyndon_words(f.trunc):
        t = residual.get(u)
        if t is None or ring.is_zero(t):
            continue
        coeffs[u] = t
        for v, m in bracket_polynomial(u):
            r = residual.get(v, ring.zero()) - ring.scale(t, Fraction(m))
            if ring.is_zero(r):
                residual.pop(v, None)
            else:
                residual[v] = r
    leftover = [w for w, c in residual.items() if not ring.is_zero(c)]
    if leftover:
        w = min(leftover, key=word_key)
        raise NotLieError(w, residual[w])
    return LieElement(ring, f.trunc, coeffs)


def is_lie(f: NCSeries) -> bool:
    try:
        series_to_lie(f)
    except NotLieError:
        return False
    return True


def bracket(A: LieElement, B: LieElement) -> LieElement:
    A._compatible(B)
    a, b = lie_to_series(A), lie_to_series(B)
    return series_to_lie(a * b - b * a)


def lie_substitute(L: LieElement, image_x: LieElement, image_y: LieElement) -> LieElement:
    """Lie algebra endomorphism X -> image_x, Y -> image_y, applied bracket by bracket."""
    L._compatible(image_x)
    L._compatible(image_y)
    cache: dict[str, LieElement] = {"X": image_x, "Y": image_y}

    def image(w: str) -> LieElement:
        if w not in cache:
            u, v = standard_factorization(w)
            cache[w] = bracket(image(u), image(v))
        return cache[w]

    out = LieElement.zero(L.ring, L.trunc)
    for w in sorted(L.coeffs, key=word_key):
        out = out + image(w).scale(L.coeffs[w])
    return out


def bch(A: LieElement, B: LieElement) -> LieElement:
    """``log(exp(A) exp(B))`` as a Lie element."""
    A._compatible(B)
    return series_to_lie((lie_to_series(A).exp() * lie_to_series(B).exp()).log())


def z_series(trunc: int, ring: Ring = QQ) -> LieElement:
    """``Z = log(exp(-Y) exp(-X))``, the element with exp(X) exp(Y) exp(Z) = 1."""
    x = LieElement.generator("X", ring, trunc)
    y = LieElement.generator("Y", ring, trunc)
    return bch(-y, -x)


def phi3(L: LieElement):
    """Coefficient of XXY in the associative expansion of ``L``."""
    if L.trunc < 3:
        raise ValueError("phi3 needs truncation degree at least 3")
    return lie_to_series(L.truncate(3)).coeff("XXY")


def generic_lie(ring: PolynomialRing, prefix: str, trunc: int, min_degree: int = 1,
                kind: SymbolKind = SymbolKind.COORDINATE) -> LieElement:
    """Lie element with a fresh symbol ``prefix[w]`` on every Lyndon word of degree >= min_degree."""
    coeffs = {w: ring.var(f"{prefix}[{w}]", kind) for w in lyndon_words(trunc) if len(w) >= min_degree}
    return LieElement(ring, trunc, coeffs)
