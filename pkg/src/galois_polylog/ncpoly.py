"""Truncated non-commutative power series in the letters X and Y.

Words are plain strings over ``"XY"``; the empty word is ``""``.  Words are
ordered first by length and then lexicographically with X < Y.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .rings import QQ, Ring

LETTERS = "XY"


def word_key(w: str) -> tuple[int, str]:
    return (len(w), w)


@functools.lru_cache(maxsize=None)
def words_of_length(n: int) -> tuple[str, ...]:
    return tuple("".join(p) for p in itertools.product(LETTERS, repeat=n))


def all_words(max_degree: int, min_degree: int = 0) -> Iterator[str]:
    for n in range(min_degree, max_degree + 1):
        yield from words_of_length(n)


def check_word(w: str) -> str:
    if any(ch not in LETTERS for ch in w):
        raise ValueError(f"not a word in X, Y: {w!r}")
    return w


def regular_word(k: Iterable[int]) -> str:
    """``(k_1, ..., k_d) -> X^{k_d-1} Y ... X^{k_1-1} Y``."""
    k = tuple(k)
    if not k or any(int(i) < 1 for i in k):
        raise ValueError("index must be a non-empty tuple of positive integers")
    return "".join("X" * (i - 1) + "Y" for i in reversed(k))


def word_index(w: str) -> tuple[int, ...]:
    """Inverse of :func:`regular_word`.  ``w`` must end with Y."""
    check_word(w)
    if not w.endswith("Y"):
        raise ValueError(f"word {w!r} does not end with Y")
    blocks = w[:-1].split("Y")
    return tuple(len(b) + 1 for b in reversed(blocks))


def is_regular(w: str) -> bool:
    return w.endswith("Y")


@functools.lru_cache(maxsize=1 << 16)
def shuffle(u: str, v: str) -> tuple[tuple[str, int], ...]:
    """Shuffle product of two words as ``((word, multiplicity), ...)``."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[str, int] = {}
    for w, m in shuffle(u[:-1], v):
        w = w + u[-1]
        acc[w] = acc.get(w, 0) + m
    for w, m in shuffle(u, v[:-1]):
        w = w + v[-1]
        acc[w] = acc.get(w, 0) + m
    return tuple(sorted(acc.items(), key=lambda t: word_key(t[0])))


def shuffle_dict(u: str, v: str) -> dict[str, int]:
    return dict(shuffle(u, v))


class NCSeries:
    """Element of R<<X, Y>> truncated above degree ``trunc``.

    Coefficients are stored sparsely in ``coeffs`` (word -> ring element).
    """

    __slots__ = ("ring", "trunc", "coeffs")

    def __init__(self, ring: Ring, trunc: int, coeffs: Mapping[str, object] | None = None):
        if trunc < 0:
            raise ValueError("truncation degree must be non-negative")
        self.ring = ring
        self.trunc = trunc
        self.coeffs: dict[str, object] = {}
        for w, c in (coeffs or {}).items():
            check_word(w)
            if len(w) > trunc:
                raise ValueError(f"word {w!r} exceeds truncation degree {trunc}")
            c = ring.coerce(c)
            if not ring.is_zero(c):
                self.coeffs[w] = c

    @classmethod
    def _raw(cls, ring: Ring, trunc: int, coeffs: dict) -> "NCSeries":
        s = cls.__new__(cls)
        s.ring = ring
        s.trunc = trunc
        s.coeffs = coeffs
        return s

    # -- constructors --------------------------------------------------------
    @classmethod
    def one(cls, ring: Ring = QQ, trunc: int = 6) -> "NCSeries":
        return cls._raw(ring, trunc, {"": ring.one()})

    @classmethod
    def zero(cls, ring: Ring = QQ, trunc: int = 6) -> "NCSeries":
        return cls._raw(ring, trunc, {})

    @classmethod
    def letter(cls, a: str, ring: Ring = QQ, trunc: int = 6) -> "NCSeries":
        if a not in LETTERS:
            raise ValueError(f"unknown letter {a!r}")
        return cls._raw(ring, trunc, {a: ring.one()} if trunc >= 1 else {})

    @classmethod
    def monomial(cls, w: str, c, ring: Ring = QQ, trunc: int = 6) -> "NCSeries":
        return cls(ring, trunc, {w: c} if len(w) <= trunc else {})

    # -- helpers -----------------------------------------------------------
    def _compatible(self, other: "NCSeries") -> None:
        if not isinstance(other, NCSeries):
            raise TypeError("expected a series")
        if other.trunc != self.trunc:
            raise ValueError("truncation mismatch")
        if other.ring != self.ring:
            raise ValueError("coefficient ring mismatch")

    def coeff(self, w: str):
        check_word(w)
        if len(w) > self.trunc:
            raise ValueError(f"word {w!r} exceeds truncation degree {self.trunc}")
        return self.coeffs.get(w, self.ring.zero())

    def __getitem__(self, w: str):
        return self.coeff(w)

    def constant_term(self):
        return self.coeffs.get("", self.ring.zero())

    def support(self) -> list[str]:
        return sorted(self.coeffs, key=word_key)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree_part(self, n: int) -> "NCSeries":
        return NCSeries._raw(self.ring, self.trunc, {w: c for w, c in self.coeffs.items() if len(w) == n})

    def truncate(self, n: int) -> "NCSeries":
        """Drop terms above degree ``n`` and lower the truncation to ``n``."""
        if n > self.trunc:
            raise ValueError("cannot raise the truncation degree by truncating")
        return NCSeries._raw(self.ring, n, {w: c for w, c in self.coeffs.items() if len(w) <= n})

    def extend(self, n: int) -> "NCSeries":
        """Same coefficients, viewed with a larger truncation degree."""
        if n < self.trunc:
            raise ValueError("use truncate() to lower the truncation degree")
        return NCSeries._raw(self.ring, n, dict(self.coeffs))

    def map_coefficients(self, fn: Callable, ring: Ring | None = None) -> "NCSeries":
        ring = ring or self.ring
        return NCSeries(ring, self.trunc, {w: fn(c) for w, c in self.coeffs.items()})

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        self._compatible(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out[w] + c if w in out else c
            if self.ring.is_zero(v):
                out.pop(w, None)
            else:
                out[w] = v
        return NCSeries._raw(self.ring, self.trunc, out)

    def __neg__(self):
        return NCSeries._raw(self.ring, self.trunc, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "NCSeries":
        """Multiply every coefficient by the scalar or ring element ``c``."""
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
            out = {w: self.ring.scale(v, c) for w, v in self.coeffs.items()}
        else:
            c = self.ring.coerce(c)
            out = {w: v * c for w, v in self.coeffs.items()}
        return NCSeries._raw(self.ring, self.trunc, {w: v for w, v in out.items() if not self.ring.is_zero(v)})

    def __mul__(self, other):
        if not isinstance(other, NCSeries):
            return self.scale(other)
        self._compatible(other)
        N = self.trunc
        by_len: dict[int, list] = {}
        for v, b in other.coeffs.items():
            by_len.setdefault(len(v), []).append((v, b))
        out: dict[str, object] = {}
        for u, a in self.coeffs.items():
            room = N - len(u)
            for n, items in by_len.items():
                if n > room:
                    continue
                for v, b in items:
                    w = u + v
                    p = a * b
                    out[w] = out[w] + p if w in out else p
        return NCSeries._raw(self.ring, N, {w: c for w, c in out.items() if not self.ring.is_zero(c)})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = NCSeries.one(self.ring, self.trunc)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NCSeries):
            return NotImplemented
        if other.trunc != self.trunc or other.ring != self.ring:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.trunc, frozenset(self.coeffs)))

    def exp(self) -> "NCSeries":
        """Exponential of a series without constant term."""
        if not self.ring.is_zero(self.constant_term()):
            raise ValueError("exp requires a series without constant term")
        one = NCSeries.one(self.ring, self.trunc)
        result = one
        for n in range(self.trunc, 0, -1):
            result = one + (self * result).scale(Fraction(1, n))
        return result

    def log(self) -> "NCSeries":
        """Logarithm of a series with constant term 1."""
        if self.constant_term() != self.ring.one():
            raise ValueError("log requires constant term 1")
        u = self - NCSeries.one(self.ring, self.trunc)
        if self.trunc == 0:
            return NCSeries.zero(self.ring, 0)
        N = self.trunc
        one = NCSeries.one(self.ring, N)
        r = one.scale(Fraction((-1) ** (N + 1), N))
        for n in range(N - 1, 0, -1):
            r = one.scale(Fraction((-1) ** (n + 1), n)) + u * r
        return u * r

    def inverse(self) -> "NCSeries":
        """Multiplicative inverse of a series with constant term 1."""
        if self.constant_term() != self.ring.one():
            raise ValueError("inverse requires constant term 1")
        one = NCSeries.one(self.ring, self.trunc)
        u = one - self
        result = one
        for _ in range(self.trunc):
            result = one + u * result
        return result

    # -- substitution --------------------------------------------------------
    def substitute(self, image_x: "NCSeries", image_y: "NCSeries") -> "NCSeries":
        """Apply the continuous algebra map X -> image_x, Y -> image_y."""
        for img in (image_x, image_y):
            self._compatible(img)
            if not self.ring.is_zero(img.constant_term()):
                raise ValueError("letter images must have no constant term")
        images = {"X": image_x, "Y": image_y}
        cache: dict[str, NCSeries] = {"": NCSeries.one(self.ring, self.trunc)}

        def prod(w: str) -> NCSeries:
            if w not in cache:
                cache[w] = prod(w[:-1]) * images[w[-1]]
            return cache[w]

        out = NCSeries.zero(self.ring, self.trunc)
        for w in self.support():
            out = out + prod(w).scale(self.coeffs[w])
        return out

    def swap(self) -> "NCSeries":
        """Exchange the letters X and Y."""
        table = str.maketrans("XY", "YX")
        return NCSeries._raw(self.ring, self.trunc, {w.translate(table): c for w, c in self.coeffs.items()})

    # -- group-likeness ------------------------------------------------------
    def shuffle_defects(self, normalize: Callable | None = None) -> Iterator[tuple[str, str, object]]:
        """Yield ``(u, v, defect)`` for every shuffle relation checked.

        The defect is ``sum_{w in u sh v} c_w - c_u c_v``.  Pairs are visited by
        total degree, then by u, then by v, with ``len(u) >= len(v)``.
        """
        c = self.coeffs
        zero = self.ring.zero()
        for n in range(2, self.trunc + 1):
            for lu in range(n - 1, (n + 1) // 2 - 1, -1):
                lv = n - lu
                for u in words_of_length(lu):
                    for v in words_of_length(lv):
                        if lu == lv and v < u:
                            continue
                        d = zero
                        for w, m in shuffle(u, v):
                            if w in c:
                                d = d + c[w] * m if m != 1 else d + c[w]
                        if u in c and v in c:
                            d = d - c[u] * c[v]
                        if normalize is not None:
                            d = normalize(d)
                        yield u, v, d

    def is_group_like(self, normalize: Callable | None = None) -> "GroupLikeResult":
        """Check ``c_u c_v = sum_{w in u sh v} c_w`` for all pairs within the truncation.

        ``normalize`` is applied to each defect before testing for zero; it can
        reduce modulo known relations among the coefficients.
        """
        if self.constant_term() != self.ring.one():
            raise ValueError("group-likeness requires constant term 1")
        for u, v, d in self.shuffle_defects(normalize):
            if not self.ring.is_zero(d):
                return GroupLikeResult(False, (u, v), d)
        return GroupLikeResult(True, None, None)

    # -- text ----------------------------------------------------------------
    def to_text(self) -> str:
        lines = [f"# truncation {self.trunc}"]
        for w in self.support():
            lines.append(f"{w or '1'}\t{self.ring.format(self.coeffs[w])}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, ring: Ring = QQ, trunc: int | None = None) -> "NCSeries":
        coeffs: dict[str, object] = {}
        for raw in text.splitlines():
            line = raw.strip("\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "truncation" and trunc is None:
                    trunc = int(parts[1])
                continue
            if "\t" not in line:
                raise ValueError(f"malformed series line: {raw!r}")
            w, _, c = line.partition("\t")
            w = "" if w == "1" else check_word(w.strip())
            if w in coeffs:
                raise ValueError(f"duplicate word {w!r}")
            coeffs[w] = ring.parse(c)
        if trunc is None:
            trunc = max((len(w) for w in coeffs), default=0)
        return cls(ring, trunc, coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"NCSeries(0, trunc={self.trunc})"
        body = " + ".join(f"({self.ring.format(self.coeffs[w])}){'*' + w if w else ''}" for w in self.support())
        return f"NCSeries({body}, trunc={self.trunc})"


@dataclass(frozen=True)
class GroupLikeResult:
    ok: bool
    witness: tuple[str, str] | None
    defect: object = None

    def __bool__(self) -> bool:
        return self.ok


def series_mul(f: NCSeries, g: NCSeries) -> NCSeries:
    return f * g


def series_exp(f: NCSeries) -> NCSeries:
    return f.exp()


def series_log(f: NCSeries) -> NCSeries:
    return f.log()


def substitute_letters(f: NCSeries, image_x: NCSeries, image_y: NCSeries) -> NCSeries:
    return f.substitute(image_x, image_y)


def is_group_like(f: NCSeries, normalize: Callable | None = None) -> GroupLikeResult:
    return f.is_group_like(normalize)


def X(ring: Ring = QQ, trunc: int = 6) -> NCSeries:
    return NCSeries.letter("X", ring, trunc)


def Y(ring: Ring = QQ, trunc: int = 6) -> NCSeries:
    return NCSeries.letter("Y", ring, trunc)
