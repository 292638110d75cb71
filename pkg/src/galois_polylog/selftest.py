"""Deterministic randomized property checks across the modules.

Every check draws its samples from ``random.Random(seed)``, so a run is
reproducible from the seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import charconv
from .associator import LMFMismatch, lmf_regular_coeff
from .freelie import LieElement, bch, is_lie, lie_to_series, lyndon_words, series_to_lie
from .ncpoly import NCSeries, all_words, shuffle_dict
from .rings import QQ, PolynomialRing
from .symbols import NamedSymbols, Side
from .tensorcrit import AbTensor, UnitGroupElement, p3


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def random_fraction(rng: random.Random, size: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def random_lie(rng: random.Random, trunc: int, density: float = 0.7) -> LieElement:
    coeffs = {w: random_fraction(rng) for w in lyndon_words(trunc) if rng.random() < density}
    return LieElement(QQ, trunc, coeffs)


def random_series(rng: random.Random, trunc: int) -> NCSeries:
    return NCSeries(QQ, trunc, {w: random_fraction(rng) for w in all_words(trunc) if rng.random() < 0.6})


def random_unit(rng: random.Random) -> UnitGroupElement:
    return UnitGroupElement(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3))


def check_group_like(rng: random.Random, samples: int = 200, max_degree: int = 6) -> CheckResult:
    for i in range(samples):
        trunc = rng.randint(2, max_degree)
        g = lie_to_series(random_lie(rng, trunc)).exp()
        res = g.is_group_like()
        if not res.ok:
            return CheckResult("exp(Lie) is group-like", False, f"sample {i}: word pair {res.witness}")
        try:
            for k in range(1, trunc + 1):
                lmf_regular_coeff(g, k)
        except LMFMismatch as exc:
            return CheckResult("exp(Lie) is group-like", False, f"sample {i}: {exc}")
    return CheckResult("exp(Lie) is group-like", True, f"{samples} samples")


def check_exp_log(rng: random.Random, samples: int = 30, max_degree: int = 5) -> CheckResult:
    for i in range(samples):
        trunc = rng.randint(1, max_degree)
        f = random_series(rng, trunc)
        f0 = f - NCSeries.one(QQ, trunc).scale(f.constant_term())
        if f0.exp().log() != f0:
            return CheckResult("log(exp(f)) = f", False, f"sample {i}")
        g = f0 + NCSeries.one(QQ, trunc)
        if g.log().exp() != g:
            return CheckResult("exp(log(g)) = g", False, f"sample {i}")
    return CheckResult("exp/log round trips", True, f"{samples} samples")


def check_bch(rng: random.Random, samples: int = 10, max_degree: int = 5) -> CheckResult:
    for i in range(samples):
        trunc = rng.randint(2, max_degree)
        a, b, c = (random_lie(rng, trunc, 0.5) for _ in range(3))
        if bch(bch(a, b), c) != bch(a, bch(b, c)):
            return CheckResult("BCH is associative", False, f"sample {i}")
        if not is_lie(lie_to_series(bch(a, b))):
            return CheckResult("BCH is associative", False, f"sample {i}: not Lie")
    return CheckResult("BCH is associative", True, f"{samples} samples")


def check_lie_round_trip(rng: random.Random, samples: int = 30, max_degree: int = 6) -> CheckResult:
    for i in range(samples):
        L = random_lie(rng, rng.randint(1, max_degree))
        if series_to_lie(lie_to_series(L)) != L:
            return CheckResult("Lyndon basis round trip", False, f"sample {i}")
    return CheckResult("Lyndon basis round trip", True, f"{samples} samples")


def check_shuffle(rng: random.Random, samples: int = 50) -> CheckResult:
    for i in range(samples):
        u = "".join(rng.choice("XY") for _ in range(rng.randint(0, 4)))
        v = "".join(rng.choice("XY") for _ in range(rng.randint(0, 4)))
        d = shuffle_dict(u, v)
        if d != shuffle_dict(v, u) or sum(d.values()) != comb(len(u) + len(v), len(u)):
            return CheckResult("shuffle is commutative", False, f"{u!r}, {v!r}")
    return CheckResult("shuffle is commutative", True, f"{samples} samples")


def check_tensor(rng: random.Random, samples: int = 50) -> CheckResult:
    T = AbTensor.tensor
    for i in range(samples):
        x, y, z, y2 = (random_unit(rng) for _ in range(4))
        if not (T(x, y, z) + T(x, z, y)).is_zero():
            return CheckResult("tensor normal form", False, f"antisymmetry, sample {i}")
        if T(x, y + y2, z) != T(x, y, z) + T(x, y2, z):
            return CheckResult("tensor normal form", False, f"bilinearity, sample {i}")
        if not T(x, y, y).is_zero():
            return CheckResult("tensor normal form", False, f"degeneracy, sample {i}")
    return CheckResult("tensor normal form", True, f"{samples} samples")


def check_p3_linear(rng: random.Random, samples: int = 50) -> CheckResult:
    """p3 is linear in one list once the weight 0 and 1 entries of the other vanish."""
    zero = [Fraction(0)] * 4
    for i in range(samples):
        x1, x2 = ([random_fraction(rng) for _ in range(4)] for _ in range(2))
        fixed = [Fraction(0), Fraction(0), random_fraction(rng), random_fraction(rng)]
        s = random_fraction(rng)
        combo = [a + s * b for a, b in zip(x1, x2)]
        for f in (lambda v: p3(v, fixed) - p3(zero, fixed), lambda v: p3(fixed, v) - p3(fixed, zero)):
            if f(combo) != f(x1) + s * f(x2):
                return CheckResult("p3 is linear in each list", False, f"sample {i}")
    return CheckResult("p3 is linear in each list", True, f"{samples} samples")


def check_characters(rng: random.Random, max_weight: int = 6) -> CheckResult:
    ns = NamedSymbols(PolynomialRing(), Side.LADIC)
    for m in range(1, max_weight + 1):
        back = charconv.characters_from_li(m, "z", ns)
        sub = {ns.li(j, "z").symbols()[0]: charconv.li_from_characters(j, "z", ns) for j in range(2, m + 1)}
        if back.substitute(sub) != ns.chit(m, "z"):
            return CheckResult("character conversion is invertible", False, f"weight {m}")
    return CheckResult("character conversion is invertible", True, f"weights 1..{max_weight}")


CHECKS: dict[str, Callable[[random.Random], CheckResult]] = {
    "group-like": check_group_like,
    "exp-log": check_exp_log,
    "bch": check_bch,
    "lie-basis": check_lie_round_trip,
    "shuffle": check_shuffle,
    "tensor": check_tensor,
    "p3": check_p3_linear,
    "characters": check_characters,
}


def run(seed: int = 0, only: list[str] | None = None) -> list[CheckResult]:
    out = []
    for name in sorted(only or CHECKS):
        out.append(CHECKS[name](random.Random(f"{seed}:{name}")))
    return out
