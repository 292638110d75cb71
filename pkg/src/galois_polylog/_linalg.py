"""Gaussian elimination for systems linear in a chosen set of symbols."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rings import MPoly, Symbol


class InconsistentSystem(ValueError):
    pass


def solve_linear(equations: Sequence[MPoly], unknowns: Sequence[Symbol]) -> dict[Symbol, MPoly]:
    """Solve ``eq = 0`` for as many ``unknowns`` as possible.

    Each equation must be linear in the unknowns; other symbols act as
    parameters.  Pivots are chosen following the order of ``unknowns``.
    Returns a substitution expressing every pivot through the remaining
    unknowns and parameters.
    """
    if not equations:
        return {}
    registry = equations[0].registry
    ids = [s.sid for s in unknowns]
    idset = set(ids)
    rows = []
    for eq in equations:
        lin, rest = eq.linear_in(idset)
        if lin or rest:
            rows.append((dict(lin), rest))
    pivots: dict[int, int] = {}
    for sid in ids:
        r = next((i for i, (lin, _) in enumerate(rows) if i not in pivots.values() and lin.get(sid)), None)
        if r is None:
            continue
        lin, rest = rows[r]
        c = lin[sid]
        lin = {s: v / c for s, v in lin.items()}
        rest = rest * (Fraction(1) / c)
        rows[r] = (lin, rest)
        for i, (lin2, rest2) in enumerate(rows):
            f = lin2.get(sid)
            if i == r or not f:
                continue
            new = dict(lin2)
            for s, v in lin.items():
                nv = new.get(s, Fraction(0)) - f * v
                if nv:
                    new[s] = nv
                else:
                    new.pop(s, None)
            rows[i] = (new, rest2 - rest * f)
        pivots[sid] = r
    used = set(pivots.values())
    for i, (lin, rest) in enumerate(rows):
        if i not in used and not lin and rest:
            raise InconsistentSystem(f"inconsistent linear system: {rest} = 0")
    solution = {}
    for sid, r in pivots.items():
        lin, rest = rows[r]
        value = -rest
        for s, v in lin.items():
            if s != sid:
                value = value - MPoly.variable(registry[s], registry) * v
        solution[registry[sid]] = value
    return solution
