"""Symbolic derivations on both sides, with the intermediate steps.

Run with ``python3 demos/02_landen_and_oiueno.py``.
"""

from galois_polylog import associator as asc
from galois_polylog import identities as ids
from galois_polylog.rings import PolynomialRing
from galois_polylog.symbols import NamedSymbols, Side

ns = NamedSymbols(PolynomialRing(), Side.LADIC)
print("target:", ids.galois_landen_trilog(ns))

for side in ("complex", "ladic"):
    print(asc.verify_landen3(side).summary())

# the variant with -rho_z^2/4 in place of -rho_1mz^2/4 does not come out of the derivation
print(asc.verify_landen3("ladic", swapped_square=True).summary().splitlines()[0])

for k in (2, 4, 6):
    rep = asc.verify_oiueno(k, "ladic")
    print(rep.summary().splitlines()[0])
