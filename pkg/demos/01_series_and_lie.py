"""Words, group-like series, the Lyndon basis and BCH.

Run with ``python3 demos/01_series_and_lie.py``.
"""

from galois_polylog import associator as asc
from galois_polylog.freelie import LieElement, bch, bracket_string, lie_to_series
from galois_polylog.ncpoly import word_key

x = LieElement.generator("X", trunc=4)
y = LieElement.generator("Y", trunc=4)

# log(exp(X) exp(Y)) in the Lyndon basis
z = bch(x, y)
for w, c in sorted(z.coeffs.items(), key=lambda t: word_key(t[0])):
    print(f"{str(c):>6}  {bracket_string(w)}")

# its exponential is group-like: every shuffle relation holds
g = lie_to_series(z).exp()
print("exp(bch(X, Y)) group-like:", g.is_group_like().ok)

# the associator fixture along the path to z carries polylogarithms as coefficients
G0 = asc.fixture("G0", 3)
print("G0 group-like:", G0.certify().ok)
print("coefficient of XYX:", G0.series.coeffs["XYX"])
