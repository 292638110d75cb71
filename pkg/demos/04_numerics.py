"""Numeric polylogarithms and residuals of the complex equations.

Run with ``python3 demos/04_numerics.py``.
"""

from galois_polylog import polylog_num as pn
from galois_polylog.cli import sample_points

print("zeta(3)      =", pn.zeta_value(3))
print("Li_3(1/2)    =", pn.polylog(3, 0.5).real)
print("Li_{1,2}(0.3)=", pn.mpl((1, 2), 0.3).real)
print("zeta(1,2)    =", pn.multiple_zeta((1, 2)))

for eq in ("euler-1.1", "landen-1.2", "landen-1.3"):
    worst = max(pn.numeric_check(eq, z).residual for z in sample_points(0, 10))
    print(f"{eq:<11} worst residual {worst:.2e}")

for k in range(2, 6):
    worst = max(pn.numeric_check("oiueno-1.4", z, 1e-6, k=k).residual for z in sample_points(0, 5, 0.05, 0.95))
    print(f"oiueno k={k}  worst residual {worst:.2e}")
