r"""
Gate times for different switching profiles
-------------------------------------------
Only the area of the coupling pulse matters, so a profile that ramps up
slowly must last longer. The gate time in units of ``pi / (2 g)`` is the
inverse of the profile's area factor ``area / (g t1)``.
"""
import numpy as np

from tunable_cnot import (area_numeric, inverted_poly, landau_hat, solved, table_gate_times,
                          trapezoidal)

#%%
# The standard table.
for row in table_gate_times(1.0):
    print(f"{row.label:>13}  {row.profile:<20} {row.t1_units:.4f}")

#%%
# Any profile can be solved for area pi/2; here the trapezoid ramp fraction
# is swept continuously.
for eps in np.linspace(0.0, 0.5, 6):
    p = solved(trapezoidal(eps, 1.0, 1.0))
    print(f"epsilon={eps:.1f}  t1={p.t1:.6f}")

#%%
# Higher inverted polynomials approach the rectangle, while Landau's hat sits
# close to the sinusoid.
for n in range(1, 7):
    print(n, round(solved(inverted_poly(n, 1.0, 1.0)).t1, 6))
print("Landau's hat:", solved(landau_hat(1.0, 1.0)).t1)

#%%
# The analytic areas agree with adaptive quadrature.
p = solved(landau_hat(0.7, 1.0))
print("numeric area:", area_numeric(p), " target:", np.pi / 2)
