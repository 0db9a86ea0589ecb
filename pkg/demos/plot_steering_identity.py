r"""
Steering two coupled qubits into the CNOT class
-----------------------------------------------
When both resonant drives follow the coupling, ``Omega_i(t) = Lambda_i(k) g(t)``,
the Hamiltonian is ``g(t)`` times one fixed matrix. The evolution then only
depends on the pulse area, and area pi/2 lands exactly on ``exp(-i pi/4 XX)``.
"""
import math

import numpy as np

from tunable_cnot import lambda_coeffs, steered_evolution, steering_generator
from tunable_cnot.operators import CNOT_WEYL, max_norm_diff

#%%
# The tracking coefficients for a few anisotropies ``k``. Their squares
# sum to 63 - k^2, so the drives get weaker as ``|k|`` grows.
for k in (-7, -3, 0, 1, 3, 7):
    p = lambda_coeffs(k)
    print(f"k={k:+d}  Lambda1={p.lambda1:+.6f}  Lambda2={p.lambda2:+.6f}"
          f"  sum of squares={p.lambda1**2 + p.lambda2**2:.6f}")

#%%
# The steering generator for k = 1 is a plain Hermitian 4x4 matrix.
gen = steering_generator(lambda_coeffs(1.0)).matrix
print(np.round(gen.real, 3))

#%%
# Exponentiating at angle pi/2 gives the CNOT-class representative for every
# admissible k.
ks = np.linspace(-7, 7, 29)
residuals = [max_norm_diff(steered_evolution(lambda_coeffs(k), math.pi / 2), CNOT_WEYL)
             for k in ks]
print("worst residual over k grid:", max(residuals))
