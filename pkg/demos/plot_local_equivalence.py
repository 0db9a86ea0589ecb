r"""
Which gates are locally equivalent to CNOT?
-------------------------------------------
Makhlin invariants and Weyl-chamber coordinates do not change under
single-qubit operations, so they tell the steered evolution, CNOT and
failed gates apart.
"""
import math

import numpy as np
from scipy.stats import unitary_group

from tunable_cnot import (CNOT, CNOT_WEYL, classify, cnot_schedule, lambda_coeffs,
                          makhlin_invariants, propagate, rectangular, solved, weyl_coordinates)
from tunable_cnot.operators import I4, kron

#%%
# CNOT and its Weyl representative share invariants and coordinates.
for name, u in (("identity", I4), ("CNOT", CNOT), ("CNOT_Weyl", CNOT_WEYL)):
    g1, g2 = makhlin_invariants(u)
    c = np.round(np.array(weyl_coordinates(u)) / math.pi, 4)
    print(f"{name:<10} G1={g1.real:+.4f}{g1.imag:+.4f}j  G2={g2:+.4f}  c/pi={c}")

#%%
# Dressing a gate with random local unitaries leaves the invariants alone.
rng = np.random.default_rng(1)
a, b = unitary_group.rvs(2, random_state=rng), unitary_group.rvs(2, random_state=rng)
print(makhlin_invariants(kron(a, b) @ CNOT))

#%%
# With tracking switched off the coupling alone acts, and at k = 1 the
# result is in the SWAP class rather than the CNOT class.
sched = cnot_schedule(lambda_coeffs(1.0), solved(rectangular(1.0, 1.0)), tracking="off")
report = classify(propagate(sched), CNOT)
print(report.verdict, np.round(np.array(report.weyl_coords) / math.pi, 4))
