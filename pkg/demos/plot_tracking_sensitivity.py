r"""
How precisely must the drives track the coupling?
-------------------------------------------------
A relative error ``delta_i`` in the drive amplitudes breaks the commuting
structure. The infidelity grows quadratically in the mistracking.
"""
import numpy as np

from tunable_cnot import rectangular, solved, tracking_sensitivity
from tunable_cnot.propagator import area_sweep

profile = solved(rectangular(1.0, 1.0))

#%%
# Equal mistracking on both qubits.
deltas = np.array([0.005, 0.01, 0.02, 0.04])
rows = tracking_sensitivity(0.0, profile, [(d, d) for d in deltas], steps=512)
loss = np.array([1 - f for _, _, f in rows])
for d, l in zip(deltas, loss):
    print(f"delta={d:.3f}  1 - F = {l:.3e}")

#%%
# A straight line in log-log coordinates with slope 2.
slope = np.polyfit(np.log(deltas), np.log(loss), 1)[0]
print("fitted exponent:", round(slope, 3))

#%%
# Getting the area wrong hurts too, but the profile shape does not.
for factor, fid in area_sweep(0.0, profile, [0.9, 0.95, 1.0, 1.05, 1.1], steps=512):
    print(f"area x {factor:.2f}  F = {fid:.6f}")
