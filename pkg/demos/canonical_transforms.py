"""
Linear canonical transforms act on tomogram labels
==================================================

A symplectic 2x2 matrix maps (q, p) to a new pair of quadratures. For a
tomogram this is nothing but a relabelling of (mu, nu), so squeezing,
rotations and harmonic-oscillator dynamics cost no quadrature at all.

Run ``python3 demos/canonical_transforms.py``.
"""

import numpy as np

from symtomo import states
from symtomo.core import Grid1D, integrate_1d
from symtomo.evolution import evolve_oscillator, pde_residual, trajectory
from symtomo.symplectic import apply_canonical, compose, frame_matrix, inverse, rotation

ground = states.ground().tomogram
g = Grid1D(-20, 20, 4001)

# Scaling by s = 2 stretches the position distribution to variance 2.
stretched = apply_canonical(ground, frame_matrix(2.0, 0.0))
vals = stretched(g.points, 1.0, 0.0)
var = integrate_1d(g.points ** 2 * vals, g)
print(f"position variance after scaling by 2: {var:.10f}")

# Group structure: composing with the inverse gives back the original.
m = frame_matrix(1.7, 0.4)
print("m @ inverse(m) =", np.round(compose(m, inverse(m)).as_array(), 14).tolist())

# The oscillator turns a coherent state around the origin once per 2 pi.
coh = states.coherent(1.5, 0.0).tomogram
for t in (0.0, np.pi / 2, np.pi):
    w = evolve_oscillator(coh, t)
    mean_q = integrate_1d(g.points * w(g.points, 1.0, 0.0), g)
    mean_p = integrate_1d(g.points * w(g.points, 0.0, 1.0), g)
    print(f"t = {t:5.3f}: <q> = {mean_q:+.6f}, <p> = {mean_p:+.6f}")

# Oscillator evolution and the rotation matrix give identical tomograms.
t = 0.8
diff = abs(evolve_oscillator(coh, t)(0.3, 0.6, 0.2) - apply_canonical(coh, rotation(t))(0.3, 0.6, 0.2))
print(f"evolution vs rotation at t = {t}: {diff:.1e}")

# Finite differences confirm the transport equation to second order in h.
f = trajectory(coh, "oscillator")
r1, r2 = (pde_residual(f, "oscillator", (0.5, 1.0, 0.5, 0.7), h) for h in (1e-2, 5e-3))
print(f"residual ratio under step halving: {r1 / r2:.3f}")
