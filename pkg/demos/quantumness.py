"""
Is a tomogram quantum, classical, both or neither?
==================================================

A nonnegative, normalized and homogeneous function of (X, mu, nu) may or
may not describe a physical state. Positivity of the reconstructed density
operator decides quantumness; positivity of the reconstructed phase-space
density decides classicality. The conjugate-frame entropy bound ln(pi e)
holds for every quantum state and can fail for classical ones.

Run ``python3 demos/quantumness.py``.
"""

import numpy as np

from symtomo import states
from symtomo.core import Grid1D
from symtomo.quantumness import ENTROPY_BOUND, classify_state, entropic_quantumness

xr = Grid1D(-15, 15, 3001)
print(f"entropy bound ln(pi e) = {ENTROPY_BOUND:.6f}\n")
print(f"{'state':<20}{'S1 + S2':>10}{'min eig rho':>14}{'min W':>10}  verdict")
for spec in ("ground", "coherent:1,-1", "squeezed:1.5", "excited1", "subheisenberg:0.2"):
    w = states.parse_state(spec).tomogram
    ent = entropic_quantumness(w, np.pi / 4, xr)
    rep = classify_state(w)
    print(f"{spec:<20}{ent.sum:>10.4f}{rep.rho_min_eigenvalue:>14.2e}"
          f"{rep.wigner_min_value:>10.4f}  {rep.verdict}")

# A Gaussian with variance below 1/2 in both quadratures is a fine
# probability density on phase space but sits below the entropy bound.
# Its verdict may read "neither" rather than "classical", and a squeezed
# state may read "quantum" rather than "both": narrow Gaussians have broad
# characteristic functions, and cutting them off at a finite radius makes
# the reconstructed Wigner function ring slightly below zero.
for spec in ("subheisenberg:0.2", "squeezed:1.5"):
    rep = classify_state(states.parse_state(spec).tomogram)
    print(f"{spec}: |chi| on the cutoff circle {rep.cutoff_residue:.1e}, "
          f"min W {rep.wigner_min_value:.1e}")
