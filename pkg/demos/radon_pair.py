"""
From Wigner function to tomogram and back
=========================================

A tomogram w(X, mu, nu) is the probability density of the quadrature
X = mu q + nu p. It is a line integral of the Wigner function, and the
Wigner function is recovered by the damped inverse transform. This demo
goes around the loop for the first excited oscillator state, whose Wigner
function is negative at the origin.

Run ``python3 demos/radon_pair.py [--figures DIR]``.
"""

import numpy as np

from _common import figure_dir
from symtomo import states
from symtomo.core import Grid1D
from symtomo.transforms import (radon_forward, tomogram_from_wavefunction, wigner_evaluator,
                                wigner_from_tomogram)

figs = figure_dir(__doc__.strip().splitlines()[0])
state = states.excited1()
psi = state.wavefunction(Grid1D(-10, 10, 2001))

# Two routes to the same tomogram value: the fractional Fourier overlap of
# the wavefunction, and the line integral of its Wigner function.
X, mu, nu = 0.7, np.cos(0.9), np.sin(0.9)
a = tomogram_from_wavefunction(psi, X, mu, nu)
b = radon_forward(wigner_evaluator(psi), X, mu, nu)
print(f"tomogram at X={X}, theta=0.9: overlap {a:.12f}, line integral {b:.12f}")

# Inverse transform from the closed-form tomogram.
rec = wigner_from_tomogram(state.tomogram)
for q, p in [(0.0, 0.0), (1.0, 0.0), (0.5, 0.5)]:
    print(f"W({q}, {p}): reconstructed {rec(q, p):+.5f}, exact {state.wigner(q, p):+.5f}")

# And back again: integrate the reconstruction along a line.
back = radon_forward(rec, X, mu, nu, half_width=8.0, n=801)
print(f"round trip: {back:.5f} vs {state.tomogram(X, mu, nu):.5f}")

if figs:
    import matplotlib.pyplot as plt

    g = Grid1D(-3.5, 3.5, 141)
    field = rec.field(g, g)
    xs = np.linspace(-5, 5, 400)
    fig, (a1, a2) = plt.subplots(1, 2, figsize=(10, 4))
    im = a1.pcolormesh(g.points, g.points, field.values.T, cmap="RdBu_r", shading="auto")
    a1.set_title("reconstructed Wigner function")
    fig.colorbar(im, ax=a1)
    for th in (0.0, 0.6, 1.2):
        a2.plot(xs, state.tomogram(xs, np.cos(th), np.sin(th)), label=f"theta = {th}")
    a2.set_xlabel("X")
    a2.legend()
    fig.savefig(figs / "radon_pair.png", dpi=120)
    print(f"wrote {figs / 'radon_pair.png'}")
