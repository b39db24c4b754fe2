"""
Diffraction in time behind a suddenly opened shutter
====================================================

A plane wave exp(ikx) hits a perfect absorber at x = 0. At t = 0 the
absorber is removed. The density that builds up to the right shows a
smeared front at x = kt with quantum ripples behind it, the temporal
analogue of Fresnel diffraction at an edge.

Run ``python3 demos/diffraction_in_time.py [--figures DIR]``.
"""

import numpy as np

from _common import figure_dir
from symtomo import shutter
from symtomo.evolution import evolve_free
from symtomo.shutter import ShutterParams
from symtomo.specfun import moshinsky_amplitude

figs = figure_dir(__doc__.strip().splitlines()[0])
k = 1.0

# The density at the classical front is always exactly 1/4.
for t in (0.5, 2.0, 8.0):
    print(f"t = {t:4.1f}: density at x = kt is {shutter.density(k * t, ShutterParams(k, t))}")

# The first ripple behind the front overshoots the incident density by 37 %.
x = np.linspace(-12, 12, 24001)
d = shutter.density(x, ShutterParams(k, 4.0))
print(f"peak density behind the front: {d.max():.5f} at x = {x[np.argmax(d)]:.3f}")

# The Fresnel form agrees with a direct contour integral of the amplitude.
m = moshinsky_amplitude(2.0, k, 4.0, method="quadrature")
print(f"|M|^2 by contour quadrature {abs(m) ** 2:.15f}, "
      f"by Fresnel integrals {shutter.density(2.0, ShutterParams(k, 4.0)):.15f}")

# Free motion only shifts the tomogram label nu by mu * t, so the state at
# t = 3 follows from the one at t = 1 without any quadrature.
w1 = shutter.tomogram_evaluator(ShutterParams(k, 1.0))
w3 = evolve_free(w1, 2.0)
print(f"tomogram at (X, mu, nu) = (0, 1, 0.5): evolved {w3(0.0, 1.0, 0.5):.15f}, "
      f"closed form {shutter.tomogram(0.0, 1.0, 0.5, ShutterParams(k, 3.0)):.15f}")

# The Wigner function vanishes ahead of the classical trajectory q = pt and
# takes negative values in the ripple region.
q, p = np.meshgrid(np.linspace(-6, 4, 201), np.linspace(-1, 3, 161), indexing="ij")
W = shutter.wigner_evaluator(ShutterParams(k, 2.0))(q, p)
print(f"Wigner function range at t = 2: [{W.min():.3f}, {W.max():.3f}]")

if figs:
    import matplotlib.pyplot as plt

    fig, (a1, a2) = plt.subplots(1, 2, figsize=(10, 4))
    for t in (0.5, 2.0, 8.0):
        a1.plot(x, shutter.density(x, ShutterParams(k, t)), label=f"t = {t:g}")
    a1.set_xlabel("x")
    a1.set_ylabel("density")
    a1.legend()
    im = a2.pcolormesh(q, p, W, cmap="RdBu_r", shading="auto",
                       vmin=-abs(W).max(), vmax=abs(W).max())
    a2.set_xlabel("q")
    a2.set_ylabel("p")
    fig.colorbar(im, ax=a2)
    fig.savefig(figs / "diffraction_in_time.png", dpi=120)
    print(f"wrote {figs / 'diffraction_in_time.png'}")
