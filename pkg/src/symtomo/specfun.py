"""Fresnel integrals and the Moshinsky function.

The Fresnel integrals here use the normalization

    C(w) = sqrt(2/pi) * integral_0^w cos(y**2) dy
    S(w) = sqrt(2/pi) * integral_0^w sin(y**2) dy

so that C, S -> +-1/2 as w -> +-inf. They are the textbook functions
(``scipy.special.fresnel``, kernel ``cos(pi t**2 / 2)``) evaluated at
``w * sqrt(2/pi)``.
"""

import numpy as np
from scipy import integrate, special

from .core import DomainError

_SCALE = np.sqrt(2.0 / np.pi)


def _checked(w):
    w = np.asarray(w, dtype=float)
    if not np.all(np.isfinite(w)):
        raise ValueError("Fresnel argument must be finite")
    return w


def fresnel(w):
    """Return ``(C(w), S(w))``; exactly odd in ``w``."""
    w = _checked(w)
    s, c = special.fresnel(np.abs(w) * _SCALE)
    sign = np.sign(w)
    c, s = sign * c, sign * s
    if c.ndim == 0:
        return float(c), float(s)
    return c, s


def fresnel_c(w):
    return fresnel(w)[0]


def fresnel_s(w):
    return fresnel(w)[1]


def _moshinsky_erfc(x, k, t):
    a = x - k * t
    phase = np.exp(1j * (k * x - 0.5 * k * k * t))
    return 0.5 * phase * special.erfc(np.exp(-0.25j * np.pi) * a / np.sqrt(2 * t))


def _moshinsky_contour(x, k, t):
    # With u = kappa - k the integral is exp(i phi0) * I, where
    # I = int exp(i(a u - t u^2/2)) / (u + i0) du and a = x - k t. The pole
    # prescription (contour above the pole) makes the wavefront value 1/4.
    # The real line is deformed onto the steepest-descent line
    # u = a/t + exp(-i pi/4) v, which turns the chirp into a Gaussian; the
    # pole is crossed (residue -2 pi i) when a < 0.
    a = x - k * t
    c = a / t
    beta = c * np.exp(0.25j * np.pi)
    total = 0.0j
    if c != 0.0:
        # Pair v with -v: 1/(beta+v) + 1/(beta-v) = 2 beta / (beta^2 - v^2).
        # The bare kernel integrates to -i pi sign(c) over v > 0; subtracting
        # it removes the spike of width |c| near the front.
        vmax = max(40.0 / np.sqrt(t), 10.0 * abs(c))

        def f(v):
            return 2 * beta * np.expm1(-0.5 * t * v * v) / (beta * beta - v * v)

        opts = dict(epsabs=1e-13, epsrel=1e-12, limit=400, points=[abs(c), 4 * abs(c)])
        re = integrate.quad(lambda v: f(v).real, 0.0, vmax, **opts)[0]
        im = integrate.quad(lambda v: f(v).imag, 0.0, vmax, **opts)[0]
        tail = np.log((vmax + beta) / (vmax - beta))
        line = re + 1j * im + tail - 1j * np.pi * np.sign(c)
        total = line * np.exp(0.5j * a * a / t)
    if c <= 0:
        total = total - 2j * np.pi if c < 0 else -1j * np.pi
    phase0 = np.exp(1j * (k * x - 0.5 * k * k * t))
    return 1j / (2 * np.pi) * phase0 * total


def moshinsky_amplitude(x, k, t, method="quadrature"):
    """Moshinsky function M(x, k, t) for a shutter opened at t = 0.

    ``method="quadrature"`` integrates the defining kappa-integral along a
    steepest-descent contour (the independent reference). ``method="erfc"``
    uses ``M = exp(i(kx - k^2 t/2)) erfc(exp(-i pi/4)(x - kt)/sqrt(2t)) / 2``.
    Both use the contour passing above the pole at ``kappa = k``, which
    corresponds to an incident wave ``exp(ikx)`` on the left.
    """
    x, k, t = float(x), float(k), float(t)
    if not t > 0:
        raise DomainError(f"Moshinsky function needs t > 0, got t={t}")
    if method == "erfc":
        return complex(_moshinsky_erfc(x, k, t))
    if method == "quadrature":
        return complex(_moshinsky_contour(x, k, t))
    raise ValueError(f"unknown method {method!r}")
