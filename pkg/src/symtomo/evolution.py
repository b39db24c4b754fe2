"""Time evolution of tomograms for free motion and the harmonic oscillator.

Both flows only relabel the frame parameters:

* free particle, ``dw/dt - mu dw/dnu = 0``:
  ``w_t(X, mu, nu) = w_0(X, mu, nu + mu t)``
* oscillator, ``dw/dt - mu dw/dnu + nu dw/dmu = 0``:
  ``w_t(X, mu, nu) = w_0(X, mu cos t - nu sin t, mu sin t + nu cos t)``

The oscillator flow is the canonical action of ``symplectic.rotation(t)``.
"""

import numpy as np

from .core import DomainError, Tomogram

KINDS = ("free", "oscillator")


def evolve_free(tomogram: Tomogram, t: float) -> Tomogram:
    t = float(t)
    return tomogram.relabel(lambda mu, nu: (mu, nu + mu * t),
                            f"{tomogram.name} | free({t:g})")


def evolve_oscillator(tomogram: Tomogram, t: float) -> Tomogram:
    t = float(t)
    c, s = np.cos(t), np.sin(t)
    return tomogram.relabel(lambda mu, nu: (mu * c - nu * s, mu * s + nu * c),
                            f"{tomogram.name} | oscillator({t:g})")


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"unsupported dynamics {kind!r}; expected one of {KINDS}")


def evolve(tomogram: Tomogram, kind: str, t: float) -> Tomogram:
    _check_kind(kind)
    return evolve_free(tomogram, t) if kind == "free" else evolve_oscillator(tomogram, t)


def trajectory(tomogram: Tomogram, kind: str):
    """``f(X, mu, nu, t)`` giving the evolved tomogram at time ``t``."""
    _check_kind(kind)
    return lambda X, mu, nu, t: evolve(tomogram, kind, t)(X, mu, nu)


def pde_residual(w, kind: str, point, h: float = 1e-3) -> float:
    """|dw/dt - mu dw/dnu (+ nu dw/dmu for the oscillator)| by centered differences.

    ``w`` is a callable ``w(X, mu, nu, t)``; ``point`` is ``(X, mu, nu, t)``.
    """
    _check_kind(kind)
    if not h > 0:
        raise ValueError("step must be positive")
    X, mu, nu, t = map(float, point)
    try:
        dt = (w(X, mu, nu, t + h) - w(X, mu, nu, t - h)) / (2 * h)
        dnu = (w(X, mu, nu + h, t) - w(X, mu, nu - h, t)) / (2 * h)
        res = dt - mu * dnu
        if kind == "oscillator":
            dmu = (w(X, mu + h, nu, t) - w(X, mu - h, nu, t)) / (2 * h)
            res += nu * dmu
    except DomainError as exc:
        raise DomainError(f"finite-difference stencil leaves the domain at {point}: {exc}") from exc
    return abs(float(res))
