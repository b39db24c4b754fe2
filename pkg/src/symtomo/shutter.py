"""Closed-form solutions of the Moshinsky shutter problem.

A plane wave ``exp(ikx)`` fills ``x < 0`` behind a perfectly absorbing
shutter at ``x = 0`` that is removed at ``t = 0``. For ``t > 0`` this module
gives the position density, the Wigner function and the symplectic
tomogram of the released wave.

Normalization: the incident wave has unit density, so the density tends to
1 far behind the front. :func:`wigner` returns the textbook phase-space
function whose ``p``-marginal is that density; the toolkit-wide convention
(phase-space integral ``2*pi`` for normalizable states) is ``2*pi`` times
it, see :func:`wigner_evaluator`.
"""

from dataclasses import dataclass

import numpy as np

from .core import DomainError, Tomogram
from .specfun import fresnel


@dataclass(frozen=True)
class ShutterParams:
    k: float
    t: float

    def require_positive_time(self):
        if not self.t > 0:
            raise DomainError(f"shutter solutions need t > 0, got t={self.t}")


def fresnel_argument(x, params: ShutterParams):
    """``(x - k t) / sqrt(2 t)``, the argument entering the density."""
    return (np.asarray(x, float) - params.k * params.t) / np.sqrt(2.0 * params.t)


def density(x, params: ShutterParams):
    """|M(x, k, t)|^2 = ((1/2 - C(w))^2 + (1/2 - S(w))^2) / 2."""
    params.require_positive_time()
    c, s = fresnel(fresnel_argument(x, params))
    return 0.5 * ((0.5 - c) ** 2 + (0.5 - s) ** 2)


_SERIES_CUTOFF = 1e-4


def wigner(q, p, params: ShutterParams):
    """sin(2 (pt - q)(k - p)) / (pi (k - p)) for pt > q, zero for pt < q.

    The step function takes the value 1/2 on the line ``q = pt``. Near
    ``p = k`` a short series replaces the quotient.
    """
    params.require_positive_time()
    q, p = np.broadcast_arrays(np.asarray(q, float), np.asarray(p, float))
    k, t = params.k, params.t
    a = p * t - q
    d = k - p
    z = 2 * a * d
    small = np.abs(z) < _SERIES_CUTOFF
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.sin(z) / (np.pi * d)
    series = (2 * a / np.pi) * (1 - z * z / 6 + z ** 4 / 120)
    val = np.where(small, series, direct)
    step = np.where(a > 0, 1.0, np.where(a == 0, 0.5, 0.0))
    out = val * step
    return float(out) if out.ndim == 0 else out


def wigner_evaluator(params: ShutterParams):
    """Callable ``W(q, p)`` in the toolkit convention (``2*pi * wigner``)."""
    params.require_positive_time()
    return lambda q, p: 2 * np.pi * wigner(q, p, params)


def _tomogram(X, mu, nu, k, t):
    m = mu * t + nu
    prod = mu * m
    if np.any(prod <= 0):
        raise DomainError(
            "shutter tomogram needs mu*(mu*t + nu) > 0; "
            f"got mu*(mu*t+nu) = {np.min(prod):.6g}")
    # Written for mu > 0; mu < 0 follows from w(X, mu, nu) = w(-X, -mu, -nu).
    rho = np.sign(mu) * (k * m - X) / np.sqrt(2 * prod)
    c, s = fresnel(rho)
    return ((0.5 + c) ** 2 + (0.5 + s) ** 2) / (2 * np.abs(mu))


def tomogram(X, mu, nu, params: ShutterParams):
    """Shutter tomogram ((1/2 + C(rho))^2 + (1/2 + S(rho))^2) / (2|mu|).

    ``rho = (k(mu t + nu) - X) / sqrt(2 mu (mu t + nu))`` for ``mu > 0``.
    Defined only where ``mu (mu t + nu) > 0``; elsewhere raises
    :class:`DomainError`.
    """
    return tomogram_evaluator(params)(X, mu, nu)


def tomogram_evaluator(params: ShutterParams) -> Tomogram:
    params.require_positive_time()
    k, t = params.k, params.t
    return Tomogram(lambda X, mu, nu: _tomogram(X, mu, nu, k, t),
                    f"shutter(k={k:g}, t={t:g})")
