"""Analytic reference states: tomograms, Wigner functions and wavefunctions.

Every state here carries a closed-form tomogram. Normalizable states also
carry their Wigner function in the toolkit convention (phase-space integral
``2*pi``) and, when pure, a position wavefunction.
"""

from dataclasses import dataclass
from math import factorial
from typing import Callable, Optional

import numpy as np
from scipy.special import eval_genlaguerre, eval_hermite

from . import shutter as _shutter
from .core import DomainError, Grid1D, Tomogram, WaveFunction


@dataclass(frozen=True)
class State:
    name: str
    tomogram: Tomogram
    wigner: Optional[Callable] = None
    psi: Optional[Callable] = None
    normalizable: bool = True

    def wavefunction(self, grid: Grid1D) -> WaveFunction:
        if self.psi is None:
            raise ValueError(f"state {self.name!r} has no wavefunction")
        return WaveFunction.from_function(self.psi, grid)


def _require_direction(mu, nu):
    if np.any((mu == 0) & (nu == 0)):
        raise DomainError("tomogram undefined at mu = nu = 0")


def gaussian_tomogram(mean=(0.0, 0.0), cov=((0.5, 0.0), (0.0, 0.5)), name="gaussian"):
    """Tomogram of a Gaussian phase-space distribution.

    The quadrature ``X = mu q + nu p`` is normal with mean ``mu q0 + nu p0``
    and variance ``(mu, nu) cov (mu, nu)^T``.
    """
    q0, p0 = map(float, mean)
    (vq, c), (_, vp) = np.asarray(cov, float)

    def func(X, mu, nu):
        _require_direction(mu, nu)
        m = mu * q0 + nu * p0
        var = mu * mu * vq + 2 * mu * nu * c + nu * nu * vp
        return np.exp(-((X - m) ** 2) / (2 * var)) / np.sqrt(2 * np.pi * var)

    return Tomogram(func, name)


def gaussian(mean=(0.0, 0.0), cov=((0.5, 0.0), (0.0, 0.5)), name="gaussian") -> State:
    """Gaussian state with given first moments and covariance matrix.

    A wavefunction is attached when the covariance is diagonal with
    ``var_q * var_p = 1/4`` (a pure state).
    """
    mean = np.asarray(mean, float)
    cov = np.asarray(cov, float)
    inv = np.linalg.inv(cov)
    det = np.linalg.det(cov)

    def wigner(q, p):
        dq = np.asarray(q, float) - mean[0]
        dp = np.asarray(p, float) - mean[1]
        quad = inv[0, 0] * dq * dq + 2 * inv[0, 1] * dq * dp + inv[1, 1] * dp * dp
        return np.exp(-0.5 * quad) / np.sqrt(det)

    psi = None
    if cov[0, 1] == 0 and np.isclose(cov[0, 0] * cov[1, 1], 0.25, rtol=0, atol=1e-14):
        vq = cov[0, 0]
        q0, p0 = mean

        def psi(x):
            x = np.asarray(x, float)
            return ((2 * np.pi * vq) ** -0.25
                    * np.exp(-((x - q0) ** 2) / (4 * vq) + 1j * p0 * (x - q0)))

    return State(name, gaussian_tomogram(mean, cov, name), wigner, psi)


def ground() -> State:
    return gaussian(name="ground")


def coherent(q0: float, p0: float) -> State:
    return gaussian((q0, p0), name=f"coherent({q0:g},{p0:g})")


def squeezed(s: float) -> State:
    """Ground state stretched by ``s`` in position: variances s^2/2 and 1/(2 s^2)."""
    if not s > 0:
        raise DomainError(f"squeezing parameter must be positive, got {s}")
    return gaussian(cov=((s * s / 2, 0.0), (0.0, 1 / (2 * s * s))), name=f"squeezed({s:g})")


def subheisenberg(var: float) -> State:
    """Gaussian with equal variances ``var`` in q and p.

    For ``var < 1/2`` this is a valid classical phase-space density that
    violates the uncertainty relation, so it is not a quantum state.
    """
    if not var > 0:
        raise DomainError(f"variance must be positive, got {var}")
    return gaussian(cov=((var, 0.0), (0.0, var)), name=f"subheisenberg({var:g})")


def fock(n: int) -> State:
    """n-th oscillator eigenstate."""
    if n < 0 or int(n) != n:
        raise ValueError(f"Fock index must be a non-negative integer, got {n}")
    n = int(n)
    norm = 1.0 / (2 ** n * factorial(n))

    def func(X, mu, nu):
        _require_direction(mu, nu)
        r = np.hypot(mu, nu)
        y = X / r
        return norm * eval_hermite(n, y) ** 2 * np.exp(-y * y) / (np.sqrt(np.pi) * r)

    def wigner(q, p):
        r2 = np.asarray(q, float) ** 2 + np.asarray(p, float) ** 2
        return 2 * (-1) ** n * eval_genlaguerre(n, 0, 2 * r2) * np.exp(-r2)

    def psi(x):
        x = np.asarray(x, float)
        return (np.sqrt(norm) * np.pi ** -0.25 * eval_hermite(n, x) * np.exp(-x * x / 2)
                ).astype(complex)

    name = "ground" if n == 0 else f"fock({n})"
    return State(name, Tomogram(func, name), wigner, psi)


def excited1() -> State:
    s = fock(1)
    return State("excited1", Tomogram(s.tomogram.func, "excited1"), s.wigner, s.psi)


def shutter(k: float, t: float) -> State:
    params = _shutter.ShutterParams(k, t)
    return State(f"shutter({k:g},{t:g})", _shutter.tomogram_evaluator(params),
                 _shutter.wigner_evaluator(params), normalizable=False)


_BUILDERS = {
    "ground": (ground, 0),
    "excited1": (excited1, 0),
    "coherent": (coherent, 2),
    "squeezed": (squeezed, 1),
    "subheisenberg": (subheisenberg, 1),
    "shutter": (shutter, 2),
}


def parse_state(spec: str) -> State:
    """Resolve ``name``, ``name:a,b`` or ``name(a,b)`` into a builtin state.

    >>> parse_state("coherent:1,0.5").name
    'coherent(1,0.5)'
    """
    text = spec.strip()
    if "(" in text:
        if not text.endswith(")"):
            raise ValueError(f"malformed state spec {spec!r}")
        name, _, args = text[:-1].partition("(")
    else:
        name, _, args = text.partition(":")
    name = name.strip().lower()
    if name not in _BUILDERS:
        raise ValueError(f"unknown state {name!r}; known: {', '.join(_BUILDERS)}")
    builder, nargs = _BUILDERS[name]
    values = [float(a) for a in args.split(",")] if args.strip() else []
    if len(values) != nargs:
        raise ValueError(f"state {name!r} takes {nargs} parameter(s), got {len(values)}")
    return builder(*values)
