"""Grids, sampled fields, tomogram evaluators and trapezoid quadrature.

Units are dimensionless with hbar = m = 1. Wigner functions follow the
convention in which a normalizable state integrates to 2*pi over phase
space, so the ground state is ``W(q, p) = 2 exp(-q**2 - p**2)`` and the
Radon pair carries a plain ``1/(2*pi)`` in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


class DomainError(ValueError):
    """A point lies outside the region where an evaluator is defined."""


class PreconditionError(ValueError):
    """An input violates a documented precondition (e.g. an unnormalized state)."""


class DataError(ValueError):
    """Input data is inconsistent with its declared meaning (e.g. negative probabilities)."""


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid of ``n`` points from ``min`` to ``max`` inclusive."""

    min: float
    max: float
    n: int

    def __post_init__(self):
        if not (np.isfinite(self.min) and np.isfinite(self.max)):
            raise ValueError("grid bounds must be finite")
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"grid needs at least 2 points, got n={self.n}")
        if not self.max > self.min:
            raise ValueError(f"grid requires max > min, got [{self.min}, {self.max}]")
        object.__setattr__(self, "n", int(self.n))

    @property
    def h(self) -> float:
        return (self.max - self.min) / (self.n - 1)

    @property
    def points(self) -> np.ndarray:
        return self.min + np.arange(self.n) * self.h

    def point(self, i: int) -> float:
        return self.min + i * self.h

    def __len__(self):
        return self.n

    def refined(self) -> "Grid1D":
        """Same interval with the spacing halved."""
        return Grid1D(self.min, self.max, 2 * self.n - 1)

    @classmethod
    def parse(cls, text: str) -> "Grid1D":
        """Build a grid from ``"min:max:count"``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected min:max:count, got {text!r}")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]))


def integrate_1d(values, grid: Grid1D) -> float:
    """Composite trapezoid rule of ``values`` sampled on ``grid``."""
    values = np.asarray(values)
    if values.shape != (grid.n,):
        raise ValueError(f"expected {grid.n} samples, got shape {values.shape}")
    return float(np.trapezoid(values, dx=grid.h))


def integrate_2d(values, q_grid: Grid1D, p_grid: Grid1D) -> float:
    """Iterated trapezoid rule; ``values[i, j]`` sits at ``(q_i, p_j)``."""
    values = np.asarray(values)
    if values.shape != (q_grid.n, p_grid.n):
        raise ValueError(
            f"expected shape {(q_grid.n, p_grid.n)}, got {values.shape}")
    inner = np.trapezoid(values, dx=p_grid.h, axis=1)
    return float(np.trapezoid(inner, dx=q_grid.h))


def trapezoid_weights(grid: Grid1D) -> np.ndarray:
    w = np.full(grid.n, grid.h)
    w[0] = w[-1] = 0.5 * grid.h
    return w


@dataclass(frozen=True)
class WaveFunction:
    """Complex samples of psi(x) on a uniform position grid.

    The grid should be wide enough that psi has decayed to (numerically)
    zero at both ends; off-grid evaluation uses band-limited interpolation,
    which treats the samples as one period of a periodic signal.
    """

    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.n,):
            raise ValueError(
                f"wavefunction has {values.shape} samples for a grid of {self.grid.n}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, func: Callable, grid: Grid1D) -> "WaveFunction":
        return cls(grid, func(grid.points))

    @property
    def is_real(self) -> bool:
        return not np.any(self.values.imag)

    def norm(self) -> float:
        return integrate_1d(np.abs(self.values) ** 2, self.grid)

    def require_normalized(self, tol: float = 1e-6):
        norm = self.norm()
        if abs(norm - 1.0) > tol:
            raise PreconditionError(
                f"wavefunction norm is {norm:.9g}, expected 1 within {tol:g}")

    def shifted_samples(self, delta: float) -> np.ndarray:
        """Samples of psi(x_i + delta) by Fourier phase shift."""
        n = self.grid.n
        k = 2 * np.pi * np.fft.fftfreq(n, d=self.grid.h)
        phase = np.exp(1j * k * delta)
        if n % 2 == 0:
            # Nyquist bin has no well-defined sign of frequency.
            phase[n // 2] = np.cos(k[n // 2] * delta)
        out = np.fft.ifft(np.fft.fft(self.values) * phase)
        return out.real if self.is_real else out

    def __call__(self, x):
        """Band-limited interpolation of psi at arbitrary points inside the grid."""
        x = np.asarray(x, dtype=float)
        g = self.grid
        if np.any((x < g.min) | (x > g.max)):
            raise DomainError("wavefunction evaluated outside its grid")
        n = g.n
        k = 2 * np.pi * np.fft.fftfreq(n, d=g.h)
        coef = np.fft.fft(self.values) / n
        if n % 2 == 0:
            coef = coef.copy()
            nyq = coef[n // 2]
            coef[n // 2] = 0.0
        phases = np.exp(1j * np.multiply.outer(x - g.min, k))
        out = phases @ coef
        if n % 2 == 0:
            out = out + nyq * np.cos(np.pi * (x - g.min) / g.h)
        return out.real if self.is_real else out


@dataclass(frozen=True)
class WignerField:
    """Real Wigner samples ``values[i, j] = W(q_i, p_j)``."""

    q_grid: Grid1D
    p_grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values)
        if np.iscomplexobj(values):
            raise ValueError("Wigner samples must be real")
        values = values.astype(float)
        if values.shape != (self.q_grid.n, self.p_grid.n):
            raise ValueError(
                f"expected shape {(self.q_grid.n, self.p_grid.n)}, got {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def integral(self) -> float:
        return integrate_2d(self.values, self.q_grid, self.p_grid)

    def inside(self, q, p) -> np.ndarray:
        q, p = np.broadcast_arrays(np.asarray(q, float), np.asarray(p, float))
        return ((q >= self.q_grid.min) & (q <= self.q_grid.max)
                & (p >= self.p_grid.min) & (p <= self.p_grid.max))

    def __call__(self, q, p, outside: str = "raise"):
        """Bilinear interpolation. ``outside`` is ``"raise"`` or ``"zero"``."""
        q, p = np.broadcast_arrays(np.asarray(q, float), np.asarray(p, float))
        mask = self.inside(q, p)
        if outside == "raise" and not np.all(mask):
            raise DomainError("Wigner field evaluated outside its sampled box")
        if outside not in ("raise", "zero"):
            raise ValueError(f"unknown outside policy {outside!r}")
        qg, pg = self.q_grid, self.p_grid
        u = np.clip((q - qg.min) / qg.h, 0, qg.n - 1)
        v = np.clip((p - pg.min) / pg.h, 0, pg.n - 1)
        i = np.minimum(np.floor(u).astype(int), qg.n - 2)
        j = np.minimum(np.floor(v).astype(int), pg.n - 2)
        fu, fv = u - i, v - j
        f = self.values
        val = ((1 - fu) * (1 - fv) * f[i, j] + fu * (1 - fv) * f[i + 1, j]
               + (1 - fu) * fv * f[i, j + 1] + fu * fv * f[i + 1, j + 1])
        val = np.where(mask, val, 0.0)
        return float(val) if val.ndim == 0 else val


@dataclass(frozen=True)
class DensityMatrix:
    """Position-representation kernel ``values[i, j] = rho(x_i, x_j)``."""

    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.n, self.grid.n):
            raise ValueError(f"expected a {self.grid.n}x{self.grid.n} matrix")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def trace(self) -> float:
        return integrate_1d(np.diag(self.values).real, self.grid)

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.values - self.values.conj().T)))

    def weighted(self) -> np.ndarray:
        """Hermitian part of ``sqrt(w) rho sqrt(w)`` with trapezoid weights ``w``.

        Its eigenvalues approximate those of the operator.
        """
        sw = np.sqrt(trapezoid_weights(self.grid))
        m = sw[:, None] * self.values * sw[None, :]
        return 0.5 * (m + m.conj().T)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.weighted())

    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues()[0])

    def purity(self) -> float:
        """``Tr(rho^2) / Tr(rho)^2``."""
        m = self.weighted()
        tr = np.trace(m).real
        return float(np.sum(np.abs(m) ** 2) / tr ** 2)

    def fidelity(self, psi) -> float:
        """``<psi|rho|psi> / Tr(rho)`` for a pure target given as samples or a callable."""
        x = self.grid.points
        amp = psi(x) if callable(psi) else np.asarray(psi)
        w = trapezoid_weights(self.grid)
        v = amp * w
        return float((v.conj() @ self.values @ v).real / self.trace())


def _as_result(value):
    value = np.asarray(value)
    return float(value) if value.ndim == 0 else value


@dataclass(frozen=True)
class Tomogram:
    """A symplectic tomogram ``w(X, mu, nu)`` given as a vectorized evaluator.

    ``func`` receives broadcast float arrays and returns real values; it
    raises :class:`DomainError` for points outside its region of validity.
    """

    func: Callable = field(repr=False)
    name: str = "tomogram"

    def __call__(self, X, mu, nu):
        X, mu, nu = np.broadcast_arrays(
            np.asarray(X, float), np.asarray(mu, float), np.asarray(nu, float))
        return _as_result(self.func(X, mu, nu))

    def relabel(self, label_map: Callable, name: str | None = None) -> "Tomogram":
        """Tomogram evaluating ``self(X, *label_map(mu, nu))``."""
        base = self.func

        def func(X, mu, nu):
            m2, n2 = label_map(mu, nu)
            return base(*np.broadcast_arrays(X, m2, n2))

        return Tomogram(func, name or self.name)

    def scaled(self, factor: float) -> "Tomogram":
        base = self.func
        return Tomogram(lambda X, mu, nu: factor * base(X, mu, nu),
                        f"{factor:g}*{self.name}")


class OpticalTomogram(Tomogram):
    """Tomogram sampled on an optical ``(X, theta)`` grid.

    Values at general ``(X, mu, nu)`` follow from homogeneity:
    ``w(X, mu, nu) = w(X/r, cos(phi), sin(phi)) / r`` with
    ``r = hypot(mu, nu)`` and ``phi = atan2(nu, mu)``. Interpolation is
    bilinear in ``(X, theta)``; ``theta`` is periodic with period 2*pi and
    the grid must cover ``[0, 2*pi]``. Points whose scaled ``X`` leaves the
    sampled range raise :class:`DomainError`.
    """

    def __init__(self, x_grid: Grid1D, theta_grid: Grid1D, values, name: str = "optical"):
        values = np.asarray(values, dtype=float)
        if values.shape != (x_grid.n, theta_grid.n):
            raise ValueError(f"expected shape {(x_grid.n, theta_grid.n)}, got {values.shape}")
        if not (np.isclose(theta_grid.min, 0.0) and np.isclose(theta_grid.max, 2 * np.pi)):
            raise ValueError("theta grid must span [0, 2*pi]")
        self.x_grid = x_grid
        self.theta_grid = theta_grid
        self.values = values
        values.setflags(write=False)
        super().__init__(self._evaluate, name)

    def _evaluate(self, X, mu, nu):
        r = np.hypot(mu, nu)
        if np.any(r == 0):
            raise DomainError("tomogram undefined at mu = nu = 0")
        y = X / r
        xg, tg = self.x_grid, self.theta_grid
        if np.any((y < xg.min) | (y > xg.max)):
            raise DomainError("scaled X lies outside the sampled optical range")
        theta = np.mod(np.arctan2(nu, mu), 2 * np.pi)
        u = np.clip((y - xg.min) / xg.h, 0, xg.n - 1)
        v = np.clip(theta / tg.h, 0, tg.n - 1)
        i = np.minimum(np.floor(u).astype(int), xg.n - 2)
        j = np.minimum(np.floor(v).astype(int), tg.n - 2)
        fu, fv = u - i, v - j
        f = self.values
        val = ((1 - fu) * (1 - fv) * f[i, j] + fu * (1 - fv) * f[i + 1, j]
               + (1 - fu) * fv * f[i, j + 1] + fu * fv * f[i + 1, j + 1])
        return val / r

    @classmethod
    def sample(cls, tomogram: Tomogram, x_grid: Grid1D, theta_grid: Grid1D) -> "OpticalTomogram":
        """Sample an evaluator on the optical grid."""
        th = theta_grid.points
        X = x_grid.points[:, None]
        vals = tomogram(X, np.cos(th)[None, :], np.sin(th)[None, :])
        return cls(x_grid, theta_grid, vals, name=f"sampled {tomogram.name}")
