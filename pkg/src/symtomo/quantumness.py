"""Certification of tomograms: normalization, homogeneity, entropy, positivity.

A tomogram describes a quantum state when the density operator rebuilt
from it is positive, and a classical state when the rebuilt phase-space
function is nonnegative. Conjugate-frame entropies of a quantum state obey
``S(theta) + S(theta + pi/2) >= ln(pi e)``; classical densities may break it.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .core import DataError, Grid1D, Tomogram, integrate_1d
from .transforms import (InverseRadonConfig, characteristic,
                         density_matrix_from_tomogram, wigner_from_tomogram)

ENTROPY_BOUND = float(np.log(np.pi * np.e))
_UNDERFLOW = 1e-300


def check_normalization(tomogram: Tomogram, mu: float, nu: float, x_range: Grid1D) -> float:
    """|int w(X, mu, nu) dX - 1| over ``x_range``."""
    values = np.asarray(tomogram(x_range.points, mu, nu), float)
    return abs(integrate_1d(values, x_range) - 1.0)


def check_homogeneity(tomogram: Tomogram, samples, lam: float) -> float:
    """max |lam * w(lam X, lam mu, lam nu) - w(X, mu, nu)| over ``samples`` rows (X, mu, nu)."""
    if not lam > 0:
        raise ValueError(f"scale factor must be positive, got {lam}")
    pts = np.asarray(samples, float).reshape(-1, 3)
    X, mu, nu = pts.T
    base = np.asarray(tomogram(X, mu, nu))
    scaled = np.asarray(tomogram(lam * X, lam * mu, lam * nu))
    return float(np.max(np.abs(lam * scaled - base)))


def _entropy_of(values, x_range: Grid1D) -> float:
    values = np.asarray(values, float)
    if np.any(values < -1e-12):
        raise DataError(f"tomogram takes negative value {values.min():.3g}")
    safe = np.where(values > _UNDERFLOW, values, 1.0)
    integrand = np.where(values > _UNDERFLOW, -values * np.log(safe), 0.0)
    return integrate_1d(integrand, x_range)


def tomographic_entropy(tomogram: Tomogram, theta: float, x_range: Grid1D) -> float:
    """-int w ln w dX in the optical frame (mu, nu) = (cos theta, sin theta)."""
    values = tomogram(x_range.points, np.cos(theta), np.sin(theta))
    return _entropy_of(values, x_range)


class EntropicResult(NamedTuple):
    sum: float
    bound: float
    satisfied: bool


def entropic_quantumness(tomogram: Tomogram, theta: float, x_range: Grid1D,
                         slack: float = 1e-6) -> EntropicResult:
    """Entropy in frame (cos, sin) plus entropy in frame (sin, -cos), against ln(pi e)."""
    s1 = _entropy_of(tomogram(x_range.points, np.cos(theta), np.sin(theta)), x_range)
    s2 = _entropy_of(tomogram(x_range.points, np.sin(theta), -np.cos(theta)), x_range)
    total = s1 + s2
    return EntropicResult(total, ENTROPY_BOUND, bool(total >= ENTROPY_BOUND - slack))


@dataclass(frozen=True)
class QuantumnessReport:
    normalization_error: float
    homogeneity_error: float
    entropy_sum: float
    entropy_bound: float
    rho_min_eigenvalue: float
    wigner_min_value: float
    verdict: str
    rho_trace: float
    cutoff_residue: float

    def as_dict(self) -> dict:
        return asdict(self)


_HOMOGENEITY_SAMPLES = np.array([
    [0.3, 1.0, 0.0], [-0.7, 0.6, 0.8], [1.1, -0.4, 1.3],
    [0.0, 0.2, -0.9], [-1.5, 1.7, 0.5],
])


def verdict_from(rho_ok: bool, wigner_ok: bool) -> str:
    if rho_ok and wigner_ok:
        return "both"
    if rho_ok:
        return "quantum"
    if wigner_ok:
        return "classical"
    return "neither"


def classify_state(tomogram: Tomogram, cfg: InverseRadonConfig | None = None,
                   x_grid: Grid1D | None = None, tolerance: float = 1e-6, *,
                   wigner_tolerance: float = 1e-4, scan: Grid1D | None = None,
                   x_range: Grid1D | None = None, theta: float = 0.0) -> QuantumnessReport:
    """Reconstruct rho and W from ``tomogram`` and test both for positivity.

    ``x_grid`` is the position grid of the density matrix; ``scan`` the
    grid (used for both q and p) on which the Wigner minimum is searched;
    ``x_range`` the X grid for normalization and entropy. The density
    matrix is declared positive when its smallest grid-weighted eigenvalue
    is at least ``-tolerance * max(1, ||rho||)``; the Wigner function when
    its minimum is at least ``-wigner_tolerance``.

    ``cutoff_residue`` is the largest |chi| on the truncation circle; when
    it is not small the regularized Wigner function rings and may show
    spurious negativity.
    """
    cfg = InverseRadonConfig() if cfg is None else cfg
    x_grid = Grid1D(-6.0, 6.0, 64) if x_grid is None else x_grid
    scan = Grid1D(-5.0, 5.0, 41) if scan is None else scan
    x_range = Grid1D(-12.0, 12.0, 2401) if x_range is None else x_range

    frames = [(1.0, 0.0), (0.0, 1.0), (np.cos(theta), np.sin(theta))]
    norm_err = max(check_normalization(tomogram, m, n, x_range) for m, n in frames)
    hom_err = check_homogeneity(tomogram, _HOMOGENEITY_SAMPLES, 2.0)
    ent = entropic_quantumness(tomogram, theta, x_range)

    rho = density_matrix_from_tomogram(tomogram, x_grid, cfg)
    eig = rho.eigenvalues()
    rho_min = float(eig[0])
    rho_scale = max(1.0, float(np.max(np.abs(eig))))

    wig = wigner_from_tomogram(tomogram, cfg)
    Q, P = np.meshgrid(scan.points, scan.points, indexing="ij")
    w_min = float(np.min(wig(Q, P)))

    phi = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    residue = float(np.max(np.abs(characteristic(
        tomogram, cfg.cutoff * np.cos(phi), cfg.cutoff * np.sin(phi), cfg))))

    verdict = verdict_from(rho_min >= -tolerance * rho_scale, w_min >= -wigner_tolerance)
    return QuantumnessReport(
        normalization_error=norm_err, homogeneity_error=hom_err,
        entropy_sum=ent.sum, entropy_bound=ent.bound,
        rho_min_eigenvalue=rho_min, wigner_min_value=w_min, verdict=verdict,
        rho_trace=rho.trace(), cutoff_residue=residue)
