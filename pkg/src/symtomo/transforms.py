"""Radon pair between Wigner functions and tomograms, plus state bridges.

Forward:  w(X, mu, nu) = (1/2pi) int W(q, p) delta(X - mu q - nu p) dq dp
Inverse:  W(q, p) = (1/2pi) int w(X, mu, nu) exp(-i(mu q + nu p - X)) dmu dnu dX
Density:  rho(x, x') = (1/2pi) int w(X, mu, x - x') exp(i(X - mu (x + x')/2)) dX dmu

The inner X-integral of the last two is the characteristic function
``chi(mu, nu) = <exp(i(mu q + nu p))>``. It is computed on a window
``X in r * [-x_range, x_range]`` with ``r = hypot(mu, nu)``: a tomogram's
width in X grows like r, so a fixed window would truncate the broad
distributions at large |(mu, nu)|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (DataError, DensityMatrix, DomainError, Grid1D, Tomogram,
                   WaveFunction, WignerField, trapezoid_weights)


class WignerKernel:
    """Pointwise Wigner function of a wavefunction.

    ``W(q, p) = 2 int psi*(q + u) psi(q - u) exp(2ipu) du``, evaluated with
    ``u`` on the wavefunction's own spacing. Samples at ``q +- u`` are
    obtained by one Fourier phase shift per distinct ``q``, so ``q`` need
    not lie on the grid.
    """

    def __init__(self, psi: WaveFunction):
        self.psi = psi
        g = psi.grid
        self._spectrum = np.fft.fft(psi.values)
        self._k = 2 * np.pi * np.fft.fftfreq(g.n, d=g.h)
        self._real = psi.is_real

    def _shifted(self, delta):
        n = self.psi.grid.n
        phase = np.exp(1j * self._k * delta)
        if n % 2 == 0:
            phase[n // 2] = np.cos(self._k[n // 2] * delta)
        out = np.fft.ifft(self._spectrum * phase)
        return out.real if self._real else out

    def row(self, q: float, p) -> np.ndarray:
        """W(q, p) for one q and an array of p."""
        g = self.psi.grid
        p = np.asarray(p, float)
        u = (q - g.min) / g.h
        if u < -1e-9 or u > g.n - 1 + 1e-9:
            return np.zeros_like(p)
        i0 = min(max(int(np.floor(u)), 0), g.n - 1)
        shifted = self._shifted(q - (g.min + i0 * g.h))
        jmax = min(i0, g.n - 1 - i0)
        j = np.arange(1, jmax + 1)
        a0 = abs(shifted[i0]) ** 2
        aj = np.conj(shifted[i0 + j]) * shifted[i0 - j]
        angle = 2 * g.h * np.multiply.outer(p, j)
        if self._real:
            tail = np.cos(angle) @ aj
        else:
            tail = (np.cos(angle) @ aj.real) - (np.sin(angle) @ aj.imag)
        return 2 * g.h * (a0 + 2 * tail)

    def __call__(self, q, p):
        q, p = np.broadcast_arrays(np.asarray(q, float), np.asarray(p, float))
        out = np.empty(q.shape)
        flat_q, flat_p, flat_out = q.ravel(), p.ravel(), out.reshape(-1)
        uq, inv = np.unique(flat_q, return_inverse=True)
        for idx, qv in enumerate(uq):
            sel = inv == idx
            flat_out[sel] = self.row(qv, flat_p[sel])
        return float(out) if out.ndim == 0 else out


def wigner_evaluator(psi: WaveFunction, norm_tol: float = 1e-6) -> WignerKernel:
    psi.require_normalized(norm_tol)
    return WignerKernel(psi)


def wigner_from_wavefunction(psi: WaveFunction, q_grid: Grid1D, p_grid: Grid1D,
                             norm_tol: float = 1e-6) -> WignerField:
    """Sample the Wigner function of a normalized wavefunction on a grid."""
    kernel = wigner_evaluator(psi, norm_tol)
    values = np.array([kernel.row(q, p_grid.points) for q in q_grid.points])
    return WignerField(q_grid, p_grid, values)


def _line(X, mu, nu, s):
    r = np.hypot(mu, nu)
    X = np.asarray(X, float)[..., None]
    q = X * mu / r ** 2 - s * nu / r
    p = X * nu / r ** 2 + s * mu / r
    return q, p, r


def radon_forward(wigner, X, mu, nu, *, half_width=None, n=None, damping=0.0,
                  return_info=False):
    """Tomogram value from a Wigner function by integrating along ``mu q + nu p = X``.

    The line is parametrized by arc length ``s`` about its foot point, so
    the integral becomes ``(1/(2 pi r)) int W ds`` with ``r = hypot(mu, nu)``.
    ``wigner`` is a :class:`WignerField` (bilinear, zero outside its box) or
    a callable ``W(q, p)``. ``damping`` multiplies the integrand by
    ``exp(-damping * s**2)``, which regularizes non-integrable fields.

    With ``return_info=True`` a dict is returned alongside the value; its
    ``"truncated"`` entry is set when a sampled field is still non-negligible
    where the line leaves the sampled box.
    """
    mu, nu = float(mu), float(nu)
    if mu == 0 and nu == 0:
        raise DomainError("Radon transform undefined for mu = nu = 0")
    sampled = isinstance(wigner, WignerField)
    if sampled:
        qg, pg = wigner.q_grid, wigner.p_grid
        if half_width is None:
            half_width = 0.5 * np.hypot(qg.max - qg.min, pg.max - pg.min) + np.hypot(
                max(abs(qg.min), abs(qg.max)), max(abs(pg.min), abs(pg.max)))
        if n is None:
            n = int(np.ceil(2 * half_width / (0.5 * min(qg.h, pg.h)))) + 1
    else:
        half_width = 10.0 if half_width is None else half_width
        n = 2001 if n is None else n
    s = np.linspace(-half_width, half_width, n)
    q, p, r = _line(X, mu, nu, s)
    info = {"truncated": False}
    if sampled:
        vals = wigner(q, p, outside="zero")
        inside = wigner.inside(q, p)
        peak = np.max(np.abs(wigner.values))
        edge = np.abs(vals) * (inside & ~np.roll(inside, 1, axis=-1)) + np.abs(vals) * (
            inside & ~np.roll(inside, -1, axis=-1))
        info["truncated"] = bool(np.any(edge > 1e-9 * peak))
    else:
        vals = np.asarray(wigner(q, p), float)
    if damping:
        vals = vals * np.exp(-damping * s * s)
    value = np.trapezoid(vals, s, axis=-1) / (2 * np.pi * r)
    value = float(value) if np.ndim(value) == 0 else value
    return (value, info) if return_info else value


@dataclass(frozen=True)
class InverseRadonConfig:
    """Quadrature settings for the inverse transforms.

    ``cutoff`` is the radius R of the disk kept in the (mu, nu) plane,
    ``regularization`` the coefficient eps of the damping
    ``exp(-eps (mu^2 + nu^2))``, ``x_range`` the half-width of the X window
    in units of ``hypot(mu, nu)``.
    """

    cutoff: float = 8.0
    regularization: float = 1e-4
    n_x: int = 256
    n_mu: int = 256
    n_nu: int = 256
    x_range: float = 10.0

    def __post_init__(self):
        if not self.cutoff > 0:
            raise ValueError("cutoff must be positive")
        if not self.regularization > 0:
            raise ValueError("regularization must be positive")
        if not self.x_range > 0:
            raise ValueError("x_range must be positive")
        if min(self.n_x, self.n_mu, self.n_nu) < 16:
            raise ValueError("quadrature counts must be at least 16")

    def refined(self) -> "InverseRadonConfig":
        """Same truncation with every quadrature step halved."""
        return InverseRadonConfig(self.cutoff, self.regularization, 2 * self.n_x - 1,
                                  2 * self.n_mu - 1, 2 * self.n_nu - 1, self.x_range)

    def mu_grid(self) -> Grid1D:
        return Grid1D(-self.cutoff, self.cutoff, self.n_mu)

    def nu_grid(self) -> Grid1D:
        return Grid1D(-self.cutoff, self.cutoff, self.n_nu)


def _mirrored(grid: Grid1D) -> np.ndarray:
    # Nodes of a grid symmetric about 0 with exact pairs -x, x, so that the
    # (mu, nu) -> (-mu, -nu) partner terms cancel to rounding and the disk
    # mask keeps both members of every pair.
    pts = grid.points
    return 0.5 * (pts - pts[::-1])


def characteristic(tomogram: Tomogram, mu, nu, cfg: InverseRadonConfig) -> np.ndarray:
    """``chi(mu, nu) = int w(X, mu, nu) exp(iX) dX`` on the scaled X window."""
    mu, nu = np.broadcast_arrays(np.asarray(mu, float), np.asarray(nu, float))
    y_grid = Grid1D(-cfg.x_range, cfg.x_range, cfg.n_x)
    y = _mirrored(y_grid)
    wy = trapezoid_weights(y_grid)
    out = np.ones(mu.shape, dtype=complex)
    r = np.hypot(mu, nu)
    nz = r > 0
    if np.any(nz):
        rr = r[nz][:, None]
        X = rr * y[None, :]
        vals = np.asarray(tomogram(X, mu[nz][:, None], nu[nz][:, None]), float)
        out[nz] = (vals * np.exp(1j * X)) @ wy * r[nz]
    return out


class ReconstructedWigner:
    """Wigner function rebuilt from a tomogram by the damped inverse transform.

    The characteristic function is tabulated once at construction; calls
    then cost one 2D sum per point.
    """

    def __init__(self, tomogram: Tomogram, cfg: InverseRadonConfig | None = None):
        cfg = InverseRadonConfig() if cfg is None else cfg
        self.cfg = cfg
        mg, ng = cfg.mu_grid(), cfg.nu_grid()
        self.mu = _mirrored(mg)
        self.nu = _mirrored(ng)
        coef = np.zeros((mg.n, ng.n), dtype=complex)
        wm, wn = trapezoid_weights(mg), trapezoid_weights(ng)
        for a, m in enumerate(self.mu):
            r2 = m * m + self.nu ** 2
            keep = r2 <= cfg.cutoff ** 2
            if not np.any(keep):
                continue
            chi = characteristic(tomogram, m, self.nu[keep], cfg)
            coef[a, keep] = wm[a] * wn[keep] * chi * np.exp(-cfg.regularization * r2[keep])
        self._coef = coef / (2 * np.pi)

    def __call__(self, q, p):
        q, p = np.broadcast_arrays(np.asarray(q, float), np.asarray(p, float))
        fq, fp = q.ravel(), p.ravel()
        out = np.empty(fq.shape)
        chunk = 2048
        for lo in range(0, fq.size, chunk):
            sq, sp = fq[lo:lo + chunk], fp[lo:lo + chunk]
            A = np.exp(-1j * np.multiply.outer(self.mu, sq))
            B = np.exp(-1j * np.multiply.outer(self.nu, sp))
            val = np.sum(A * (self._coef @ B), axis=0)
            bad = np.abs(val.imag) > 1e-6 * (1 + np.abs(val.real))
            if np.any(bad):
                raise DataError(
                    "inverse transform left an imaginary residue "
                    f"{np.max(np.abs(val.imag[bad])):.3g}; the tomogram is not "
                    "symmetric under (X, mu, nu) -> (-X, -mu, -nu)")
            out[lo:lo + chunk] = val.real
        out = out.reshape(q.shape)
        return float(out) if out.ndim == 0 else out

    def field(self, q_grid: Grid1D, p_grid: Grid1D) -> WignerField:
        Q, P = np.meshgrid(q_grid.points, p_grid.points, indexing="ij")
        return WignerField(q_grid, p_grid, self(Q, P))


def wigner_from_tomogram(tomogram: Tomogram, cfg: InverseRadonConfig | None = None):
    return ReconstructedWigner(tomogram, cfg)


def inverse_radon(tomogram: Tomogram, q, p, cfg: InverseRadonConfig | None = None):
    """Regularized Wigner value(s) at ``(q, p)`` reconstructed from ``tomogram``."""
    return ReconstructedWigner(tomogram, cfg)(q, p)


def _free_propagated(psi: WaveFunction, tau: float) -> WaveFunction:
    g = psi.grid
    k = 2 * np.pi * np.fft.fftfreq(g.n, d=g.h)
    values = np.fft.ifft(np.fft.fft(psi.values) * np.exp(-0.5j * k * k * tau))
    edge = max(1, g.n // 50)
    rim = np.max(np.abs(np.concatenate([values[:edge], values[-edge:]])))
    if rim > 1e-8 * np.max(np.abs(values)):
        raise ValueError(f"wavefunction grid too small: the packet reaches the edge "
                         f"after free spreading by {tau:g}")
    return WaveFunction(g, values)


def tomogram_from_wavefunction(psi: WaveFunction, X, mu, nu):
    """Tomogram of a pure state as a squared fractional-Fourier overlap.

    For ``nu != 0``::

        w = |int psi(y) exp(i mu y^2 / (2 nu) - i X y / nu) dy|^2 / (2 pi |nu|)

    This chirp is only resolved by the grid when |nu| is not small. For
    ``|nu| < |mu|`` the equivalent form ``w = |psi_tau(X/mu)|^2 / |mu|`` is
    used instead, where ``psi_tau`` is psi after free motion for
    ``tau = nu/mu`` (an exact Fourier multiplier on the grid). Values the
    grid cannot represent raise ``ValueError`` rather than being aliased.
    """
    X, mu, nu = np.broadcast_arrays(np.asarray(X, float), np.asarray(mu, float),
                                    np.asarray(nu, float))
    if np.any((mu == 0) & (nu == 0)):
        raise DomainError("tomogram undefined at mu = nu = 0")
    g = psi.grid
    y = g.points
    wy = trapezoid_weights(g)
    amp = psi.values
    support = np.abs(amp) > 1e-10 * np.max(np.abs(amp))
    ys = y[support]
    out = np.empty(X.shape)
    fx, fm, fn, fo = X.ravel(), mu.ravel(), nu.ravel(), out.reshape(-1)
    pairs, inv = np.unique(np.stack([fm, fn], axis=1), axis=0, return_inverse=True)
    inv = inv.ravel()
    for idx, (m, v) in enumerate(pairs):
        sel = inv == idx
        xs = fx[sel]
        if abs(v) < abs(m):
            moved = psi if v == 0 else _free_propagated(psi, v / m)
            arg = xs / m
            inside = (arg >= g.min) & (arg <= g.max)
            vals = np.zeros_like(xs)
            if np.any(inside):
                vals[inside] = np.abs(moved(arg[inside])) ** 2 / abs(m)
            fo[sel] = vals
            continue
        fmax = np.max(np.abs(np.subtract.outer(xs, m * ys))) / abs(v)
        if fmax * g.h > np.pi:
            raise ValueError(
                f"wavefunction grid too coarse for the chirp at mu={m:g}, nu={v:g}")
        chirped = amp * wy * np.exp(0.5j * m * y * y / v)
        overlap = np.exp(-1j * np.multiply.outer(xs, y) / v) @ chirped
        fo[sel] = np.abs(overlap) ** 2 / (2 * np.pi * abs(v))
    return float(out) if out.ndim == 0 else out


def tomogram_of(psi: WaveFunction, norm_tol: float = 1e-6) -> Tomogram:
    """Wrap :func:`tomogram_from_wavefunction` as a tomogram evaluator."""
    psi.require_normalized(norm_tol)
    return Tomogram(lambda X, mu, nu: tomogram_from_wavefunction(psi, X, mu, nu),
                    "pure state")


def density_matrix_from_tomogram(tomogram: Tomogram, x_grid: Grid1D,
                                 cfg: InverseRadonConfig | None = None) -> DensityMatrix:
    """Position-space density matrix from a tomogram.

    ``nu`` is fixed to ``x - x'`` by the translation matrix element, so only
    the X and mu integrals remain; the damping acts on mu alone.
    """
    cfg = InverseRadonConfig() if cfg is None else cfg
    n = x_grid.n
    x = x_grid.points
    mg = cfg.mu_grid()
    mu = _mirrored(mg)
    wmu = trapezoid_weights(mg) * np.exp(-cfg.regularization * mu * mu)
    diffs = np.arange(-(n - 1), n)
    chi = np.empty((mu.size, diffs.size), dtype=complex)
    for col, d in enumerate(diffs):
        try:
            chi[:, col] = characteristic(tomogram, mu, np.full(mu.shape, d * x_grid.h), cfg)
        except DomainError as exc:
            i = max(d, 0)
            raise DomainError(
                f"tomogram undefined for the pair (x, x') = ({x[i]:g}, {x[i - d]:g}): {exc}"
            ) from exc
    D = np.subtract.outer(np.arange(n), np.arange(n)) + (n - 1)
    S = 0.5 * np.add.outer(x, x)
    rho = np.zeros((n, n), dtype=complex)
    for a in range(mu.size):
        rho += wmu[a] * chi[a][D] * np.exp(-1j * mu[a] * S)
    return DensityMatrix(x_grid, rho / (2 * np.pi))
