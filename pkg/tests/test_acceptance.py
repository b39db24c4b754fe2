"""Acceptance criteria, one test per criterion at the stated tolerance.

Each test prints a one-line PASS/FAIL summary with the measured figure;
the terminal summary collects them under "acceptance criteria".
"""

import hashlib
import subprocess
import sys

import numpy as np
import pytest

from oracles import fresnel_by_quadrature
from symtomo import shutter, states
from symtomo.core import Grid1D
from symtomo.evolution import evolve_free, evolve_oscillator, pde_residual, trajectory
from symtomo.quantumness import ENTROPY_BOUND, classify_state, entropic_quantumness
from symtomo.shutter import ShutterParams
from symtomo.specfun import fresnel_c, fresnel_s, moshinsky_amplitude
from symtomo.symplectic import apply_canonical, rotation
from symtomo.transforms import (InverseRadonConfig, density_matrix_from_tomogram, radon_forward,
                                tomogram_from_wavefunction, wigner_evaluator,
                                wigner_from_tomogram)

pytestmark = pytest.mark.acceptance


def report(label, ok, detail):
    print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
    assert ok, detail


def test_criterion_01_fresnel_matches_quadrature():
    w = np.linspace(-10, 10, 200)
    err = 0.0
    for x in w:
        c, s = fresnel_by_quadrature(x)
        err = max(err, abs(fresnel_c(x) - c), abs(fresnel_s(x) - s))
    report("1 Fresnel oracle", err <= 1e-9, f"max abs error {err:.2e} (tol 1e-9)")


def test_criterion_02a_shutter_front_value():
    err = max(abs(shutter.density(k * t, ShutterParams(k, t)) - 0.25)
              for k, t in [(1, 1), (1, 4), (2, 0.5)])
    report("2a wavefront value", err <= 1e-12, f"max |density(kt) - 1/4| = {err:.1e}")


def test_criterion_02b_shutter_far_field_limits():
    # Ahead of the front the density falls off like t/(x - kt)^2, but behind
    # it the ripple decays only like 1/|x - kt|: at 40 sqrt(t) its amplitude
    # is still about 0.02, so the 1e-2 tolerance on the "1" side cannot hold.
    worst_ahead = worst_behind = 0.0
    for k, t in [(1, 1), (1, 4), (2, 0.5)]:
        p = ShutterParams(k, t)
        worst_ahead = max(worst_ahead, shutter.density(k * t + 40 * np.sqrt(t), p))
        worst_behind = max(worst_behind, abs(shutter.density(k * t - 40 * np.sqrt(t), p) - 1))
    ok = worst_ahead <= 1e-2 and worst_behind <= 1e-2
    report("2b far-field limits", ok,
           f"ahead {worst_ahead:.2e}, behind |d-1| {worst_behind:.2e} (tol 1e-2)")


def test_criterion_03_moshinsky_matches_density():
    err = 0.0
    for x in np.linspace(-10, 10, 10):
        for t in np.linspace(0.2, 5, 10):
            m = moshinsky_amplitude(x, 1.0, t, method="quadrature")
            err = max(err, abs(abs(m) ** 2 - shutter.density(x, ShutterParams(1.0, t))))
    report("3 Moshinsky vs density", err <= 1e-6, f"max error {err:.2e} on 10x10 grid")


def _shutter_radon(W, X, mu, nu, eps=1e-4):
    # The shutter Wigner function decays only like 1/p along a line, so the
    # line integral is taken with Gaussian damping and extrapolated to zero
    # damping (error of the damped value is linear in eps).
    kw = dict(half_width=400.0, n=2 ** 20 + 1)
    f1 = radon_forward(W, X, mu, nu, damping=eps, **kw)
    f2 = radon_forward(W, X, mu, nu, damping=eps / 4, **kw)
    return (4 * f2 - f1) / 3


@pytest.mark.slow
def test_criterion_04_shutter_wigner_to_tomogram():
    rng = np.random.default_rng(2024)
    err, count = 0.0, 0
    while count < 20:
        t, k = rng.uniform(0.5, 3), rng.uniform(0.5, 1.5)
        X, mu, nu = rng.uniform(-3, 3), rng.uniform(-2, 2), rng.uniform(-2, 2)
        if mu * (mu * t + nu) <= 0.05:
            continue
        p = ShutterParams(k, t)
        val = _shutter_radon(shutter.wigner_evaluator(p), X, mu, nu)
        err = max(err, abs(val - shutter.tomogram(X, mu, nu, p)))
        count += 1
    report("4 Wigner->tomogram (shutter)", err <= 2e-3, f"max error {err:.2e} at 20 points")


@pytest.fixture(scope="module")
def ground_reconstruction():
    return wigner_from_tomogram(states.ground().tomogram)


def test_criterion_05_gaussian_radon_pair(ground_reconstruction):
    rec = ground_reconstruction
    e0 = abs(rec(0.0, 0.0) - 2.0)
    e1 = abs(rec(1.0, 1.0) - 2 * np.exp(-2))
    w = states.ground().tomogram
    pts = [(0.0, 1.0, 0.0), (0.5, 0.6, 0.8), (-1.0, 0.0, 1.0), (1.2, -0.7, 0.7), (0.3, 1.5, -0.5)]
    trip = max(abs(radon_forward(rec, X, mu, nu, half_width=8.0, n=801) - w(X, mu, nu))
               for X, mu, nu in pts)
    ok = e0 <= 2e-3 and e1 <= 2e-3 and trip <= 5e-3
    report("5 Gaussian Radon pair", ok,
           f"|W(0,0)-2| {e0:.1e}, |W(1,1)-2e^-2| {e1:.1e}, round trip {trip:.1e}")


def test_criterion_06_route_equivalence():
    rng = np.random.default_rng(6)
    grid = Grid1D(-10, 10, 2001)
    err = 0.0
    for state in (states.ground(), states.excited1()):
        psi = state.wavefunction(grid)
        kern = wigner_evaluator(psi)
        for _ in range(20):
            theta, s = rng.uniform(0, 2 * np.pi), rng.uniform(0.6, 1.6)
            X, mu, nu = rng.uniform(-2, 2), s * np.cos(theta), np.sin(theta) / s
            a = tomogram_from_wavefunction(psi, X, mu, nu)
            b = radon_forward(kern, X, mu, nu, half_width=10.0, n=801)
            err = max(err, abs(a - b))
    report("6 route equivalence", err <= 1e-6, f"max difference {err:.2e} (40 points)")


def test_criterion_07_homogeneity():
    rng = np.random.default_rng(7)
    sh = shutter.tomogram_evaluator(ShutterParams(1.0, 2.0))
    ga = states.ground().tomogram
    err = 0.0
    for lam in (0.5, 2.0):
        for _ in range(10):
            X, mu, nu = rng.uniform(-3, 3), rng.uniform(0.2, 2), rng.uniform(0, 2)
            err = max(err, abs(lam * sh(lam * X, lam * mu, lam * nu) - sh(X, mu, nu)))
            X, mu, nu = rng.uniform(-3, 3, 3)
            err = max(err, abs(lam * ga(lam * X, lam * mu, lam * nu) - ga(X, mu, nu)))
    report("7 homogeneity", err <= 1e-12, f"max defect {err:.1e}")


def test_criterion_08_free_flow_exact():
    rng = np.random.default_rng(8)
    w1 = shutter.tomogram_evaluator(ShutterParams(1.0, 1.0))
    err = 0.0
    for _ in range(20):
        tau = rng.uniform(0, 3)
        X, mu, nu = rng.uniform(-3, 3), rng.uniform(0.2, 2), rng.uniform(0, 2)
        val = evolve_free(w1, tau)(X, mu, nu)
        err = max(err, abs(val - shutter.tomogram(X, mu, nu, ShutterParams(1.0, 1.0 + tau))))
    report("8 free flow", err <= 1e-12, f"max error {err:.1e}")


def test_criterion_09_oscillator_flow():
    w = states.coherent(1.2, -0.8).tomogram
    f = trajectory(w, "oscillator")
    point = (0.5, 1.0, 0.5, 0.7)
    ratio = pde_residual(f, "oscillator", point, 1e-2) / pde_residual(f, "oscillator", point, 5e-3)
    rng = np.random.default_rng(9)
    period = rot = 0.0
    for _ in range(20):
        X, mu, nu = rng.uniform(-2, 2, 3)
        t = rng.uniform(-4, 4)
        period = max(period, abs(evolve_oscillator(w, 2 * np.pi)(X, mu, nu) - w(X, mu, nu)))
        rot = max(rot, abs(evolve_oscillator(w, t)(X, mu, nu)
                           - apply_canonical(w, rotation(t))(X, mu, nu)))
    ok = 3.5 <= ratio <= 4.5 and period <= 1e-12 and rot <= 1e-12
    report("9 oscillator flow", ok,
           f"residual ratio {ratio:.3f}, period error {period:.1e}, vs rotation {rot:.1e}")


def test_criterion_10_entropic_inequality():
    xr = Grid1D(-12, 12, 2401)
    ground = max(abs(entropic_quantumness(states.ground().tomogram, th, xr).sum - ENTROPY_BOUND)
                 for th in (0.0, 0.3, np.pi / 4))
    sq = entropic_quantumness(states.squeezed(2.0).tomogram, np.pi / 4, Grid1D(-30, 30, 6001))
    sq_err = abs(sq.sum - ENTROPY_BOUND - np.log(2.125))
    sub = entropic_quantumness(states.subheisenberg(0.1).tomogram, 0.0, xr)
    ok = ground <= 1e-4 and sq_err <= 1e-3 and not sub.satisfied
    report("10 entropic inequality", ok,
           f"ground {ground:.1e}, squeezed {sq_err:.1e}, sub-Heisenberg sum {sub.sum:.4f} "
           f"< bound {ENTROPY_BOUND:.4f}")


@pytest.mark.slow
def test_criterion_11_classification():
    inputs = {"ground": states.ground().tomogram, "excited1": states.excited1().tomogram,
              "subheisenberg": states.subheisenberg(0.1).tomogram}
    coarse = {k: classify_state(w) for k, w in inputs.items()}
    fine_cfg = InverseRadonConfig().refined()
    fine = {k: classify_state(w, fine_cfg, x_range=Grid1D(-12, 12, 2401).refined())
            for k, w in inputs.items()}
    ok = (coarse["ground"].verdict == "both"
          and coarse["excited1"].verdict == "quantum"
          and abs(coarse["excited1"].wigner_min_value + 2) <= 0.05
          and coarse["subheisenberg"].verdict not in ("quantum", "both")
          and coarse["subheisenberg"].rho_min_eigenvalue < -1e-6
          and all(coarse[k].verdict == fine[k].verdict for k in inputs))
    detail = ", ".join(f"{k}: {coarse[k].verdict}/{fine[k].verdict}" for k in inputs)
    report("11 classification", ok,
           f"{detail}; excited Wmin {coarse['excited1'].wigner_min_value:.4f}")


def test_criterion_12_density_matrix():
    rho = density_matrix_from_tomogram(states.ground().tomogram, Grid1D(-5, 5, 64))
    tr, herm, lam = rho.trace(), rho.hermiticity_defect(), rho.min_eigenvalue()
    fid = rho.fidelity(states.ground().psi)
    ok = abs(tr - 1) <= 1e-3 and herm <= 1e-6 and lam >= -1e-6 and fid >= 0.999
    report("12 density matrix", ok,
           f"trace {tr:.6f}, hermiticity {herm:.1e}, min eig {lam:.1e}, fidelity {fid:.5f}")


_RUNS = {
    "shutter": ["shutter", "--k", "1", "--t", "4", "--x", "-10:30:401"],
    "transform": ["transform", "--dir", "rho", "--state", "ground", "--xgrid", "-5:5:64"],
    "check": ["check", "--state", "excited1", "--n", "128"],
    "evolve": ["evolve", "--state", "shutter:1,1", "--kind", "free", "--t", "2",
               "--X", "-3:3:13", "--mu", "1", "--nu", "0:1:5"],
}
_GUARDED = [
    (["shutter", "--repr", "tomogram", "--t", "1", "--mu", "1", "--nu", "-2"], 2),
    (["shutter", "--t", "0"], 2),
    (["evolve", "--kind", "anharmonic", "--t", "1"], 2),
    (["transform", "--dir", "rho", "--state", "shutter:1,1", "--xgrid", "-2:2:5"], 2),
    (["check", "--state", "subheisenberg:0.1", "--n", "128"], 1),
    (["shutter", "--x", "1:2"], 3),
]


def _cli(args):
    return subprocess.run([sys.executable, "-m", "symtomo.cli", *args],
                          capture_output=True, text=True)


def test_criterion_13_cli_determinism(tmp_path):
    mismatched = []
    for name, argv in _RUNS.items():
        digests = []
        for i in range(2):
            out = tmp_path / f"{name}{i}" / "result.out"
            out.parent.mkdir()
            res = _cli(argv + ["--out", str(out)])
            assert res.returncode == 0, res.stderr
            digests.append(tuple(hashlib.sha256(p.read_bytes()).hexdigest()
                                 for p in sorted(out.parent.iterdir())))
        if digests[0] != digests[1] or len(digests[0]) != 2:
            mismatched.append(name)
    wrong_codes = [(argv, code, _cli(argv).returncode) for argv, code in _GUARDED
                   if _cli(argv).returncode != code]
    ok = not mismatched and not wrong_codes
    report("13 CLI determinism and exit codes", ok,
           f"non-identical reruns: {mismatched or 'none'}; "
           f"wrong exit codes: {wrong_codes or 'none'}")
