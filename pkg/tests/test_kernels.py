"""Backend parity: the numba-compiled kernels and the pure NumPy paths must
produce the same values on the same inputs."""

import numpy as np

from lidskii import _kernels
from lidskii.backend import USING_NUMBA, backend_name
from lidskii.matrices import random_hermitian


def _gaussians(rng, n, d):
    return (rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))) / np.sqrt(2)


def test_backend_name_reports():
    assert backend_name() in ("numba", "numpy")


def test_orbit_spectra_paths_agree():
    rng = np.random.default_rng(0)
    d = 4
    S = random_hermitian(d, rng)
    mu = np.array([2.0, 1.0, 0.5, -1.0]).astype(complex)
    gs = _gaussians(rng, 32, d)
    loop = _kernels.orbit_spectra_py(S.astype(complex), mu, gs)
    stacked = _kernels._orbit_spectra_numpy(S.astype(complex), mu, gs)
    assert np.allclose(loop, stacked, atol=1e-12)
    dispatched = _kernels.orbit_spectra(S, mu, gs)
    assert np.allclose(dispatched, loop, atol=1e-12)
    if USING_NUMBA:
        jit = _kernels.orbit_spectra_jit(
            np.ascontiguousarray(S.astype(complex)), mu, np.ascontiguousarray(gs)
        )
        assert np.allclose(jit, loop, atol=1e-12)


def test_psd_spectra_paths_agree():
    rng = np.random.default_rng(1)
    d = 3
    S = random_hermitian(d, rng)
    gs = _gaussians(rng, 24, d)
    loop = _kernels.psd_spectra_py(S.astype(complex), 2.0, gs)
    stacked = _kernels._psd_spectra_numpy(S.astype(complex), 2.0, gs)
    assert np.allclose(loop, stacked, atol=1e-12)
    # sampled matrices are PSD trace-t differences: rows non-increasing
    assert np.all(np.diff(loop, axis=-1) <= 1e-12)


def test_frame_descent_paths_agree():
    rng = np.random.default_rng(2)
    d, k = 3, 5
    S = random_hermitian(d, rng)
    S = (S @ S.conj().T).astype(complex)
    G0 = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    a = rng.uniform(0.5, 1.5, k)
    G0 *= np.sqrt(a / np.sum(np.abs(G0) ** 2, axis=0))
    args = (S, G0.astype(complex), a, 500, 1e-9, 1e-4, 0.5)
    G_py, tr_py, g_py, st_py = _kernels.frame_descent_py(*args)
    G_disp, tr_disp, g_disp, st_disp = _kernels.frame_descent(*args)
    assert st_py == st_disp
    assert len(tr_py) == len(tr_disp)
    assert np.allclose(tr_py, tr_disp, rtol=1e-12, atol=1e-12)
    assert np.allclose(G_py, G_disp, atol=1e-10)
    assert abs(g_py - g_disp) <= 1e-12 * (1 + g_py)


def test_frame_descent_trace_monotone():
    rng = np.random.default_rng(3)
    d, k = 4, 6
    S = random_hermitian(d, rng)
    S = (S @ S.conj().T).astype(complex)
    G0 = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    a = np.ones(k)
    G0 *= np.sqrt(a / np.sum(np.abs(G0) ** 2, axis=0))
    _G, trace, _g, _st = _kernels.frame_descent(S, G0, a, 2000, 1e-9, 1e-4, 0.5)
    slack = 1e-12 * (1 + trace[0])
    assert np.all(np.diff(trace) <= slack)
