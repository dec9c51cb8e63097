"""Hot numeric kernels.

Each kernel exists twice: a loop form compiled with numba (default) and a
stacked pure-NumPy form.  ``LIDSKII_PURE_NUMPY=1`` selects the NumPy path;
both compute the same values on the same inputs.  All randomness is consumed
as pre-generated Gaussian batches so the two paths stay bit-compatible at
the sampling level.
"""

import numpy as np

from .backend import USING_NUMBA, maybe_njit

_EPS = float(np.finfo(np.float64).eps)


def _frame_descent_impl(S, G0, a, max_iters, grad_tol, armijo_c, backtrack):
    # Projected gradient on the product of spheres ||g_i||^2 = a_i for the
    # squared Frobenius objective ||S - G G^H||_F^2.  Euclidean gradient per
    # column is -4 (S - G G^H) g_i; retraction rescales columns.
    d, k = G0.shape
    G = G0.copy()
    SG = G @ np.ascontiguousarray(np.conj(G).T)
    X = S - SG
    F = np.sum(np.abs(X) ** 2)
    trace = np.empty(max_iters + 1)
    trace[0] = F
    tn = 0
    gnorm = 0.0
    status = 0  # 0 stalled/max_iters, 1 converged, -1 diverged
    for _ in range(max_iters):
        EG = -4.0 * (X @ G)
        tang = np.sum((np.conj(EG) * G).real, axis=0) / a
        RG = EG - G * tang
        g2 = np.sum(np.abs(RG) ** 2)
        gnorm = np.sqrt(g2)
        if gnorm < grad_tol:
            status = 1
            break
        w = np.linalg.eigvalsh(SG)
        eta = 1.0 / (8.0 * w[-1] + 1.0)
        # below this resolution an Armijo decrease cannot be certified in
        # float64; fall back to accepting any non-increasing step
        floor = 64.0 * _EPS * (1.0 + F)
        accepted = False
        for _bt in range(60):
            Gc = G - eta * RG
            nn = np.sum(np.abs(Gc) ** 2, axis=0)
            Gc = Gc * np.sqrt(a / nn)
            SGc = Gc @ np.ascontiguousarray(np.conj(Gc).T)
            Xc = S - SGc
            Fc = np.sum(np.abs(Xc) ** 2)
            needed = armijo_c * eta * g2
            if needed >= floor:
                ok = Fc <= F - needed
            else:
                ok = Fc <= F + floor
            if ok:
                G = Gc
                SG = SGc
                X = Xc
                F = Fc
                accepted = True
                break
            eta *= backtrack
        if not accepted:
            break
        if not np.isfinite(F):
            status = -1
            break
        tn += 1
        trace[tn] = F
    return G, trace[: tn + 1].copy(), gnorm, status


frame_descent_py = _frame_descent_impl
frame_descent_jit = maybe_njit(cache=True)(_frame_descent_impl)


def frame_descent(S, G0, a, max_iters, grad_tol, armijo_c, backtrack):
    fn = frame_descent_jit if USING_NUMBA else frame_descent_py
    return fn(
        np.ascontiguousarray(S, dtype=np.complex128),
        np.ascontiguousarray(G0, dtype=np.complex128),
        np.ascontiguousarray(a, dtype=np.float64),
        int(max_iters),
        float(grad_tol),
        float(armijo_c),
        float(backtrack),
    )


def _orbit_spectra_impl(S, dvals, gaussians):
    # Spectra of S - Q D Q^H for Haar Q obtained by phase-fixed QR of each
    # supplied Gaussian sample; rows of the output are non-increasing.
    n = gaussians.shape[0]
    d = S.shape[0]
    D = np.zeros((d, d), dtype=np.complex128)
    for j in range(d):
        D[j, j] = dvals[j]
    out = np.empty((n, d))
    for i in range(n):
        Q, R = np.linalg.qr(np.ascontiguousarray(gaussians[i]))
        for j in range(d):
            r = R[j, j]
            if np.abs(r) > 0:
                Q[:, j] = Q[:, j] * (r / np.abs(r))
        Qc = np.ascontiguousarray(Q)
        Qh = np.ascontiguousarray(np.conj(Q).T)
        M = S - Qc @ (D @ Qh)
        w = np.linalg.eigvalsh(M)
        out[i] = w[::-1]
    return out


orbit_spectra_py = _orbit_spectra_impl
orbit_spectra_jit = maybe_njit(cache=True)(_orbit_spectra_impl)


def _orbit_spectra_numpy(S, dvals, gaussians):
    Q, R = np.linalg.qr(gaussians)
    diag = np.diagonal(R, axis1=-2, axis2=-1).copy()
    phases = np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)
    Q = Q * phases[:, np.newaxis, :]
    Qh = np.conj(np.swapaxes(Q, -1, -2))
    M = S[np.newaxis] - Q @ (dvals[:, np.newaxis] * Qh)
    w = np.linalg.eigvalsh(M)
    return w[..., ::-1].copy()


def orbit_spectra(S, dvals, gaussians):
    """Eigenvalue rows (non-increasing) of S - Q_i D Q_i^H per Haar sample."""
    S = np.ascontiguousarray(S, dtype=np.complex128)
    dvals = np.ascontiguousarray(dvals, dtype=np.complex128)
    gaussians = np.ascontiguousarray(gaussians, dtype=np.complex128)
    if USING_NUMBA:
        return orbit_spectra_jit(S, dvals, gaussians)
    return _orbit_spectra_numpy(S, dvals, gaussians)


def _psd_spectra_impl(S, t, gaussians):
    # Spectra of S - A for A = t W / tr(W), W = X X^H Wishart-like samples.
    n = gaussians.shape[0]
    d = S.shape[0]
    out = np.empty((n, d))
    for i in range(n):
        X = np.ascontiguousarray(gaussians[i])
        W = X @ np.ascontiguousarray(np.conj(X).T)
        tr = 0.0
        for j in range(d):
            tr += W[j, j].real
        A = (t / tr) * W
        w = np.linalg.eigvalsh(S - A)
        out[i] = w[::-1]
    return out


psd_spectra_py = _psd_spectra_impl
psd_spectra_jit = maybe_njit(cache=True)(_psd_spectra_impl)


def _psd_spectra_numpy(S, t, gaussians):
    W = gaussians @ np.conj(np.swapaxes(gaussians, -1, -2))
    trs = np.trace(W, axis1=-2, axis2=-1).real
    A = W * (t / trs)[:, np.newaxis, np.newaxis]
    w = np.linalg.eigvalsh(S[np.newaxis] - A)
    return w[..., ::-1].copy()


def psd_spectra(S, t, gaussians):
    """Eigenvalue rows of S - A over random PSD A with trace t."""
    S = np.ascontiguousarray(S, dtype=np.complex128)
    gaussians = np.ascontiguousarray(gaussians, dtype=np.complex128)
    if USING_NUMBA:
        return psd_spectra_jit(S, float(t), gaussians)
    return _psd_spectra_numpy(S, float(t), gaussians)
