"""Independent oracles used by the unit and acceptance tests.

These deliberately take different computational routes than the library:
the kernel systems are assembled from Kronecker products and commutation
matrices acting on realified coordinates (the library loops over structured
basis matrices), and water filling is solved by bisection (the library
solves the piecewise-linear equation in closed form).
"""

import numpy as np


def commutation_matrix(d: int) -> np.ndarray:
    """K with K vec(X) = vec(X^T), column-major vec."""
    K = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            K[i + j * d, j + i * d] = 1.0
    return K


def _realify_linear(M: np.ndarray) -> np.ndarray:
    """Real form of z -> M z on stacked (Re, Im) coordinates."""
    return np.block([[M.real, -M.imag], [M.imag, M.real]])


def _realify_antilinear(N: np.ndarray) -> np.ndarray:
    """Real form of z -> N conj(z) on stacked (Re, Im) coordinates."""
    return np.block([[N.real, N.imag], [N.imag, -N.real]])


def _kernel_dim(system: np.ndarray, tol: float = 1e-8) -> int:
    sv = np.linalg.svd(system, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return system.shape[1]
    return int(np.sum(sv < tol * sv[0]))


def _hermitian_traceless_subspace(d: int) -> np.ndarray:
    """Orthonormal real basis (columns) of {Y: Y = Y^H, tr Y = 0} inside
    the realified coordinates R^{2 d^2}, derived from the constraints."""
    n = d * d
    K = commutation_matrix(d)
    Id = np.eye(n)
    # Y - Y^H = 0 with vec(Y^H) = K conj(vec Y)
    constraint = _realify_linear(Id) - _realify_antilinear(K)
    # trace: sum of diagonal entries zero (real and imaginary separately)
    tr_row = np.zeros((1, n))
    for i in range(d):
        tr_row[0, i + i * d] = 1.0
    tr_real = np.hstack([tr_row, np.zeros((1, n))])
    tr_imag = np.hstack([np.zeros((1, n)), tr_row])
    full = np.vstack([constraint, tr_real, tr_imag])
    _u, sv, vt = np.linalg.svd(full)
    rank = int(np.sum(sv > 1e-10 * sv[0]))
    return vt[rank:].T  # columns span the constrained subspace


def commutant_kernel_dim(S: np.ndarray, G0: np.ndarray, tol: float = 1e-8) -> int:
    """Kernel dimension of Y -> ([Y, S], [Y, G0]) on traceless Hermitian Y."""
    d = S.shape[0]
    Id = np.eye(d)
    def comm_map(M):
        # vec(YM - MY) = (M^T kron I - I kron M) vec(Y)
        return np.kron(M.T, Id) - np.kron(Id, M)

    Q = _hermitian_traceless_subspace(d)
    rows = [_realify_linear(comm_map(S)) @ Q, _realify_linear(comm_map(G0)) @ Q]
    return _kernel_dim(np.vstack(rows), tol)


def pair_submersion_kernel_dim(A: np.ndarray, B: np.ndarray, tol: float = 1e-8) -> int:
    """Kernel dimension of Z -> (AZ^H - ZA^H, A^H Z - Z^H A, and the same
    for B) on all of M_d(C), realified."""
    d = A.shape[0]
    Id = np.eye(d)
    K = commutation_matrix(d)

    def right_adjoint_defect(M):
        # vec(M Z^H - Z M^H): antilinear (I kron M) K, linear -(conj(M) kron I)
        lin = -np.kron(M.conj(), Id)
        anti = np.kron(Id, M) @ K
        return _realify_linear(lin) + _realify_antilinear(anti)

    def left_adjoint_defect(M):
        # vec(M^H Z - Z^H M): linear (I kron M^H), antilinear -(M^T kron I) K
        lin = np.kron(Id, M.conj().T)
        anti = -np.kron(M.T, Id) @ K
        return _realify_linear(lin) + _realify_antilinear(anti)

    rows = [
        right_adjoint_defect(A),
        left_adjoint_defect(A),
        right_adjoint_defect(B),
        left_adjoint_defect(B),
    ]
    return _kernel_dim(np.vstack(rows), tol)


def water_fill_bisect(lam, t: float, iters: int = 200):
    """Bisection solve of sum (lam_i - c)^+ = t."""
    lam = np.asarray(lam, dtype=float)

    def f(c):
        return float(np.sum(np.maximum(lam - c, 0.0)))

    lo = float(np.max(lam)) - t - 1.0  # f(lo) >= t
    hi = float(np.max(lam))  # f(hi) = 0 <= t
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if f(mid) >= t:
            lo = mid
        else:
            hi = mid
    c = 0.5 * (lo + hi)
    return c, np.maximum(lam - c, 0.0)


def partial_sum_check(y, x) -> tuple:
    """Plain-loop submajorization check; returns (holds, min_slack)."""
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    m = min(len(xs), len(ys))
    sx = sy = 0.0
    worst = np.inf
    for j in range(m):
        sx += xs[j]
        sy += ys[j]
        worst = min(worst, sy - sx)
    return worst >= -1e-10 * (1.0 + abs(sy) + abs(sx)), worst
