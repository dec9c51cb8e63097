"""Distance minimization over unitary orbits of Hermitian matrices.

For a fixed Hermitian S and a spectrum mu, the orbit is the set of Hermitian
G with eigenvalues mu, and the objective is norm(S - G).  The additive
eigenvalue inequality pins down the global minimum: align an eigenbasis of S
(eigenvalues non-increasing) with mu non-increasing.  Candidates are
certified by checking commutation with S plus monotone alignment of the two
spectra in a joint eigenbasis; misaligned candidates are rejected with an
explicit two-plane rotation curve along which the objective strictly drops,
and non-commuting candidates are rejected via a numerically verified descent
witness when one can be found.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .curves import DROP_TOL, DescentCurve, build_curve, log_grid, trim_to_descent
from .majorization import sort_desc
from .matrices import (
    GAP_TOL,
    as_hermitian,
    as_rng,
    check_unitary,
    commutator,
    eigh,
    frob,
    random_general,
    skew_exp,
)
from .norms import NormSpec, evaluate, gauge_from_eigs, norm_gradient

SEARCH_RADII = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
SEARCH_TRIES = 48


@dataclass
class EigCertificate:
    verdict: str  # "certified_global" | "not_local_min" | "inconclusive"
    commutator_residual: float
    joint_basis: np.ndarray | None
    alignment_ok: bool
    descent_witness: DescentCurve | None
    phi: float


def _pair(S, G):
    S = as_hermitian(S)
    G = as_hermitian(G)
    if S.shape != G.shape:
        raise ValueError(f"dim mismatch: {S.shape} vs {G.shape}")
    return S, G


def orbit_distance(norm: NormSpec, S, G) -> float:
    """norm(S - G), the objective on the orbit."""
    S, G = _pair(S, G)
    return evaluate(norm, S - G)


def rotated_distance(norm: NormSpec, S, G0, U, V) -> float:
    """norm(U^H S U - V^H G0 V); its argument always has trace tr S - tr G0."""
    S, G0 = _pair(S, G0)
    U = check_unitary(U)
    V = check_unitary(V)
    return evaluate(norm, U.conj().T @ S @ U - V.conj().T @ G0 @ V)


def global_minimizer(S, mu) -> np.ndarray:
    """Hermitian matrix with spectrum mu minimizing norm(S - G) on its orbit.

    Built as sum mu_i v_i v_i^H over an eigenbasis of S sorted so that both
    spectra are non-increasing; then the eigenvalues of the difference are
    the sorted componentwise differences, which is optimal for every
    unitarily invariant norm.
    """
    S = as_hermitian(S)
    mu = sort_desc(mu)
    if mu.size != S.shape[0]:
        raise ValueError(f"length mismatch: spectrum {mu.size}, matrix {S.shape}")
    lam, V = eigh(S)
    G = (V * mu[np.newaxis, :]) @ V.conj().T
    return (G + G.conj().T) / 2.0


def joint_diagonalize(S, G0, gap_tol: float = GAP_TOL):
    """Joint eigenbasis of a (numerically) commuting Hermitian pair.

    Diagonalizes S, then re-diagonalizes the compression of G0 inside every
    near-degenerate eigenvalue cluster of S.  Within each cluster the G0
    eigenvalues come out non-increasing, so any remaining increase in nu
    happens across a strict eigenvalue gap of S.

    Returns ``(lam, nu, V, off_residual)``.
    """
    S, G0 = _pair(S, G0)
    lam, V = eigh(S)
    d = lam.size
    nu = np.empty(d)
    from .matrices import cluster_desc

    for idx in cluster_desc(lam, gap_tol):
        cols = V[:, idx]
        block = cols.conj().T @ G0 @ cols
        block = (block + block.conj().T) / 2.0
        w, W = np.linalg.eigh(block)
        V[:, idx] = cols @ W[:, ::-1]
        nu[idx] = w[::-1]
    off = V.conj().T @ G0 @ V - np.diag(nu)
    return lam, nu, V, frob(off)


def _first_inversion(lam, nu):
    """Smallest j with nu[j] < nu[j+1] across a strict gap of lam, or None."""
    lam = np.asarray(lam, dtype=float)
    nu = np.asarray(nu, dtype=float)
    lam_thresh = GAP_TOL * (1.0 + abs(float(lam[0] - lam[-1])))
    nu_thresh = GAP_TOL * (1.0 + float(np.max(nu) - np.min(nu)))
    for j in range(nu.size - 1):
        if nu[j + 1] - nu[j] > nu_thresh and lam[j] - lam[j + 1] > lam_thresh:
            return j
    return None


def givens_descent_curve(norm: NormSpec, S, G0, j: int, joint_basis=None) -> DescentCurve:
    """Two-plane rotation curve G(t) = U(t) G0 U(t)^H strictly decreasing in t.

    Requires a commuting pair with, in the joint basis, lam[j] > lam[j+1]
    and nu[j] < nu[j+1]; rotating the j-th against the (j+1)-th basis vector
    then strictly shrinks the objective for every strictly convex norm on
    all of t in (0, pi/2).
    """
    S, G0 = _pair(S, G0)
    d = S.shape[0]
    if not 0 <= j < d - 1:
        raise ValueError(f"pivot {j} out of range for dimension {d}")
    if joint_basis is None:
        lam, nu, V, _ = joint_diagonalize(S, G0)
    else:
        V = check_unitary(joint_basis)
        lam = np.real(np.diag(V.conj().T @ S @ V))
        nu = np.real(np.diag(V.conj().T @ G0 @ V))
    lam_thresh = GAP_TOL * (1.0 + abs(float(lam.max() - lam.min())))
    if lam[j] - lam[j + 1] <= lam_thresh:
        raise ValueError(
            "degenerate S eigenvalues at the pivot: transpose the basis vectors instead"
        )
    if nu[j] >= nu[j + 1]:
        raise ValueError("no inversion at the pivot: nu[j] must be < nu[j+1]")
    Vb = V

    def point(t):
        R = np.eye(d, dtype=np.complex128)
        c, s = np.cos(t), np.sin(t)
        R[j, j] = c
        R[j + 1, j + 1] = c
        R[j, j + 1] = s
        R[j + 1, j] = -s
        U = Vb @ R @ Vb.conj().T
        G = U @ G0 @ U.conj().T
        return (G + G.conj().T) / 2.0

    def value(G):
        return evaluate(norm, S - G)

    ts = log_grid(np.pi / 2 * 0.9999)
    return build_curve("givens", j, point, value, ts)


def _flow_curve(norm, S, G0, K):
    """Orbit curve exp(tK) G0 exp(-tK) for skew-Hermitian K, with objective."""

    def point(t):
        E = skew_exp(K, t)
        G = E @ G0 @ E.conj().T
        return (G + G.conj().T) / 2.0

    def value(G):
        return evaluate(norm, S - G)

    return build_curve("gradient_flow", None, point, value, log_grid(1.0))


def _random_unit_skew(d, rng):
    Z = random_general(d, rng)
    K = (Z - Z.conj().T) / 2.0
    return K / frob(K)


def _noncommuting_witness(norm, S, G0, phi0, seed):
    """Search for a verified descent curve at a non-commuting candidate.

    First tries the norm-adapted commutator flow (guaranteed first-order
    decrease), then random two-sided rotations at shrinking radii.
    """
    drop_req = DROP_TOL * (1.0 + phi0)
    d = S.shape[0]
    P = norm_gradient(norm, S - G0)
    K = P @ G0 - G0 @ P
    if frob(K) > 0:
        K = K / frob(K)
        trimmed = trim_to_descent(_flow_curve(norm, S, G0, K), drop_req)
        if trimmed is not None:
            return trimmed
    rng = as_rng(seed)
    for radius in SEARCH_RADII:
        for _ in range(SEARCH_TRIES):
            X1 = _random_unit_skew(d, rng)
            X2 = _random_unit_skew(d, rng)
            U = skew_exp(X1, radius)
            V = skew_exp(X2, radius)
            val = evaluate(norm, U.conj().T @ S @ U - V.conj().T @ G0 @ V)
            if val >= phi0 - drop_req:
                continue

            def point(t, X1=X1, X2=X2, radius=radius):
                W = skew_exp(X2, t * radius) @ skew_exp(X1, t * radius).conj().T
                G = W.conj().T @ G0 @ W
                return (G + G.conj().T) / 2.0

            def value(G):
                return evaluate(norm, S - G)

            curve = build_curve("delta_search", None, point, value, log_grid(1.0))
            trimmed = trim_to_descent(curve, drop_req)
            if trimmed is not None:
                return trimmed
    return None


def certify_local(norm: NormSpec, S, G0, tol: float = 1e-8, seed=0) -> EigCertificate:
    """Certify or reject a candidate local minimizer on its unitary orbit.

    For strictly convex norms local minimizers coincide with global ones:
    the certificate is ``certified_global`` iff the pair commutes (within
    tol) and the spectra are monotonically aligned in a joint basis, up to
    degeneracy clusters.  A misaligned commuting candidate is rejected with
    a Givens descent witness; a non-commuting one with a searched witness,
    or ``inconclusive`` when the search fails.
    """
    if not norm.strictly_convex:
        raise ValueError("certification requires a strictly convex norm")
    S, G0 = _pair(S, G0)
    phi0 = evaluate(norm, S - G0)
    scale = 1.0 + frob(S) * frob(G0)
    resid = frob(commutator(S, G0))
    if resid > tol * scale:
        witness = _noncommuting_witness(norm, S, G0, phi0, seed)
        if witness is not None:
            return EigCertificate("not_local_min", resid, None, False, witness, phi0)
        return EigCertificate("inconclusive", resid, None, False, None, phi0)
    lam, nu, V, _ = joint_diagonalize(S, G0)
    j = _first_inversion(lam, nu)
    if j is None:
        return EigCertificate("certified_global", resid, V, True, None, phi0)
    witness = givens_descent_curve(norm, S, G0, j, V)
    return EigCertificate("not_local_min", resid, V, False, witness, phi0)


def random_orbit_point(mu, seed) -> np.ndarray:
    """Haar-random Hermitian matrix with the given spectrum."""
    from .matrices import haar_unitary

    mu = sort_desc(mu)
    U = haar_unitary(mu.size, seed)
    G = (U.conj().T * mu[np.newaxis, :]) @ U
    return (G + G.conj().T) / 2.0


def orbit_sample_values(norm: NormSpec, S, mu, n: int, seed) -> np.ndarray:
    """Objective values norm(S - G) over n Haar samples G of the orbit."""
    S = as_hermitian(S)
    mu = sort_desc(mu)
    d = S.shape[0]
    rng = as_rng(seed)
    gaussians = (
        rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))
    ) / np.sqrt(2.0)
    spectra = _kernels.orbit_spectra(S, mu.astype(np.complex128), gaussians)
    return np.asarray(gauge_from_eigs(norm, spectra))
