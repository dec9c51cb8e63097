"""Frame operator distances on products of spheres.

A frame configuration is a sequence of k vectors in C^d with prescribed
squared norms a_i; its frame operator is the PSD matrix sum of the rank-one
outer products.  The objective is norm(S - S_G) for a fixed PSD target S.
This module provides the water-filling PSD relaxation lower bound, the
structural tests every local minimizer must pass (each vector an eigenvector
of S - S_G, commuting spectra, aligned eigenvalues, per-cluster linear
independence), the escape construction off dependent clusters, the
global-optimality certificate for the single-eigenvalue case, and a
projected gradient optimizer for the Frobenius objective.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .backend import worker_count
from .curves import DROP_TOL, build_curve, trim_to_descent
from .majorization import sort_desc
from .matrices import (
    GAP_TOL,
    NULLSPACE_TOL,
    as_hermitian,
    as_rng,
    commutator,
    eigh,
    eigvalsh_desc,
    frob,
)
from .norms import NormSpec, evaluate, frobenius, norm_gradient

SPHERE_TOL = 1e-8
ESCAPE_T_MAX = 0.49


@dataclass
class FrameSequence:
    """k vectors in C^d (columns of ``vectors``) with squared norms ``norms``."""

    vectors: np.ndarray  # (d, k) complex
    norms: np.ndarray  # (k,) positive

    def __post_init__(self):
        self.vectors = np.asarray(self.vectors, dtype=np.complex128)
        if self.vectors.ndim != 2:
            raise ValueError("frame vectors must form a d x k array")
        self.norms = np.asarray(self.norms, dtype=float).ravel()
        if self.norms.size != self.vectors.shape[1]:
            raise ValueError("one squared norm per vector is required")
        if np.any(self.norms <= 0):
            raise ValueError("prescribed squared norms must be positive")

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def count(self) -> int:
        return self.vectors.shape[1]

    def sphere_residuals(self) -> np.ndarray:
        actual = np.sum(np.abs(self.vectors) ** 2, axis=0)
        return np.abs(actual - self.norms) / self.norms

    def validate(self, tol: float = SPHERE_TOL) -> "FrameSequence":
        res = self.sphere_residuals()
        if np.max(res) > tol:
            raise ValueError(
                f"frame vector off its sphere: worst relative residual {np.max(res):.3e}"
            )
        return self


def frame(vectors, norms=None) -> FrameSequence:
    """Build a FrameSequence; squared norms default to the actual ones."""
    V = np.asarray(vectors, dtype=np.complex128)
    if V.ndim != 2:
        raise ValueError("frame vectors must form a d x k array")
    if norms is None:
        norms = np.sum(np.abs(V) ** 2, axis=0)
    return FrameSequence(V, norms)


def random_frame(d: int, a, seed) -> FrameSequence:
    """Uniform random configuration on the product of spheres."""
    a = np.asarray(a, dtype=float).ravel()
    rng = as_rng(seed)
    V = rng.standard_normal((d, a.size)) + 1j * rng.standard_normal((d, a.size))
    V *= np.sqrt(a / np.sum(np.abs(V) ** 2, axis=0))
    return FrameSequence(V, a)


def synthesis(G: FrameSequence) -> np.ndarray:
    """d x k matrix whose columns are the frame vectors."""
    if G.count == 0:
        raise ValueError("empty frame")
    return G.vectors.copy()


def frame_operator(G: FrameSequence) -> np.ndarray:
    """S_G = sum g_i g_i^H, PSD with trace sum a_i."""
    V = G.vectors
    S = V @ V.conj().T
    return (S + S.conj().T) / 2.0


def frame_operator_distance(norm: NormSpec, S, G: FrameSequence) -> float:
    """norm(S - S_G), the generalized frame operator distance."""
    S = as_hermitian(S)
    if S.shape[0] != G.dim:
        raise ValueError(f"dim mismatch: {S.shape[0]} vs {G.dim}")
    return evaluate(norm, S - frame_operator(G))


def water_fill(lam, t: float):
    """Unique level c <= lam_1 with sum (lam_i - c)^+ = t, plus the spectrum.

    ``lam`` must be non-negative (sorted internally).  The complementary
    spectrum min(c, lam_i) of the residual is non-increasing by construction.
    """
    lam = np.asarray(lam, dtype=float).ravel()
    if lam.size == 0:
        raise ValueError("empty spectrum")
    if np.any(lam < -1e-12 * (1.0 + np.max(np.abs(lam)))):
        raise ValueError("water filling requires a non-negative spectrum")
    if not t > 0:
        raise ValueError(f"total mass must be positive, got {t}")
    lam = np.maximum(sort_desc(lam), 0.0)
    d = lam.size
    prefix = np.cumsum(lam)
    c = (prefix[-1] - t) / d
    for r in range(1, d):
        cr = (prefix[r - 1] - t) / r
        if cr >= lam[r]:
            c = cr
            break
    spectrum = np.maximum(lam - c, 0.0)
    return float(c), spectrum


def psd_lower_bound(norm: NormSpec, S, t: float):
    """Minimum of norm(S - A) over PSD A with trace t, and its minimizer.

    The minimizer clips the spectrum of S at the water-filling level in the
    eigenbasis of S.  Because every frame operator of total mass t is such
    an A, the value lower-bounds the frame distance for all configurations
    with sum a_i = t.
    """
    S = as_hermitian(S)
    lam, V = eigh(S)
    if lam[-1] < -1e-10 * (1.0 + abs(lam[0])):
        raise ValueError("target must be positive semidefinite")
    c, spec = water_fill(np.maximum(lam, 0.0), t)
    Aop = (V * spec[np.newaxis, :]) @ V.conj().T
    Aop = (Aop + Aop.conj().T) / 2.0
    return evaluate(norm, S - Aop), Aop


def fitted_eigenvalues(S, G: FrameSequence):
    """Rayleigh quotients c_j of S - S_G on each frame vector, with relative
    residuals ||(S - S_G) g_j - c_j g_j|| / ||g_j||."""
    S = as_hermitian(S)
    E = S - frame_operator(G)
    V = G.vectors
    norms2 = np.sum(np.abs(V) ** 2, axis=0)
    Ev = E @ V
    fitted = np.real(np.sum(np.conj(V) * Ev, axis=0)) / norms2
    resid = np.linalg.norm(Ev - V * fitted[np.newaxis, :], axis=0) / np.sqrt(norms2)
    return fitted, resid


@dataclass
class ClusterInfo:
    value: float
    indices: np.ndarray
    span_dim: int
    independence_required: bool
    independent: bool


@dataclass
class FodStructureReport:
    eigvec_residuals: np.ndarray
    fitted_values: np.ndarray
    commute_residual: float
    lidskii_aligned: bool
    clusters: list
    verdict: str  # "consistent_with_local_min" | "violates_structure"
    witness: str | None


def _fitted_clusters(fitted, vectors, gap_tol=GAP_TOL):
    """Cluster fitted eigenvalues (ascending) and rank each cluster's span."""
    order = np.argsort(fitted)[::-1]
    groups_desc = []
    from .matrices import cluster_desc

    for idx in cluster_desc(fitted[order], gap_tol):
        groups_desc.append(order[idx])
    clusters = []
    for members in reversed(groups_desc):
        members = np.sort(members)
        cols = vectors[:, members]
        sv = np.linalg.svd(cols, compute_uv=False)
        rank = int(np.sum(sv > NULLSPACE_TOL * sv[0])) if sv[0] > 0 else 0
        clusters.append((float(np.mean(fitted[members])), members, rank))
    return clusters


def structure_check(norm: NormSpec, S, G0: FrameSequence, tol: float = 1e-6) -> FodStructureReport:
    """Evaluate the structural conditions a local minimizer must satisfy.

    Checks, in order: each vector is an eigenvector of S - S_G within tol
    (relative residual), S and S_G commute, the spectrum of S - S_G equals
    the sorted difference of spectra, and every fitted-eigenvalue cluster
    that sits below some other eigenvalue of S - S_G is linearly
    independent.  The verdict carries the first failed condition.
    """
    if not norm.strictly_convex:
        raise ValueError("structure conditions apply to strictly convex norms")
    if G0.count == 0:
        raise ValueError("empty frame")
    G0.validate()
    S = as_hermitian(S)
    S0 = frame_operator(G0)
    E = S - S0
    fitted, resid = fitted_eigenvalues(S, G0)
    commute_residual = frob(commutator(S, S0))
    lamE = eigvalsh_desc(E)
    lam_diff = sort_desc(eigvalsh_desc(S) - eigvalsh_desc(S0))
    scale = 1.0 + frob(S) + frob(S0)
    aligned = bool(np.max(np.abs(lamE - lam_diff)) <= tol * scale)
    sigma = lamE
    gap = GAP_TOL * (1.0 + abs(float(sigma[0] - sigma[-1])))
    clusters = []
    for value, members, rank in _fitted_clusters(fitted, G0.vectors):
        required = bool(np.any(sigma > value + gap))
        clusters.append(
            ClusterInfo(value, members, rank, required, rank == members.size)
        )
    verdict, witness = "consistent_with_local_min", None
    worst = int(np.argmax(resid))
    if resid[worst] > tol:
        verdict = "violates_structure"
        witness = f"eigenvector_residual(j={worst}, residual={resid[worst]:.3e})"
    elif commute_residual > tol * scale:
        verdict = "violates_structure"
        witness = f"commutator(residual={commute_residual:.3e})"
    elif not aligned:
        verdict = "violates_structure"
        witness = "lidskii_alignment"
    else:
        for info in clusters:
            if info.independence_required and not info.independent:
                verdict = "violates_structure"
                witness = f"dependent_cluster(value={info.value:.6g})"
                break
    return FodStructureReport(
        resid, fitted, commute_residual, aligned, clusters, verdict, witness
    )


def certify_uniform_eigenvalue(norm: NormSpec, S, G0: FrameSequence, tol: float = 1e-8) -> str:
    """Global certificate when S - S_G acts as one scalar on every vector.

    Requires k >= d.  When a common fitted eigenvalue c1 exists, a true
    local minimizer must have spectrum ((lam_i(S) - c1)^+): then the
    configuration meets the PSD relaxation bound and is globally optimal.
    Returns "certified_global", "not_applicable" (no common eigenvalue), or
    "violates" (common eigenvalue but wrong spectrum).
    """
    if not norm.strictly_convex:
        raise ValueError("certification requires a strictly convex norm")
    if G0.count < G0.dim:
        raise ValueError("the single-eigenvalue certificate requires k >= d")
    G0.validate()
    S = as_hermitian(S)
    lamS = eigvalsh_desc(S)
    if lamS[-1] < -tol * (1.0 + abs(lamS[0])):
        raise ValueError("target must be positive semidefinite")
    S0 = frame_operator(G0)
    E = S - S0
    V = G0.vectors
    c1 = float(np.sum(np.real(np.sum(np.conj(V) * (E @ V), axis=0))) / np.sum(G0.norms))
    resid = np.linalg.norm(E @ V - c1 * V, axis=0) / np.sqrt(
        np.sum(np.abs(V) ** 2, axis=0)
    )
    if np.max(resid) > tol * (1.0 + frob(E)):
        return "not_applicable"
    expected = sort_desc(np.maximum(lamS - c1, 0.0))
    lamS0 = eigvalsh_desc(S0)
    if np.max(np.abs(lamS0 - expected)) > tol * (1.0 + frob(S)):
        return "violates"
    return "certified_global"


@dataclass
class DescentOptions:
    max_iters: int = 20000
    grad_tol: float = 1e-9
    armijo_c: float = 1e-4
    backtrack: float = 0.5
    init: np.ndarray | None = None


@dataclass
class DescentTrace:
    """Iteration log: squared-Frobenius objective per accepted step."""

    objective: np.ndarray
    grad_norm: float
    iterations: int
    converged: bool


def gradient_descent(S, a, seed=0, opts: DescentOptions | None = None):
    """Projected gradient descent for the squared Frobenius frame distance.

    The Euclidean gradient with respect to g_i is -4 (S - S_G) g_i; steps
    retract onto the spheres by rescaling, with Armijo backtracking from
    1 / (8 lam_1(S_G) + 1).  Runs until the Riemannian gradient norm falls
    below ``grad_tol`` or the iteration budget is spent; the objective trace
    is non-increasing within line-search resolution.  Deterministic per seed.
    """
    opts = opts or DescentOptions()
    S = as_hermitian(S)
    a = np.asarray(a, dtype=float).ravel()
    if np.any(a <= 0):
        raise ValueError("prescribed squared norms must be positive")
    if opts.init is not None:
        G0 = frame(opts.init, a).validate().vectors
    else:
        G0 = random_frame(S.shape[0], a, seed).vectors
    G, trace, gnorm, status = _kernels.frame_descent(
        S, G0, a, opts.max_iters, opts.grad_tol, opts.armijo_c, opts.backtrack
    )
    if status == -1 or not np.all(np.isfinite(trace)):
        raise FloatingPointError("frame descent diverged to a non-finite objective")
    result = FrameSequence(G, a)
    return result, DescentTrace(trace, float(gnorm), len(trace) - 1, status == 1)


def best_of_restarts(norm: NormSpec, S, a, restarts: int, seed=0, opts=None):
    """Run seeded descents and keep the configuration with the smallest
    frame distance in the requested norm.  Restart results are merged in
    seed order; LIDSKII_THREADS caps the worker pool."""
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    seeds = [int(seed) + i for i in range(restarts)]
    if norm.kind == "frobenius":
        runner = lambda s: gradient_descent(S, a, s, opts)  # noqa: E731
    else:
        runner = lambda s: subgradient_descent(norm, S, a, s, opts)  # noqa: E731
    workers = worker_count(restarts)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(runner, seeds))
    else:
        results = [runner(s) for s in seeds]
    values = [frame_operator_distance(norm, S, g) for g, _ in results]
    best = int(np.argmin(values))
    G, tr = results[best]
    return G, tr, float(values[best]), best


def subgradient_descent(norm: NormSpec, S, a, seed=0, opts: DescentOptions | None = None):
    """Riemannian gradient descent for smooth strictly convex norms.

    Exploration tool for the non-Frobenius conjecture harness; same
    retraction and stopping rule as the Frobenius path, plain step halving
    on the norm value itself.
    """
    if not norm.strictly_convex:
        raise ValueError("subgradient descent expects a strictly convex norm")
    opts = opts or DescentOptions(max_iters=4000)
    S = as_hermitian(S)
    a = np.asarray(a, dtype=float).ravel()
    rng_init = (
        frame(opts.init, a).validate().vectors
        if opts.init is not None
        else random_frame(S.shape[0], a, seed).vectors
    )
    G = rng_init
    trace = []
    value = None
    gnorm = np.inf
    converged = False
    for _ in range(opts.max_iters):
        SG = G @ G.conj().T
        X = S - SG
        value = evaluate(norm, X)
        trace.append(value)
        P = norm_gradient(norm, X)
        EG = -2.0 * (P @ G)
        tang = np.sum((np.conj(EG) * G).real, axis=0) / a
        RG = EG - G * tang
        gnorm = float(np.sqrt(np.sum(np.abs(RG) ** 2)))
        if gnorm < opts.grad_tol:
            converged = True
            break
        lam1 = float(np.linalg.eigvalsh(SG)[-1])
        eta = 1.0 / (8.0 * lam1 + 1.0)
        accepted = False
        for _bt in range(50):
            Gc = G - eta * RG
            Gc *= np.sqrt(a / np.sum(np.abs(Gc) ** 2, axis=0))
            vc = evaluate(norm, S - Gc @ Gc.conj().T)
            if vc <= value - opts.armijo_c * eta * gnorm**2 or vc <= value + 1e-15 * (
                1.0 + value
            ):
                G = Gc
                accepted = True
                break
            eta *= opts.backtrack
        if not accepted:
            break
    return FrameSequence(G, a), DescentTrace(
        np.asarray(trace), gnorm, len(trace) - 1, converged
    )


def escape_move(S, G0: FrameSequence, cluster_index: int, tol: float = 1e-8, norm: NormSpec | None = None):
    """Descent curve off a linearly dependent fitted-eigenvalue cluster.

    Applicable when the cluster's vectors are dependent and some eigenvalue
    of S - S_G strictly exceeds the cluster value: a kernel combination of
    the cluster is traded against an eigenvector of the larger eigenvalue,
    staying on the spheres while the spectrum strictly drops in majorization
    order.  Returns None when the preconditions fail or the sampled drop is
    not verifiable; sampled values use the Frobenius norm by default (the
    guarantee covers every strictly convex norm).
    """
    norm = norm or frobenius()
    G0.validate()
    S = as_hermitian(S)
    S0 = frame_operator(G0)
    E = S - S0
    fitted, _resid = fitted_eigenvalues(S, G0)
    clusters = _fitted_clusters(fitted, G0.vectors)
    if not 0 <= cluster_index < len(clusters):
        raise ValueError(f"cluster index {cluster_index} out of range")
    c_val, members, rank = clusters[cluster_index]
    if rank >= members.size:
        return None
    lamE, VE = eigh(E)
    gap = GAP_TOL * (1.0 + abs(float(lamE[0] - lamE[-1])))
    above = np.where(lamE > c_val + gap)[0]
    if above.size == 0:
        return None
    target = above[0]  # largest eigenvalue strictly above the cluster
    h = VE[:, target].copy()
    # scaled kernel combination: sum conj(z_l) sqrt(a_l) g_l = 0
    cols = G0.vectors[:, members] * np.sqrt(G0.norms[members])[np.newaxis, :]
    w_span, sv, vt = np.linalg.svd(cols)
    # right null vector of cols is conj(vt[-1]), so cols @ conj(z) = 0 here
    z = vt[-1].copy()
    z = z * (0.5 / np.max(np.abs(z)))
    # keep the spheres exact: h must be orthogonal to the traded vectors,
    # i.e. to the actual span (rank many left singular vectors)
    q = w_span[:, :rank]
    h = h - q @ (q.conj().T @ h)
    hn = np.linalg.norm(h)
    if hn < 1e-8:
        return None
    h = h / hn

    a = G0.norms

    def point(t):
        V = G0.vectors.copy()
        for pos, ell in enumerate(members):
            zl = z[pos]
            if zl == 0:
                continue
            V[:, ell] = (
                np.sqrt(1.0 - t * t * abs(zl) ** 2) * G0.vectors[:, ell]
                + t * zl * np.sqrt(a[ell]) * h
            )
        return FrameSequence(V, a)

    def value(Gt: FrameSequence):
        return evaluate(norm, S - frame_operator(Gt))

    ts = np.geomspace(ESCAPE_T_MAX * 1e-4, ESCAPE_T_MAX, 64)
    curve = build_curve("escape", cluster_index, point, value, ts)
    theta0 = curve.values[0]
    return trim_to_descent(curve, DROP_TOL * (1.0 + theta0))
