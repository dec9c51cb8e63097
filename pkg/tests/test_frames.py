import numpy as np
import pytest

from oracles import water_fill_bisect
from lidskii import frames
from lidskii.frames import (
    DescentOptions,
    FrameSequence,
    certify_uniform_eigenvalue,
    escape_move,
    fitted_eigenvalues,
    frame,
    frame_operator,
    frame_operator_distance,
    gradient_descent,
    psd_lower_bound,
    random_frame,
    structure_check,
    subgradient_descent,
    synthesis,
    water_fill,
)
from lidskii.majorization import sort_desc
from lidskii.matrices import eigvalsh_desc, haar_unitary, random_hermitian
from lidskii.norms import frobenius, schatten, spectral
from lidskii.properties import dependent_cluster_instance


def _basis_frame(d):
    return FrameSequence(np.eye(d, dtype=complex), np.ones(d))


def test_synthesis_examples():
    G = _basis_frame(3)
    assert np.allclose(synthesis(G), np.eye(3))
    V = np.zeros((2, 2), dtype=complex)
    V[0, :] = 1.0
    G = FrameSequence(V, [1.0, 1.0])
    assert np.allclose(synthesis(G), [[1, 1], [0, 0]])
    g = frame(np.array([[1.0], [2.0]]))
    assert np.allclose(synthesis(g), [[1.0], [2.0]])


def test_frame_operator_examples():
    assert np.allclose(frame_operator(_basis_frame(3)), np.eye(3))
    V = np.zeros((2, 2), dtype=complex)
    V[0, :] = 1.0
    assert np.allclose(frame_operator(FrameSequence(V, [1.0, 1.0])), np.diag([2.0, 0.0]))
    g = np.array([[1.0], [1.0]], dtype=complex)  # squared norm 2
    S = frame_operator(frame(g))
    assert np.trace(S).real == pytest.approx(2.0)
    assert np.linalg.matrix_rank(S) == 1


def test_frame_validation():
    with pytest.raises(ValueError):
        FrameSequence(np.eye(2, dtype=complex), [1.0, -1.0])
    bad = FrameSequence(2 * np.eye(2, dtype=complex), [1.0, 1.0])
    with pytest.raises(ValueError):
        bad.validate()


def test_theta_examples():
    G = _basis_frame(2)
    S = 2 * np.eye(2)
    assert frame_operator_distance(frobenius(), S, G) == pytest.approx(np.sqrt(2))
    assert frame_operator_distance(frobenius(), frame_operator(G), G) == 0.0
    assert frame_operator_distance(frobenius(), np.zeros((2, 2)), G) == pytest.approx(
        np.sqrt(2)
    )


def test_water_fill_examples():
    c, spec = water_fill([3, 2, 1], 3.0)
    assert c == pytest.approx(1.0) and np.allclose(spec, [2, 1, 0])
    c, spec = water_fill([5], 2.0)
    assert c == pytest.approx(3.0) and np.allclose(spec, [2])
    c, spec = water_fill([1, 1], 2.0)
    assert c == pytest.approx(0.0) and np.allclose(spec, [1, 1])
    c, spec = water_fill([0.0, 0.0, 0.0], 2.0)
    assert c == pytest.approx(-2 / 3) and np.allclose(spec, 2 / 3)
    with pytest.raises(ValueError):
        water_fill([1, 1], 0.0)
    with pytest.raises(ValueError):
        water_fill([-1.0, 2.0], 1.0)


def test_water_fill_against_bisection_oracle():
    rng = np.random.default_rng(0)
    for _ in range(200):
        d = int(rng.integers(1, 9))
        lam = sort_desc(rng.uniform(0, 5, d))
        t = float(rng.uniform(0.05, 1.5) * max(np.sum(lam), 1.0))
        c, spec = water_fill(lam, t)
        c_ref, _ = water_fill_bisect(lam, t)
        assert c == pytest.approx(c_ref, abs=1e-9)
        assert abs(np.sum(spec) - t) <= 1e-10 * (1 + t)
        assert c <= lam[0] + 1e-12
        # residual spectrum min(c, lam) non-increasing
        assert np.all(np.diff(np.minimum(c, lam)) <= 1e-12)


def test_psd_lower_bound_examples():
    S = np.diag([3.0, 2.0, 1.0])
    bound, Aop = psd_lower_bound(frobenius(), S, 3.0)
    assert bound == pytest.approx(np.sqrt(3))
    assert np.allclose(eigvalsh_desc(S - Aop), [1.0, 1.0, 1.0])
    bound, Aop = psd_lower_bound(frobenius(), S, 6.0)
    assert bound == pytest.approx(0.0, abs=1e-9)
    assert np.allclose(Aop, S, atol=1e-9)
    bound, Aop = psd_lower_bound(frobenius(), np.zeros((3, 3)), 2.0)
    assert bound == pytest.approx(np.sqrt(3 * (2 / 3) ** 2))
    assert np.allclose(Aop, (2 / 3) * np.eye(3))


def test_psd_lower_bound_dominated_by_random_frames():
    rng = np.random.default_rng(1)
    for i in range(15):
        d = int(rng.integers(2, 5))
        k = int(rng.integers(d, 8))
        a = rng.uniform(0.3, 2.0, k)
        lam = sort_desc(rng.uniform(0, 4, d))
        V = haar_unitary(d, rng)
        S = (V * lam) @ V.conj().T
        S = (S + S.conj().T) / 2
        norm = (frobenius(), schatten(1.5), schatten(3), spectral())[i % 4]
        bound, _ = psd_lower_bound(norm, S, float(np.sum(a)))
        for _ in range(50):
            G = random_frame(d, a, rng)
            assert frame_operator_distance(norm, S, G) >= bound - 1e-8


def test_structure_check_consistent_example():
    G = _basis_frame(2)
    S = 2 * np.eye(2)
    rep = structure_check(frobenius(), S, G)
    assert rep.verdict == "consistent_with_local_min"
    assert rep.lidskii_aligned
    assert len(rep.clusters) == 1
    info = rep.clusters[0]
    assert info.value == pytest.approx(1.0)
    assert info.span_dim == 2 and not info.independence_required


def test_structure_check_flags_non_eigenvector():
    g = np.array([[1.0], [1.0]], dtype=complex) / np.sqrt(2)
    rep = structure_check(frobenius(), np.diag([3.0, 1.0]), frame(g))
    assert rep.verdict == "violates_structure"
    assert rep.witness.startswith("eigenvector_residual")


def test_structure_check_guards():
    with pytest.raises(ValueError):
        structure_check(frobenius(), np.eye(2), FrameSequence(np.ones((2, 0)), np.ones(0)))
    with pytest.raises(ValueError):
        structure_check(spectral(), np.eye(2), _basis_frame(2))


def test_certify_uniform_eigenvalue_examples():
    G = _basis_frame(2)
    assert certify_uniform_eigenvalue(frobenius(), 2 * np.eye(2), G) == "certified_global"
    # two distinct fitted eigenvalues: hypothesis gate
    S = np.diag([3.0, 1.0])
    assert certify_uniform_eigenvalue(frobenius(), S, G) == "not_applicable"
    with pytest.raises(ValueError):
        certify_uniform_eigenvalue(frobenius(), np.eye(3), frame(np.eye(3, 2)))


def test_gradient_descent_recovers_constructed_minimum():
    rng = np.random.default_rng(2)
    d, k = 3, 4
    a = rng.uniform(0.5, 1.5, k)
    Gstar = random_frame(d, a, rng)
    S = frame_operator(Gstar)  # theta = 0 attainable
    init = Gstar.vectors + 1e-3 * (
        rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    )
    init *= np.sqrt(a / np.sum(np.abs(init) ** 2, axis=0))
    G, tr = gradient_descent(S, a, opts=DescentOptions(init=init))
    assert tr.converged
    assert frame_operator_distance(frobenius(), S, G) < 1e-6


def test_gradient_descent_zero_gradient_start():
    # exact minimizer: terminates immediately with an empty step log
    G = _basis_frame(3)
    S = frame_operator(G)
    out, tr = gradient_descent(S, G.norms, opts=DescentOptions(init=G.vectors))
    assert tr.converged and tr.iterations == 0
    assert np.allclose(out.vectors, G.vectors)


def test_gradient_descent_deterministic_per_seed():
    S = random_hermitian(3, 5)
    S = S @ S.conj().T  # PSD
    a = np.ones(4)
    G1, tr1 = gradient_descent(S, a, seed=9)
    G2, tr2 = gradient_descent(S, a, seed=9)
    assert np.array_equal(G1.vectors, G2.vectors)
    assert np.array_equal(tr1.objective, tr2.objective)
    assert tr1.objective.size >= 1
    slack = 1e-12 * (1 + tr1.objective[0])
    assert np.all(np.diff(tr1.objective) <= slack)


def test_subgradient_descent_explores_nonfrobenius():
    rng = np.random.default_rng(3)
    S = np.diag([2.0, 1.0]).astype(complex)
    G, tr = subgradient_descent(schatten(3), S, [1.0, 1.0], seed=4)
    assert tr.objective[-1] <= tr.objective[0] + 1e-12
    with pytest.raises(ValueError):
        subgradient_descent(spectral(), S, [1.0, 1.0])


def test_escape_move_spec_instances():
    V = np.zeros((2, 2), dtype=complex)
    V[0, :] = 1.0
    G0 = FrameSequence(V, [1.0, 1.0])
    # no eigenvalue above the cluster: preconditions unmet
    assert escape_move(np.diag([3.0, 0.0]), G0, 0) is None
    curve = escape_move(np.diag([2.0, 5.0]), G0, 0)
    assert curve is not None
    # closed form for this instance: theta(t)^2 = t^4/4 + (5 - t^2/2)^2
    for t, v in zip(curve.ts, curve.values):
        assert v**2 == pytest.approx(t**4 / 4 + (5 - t**2 / 2) ** 2, rel=1e-10)
    assert curve.verified_drop > 1e-12
    # independent cluster: rank gate returns None
    assert escape_move(np.diag([2.0, 5.0]), _basis_frame(2), 0) is None


def test_escape_move_fuzz_valid_curves():
    rng = np.random.default_rng(4)
    for _ in range(15):
        d = int(rng.integers(2, 5))
        S, G0, idx = dependent_cluster_instance(d, rng)
        curve = escape_move(S, G0, idx)
        assert curve is not None
        assert curve.verified_drop > 1e-12
        for t in curve.ts[:: max(1, len(curve.ts) // 6)]:
            Gt = curve.point(float(t))
            actual = np.sum(np.abs(Gt.vectors) ** 2, axis=0)
            assert np.max(np.abs(actual - Gt.norms)) <= 1e-10


def test_fitted_eigenvalues_match_rayleigh():
    rng = np.random.default_rng(5)
    G = random_frame(3, [1.0, 1.0, 2.0], rng)
    S = random_hermitian(3, rng)
    S = S @ S.conj().T
    fitted, resid = fitted_eigenvalues(S, G)
    E = S - frame_operator(G)
    for j in range(3):
        g = G.vectors[:, j]
        c = (g.conj() @ E @ g).real / (np.abs(g) ** 2).sum()
        assert fitted[j] == pytest.approx(c)
        assert resid[j] >= 0


def test_best_of_restarts_deterministic_across_worker_counts(monkeypatch):
    rng = np.random.default_rng(6)
    lam = sort_desc(rng.uniform(0, 3, 3))
    V = haar_unitary(3, rng)
    S = (V * lam) @ V.conj().T
    S = (S + S.conj().T) / 2
    a = rng.uniform(0.5, 1.5, 4)
    monkeypatch.delenv("LIDSKII_THREADS", raising=False)
    serial = frames.best_of_restarts(frobenius(), S, a, restarts=4, seed=11)
    monkeypatch.setenv("LIDSKII_THREADS", "3")
    pooled = frames.best_of_restarts(frobenius(), S, a, restarts=4, seed=11)
    assert serial[3] == pooled[3]  # same winning restart, merged in seed order
    assert serial[2] == pytest.approx(pooled[2], abs=0)
    assert np.array_equal(serial[0].vectors, pooled[0].vectors)
