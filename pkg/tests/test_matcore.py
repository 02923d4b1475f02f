"""Pseudoinverse, projector, and residual-convention tests."""

import numpy as np
import pytest

from staralg import (
    DEFAULT_TOL,
    PreconditionError,
    Seed,
    Tol,
    adj,
    as_cmat,
    gen_rank_r,
    gen_unitary,
    hermitian_defect,
    idempotent_defect,
    meet_projector,
    pinv,
    projectors,
    rank_of,
    rel_residual,
    svd,
)


def seeded_matrices(count=200, max_dim=8):
    """Deterministic mix of shapes and ranks, including rank 0 and full."""
    for i in range(count):
        m = 1 + (i % max_dim)
        n = 1 + ((i // max_dim) % max_dim)
        r = i % (min(m, n) + 1)
        yield gen_rank_r(m, n, r, Seed(1000 + i)), r


def test_pinv_identity():
    assert np.allclose(pinv(np.eye(2)), np.eye(2), atol=1e-14)


def test_pinv_zero_rectangular():
    out = pinv(np.zeros((2, 3)))
    assert out.shape == (3, 2)
    assert np.all(out == 0)


def test_pinv_nilpotent_shift():
    a = np.array([[0.0, 1.0], [0.0, 0.0]])
    ap = pinv(a)
    assert np.allclose(ap, [[0.0, 0.0], [1.0, 0.0]], atol=1e-14)
    # all four defining identities, by direct multiplication
    assert np.allclose(a @ ap @ a, a, atol=1e-14)
    assert np.allclose(ap @ a @ ap, ap, atol=1e-14)
    assert np.allclose(a @ ap, adj(a @ ap), atol=1e-14)
    assert np.allclose(ap @ a, adj(ap @ a), atol=1e-14)


def test_penrose_identities_across_ranks():
    for a, _ in seeded_matrices():
        ap = pinv(a)
        assert rel_residual(a @ ap @ a - a, a) <= 1e-10
        assert rel_residual(ap @ a @ ap - ap, ap) <= 1e-10
        assert hermitian_defect(a @ ap) <= 1e-10
        assert hermitian_defect(ap @ a) <= 1e-10


def test_pinv_involution():
    for a, _ in seeded_matrices(count=60):
        assert rel_residual(pinv(pinv(a)) - a, a) <= 1e-9


def test_pinv_adjoint_commutes():
    for a, _ in seeded_matrices(count=60):
        assert rel_residual(adj(pinv(a)) - pinv(adj(a)), adj(a)) <= 1e-10


def test_pinv_scale_hint_zeroes_noise():
    noise = 1e-15 * gen_rank_r(4, 4, 4, Seed(4))
    assert np.linalg.norm(pinv(noise)) > 1.0  # relative cutoff keeps noise
    assert np.all(pinv(noise, scale=1.0) == 0)


def test_rank_of():
    assert rank_of(np.zeros((3, 3))) == 0
    assert rank_of(np.eye(4)) == 4
    outer = np.outer([1.0, 1.0j, 2.0], [2.0, 1.0, 1.0])
    # rank-1 by construction; cross-check against a raw SVD count
    s = np.linalg.svd(outer, compute_uv=False)
    assert int(np.sum(s > 1e-12 * s[0] * 3)) == 1
    assert rank_of(outer) == 1
    for a, r in seeded_matrices(count=80):
        assert rank_of(a) == r


def test_projectors_examples():
    p_r, p_cr, p_nl, p_nr = projectors(np.eye(2))
    assert np.allclose(p_r, np.eye(2), atol=1e-12)
    assert np.allclose(p_nl, 0, atol=1e-12)
    p_r, p_cr, p_nl, p_nr = projectors(np.diag([1.0, 0.0]))
    assert np.allclose(p_r, np.diag([1.0, 0.0]), atol=1e-12)
    assert np.allclose(p_nr, np.diag([0.0, 1.0]), atol=1e-12)
    p_r, p_cr, _, _ = projectors([[0.0, 1.0], [0.0, 0.0]])
    assert np.allclose(p_r, np.diag([1.0, 0.0]), atol=1e-12)
    assert np.allclose(p_cr, np.diag([0.0, 1.0]), atol=1e-12)


def test_projector_invariants():
    for a, _ in seeded_matrices(count=60):
        p_r, p_cr, p_nl, p_nr = projectors(a)
        for p in (p_r, p_cr, p_nl, p_nr):
            assert hermitian_defect(p) <= 1e-10
            assert idempotent_defect(p) <= 1e-10
        assert rel_residual(p_r @ a - a, a) <= 1e-10
        assert rel_residual(a @ p_cr - a, a) <= 1e-10


def test_meet_projector_examples():
    eye = np.eye(3)
    assert np.allclose(meet_projector(eye, eye), eye, atol=1e-10)
    assert np.allclose(
        meet_projector(np.diag([1.0, 0.0]), np.diag([0.0, 1.0])), 0, atol=1e-10
    )
    got = meet_projector(np.diag([1.0, 1.0, 0.0]), np.diag([0.0, 1.0, 1.0]))
    assert np.allclose(got, np.diag([0.0, 1.0, 0.0]), atol=1e-10)


def test_meet_projector_dominated_by_both():
    for i in range(30):
        u = gen_unitary(5, Seed(3000 + i))
        v = gen_unitary(5, Seed(4000 + i))
        p = u[:, :3] @ adj(u[:, :3])
        q = v[:, :2] @ adj(v[:, :2])
        m = meet_projector(p, q)
        assert hermitian_defect(m, scale=np.eye(5)) <= 1e-10
        assert idempotent_defect(m, scale=np.eye(5)) <= 1e-10
        assert rel_residual(p @ m - m, m) <= 1e-8
        assert rel_residual(q @ m - m, m) <= 1e-8


def test_meet_projector_rejects_non_projector():
    with pytest.raises(PreconditionError):
        meet_projector(np.diag([2.0, 0.0]), np.eye(2))


def test_rel_residual_convention():
    assert rel_residual(np.zeros((2, 2)), np.ones((2, 2))) == 0.0
    assert rel_residual(np.eye(2), np.eye(2)) == pytest.approx(1.0)
    e = np.array([[3.0, 4.0]])
    assert rel_residual(e, np.zeros((1, 2))) == pytest.approx(5.0)


def test_tol_validation():
    with pytest.raises(PreconditionError):
        Tol(rank_rtol=0.0)
    with pytest.raises(PreconditionError):
        Tol(res_rtol=1.5)
    assert DEFAULT_TOL.rank_rtol == 1e-12
    assert DEFAULT_TOL.res_rtol == 1e-8


def test_as_cmat_rejects_bad_input():
    with pytest.raises(PreconditionError):
        as_cmat([1.0, 2.0])
    with pytest.raises(PreconditionError):
        as_cmat([[np.nan, 0.0], [0.0, 1.0]])
    with pytest.raises(PreconditionError):
        as_cmat([[np.inf]])
    with pytest.raises(PreconditionError):
        as_cmat(np.zeros((0, 2)))


def test_svd_reconstruction():
    for a, _ in seeded_matrices(count=40):
        f = svd(a)
        k = f.s.size
        rebuilt = (f.u[:, :k] * f.s) @ f.vh[:k, :]
        assert rel_residual(rebuilt - a, a) <= 1e-12
        assert np.all(np.diff(f.s) <= 1e-15)
        assert np.all(f.s >= 0)
