"""Order predicate, witness decomposition, and range-inclusion tests."""

import numpy as np
import pytest

from staralg import (
    DEFAULT_TOL,
    NotComparableError,
    Seed,
    SplitMix64,
    adj,
    gen_rank_r,
    gen_star_pair,
    gen_unitary,
    projectors,
    range_included,
    rel_residual,
    star_leq,
    star_leq_witness,
    star_residuals,
)


def test_zero_is_least():
    rng = SplitMix64(Seed(7))
    for _ in range(10):
        b = rng.complex_gaussian(4, 4)
        assert star_leq(np.zeros((4, 4)), b)


def test_diagonal_examples():
    assert star_leq(np.diag([1.0, 0.0]), np.diag([1.0, 2.0]))
    assert not star_leq(np.diag([1.0, 0.0]), np.diag([2.0, 0.0]))


def test_shape_mismatch_rejected():
    with pytest.raises(Exception):
        star_leq(np.eye(2), np.eye(3))


def test_reflexive():
    for i in range(30):
        a = gen_rank_r(5, 5, i % 6, Seed(50 + i))
        assert star_leq(a, a)


def test_antisymmetric_up_to_residual():
    rng = SplitMix64(Seed(77))
    for i in range(20):
        a = gen_rank_r(5, 5, 3, Seed(600 + i))
        b = a + 1e-10 * rng.complex_gaussian(5, 5)
        if star_leq(a, b) and star_leq(b, a):
            assert rel_residual(a - b, a) <= 10 * DEFAULT_TOL.res_rtol


def test_transitive_on_nested_blocks():
    u = gen_unitary(6, Seed(5))
    v = gen_unitary(6, Seed(6))
    d_a = np.diag([1.1, 0.7, 0, 0, 0, 0]).astype(complex)
    d_b = np.diag([1.1, 0.7, 1.5, 0, 0, 0]).astype(complex)
    d_c = np.diag([1.1, 0.7, 1.5, 0.9, 1.3, 0]).astype(complex)
    a, b, c = (u @ d @ adj(v) for d in (d_a, d_b, d_c))
    assert star_leq(a, b) and star_leq(b, c)
    assert star_leq(a, c)


def test_projector_form_equivalence():
    # order predicate agrees with the compression characterization
    rng = SplitMix64(Seed(99))
    cases = []
    for i in range(100):
        r, k = i % 4, (i // 4) % 3
        big, small = gen_star_pair(5, r, k, Seed(2000 + i))
        cases.append((small, big))
    for _ in range(100):
        cases.append((rng.complex_gaussian(4, 4), rng.complex_gaussian(4, 4)))
    for a, b in cases:
        lhs = star_leq(a, b)
        p_r, p_cr, _, _ = projectors(a)
        rhs = (
            rel_residual(a - p_r @ b, a) <= DEFAULT_TOL.res_rtol
            and rel_residual(a - b @ p_cr, a) <= DEFAULT_TOL.res_rtol
        )
        assert lhs == rhs


def test_doubly_included_matrix_vanishes_on_null_blocks():
    rng = SplitMix64(Seed(123))
    for i in range(50):
        a = gen_rank_r(6, 6, 1 + i % 5, Seed(3000 + i))
        b = a @ rng.complex_gaussian(6, 6) @ a
        assert range_included(b, a)
        assert range_included(adj(b), adj(a))
        _, _, p_null_left, p_null_right = projectors(a)
        assert rel_residual(p_null_left @ b, b) <= DEFAULT_TOL.res_rtol
        assert rel_residual(b @ p_null_right, b) <= DEFAULT_TOL.res_rtol


def test_unitary_invariance():
    u = gen_unitary(5, Seed(8))
    v = gen_unitary(5, Seed(9))
    big, small = gen_star_pair(5, 2, 2, Seed(10))
    rng = SplitMix64(Seed(11))
    x, y = rng.complex_gaussian(5, 5), rng.complex_gaussian(5, 5)
    for a, b in ((small, big), (x, y)):
        assert star_leq(a, b) == star_leq(u @ a @ adj(v), u @ b @ adj(v))


def test_witness_equal_pair():
    a = np.diag([1.0, 0.0])
    w = star_leq_witness(a, a)
    assert w.a1.shape == (1, 1)
    assert np.allclose(w.a1, [[1.0]])
    assert w.b1.shape == (1, 1)
    assert abs(w.b1[0, 0]) <= 1e-12
    assert w.residual <= 1e-12


def test_witness_zero_smaller():
    rng = SplitMix64(Seed(21))
    b = rng.complex_gaussian(3, 3)
    w = star_leq_witness(np.zeros((3, 3)), b)
    assert w.a1.shape == (0, 0)
    rebuilt = w.u_left[:, 0:] @ w.b1 @ adj(w.u_right[:, 0:])
    assert rel_residual(rebuilt - b, b) <= 1e-12
    assert w.residual <= 1e-12


def test_witness_recovers_generated_pair():
    big, small = gen_star_pair(5, 2, 2, Seed(1))
    w = star_leq_witness(small, big)
    assert w.residual <= 1e-10
    eye = np.eye(5)
    assert rel_residual(w.u_left @ adj(w.u_left) - eye, eye) <= DEFAULT_TOL.res_rtol
    assert rel_residual(w.u_right @ adj(w.u_right) - eye, eye) <= DEFAULT_TOL.res_rtol
    r = w.a1.shape[0]
    small_rebuilt = w.u_left[:, :r] @ w.a1 @ adj(w.u_right[:, :r])
    assert rel_residual(small_rebuilt - small, small) <= 1e-10
    block = np.zeros((5, 5), dtype=complex)
    block[:r, :r] = w.a1
    block[r:, r:] = w.b1
    big_rebuilt = w.u_left @ block @ adj(w.u_right)
    assert rel_residual(big_rebuilt - big, big) <= 1e-10


def test_witness_rejects_incomparable():
    with pytest.raises(NotComparableError) as excinfo:
        star_leq_witness(np.diag([1.0, 0.0]), np.diag([2.0, 0.0]))
    r1, r2 = excinfo.value.residuals
    assert r1 > DEFAULT_TOL.res_rtol or r2 > DEFAULT_TOL.res_rtol


def test_star_residuals_values():
    r1, r2 = star_residuals(np.diag([1.0, 0.0]), np.diag([1.0, 2.0]))
    assert r1 <= 1e-15 and r2 <= 1e-15


def test_range_included():
    a = gen_rank_r(5, 5, 3, Seed(31))
    assert range_included(a, a)
    assert not range_included(np.diag([0.0, 1.0]), np.diag([1.0, 0.0]))
    rng = SplitMix64(Seed(32))
    for i in range(100):
        a = gen_rank_r(5, 5, 1 + i % 5, Seed(5000 + i))
        y = rng.complex_gaussian(5, 3)
        assert range_included(a @ y, a)


def test_range_included_shape_check():
    with pytest.raises(Exception):
        range_included(np.eye(3), np.eye(2))


def test_invertible_below_forces_equality():
    # an invertible matrix below another matrix in the order equals it
    big, small = gen_star_pair(4, 4, 0, Seed(41))
    assert star_leq(small, big)
    assert rel_residual(small - big, big) <= 1e-12
