"""Dense complex-matrix substrate: SVD, pseudoinverse, projectors, residuals.

Every matrix in this package is a 2-D ``numpy.ndarray`` of ``complex128``.
All operations here are pure functions of their inputs; nothing is mutated,
so values can be shared freely across threads.

Every finite matrix has closed range, so range-based constructions below
need no topological hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericError, PreconditionError

__all__ = [
    "Tol",
    "DEFAULT_TOL",
    "Svd",
    "adj",
    "as_cmat",
    "svd",
    "rank_of",
    "pinv",
    "projectors",
    "meet_projector",
    "rel_residual",
    "hermitian_defect",
    "idempotent_defect",
    "is_projector",
]


@dataclass(frozen=True)
class Tol:
    """Tolerance policy used by every approximate predicate.

    rank_rtol: relative singular-value cutoff (scaled by sigma_max * max(m, n)).
    res_rtol:  relative residual threshold for all "holds approximately" tests.
    """

    rank_rtol: float = 1e-12
    res_rtol: float = 1e-8

    def __post_init__(self) -> None:
        if not 0.0 < self.rank_rtol < 1.0:
            raise PreconditionError(f"rank_rtol must be in (0, 1), got {self.rank_rtol}")
        if not 0.0 < self.res_rtol < 1.0:
            raise PreconditionError(f"res_rtol must be in (0, 1), got {self.res_rtol}")


DEFAULT_TOL = Tol()


def adj(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def as_cmat(a) -> np.ndarray:
    """Coerce input to a 2-D complex128 matrix, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise PreconditionError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise PreconditionError(f"matrix dimensions must be positive, got {m.shape}")
    if not np.isfinite(m).all():
        raise PreconditionError("matrix entries must be finite (no NaN/Inf)")
    return m


@dataclass(frozen=True)
class Svd:
    """Full singular value decomposition a = u @ diag(s) @ vh (s padded by zeros)."""

    u: np.ndarray
    s: np.ndarray
    vh: np.ndarray


def svd(a) -> Svd:
    """Full SVD of a dense complex matrix."""
    m = as_cmat(a)
    try:
        u, s, vh = np.linalg.svd(m, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise NumericError(
            f"SVD did not converge for a {m.shape[0]}x{m.shape[1]} matrix"
        ) from exc
    return Svd(u, s, vh)


def _cutoff(s: np.ndarray, shape: tuple[int, int], tol: Tol) -> float:
    top = float(s[0]) if s.size else 0.0
    return tol.rank_rtol * top * max(shape)


def rank_of(a, tol: Tol = DEFAULT_TOL) -> int:
    """Number of singular values above the relative rank cutoff."""
    f = svd(a)
    return int(np.count_nonzero(f.s > _cutoff(f.s, (f.u.shape[0], f.vh.shape[0]), tol)))


def pinv(a, tol: Tol = DEFAULT_TOL, scale: float | None = None) -> np.ndarray:
    """Moore-Penrose pseudoinverse via SVD.

    Singular values at or below ``rank_rtol * sigma_max * max(m, n)`` are
    treated as zero.  For derived matrices that may be pure rounding noise
    (differences, products with projectors), pass the norm of the parent
    data as ``scale``: the cutoff then uses ``max(sigma_max, scale)``, so a
    numerically-zero input inverts to zero instead of amplifying noise.
    """
    m = as_cmat(a)
    f = svd(m)
    top = float(f.s[0]) if f.s.size else 0.0
    reference = max(top, scale) if scale is not None else top
    keep = f.s > tol.rank_rtol * reference * max(m.shape)
    inv = np.zeros_like(f.s)
    inv[keep] = 1.0 / f.s[keep]
    k = f.s.size
    v = adj(f.vh)
    return (v[:, :k] * inv) @ adj(f.u[:, :k])


def projectors(a, tol: Tol = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Orthogonal projectors onto range(a), range(a*), null(a*), null(a).

    Returns (a @ a+, a+ @ a, I - a @ a+, I - a+ @ a); each is Hermitian
    idempotent to within res_rtol.
    """
    m = as_cmat(a)
    ap = pinv(m, tol)
    p_range = m @ ap
    p_corange = ap @ m
    return (
        p_range,
        p_corange,
        np.eye(m.shape[0], dtype=np.complex128) - p_range,
        np.eye(m.shape[1], dtype=np.complex128) - p_corange,
    )


def rel_residual(e, scale) -> float:
    """Frobenius norm of ``e`` relative to ``max(1, ||scale||_F)``.

    The unit clamp keeps residuals meaningful around the zero matrix; this is
    the single residual convention used by every predicate in the package.
    """
    em = as_cmat(e)
    sm = as_cmat(scale)
    return float(np.linalg.norm(em) / max(1.0, float(np.linalg.norm(sm))))


def hermitian_defect(a, scale=None) -> float:
    """Relative residual of a - a*."""
    m = as_cmat(a)
    return rel_residual(m - adj(m), m if scale is None else scale)


def idempotent_defect(a, scale=None) -> float:
    """Relative residual of a@a - a."""
    m = as_cmat(a)
    return rel_residual(m @ m - m, m if scale is None else scale)


def is_projector(p, tol: Tol = DEFAULT_TOL) -> bool:
    """True when p is Hermitian idempotent to within res_rtol."""
    m = as_cmat(p)
    if m.shape[0] != m.shape[1]:
        return False
    return hermitian_defect(m) <= tol.res_rtol and idempotent_defect(m) <= tol.res_rtol


def _require_projector(p: np.ndarray, tol: Tol, name: str) -> None:
    if p.shape[0] != p.shape[1]:
        raise PreconditionError(f"{name} must be square, got {p.shape}")
    h = hermitian_defect(p)
    q = idempotent_defect(p)
    if h > tol.res_rtol or q > tol.res_rtol:
        raise PreconditionError(
            f"{name} is not an orthogonal projector "
            f"(hermitian defect {h:.3e}, idempotent defect {q:.3e})"
        )


def meet_projector(p, q, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projector onto range(p) & range(q) for projectors p, q.

    Uses the Anderson-Duffin form 2 p (p + q)+ q.  The result is dominated by
    both inputs: p @ m == m == q @ m to within res_rtol.
    """
    pm = as_cmat(p)
    qm = as_cmat(q)
    _require_projector(pm, tol, "p")
    _require_projector(qm, tol, "q")
    if pm.shape != qm.shape:
        raise PreconditionError(f"projector shapes differ: {pm.shape} vs {qm.shape}")
    return 2.0 * pm @ pinv(pm + qm, tol) @ qm
