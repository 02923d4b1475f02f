"""Star-order characterizations through projections, idempotents, and
generalized projections (matrices with a@a == a*).

The predicates here come in matched pairs: an order statement on one side
and an algebraic certificate on the other.  Diagnostic operations report
both sides plus an agreement flag; constructive operations raise when their
hypotheses fail.
"""

from __future__ import annotations

from typing import Literal

import numpy as np

from .errors import PreconditionError, UnsolvableError
from .matcore import (
    DEFAULT_TOL,
    Tol,
    _require_projector,
    adj,
    as_cmat,
    idempotent_defect,
    pinv,
    rel_residual,
)
from .report import Report, check_flag, check_le
from .solvers import SolutionFamily, sandwich_solve
from .starorder import range_inclusion_residual, star_leq, star_residuals

__all__ = [
    "projector_char",
    "pbq_char",
    "deng_decompose",
    "gp_check",
    "is_generalized_projection",
    "gp_decompose",
    "meet_split",
    "idempotent_split",
    "common_lower_bound",
]


def projector_char(p, b, side: Literal["left", "right"], tol: Tol = DEFAULT_TOL) -> Report:
    """One-sided compression test: p b <=* b iff p commutes with b b*.

    ``side="left"`` tests p b against commutation of p with b b* (requires
    range(p) <= range(b)); ``side="right"`` tests b p against commutation of
    p with b* b (requires range(p) <= range(b*)).
    """
    pm = as_cmat(p)
    bm = as_cmat(b)
    _require_projector(pm, tol, "p")
    if side == "left":
        gap = range_inclusion_residual(pm, bm, tol)
        if gap > tol.res_rtol:
            raise PreconditionError(
                f"range(p) is not inside range(b) (residual {gap:.3e})"
            )
        gram = bm @ adj(bm)
        compressed = pm @ bm
    elif side == "right":
        gap = range_inclusion_residual(pm, adj(bm), tol)
        if gap > tol.res_rtol:
            raise PreconditionError(
                f"range(p) is not inside range(b*) (residual {gap:.3e})"
            )
        gram = adj(bm) @ bm
        compressed = bm @ pm
    else:
        raise PreconditionError(f"side must be 'left' or 'right', got {side!r}")

    commute = rel_residual(pm @ gram - gram @ pm, gram)
    s1, s2 = star_residuals(compressed, bm)
    star_holds = s1 <= tol.res_rtol and s2 <= tol.res_rtol
    commute_holds = commute <= tol.res_rtol
    checks = (
        check_le("star_left", s1, tol.res_rtol),
        check_le("star_right", s2, tol.res_rtol),
        check_le("commute", commute, tol.res_rtol),
        check_flag("sides_agree", star_holds == commute_holds),
    )
    return Report(suite=f"projector-char-{side}", trial=0, checks=checks)


def pbq_char(p, b, q, tol: Tol = DEFAULT_TOL) -> Report:
    """Two-sided compression test: p b q <=* b iff the two commutation
    identities p b q b* = b q b* p and q b* p b = b* p b q hold."""
    pm = as_cmat(p)
    bm = as_cmat(b)
    qm = as_cmat(q)
    _require_projector(pm, tol, "p")
    _require_projector(qm, tol, "q")
    gap_p = range_inclusion_residual(pm, bm, tol)
    if gap_p > tol.res_rtol:
        raise PreconditionError(f"range(p) is not inside range(b) (residual {gap_p:.3e})")
    gap_q = range_inclusion_residual(qm, adj(bm), tol)
    if gap_q > tol.res_rtol:
        raise PreconditionError(f"range(q) is not inside range(b*) (residual {gap_q:.3e})")

    compressed = pm @ bm @ qm
    right = bm @ qm @ adj(bm)
    left = adj(bm) @ pm @ bm
    c1 = rel_residual(pm @ right - right @ pm, right)
    c2 = rel_residual(qm @ left - left @ qm, left)
    s1, s2 = star_residuals(compressed, bm)
    star_holds = s1 <= tol.res_rtol and s2 <= tol.res_rtol
    commute_holds = c1 <= tol.res_rtol and c2 <= tol.res_rtol
    checks = (
        check_le("star_left", s1, tol.res_rtol),
        check_le("star_right", s2, tol.res_rtol),
        check_le("commute_range", c1, tol.res_rtol),
        check_le("commute_corange", c2, tol.res_rtol),
        check_flag("sides_agree", star_holds == commute_holds),
    )
    return Report(suite="pbq-char", trial=0, checks=checks)


def deng_decompose(a, c_idempotent, tol: Tol = DEFAULT_TOL) -> SolutionFamily:
    """Witness family for c <=* a when c is idempotent.

    Solves (I - c*) X (I - c*) = a - c; each instantiation reconstructs a as
    c + (I - c*) X (I - c*).  Unsolvability of the sandwich equation signals
    that c is not below a in the star order.
    """
    am = as_cmat(a)
    cm = as_cmat(c_idempotent)
    if am.shape != cm.shape or am.shape[0] != am.shape[1]:
        raise PreconditionError(
            f"expected square matrices of one dimension, got {am.shape} and {cm.shape}"
        )
    defect = idempotent_defect(cm)
    if defect > tol.res_rtol:
        raise PreconditionError(f"c is not idempotent (defect {defect:.3e})")
    outer = np.eye(am.shape[0], dtype=np.complex128) - adj(cm)
    # I - c* may be rounding noise (c close to the identity)
    scale = max(1.0, float(np.linalg.norm(cm)))
    try:
        return sandwich_solve(outer, am - cm, outer, tol, a_scale=scale, b_scale=scale)
    except UnsolvableError as exc:
        raise UnsolvableError(
            "no decomposition a = c + (I - c*) X (I - c*): "
            f"c is not below a in the star order (criterion residual {exc.residual:.3e})",
            residual=exc.residual,
        ) from exc


def gp_check(a, tol: Tol = DEFAULT_TOL) -> Report:
    """Diagnostic for generalized projections (a@a == a*).

    Reports the defining defect plus the derived facts that a**3 is the
    orthogonal projector onto range(a).  All residuals are relative to a.
    """
    am = as_cmat(a)
    if am.shape[0] != am.shape[1]:
        raise PreconditionError(f"a must be square, got {am.shape}")
    a2 = am @ am
    a3 = a2 @ am
    p_range = am @ pinv(am, tol)
    rt = tol.res_rtol
    checks = (
        check_le("gp_defect", rel_residual(a2 - adj(am), am), rt),
        check_le("cube_hermitian", rel_residual(a3 - adj(a3), am), rt),
        check_le("cube_idempotent", rel_residual(a3 @ a3 - a3, am), rt),
        check_le("cube_is_range_projector", rel_residual(a3 - p_range, am), rt),
    )
    return Report(suite="gp-check", trial=0, checks=checks)


def is_generalized_projection(a, tol: Tol = DEFAULT_TOL) -> bool:
    return gp_check(a, tol).verdict


def gp_decompose(a, b_gp, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """Witness X with a = b + (I - b b*) X (I - b* b) for a generalized
    projection b with b <=* a.  X = a itself is such a witness."""
    am = as_cmat(a)
    bm = as_cmat(b_gp)
    if am.shape != bm.shape or am.shape[0] != am.shape[1]:
        raise PreconditionError(
            f"expected square matrices of one dimension, got {am.shape} and {bm.shape}"
        )
    if not is_generalized_projection(bm, tol):
        raise PreconditionError("b is not a generalized projection")
    r1, r2 = star_residuals(bm, am)
    if r1 > tol.res_rtol or r2 > tol.res_rtol:
        raise PreconditionError(
            f"b is not below a in the star order (residuals {r1:.3e}, {r2:.3e})"
        )
    return am.copy()


def meet_split(a_gp, b, tol: Tol = DEFAULT_TOL) -> tuple[np.ndarray, Report]:
    """Split a a* = b + x into idempotent summands with b* x = x b* = 0.

    Requires a generalized projection a and a common star lower bound b of
    a and a*.  Returns x = a a* - b plus the certificate report, which also
    carries the absorption identities a b = b a = a* b = b a* = b.
    """
    am = as_cmat(a_gp)
    bm = as_cmat(b)
    if am.shape != bm.shape or am.shape[0] != am.shape[1]:
        raise PreconditionError(
            f"expected square matrices of one dimension, got {am.shape} and {bm.shape}"
        )
    if not is_generalized_projection(am, tol):
        raise PreconditionError("a is not a generalized projection")
    r1, r2 = star_residuals(bm, am)
    if r1 > tol.res_rtol or r2 > tol.res_rtol:
        raise PreconditionError(
            f"b is not below a in the star order (residuals {r1:.3e}, {r2:.3e})"
        )
    r1s, r2s = star_residuals(bm, adj(am))
    if r1s > tol.res_rtol or r2s > tol.res_rtol:
        raise PreconditionError(
            f"b is not below a* in the star order (residuals {r1s:.3e}, {r2s:.3e})"
        )
    x = am @ adj(am) - bm
    rt = tol.res_rtol
    checks = (
        check_le("b_idempotent", idempotent_defect(bm), rt),
        check_le("x_idempotent", idempotent_defect(x), rt),
        check_le("bstar_x", rel_residual(adj(bm) @ x, bm), rt),
        check_le("x_bstar", rel_residual(x @ adj(bm), bm), rt),
        check_le("ab_absorb", rel_residual(am @ bm - bm, bm), rt),
        check_le("ba_absorb", rel_residual(bm @ am - bm, bm), rt),
        check_le("astar_b_absorb", rel_residual(adj(am) @ bm - bm, bm), rt),
        check_le("b_astar_absorb", rel_residual(bm @ adj(am) - bm, bm), rt),
    )
    return x, Report(suite="meet-split", trial=0, checks=checks)


def idempotent_split(a_idem, b, tol: Tol = DEFAULT_TOL) -> tuple[np.ndarray, Report]:
    """Split an idempotent a as b + x with x idempotent and b* x = x b* = 0.

    The certificates hold exactly when b <=* a, so for a non-comparable b the
    returned report demonstrates at least one failing certificate; the
    agreement flag records that the two sides matched either way.
    """
    am = as_cmat(a_idem)
    bm = as_cmat(b)
    if am.shape != bm.shape or am.shape[0] != am.shape[1]:
        raise PreconditionError(
            f"expected square matrices of one dimension, got {am.shape} and {bm.shape}"
        )
    defect = idempotent_defect(am)
    if defect > tol.res_rtol:
        raise PreconditionError(f"a is not idempotent (defect {defect:.3e})")
    x = am - bm
    rt = tol.res_rtol
    certs = (
        check_le("b_idempotent", idempotent_defect(bm), rt),
        check_le("x_idempotent", idempotent_defect(x), rt),
        check_le("bstar_x", rel_residual(adj(bm) @ x, bm), rt),
        check_le("x_bstar", rel_residual(x @ adj(bm), bm), rt),
    )
    certs_hold = all(c.passed for c in certs)
    star = star_leq(bm, am, tol)
    checks = certs + (check_flag("star_matches_certificates", star == certs_hold),)
    return x, Report(suite="idempotent-split", trial=0, checks=checks)


def common_lower_bound(a, c_gp, b, tol: Tol = DEFAULT_TOL) -> Report:
    """Diagnostic: is b a common star lower bound of a and c c*?

    Side one is the pair of order relations b <=* a and b <=* c c*.  Side two
    is the algebraic characterization: b idempotent, the sandwich equation
    a = b + (I - b*) X (I - b*) solvable, and y = c c* - b annihilated by b*
    on both sides.  The report carries both sides and their agreement flag.
    Never raises for non-comparable b (only for a non-GP c or bad shapes).
    """
    am = as_cmat(a)
    cm = as_cmat(c_gp)
    bm = as_cmat(b)
    if am.shape != bm.shape or am.shape != cm.shape or am.shape[0] != am.shape[1]:
        raise PreconditionError(
            f"expected square matrices of one dimension, got {am.shape}, {cm.shape}, {bm.shape}"
        )
    if not is_generalized_projection(cm, tol):
        raise PreconditionError("c is not a generalized projection")
    cc = cm @ adj(cm)
    lhs = star_leq(bm, am, tol) and star_leq(bm, cc, tol)

    b_idem = idempotent_defect(bm)
    try:
        deng_decompose(am, bm, tol)
        witness_exists = True
    except (PreconditionError, UnsolvableError):
        witness_exists = False
    y = cc - bm
    y_left = rel_residual(adj(bm) @ y, bm)
    y_right = rel_residual(y @ adj(bm), bm)
    rt = tol.res_rtol
    rhs = b_idem <= rt and witness_exists and y_left <= rt and y_right <= rt
    checks = (
        check_flag("lower_bound_of_a", star_leq(bm, am, tol)),
        check_flag("lower_bound_of_ccstar", star_leq(bm, cc, tol)),
        check_le("b_idempotent", b_idem, rt),
        check_flag("sandwich_witness_exists", witness_exists),
        check_le("bstar_y", y_left, rt),
        check_le("y_bstar", y_right, rt),
        check_flag("sides_agree", lhs == rhs),
    )
    return Report(suite="common-lower-bound", trial=0, checks=checks)
