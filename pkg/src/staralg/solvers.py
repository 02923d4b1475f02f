"""Solution constructions for AX=C, AXB=C, and the system B·X·A = B = A·X·B.

Solvers check their solvability criteria and fail loudly with the offending
residual; the diagnostic operations (`solves_system`, `prop_main_check`)
never raise, they report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Sequence

import numpy as np

from .errors import PreconditionError, UnsolvableError
from .matcore import (
    DEFAULT_TOL,
    Tol,
    adj,
    as_cmat,
    hermitian_defect,
    pinv,
    rel_residual,
)
from .report import Report, check_flag, check_le
from .starorder import range_inclusion_residual, star_residuals

__all__ = [
    "SolutionFamily",
    "douglas_solve",
    "sandwich_solve",
    "system_criterion_residual",
    "system_solvable",
    "system_particular",
    "system_general",
    "solves_system",
    "reduce_system",
    "hermitian_system_solve",
    "system_hermitian",
    "prop_main_check",
]


@dataclass(frozen=True)
class SolutionFamily:
    """A particular solution plus an affine map from free parameters to solutions.

    ``instantiate`` accepts one matrix per entry of ``param_shapes``;
    instantiating with all-zero parameters reproduces ``particular`` exactly.
    """

    particular: np.ndarray
    param_shapes: tuple[tuple[int, int], ...]
    _apply: Callable[..., np.ndarray]

    def instantiate(self, params: Sequence) -> np.ndarray:
        if len(params) != len(self.param_shapes):
            raise PreconditionError(
                f"expected {len(self.param_shapes)} parameter matrices, got {len(params)}"
            )
        mats = []
        for got, want in zip(params, self.param_shapes):
            m = as_cmat(got)
            if m.shape != want:
                raise PreconditionError(f"parameter shape {m.shape} != expected {want}")
            mats.append(m)
        return self._apply(*mats)

    def zeros(self) -> list[np.ndarray]:
        """All-zero parameter list matching ``param_shapes``."""
        return [np.zeros(shape, dtype=np.complex128) for shape in self.param_shapes]


def douglas_solve(a, c, tol: Tol = DEFAULT_TOL) -> SolutionFamily:
    """All solutions X of a X = c, i.e. X(T) = a+ c + (I - a+ a) T.

    Solvable exactly when range(c) <= range(a), tested via a a+ c = c.
    """
    am = as_cmat(a)
    cm = as_cmat(c)
    gap = range_inclusion_residual(cm, am, tol)
    if gap > tol.res_rtol:
        raise UnsolvableError(
            f"a X = c is unsolvable: range criterion residual {gap:.3e}", residual=gap
        )
    ap = pinv(am, tol)
    particular = ap @ cm
    ker = np.eye(am.shape[1], dtype=np.complex128) - ap @ am

    def apply(t: np.ndarray) -> np.ndarray:
        return particular + ker @ t

    return SolutionFamily(particular, ((am.shape[1], cm.shape[1]),), apply)


def sandwich_solve(
    a, c, b, tol: Tol = DEFAULT_TOL, *,
    a_scale: float | None = None, b_scale: float | None = None,
) -> SolutionFamily:
    """All solutions X of a X b = c, i.e. X(U) = a+ c b+ + U - a+ a U b b+.

    Solvable exactly when a a+ c b+ b = c.  The scale hints feed the rank
    decision when a or b is a derived matrix that may be rounding noise.
    """
    am = as_cmat(a)
    cm = as_cmat(c)
    bm = as_cmat(b)
    if cm.shape != (am.shape[0], bm.shape[1]):
        raise PreconditionError(
            f"c must be {am.shape[0]}x{bm.shape[1]} for a X b = c, got {cm.shape}"
        )
    ap = pinv(am, tol, scale=a_scale)
    bp = pinv(bm, tol, scale=b_scale)
    crit = rel_residual(am @ ap @ cm @ bp @ bm - cm, cm)
    if crit > tol.res_rtol:
        raise UnsolvableError(
            f"a X b = c is unsolvable: criterion residual {crit:.3e}", residual=crit
        )
    particular = ap @ cm @ bp
    left = ap @ am
    right = bm @ bp

    def apply(u: np.ndarray) -> np.ndarray:
        return particular + u - left @ u @ right

    return SolutionFamily(particular, ((am.shape[1], bm.shape[0]),), apply)


def _require_square_pair(a: np.ndarray, b: np.ndarray) -> int:
    if a.shape[0] != a.shape[1] or a.shape != b.shape:
        raise PreconditionError(
            f"expected square matrices of one common dimension, got {a.shape} and {b.shape}"
        )
    return a.shape[0]


def system_criterion_residual(a, b, tol: Tol = DEFAULT_TOL) -> float:
    """Residual of (a a+) b (a+ a) - b, the solvability criterion of the system."""
    am = as_cmat(a)
    bm = as_cmat(b)
    _require_square_pair(am, bm)
    ap = pinv(am, tol)
    return rel_residual(am @ ap @ bm @ ap @ am - bm, bm)


def system_solvable(a, b_selfadjoint, tol: Tol = DEFAULT_TOL) -> bool:
    """Solvability of b X a = b = a X b for self-adjoint b.

    Equivalent to (a a+) b (a+ a) = b, and to the two range inclusions
    range(b) <= range(a) and range(b) <= range(a*).
    """
    bm = as_cmat(b_selfadjoint)
    h = hermitian_defect(bm)
    if h > tol.res_rtol:
        raise PreconditionError(f"b must be self-adjoint (defect {h:.3e})")
    return system_criterion_residual(a, bm, tol) <= tol.res_rtol


def _require_star(b: np.ndarray, a: np.ndarray, tol: Tol, what: str) -> None:
    r1, r2 = star_residuals(b, a)
    if r1 > tol.res_rtol or r2 > tol.res_rtol:
        raise PreconditionError(
            f"{what} requires b <=* a; residuals {r1:.3e}, {r2:.3e}"
        )


def system_particular(
    a, b, tol: Tol = DEFAULT_TOL, which: Literal["pinv_a", "pinv_b"] = "pinv_a"
) -> np.ndarray:
    """A closed-form solution of b X a = b = a X b when b <=* a: a+ or b+."""
    am = as_cmat(a)
    bm = as_cmat(b)
    _require_square_pair(am, bm)
    _require_star(bm, am, tol, "system_particular")
    if which == "pinv_a":
        return pinv(am, tol)
    if which == "pinv_b":
        return pinv(bm, tol)
    raise PreconditionError(f"which must be 'pinv_a' or 'pinv_b', got {which!r}")


def system_general(a, b, s, t, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """The closed-form solution family of b X a = b = a X b, evaluated at (s, t).

    The eight-term expression is evaluated term by term rather than
    algebraically simplified, so transcription stays auditable.  The two
    terms compressing b onto the cokernel of a, ``(I - a a+) b``, vanish
    identically under the order hypothesis (a a+ b = b); they are retained
    so the expression reads as derived.  When a == b the difference
    pseudoinverse is the zero matrix and the formula degrades gracefully.
    """
    am = as_cmat(a)
    bm = as_cmat(b)
    n = _require_square_pair(am, bm)
    sm = as_cmat(s)
    tm = as_cmat(t)
    if sm.shape != (n, n) or tm.shape != (n, n):
        raise PreconditionError(
            f"parameters must be {n}x{n}, got {sm.shape} and {tm.shape}"
        )
    _require_star(bm, am, tol, "system_general")

    ap = pinv(am, tol)
    bp = pinv(bm, tol)
    d = am - bm
    # a - b can be rounding noise when a and b nearly coincide
    dp = pinv(d, tol, scale=float(max(np.linalg.norm(am), np.linalg.norm(bm))))
    eye = np.eye(n, dtype=np.complex128)
    p_ra = am @ ap        # projector onto range(a)
    p_cra = ap @ am       # projector onto range(a*)
    p_rb = bm @ bp        # projector onto range(b)

    return (
        ap @ bm @ bp
        + ap @ ((eye - p_ra) @ bm + d @ sm) @ dp
        + tm
        - p_cra @ tm @ d @ dp
        - ap @ (eye - p_ra) @ bm @ dp @ p_rb
        - ap @ d @ sm @ dp @ p_rb
        - p_cra @ tm @ p_rb
        + p_cra @ tm @ d @ dp @ p_rb
    )


def solves_system(a, b, x, tol: Tol = DEFAULT_TOL) -> Report:
    """Diagnostic: does x solve the system, and is b star-dominated by a x a?

    The two properties are equivalent whenever b <=* a, so the report carries
    an agreement flag alongside the four raw residuals.  Never raises.
    """
    am = as_cmat(a)
    bm = as_cmat(b)
    xm = as_cmat(x)
    n = _require_square_pair(am, bm)
    if xm.shape != (n, n):
        raise PreconditionError(f"x must be {n}x{n}, got {xm.shape}")
    r_bxa = rel_residual(bm @ xm @ am - bm, bm)
    r_axb = rel_residual(am @ xm @ bm - bm, bm)
    axa = am @ xm @ am
    d1, d2 = star_residuals(bm, axa)
    solves = r_bxa <= tol.res_rtol and r_axb <= tol.res_rtol
    dominated = d1 <= tol.res_rtol and d2 <= tol.res_rtol
    checks = (
        check_le("eq_bxa", r_bxa, tol.res_rtol),
        check_le("eq_axb", r_axb, tol.res_rtol),
        check_le("dom_left", d1, tol.res_rtol),
        check_le("dom_right", d2, tol.res_rtol),
        check_flag("solves_matches_dominance", solves == dominated),
    )
    return Report(suite="solves-system", trial=0, checks=checks)


def reduce_system(a, b, x_big, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """Compress a system solution to one of the reduced pair X b = a+ b, b X = b a+.

    Returns y = (a+ a) x_big (a a+).  Requires that x_big actually solves
    b X a = b = a X b.
    """
    am = as_cmat(a)
    bm = as_cmat(b)
    xm = as_cmat(x_big)
    n = _require_square_pair(am, bm)
    if xm.shape != (n, n):
        raise PreconditionError(f"x_big must be {n}x{n}, got {xm.shape}")
    r_bxa = rel_residual(bm @ xm @ am - bm, bm)
    r_axb = rel_residual(am @ xm @ bm - bm, bm)
    if r_bxa > tol.res_rtol or r_axb > tol.res_rtol:
        raise PreconditionError(
            f"x_big does not solve the system (residuals {r_bxa:.3e}, {r_axb:.3e})"
        )
    ap = pinv(am, tol)
    return ap @ am @ xm @ am @ ap


def hermitian_system_solve(a, b, c, d, w_hermitian, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """Hermitian solution of the pair a X = c, X b = d.

    Requires the four solvability conditions (a a+ c = c, d b+ b = d,
    a d = c b, and a c* / b* d Hermitian) plus a Hermitian free parameter w.
    Built from the Schur complement s = d* - b* a+ c of the associated block
    matrix and m = b* (I - a+ a).
    """
    am = as_cmat(a)
    bm = as_cmat(b)
    cm = as_cmat(c)
    dm = as_cmat(d)
    wm = as_cmat(w_hermitian)
    n = _require_square_pair(am, bm)
    for name, mat in (("c", cm), ("d", dm), ("w", wm)):
        if mat.shape != (n, n):
            raise PreconditionError(f"{name} must be {n}x{n}, got {mat.shape}")

    ap = pinv(am, tol)
    bp = pinv(bm, tol)
    conditions = (
        ("range_c", rel_residual(am @ ap @ cm - cm, cm)),
        ("corange_d", rel_residual(dm @ bp @ bm - dm, dm)),
        ("link_ad_cb", rel_residual(am @ dm - cm @ bm, am @ dm)),
        ("ac_adj_hermitian", hermitian_defect(am @ adj(cm))),
        ("bd_hermitian", hermitian_defect(adj(bm) @ dm)),
    )
    for name, res in conditions:
        if res > tol.res_rtol:
            raise UnsolvableError(
                f"no hermitian solution: condition {name} fails (residual {res:.3e})",
                residual=res,
            )
    hw = hermitian_defect(wm)
    if hw > tol.res_rtol:
        raise PreconditionError(f"w must be hermitian (defect {hw:.3e})")

    eye = np.eye(n, dtype=np.complex128)
    ker = eye - ap @ am                # I - a+ a
    m = adj(bm) @ ker
    # m collapses to rounding noise whenever range(b*) sits inside range(a*)
    mp = pinv(m, tol, scale=float(np.linalg.norm(bm)))
    schur = adj(dm) - adj(bm) @ ap @ cm
    ker_m = eye - mp @ m               # I - m+ m
    base = ap @ cm + ker @ mp @ schur
    return base + ker @ ker_m @ adj(base) + ker @ ker_m @ wm @ adj(ker_m) @ adj(ker)


def system_hermitian(a, b, w_hermitian, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """Hermitian solution of b X a = b = a X b.

    Requires b <=* a together with b* a+ b and b (a+)* b* Hermitian; the
    construction solves the reduced pair b X = b a+, X b = a+ b.
    """
    am = as_cmat(a)
    bm = as_cmat(b)
    _require_square_pair(am, bm)
    _require_star(bm, am, tol, "system_hermitian")
    ap = pinv(am, tol)
    h1 = hermitian_defect(adj(bm) @ ap @ bm)
    h2 = hermitian_defect(bm @ adj(ap) @ adj(bm))
    if h1 > tol.res_rtol or h2 > tol.res_rtol:
        raise PreconditionError(
            f"b* a+ b and b (a+)* b* must be hermitian (defects {h1:.3e}, {h2:.3e})"
        )
    return hermitian_system_solve(bm, bm, bm @ ap, ap @ bm, w_hermitian, tol)


def prop_main_check(a, b, x, tol: Tol = DEFAULT_TOL) -> Report:
    """Diagnostic for the two equivalent condition bundles on (a, b, x).

    Left side: range(a) <= range(b), null(b) <= null(a), and x solves
    b X a = b = a X b.  Right side: null(a) = null(b), range(a) = range(b),
    and a x a = a.  The two sides hold together or fail together; the report
    carries both plus an agreement flag.  Never raises.
    """
    am = as_cmat(a)
    bm = as_cmat(b)
    xm = as_cmat(x)
    n = _require_square_pair(am, bm)
    if xm.shape != (n, n):
        raise PreconditionError(f"x must be {n}x{n}, got {xm.shape}")
    ap = pinv(am, tol)
    bp = pinv(bm, tol)
    eye = np.eye(n, dtype=np.complex128)

    ra_in_rb = rel_residual(bm @ bp @ am - am, am)
    rb_in_ra = rel_residual(am @ ap @ bm - bm, bm)
    nb_in_na = rel_residual(am @ (eye - bp @ bm), am)
    na_in_nb = rel_residual(bm @ (eye - ap @ am), bm)
    r_bxa = rel_residual(bm @ xm @ am - bm, bm)
    r_axb = rel_residual(am @ xm @ bm - bm, bm)
    r_axa = rel_residual(am @ xm @ am - am, am)

    rt = tol.res_rtol
    lhs = ra_in_rb <= rt and nb_in_na <= rt and r_bxa <= rt and r_axb <= rt
    rhs = (
        na_in_nb <= rt and nb_in_na <= rt and ra_in_rb <= rt and rb_in_ra <= rt
        and r_axa <= rt
    )
    checks = (
        check_le("ra_in_rb", ra_in_rb, rt),
        check_le("rb_in_ra", rb_in_ra, rt),
        check_le("nb_in_na", nb_in_na, rt),
        check_le("na_in_nb", na_in_nb, rt),
        check_le("eq_bxa", r_bxa, rt),
        check_le("eq_axb", r_axb, rt),
        check_le("eq_axa", r_axa, rt),
        check_flag("lhs_holds", lhs),
        check_flag("rhs_holds", rhs),
        check_flag("sides_agree", lhs == rhs),
    )
    return Report(suite="prop-main-check", trial=0, checks=checks)
