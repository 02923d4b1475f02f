"""Command-line front end: matrix file I/O, single-shot solver and predicate
commands, instance generators, and the claim-suite runner.

Matrix files are plain text: a ``rows cols`` header line followed by one
line per row of whitespace-separated ``(re,im)`` tokens.  Floats are written
with 17 significant digits, so write-then-read round-trips bit exactly.

Exit codes are the machine contract:
    0  success / predicate holds
    1  predicate false, system unsolvable, or an input violates a contract
    2  usage error or malformed matrix file
    3  numeric failure
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .chars import gp_check
from .errors import (
    MatrixFormatError,
    NumericError,
    PreconditionError,
    StaralgError,
    UnsolvableError,
)
from .genlab import PRNG_NAME, Seed, gen_gp, gen_idempotent, gen_rank_r, gen_star_pair
from .matcore import DEFAULT_TOL, Tol, as_cmat, pinv
from .report import to_line
from .solvers import sandwich_solve, system_general, system_hermitian, system_solvable
from .starorder import star_residuals
from .verify import SUITE_NAMES, run_suite

__all__ = ["parse_matrix", "format_matrix", "write_matrix", "dispatch", "main"]

_TOKEN = re.compile(r"^\(([^\s(),]+),([^\s(),]+)\)$")


def _parse_token(token: str, line_no: int, column: int) -> complex:
    match = _TOKEN.match(token)
    if match is None:
        raise MatrixFormatError(
            f"bad entry {token!r}, expected '(re,im)'", line=line_no, column=column
        )
    try:
        re_part = float(match.group(1))
        im_part = float(match.group(2))
    except ValueError:
        raise MatrixFormatError(
            f"unparsable float in entry {token!r}", line=line_no, column=column
        ) from None
    if not (math.isfinite(re_part) and math.isfinite(im_part)):
        raise MatrixFormatError(
            f"non-finite entry {token!r}", line=line_no, column=column
        )
    return complex(re_part, im_part)


def parse_matrix(source) -> np.ndarray:
    """Read a matrix from a path or a text stream.

    Raises MatrixFormatError with 1-based line and column positions on any
    deviation from the format.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise MatrixFormatError("missing 'rows cols' header", line=1, column=1)
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(
            f"header must be two integers, got {lines[0].strip()!r}", line=1, column=1
        )
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixFormatError(
            f"header must be two integers, got {lines[0].strip()!r}", line=1, column=1
        ) from None
    if rows < 1 or cols < 1:
        raise MatrixFormatError(
            f"dimensions must be positive, got {rows} {cols}", line=1, column=1
        )

    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != rows:
        raise MatrixFormatError(
            f"expected {rows} row lines, found {len(body)}", line=len(body) + 2, column=1
        )
    out = np.empty((rows, cols), dtype=np.complex128)
    for i, line in enumerate(body):
        line_no = i + 2
        tokens = list(re.finditer(r"\S+", line))
        if len(tokens) != cols:
            raise MatrixFormatError(
                f"expected {cols} entries, found {len(tokens)}",
                line=line_no,
                column=tokens[-1].start() + 1 if tokens else 1,
            )
        for j, tok in enumerate(tokens):
            out[i, j] = _parse_token(tok.group(0), line_no, tok.start() + 1)
    return out


def format_matrix(m) -> str:
    """Serialize a matrix; floats carry 17 significant digits for round-trips."""
    mat = as_cmat(m)
    lines = [f"{mat.shape[0]} {mat.shape[1]}"]
    for row in mat:
        lines.append(" ".join(f"({z.real:.17g},{z.imag:.17g})" for z in row))
    return "\n".join(lines) + "\n"


def write_matrix(path, m) -> None:
    Path(path).write_text(format_matrix(m), encoding="utf-8")


def _tol_from(args: argparse.Namespace) -> Tol:
    return Tol(rank_rtol=args.rank_rtol, res_rtol=args.res_rtol)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="staralg",
        description="Pseudoinverse, star-order, and operator-system toolkit.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=(
            f"staralg {__version__} (prng={PRNG_NAME}, "
            f"rank_rtol={DEFAULT_TOL.rank_rtol:g}, res_rtol={DEFAULT_TOL.res_rtol:g})"
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank-rtol", type=float, default=DEFAULT_TOL.rank_rtol)
    common.add_argument("--res-rtol", type=float, default=DEFAULT_TOL.res_rtol)

    sub = parser.add_subparsers(dest="command", required=True)

    p_pinv = sub.add_parser("pinv", parents=[common], help="write the pseudoinverse of a matrix")
    p_pinv.add_argument("--in", dest="infile", required=True)
    p_pinv.add_argument("--out", required=True)

    p_check = sub.add_parser("check", help="evaluate a predicate (exit 0 holds, 1 fails)")
    check_sub = p_check.add_subparsers(dest="predicate", required=True)
    p_star = check_sub.add_parser("star-order", parents=[common], help="is a below b in the star order?")
    p_star.add_argument("--a", required=True)
    p_star.add_argument("--b", required=True)
    p_gp = check_sub.add_parser("gp", parents=[common], help="is a a generalized projection?")
    p_gp.add_argument("--a", required=True)
    p_solv = check_sub.add_parser(
        "solvable", parents=[common], help="is b X a = b = a X b solvable (b self-adjoint)?"
    )
    p_solv.add_argument("--a", required=True)
    p_solv.add_argument("--b", required=True)

    p_solve = sub.add_parser("solve", help="solve an equation and write one solution")
    solve_sub = p_solve.add_subparsers(dest="equation", required=True)
    p_sys = solve_sub.add_parser(
        "system", parents=[common], help="b X a = b = a X b via the closed-form family"
    )
    p_sys.add_argument("--a", required=True)
    p_sys.add_argument("--b", required=True)
    p_sys.add_argument("--s", default=None, help="free parameter (defaults to zero)")
    p_sys.add_argument("--t", default=None, help="free parameter (defaults to zero)")
    p_sys.add_argument("--out", required=True)
    p_herm = solve_sub.add_parser(
        "hermitian", parents=[common], help="hermitian solution of b X a = b = a X b"
    )
    p_herm.add_argument("--a", required=True)
    p_herm.add_argument("--b", required=True)
    p_herm.add_argument("--w", default=None, help="hermitian free parameter (defaults to zero)")
    p_herm.add_argument("--out", required=True)
    p_sand = solve_sub.add_parser("sandwich", parents=[common], help="a X b = c")
    p_sand.add_argument("--a", required=True)
    p_sand.add_argument("--c", required=True)
    p_sand.add_argument("--b", required=True)
    p_sand.add_argument("--u", default=None, help="free parameter (defaults to zero)")
    p_sand.add_argument("--out", required=True)

    p_gen = sub.add_parser("gen", help="write seeded instances")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    g_pair = gen_sub.add_parser("star-pair", help="pair (a, b) with b below a in the star order")
    g_pair.add_argument("--n", type=int, required=True)
    g_pair.add_argument("--rank", type=int, required=True, help="rank of the smaller element")
    g_pair.add_argument("--extra", type=int, required=True, help="extra rank of the larger element")
    g_pair.add_argument("--hermitian", action="store_true")
    g_pair.add_argument("--seed", type=int, required=True)
    g_pair.add_argument("--stream", type=int, default=0)
    g_pair.add_argument("--out-a", required=True, help="file for the larger element")
    g_pair.add_argument("--out-b", required=True, help="file for the smaller element")
    g_gp = gen_sub.add_parser("gp", help="generalized projection with given multiplicities")
    g_gp.add_argument("--n", type=int, required=True)
    g_gp.add_argument("--m1", type=int, default=0, help="multiplicity of eigenvalue 1")
    g_gp.add_argument("--mw", type=int, default=0, help="multiplicity of the first cube root")
    g_gp.add_argument("--mw2", type=int, default=0, help="multiplicity of the second cube root")
    g_gp.add_argument("--seed", type=int, required=True)
    g_gp.add_argument("--stream", type=int, default=0)
    g_gp.add_argument("--out", required=True)
    g_idem = gen_sub.add_parser("idempotent", help="rank-r idempotent, optionally skewed")
    g_idem.add_argument("--n", type=int, required=True)
    g_idem.add_argument("--rank", type=int, required=True)
    g_idem.add_argument("--skew", type=float, default=0.0)
    g_idem.add_argument("--seed", type=int, required=True)
    g_idem.add_argument("--stream", type=int, default=0)
    g_idem.add_argument("--out", required=True)
    g_rank = gen_sub.add_parser("rank", help="random matrix of exact rank r")
    g_rank.add_argument("--rows", type=int, required=True)
    g_rank.add_argument("--cols", type=int, required=True)
    g_rank.add_argument("--rank", type=int, required=True)
    g_rank.add_argument("--seed", type=int, required=True)
    g_rank.add_argument("--stream", type=int, default=0)
    g_rank.add_argument("--out", required=True)

    p_verify = sub.add_parser("verify", parents=[common], help="run claim suites")
    p_verify.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--trials", type=int, default=50)
    p_verify.add_argument("--dims", type=int, default=6)
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--report", default=None, help="also write the report stream here")
    return parser


def _load_or_zeros(path: str | None, shape: tuple[int, int]) -> np.ndarray:
    if path is None:
        return np.zeros(shape, dtype=np.complex128)
    return parse_matrix(path)


def _cmd_pinv(args: argparse.Namespace) -> int:
    a = parse_matrix(args.infile)
    write_matrix(args.out, pinv(a, _tol_from(args)))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    tol = _tol_from(args)
    if args.predicate == "star-order":
        a = parse_matrix(args.a)
        b = parse_matrix(args.b)
        r1, r2 = star_residuals(a, b)
        holds = r1 <= tol.res_rtol and r2 <= tol.res_rtol
        print(f"residual_aa_adj={r1:.5e}")
        print(f"residual_adj_aa={r2:.5e}")
        print(f"star_order={'yes' if holds else 'no'}")
        return 0 if holds else 1
    if args.predicate == "gp":
        rep = gp_check(parse_matrix(args.a), tol)
        for c in rep.checks:
            print(f"{c.name}={c.residual:.5e}")
        print(f"generalized_projection={'yes' if rep.verdict else 'no'}")
        return 0 if rep.verdict else 1
    ok = system_solvable(parse_matrix(args.a), parse_matrix(args.b), tol)
    print(f"solvable={'yes' if ok else 'no'}")
    return 0 if ok else 1


def _cmd_solve(args: argparse.Namespace) -> int:
    tol = _tol_from(args)
    if args.equation == "system":
        a = parse_matrix(args.a)
        b = parse_matrix(args.b)
        n = a.shape[0]
        s = _load_or_zeros(args.s, (n, n))
        t = _load_or_zeros(args.t, (n, n))
        write_matrix(args.out, system_general(a, b, s, t, tol))
        return 0
    if args.equation == "hermitian":
        a = parse_matrix(args.a)
        b = parse_matrix(args.b)
        w = _load_or_zeros(args.w, (a.shape[0], a.shape[0]))
        write_matrix(args.out, system_hermitian(a, b, w, tol))
        return 0
    a = parse_matrix(args.a)
    c = parse_matrix(args.c)
    b = parse_matrix(args.b)
    fam = sandwich_solve(a, c, b, tol)
    if args.u is None:
        x = fam.particular
    else:
        x = fam.instantiate([parse_matrix(args.u)])
    write_matrix(args.out, x)
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    seed = Seed(args.seed, args.stream)
    if args.kind == "star-pair":
        big, small = gen_star_pair(args.n, args.rank, args.extra, seed, args.hermitian)
        write_matrix(args.out_a, big)
        write_matrix(args.out_b, small)
        return 0
    if args.kind == "gp":
        write_matrix(args.out, gen_gp(args.n, (args.m1, args.mw, args.mw2), seed))
        return 0
    if args.kind == "idempotent":
        write_matrix(args.out, gen_idempotent(args.n, args.rank, args.skew, seed))
        return 0
    write_matrix(args.out, gen_rank_r(args.rows, args.cols, args.rank, seed))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    tol = _tol_from(args)
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    lines = []
    all_pass = True
    for name in names:
        for rep in run_suite(name, args.trials, args.dims, args.seed, tol):
            lines.append(to_line(rep))
            all_pass = all_pass and rep.verdict
    stream = "\n".join(lines) + "\n"
    sys.stdout.write(stream)
    if args.report is not None:
        Path(args.report).write_text(stream, encoding="utf-8")
    print(
        f"{len(names)} suite(s), {len(lines)} trial reports, "
        f"{'all passed' if all_pass else 'FAILURES present'}",
        file=sys.stderr,
    )
    return 0 if all_pass else 1


def dispatch(argv) -> int:
    """Parse arguments and run one command, mapping errors to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return code if isinstance(code, int) else 2
    try:
        if args.command == "pinv":
            return _cmd_pinv(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_verify(args)
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnsolvableError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except StaralgError as exc:  # any future domain error: treat as predicate failure
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
