"""Matrix file format and command dispatch tests (in-process)."""

import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from staralg import MatrixFormatError, pinv
from staralg.cli import dispatch, format_matrix, parse_matrix, write_matrix


def run(*argv):
    return dispatch(list(argv))


# --- format --------------------------------------------------------------


def test_parse_scalar():
    m = parse_matrix(io.StringIO("1 1\n(2.0,0.0)"))
    assert m.shape == (1, 1)
    assert m[0, 0] == 2.0


def test_parse_identity():
    m = parse_matrix(io.StringIO("2 2\n(1,0) (0,0)\n(0,0) (1,0)"))
    assert np.array_equal(m, np.eye(2, dtype=complex))


def test_parse_column():
    m = parse_matrix(io.StringIO("2 1\n(0,1)\n(0,-1)"))
    assert np.array_equal(m, np.array([[1j], [-1j]]))


finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(finite, finite), min_size=1, max_size=12))
def test_round_trip_is_bit_exact(entries):
    rows = len(entries)
    m = np.array([[complex(re, im)] for re, im in entries]).reshape(rows, 1)
    back = parse_matrix(io.StringIO(format_matrix(m)))
    assert back.tobytes() == m.tobytes()


def test_round_trip_via_files(tmp_path):
    m = np.array([[0.1 + 0.2j, -3.0], [1e-300, 7e200 + 1e-12j]])
    path = tmp_path / "m.mat"
    write_matrix(path, m)
    assert parse_matrix(path).tobytes() == m.astype(complex).tobytes()


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("", 1, 1),
        ("2\n(1,0)\n(1,0)", 1, 1),
        ("1 2\n(1,0)", 2, 1),
        ("1 1\n(1,0) (2,0)", 2, 7),
        ("1 1\nbogus", 2, 1),
        ("1 1\n(a,b)", 2, 1),
        ("1 1\n(nan,0)", 2, 1),
        ("2 1\n(1,0)", 3, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(MatrixFormatError) as excinfo:
        parse_matrix(io.StringIO(text))
    assert excinfo.value.line == line
    assert excinfo.value.column == column


# --- commands ------------------------------------------------------------


def test_pinv_command(tmp_path):
    a = np.array([[0.0, 1.0], [0.0, 0.0]])
    apath = tmp_path / "a.mat"
    xpath = tmp_path / "x.mat"
    write_matrix(apath, a)
    assert run("pinv", "--in", str(apath), "--out", str(xpath)) == 0
    assert parse_matrix(xpath).tobytes() == pinv(a).tobytes()


def test_pinv_command_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.mat"
    bad.write_text("2 2\n(1,0) (0,0)\n(0,0) oops\n")
    assert run("pinv", "--in", str(bad), "--out", str(tmp_path / "x.mat")) == 2
    err = capsys.readouterr().err
    assert "line 3" in err and "column" in err


def test_check_star_order_exit_codes(tmp_path, capsys):
    a = tmp_path / "a.mat"
    b = tmp_path / "b.mat"
    write_matrix(a, np.diag([1.0, 0.0]))
    write_matrix(b, np.diag([1.0, 2.0]))
    assert run("check", "star-order", "--a", str(a), "--b", str(b)) == 0
    out = capsys.readouterr().out
    assert "residual_aa_adj=" in out and "residual_adj_aa=" in out
    assert run("check", "star-order", "--a", str(b), "--b", str(a)) == 1
    assert run("check", "star-order", "--a", str(a), "--b", str(a)) == 0


def test_check_gp_and_solvable(tmp_path):
    gp = tmp_path / "gp.mat"
    assert run("gen", "gp", "--n", "4", "--m1", "1", "--mw", "1", "--seed", "5", "--out", str(gp)) == 0
    assert run("check", "gp", "--a", str(gp)) == 0
    notgp = tmp_path / "notgp.mat"
    write_matrix(notgp, np.diag([2.0, 0.0]))
    assert run("check", "gp", "--a", str(notgp)) == 1

    a = tmp_path / "a.mat"
    b = tmp_path / "b.mat"
    write_matrix(a, np.diag([1.0, 0.0]))
    write_matrix(b, np.diag([3.0, 0.0]))
    assert run("check", "solvable", "--a", str(a), "--b", str(b)) == 0
    write_matrix(b, np.diag([0.0, 1.0]))
    assert run("check", "solvable", "--a", str(a), "--b", str(b)) == 1


def test_solve_system_pipeline(tmp_path):
    a = tmp_path / "a.mat"
    b = tmp_path / "b.mat"
    x = tmp_path / "x.mat"
    axa = tmp_path / "axa.mat"
    assert run(
        "gen", "star-pair", "--n", "5", "--rank", "2", "--extra", "2",
        "--seed", "3", "--out-a", str(a), "--out-b", str(b),
    ) == 0
    assert run("solve", "system", "--a", str(a), "--b", str(b), "--out", str(x)) == 0
    am, xm, bm = parse_matrix(a), parse_matrix(x), parse_matrix(b)
    assert np.allclose(bm @ xm @ am, bm, atol=1e-9)
    assert np.allclose(am @ xm @ bm, bm, atol=1e-9)
    write_matrix(axa, am @ xm @ am)
    assert run("check", "star-order", "--a", str(axa), "--b", str(b)) == 0


def test_solve_unsolvable_exits_one(tmp_path, capsys):
    a = tmp_path / "a.mat"
    b = tmp_path / "b.mat"
    write_matrix(a, np.diag([1.0, 0.0]))
    write_matrix(b, np.diag([2.0, 0.0]))  # not below a in the star order
    assert run("solve", "system", "--a", str(a), "--b", str(b), "--out", str(a)) == 1
    assert "error" in capsys.readouterr().err


def test_solve_hermitian_and_sandwich(tmp_path):
    a = tmp_path / "a.mat"
    b = tmp_path / "b.mat"
    x = tmp_path / "x.mat"
    assert run(
        "gen", "star-pair", "--n", "4", "--rank", "2", "--extra", "1", "--hermitian",
        "--seed", "9", "--out-a", str(a), "--out-b", str(b),
    ) == 0
    assert run("solve", "hermitian", "--a", str(a), "--b", str(b), "--out", str(x)) == 0
    am, bm, xm = parse_matrix(a), parse_matrix(b), parse_matrix(x)
    assert np.allclose(xm, xm.conj().T, atol=1e-8)
    assert np.allclose(bm @ xm @ am, bm, atol=1e-8)

    c = tmp_path / "c.mat"
    write_matrix(c, am @ np.eye(4) @ am)
    assert run("solve", "sandwich", "--a", str(a), "--c", str(c), "--b", str(a), "--out", str(x)) == 0
    xm = parse_matrix(x)
    cm = parse_matrix(c)
    assert np.allclose(am @ xm @ am, cm, atol=1e-8)


def test_gen_solve_check_pipelines_over_seeds(tmp_path):
    for seed in range(1, 21):
        a = tmp_path / f"a{seed}.mat"
        b = tmp_path / f"b{seed}.mat"
        x = tmp_path / f"x{seed}.mat"
        assert run(
            "gen", "star-pair", "--n", "4", "--rank", "2", "--extra", "1",
            "--seed", str(seed), "--out-a", str(a), "--out-b", str(b),
        ) == 0
        assert run("solve", "system", "--a", str(a), "--b", str(b), "--out", str(x)) == 0
        assert run("check", "star-order", "--a", str(b), "--b", str(a)) == 0

        g = tmp_path / f"g{seed}.mat"
        assert run("gen", "gp", "--n", "4", "--m1", "1", "--mw", "1", "--seed", str(seed), "--out", str(g)) == 0
        assert run("check", "gp", "--a", str(g)) == 0

        r = tmp_path / f"r{seed}.mat"
        p = tmp_path / f"p{seed}.mat"
        assert run("gen", "rank", "--rows", "4", "--cols", "3", "--rank", "2", "--seed", str(seed), "--out", str(r)) == 0
        assert run("pinv", "--in", str(r), "--out", str(p)) == 0

        q = tmp_path / f"q{seed}.mat"
        assert run("gen", "idempotent", "--n", "4", "--rank", "2", "--skew", "0.4", "--seed", str(seed), "--out", str(q)) == 0
        qm = parse_matrix(q)
        assert np.allclose(qm @ qm, qm, atol=1e-8)

        ha = tmp_path / f"ha{seed}.mat"
        hb = tmp_path / f"hb{seed}.mat"
        hx = tmp_path / f"hx{seed}.mat"
        assert run(
            "gen", "star-pair", "--n", "4", "--rank", "2", "--extra", "1", "--hermitian",
            "--seed", str(seed), "--out-a", str(ha), "--out-b", str(hb),
        ) == 0
        assert run("solve", "hermitian", "--a", str(ha), "--b", str(hb), "--out", str(hx)) == 0
        assert run("check", "solvable", "--a", str(ha), "--b", str(hb)) == 0


def test_gen_is_deterministic(tmp_path):
    one = tmp_path / "one.mat"
    two = tmp_path / "two.mat"
    for out in (one, two):
        assert run("gen", "rank", "--rows", "3", "--cols", "3", "--rank", "2", "--seed", "7", "--out", str(out)) == 0
    assert one.read_bytes() == two.read_bytes()


def test_verify_command_writes_report(tmp_path, capsys):
    report = tmp_path / "report.txt"
    rc = run(
        "verify", "--suite", "penrose", "--trials", "4", "--dims", "5",
        "--seed", "2", "--report", str(report),
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert report.read_text() == out
    assert out.count("\n") == 4
    assert "suite=penrose trial=0 root=2 stream=0" in out


def test_verify_unknown_suite_is_usage_error(capsys):
    assert run("verify", "--suite", "bogus") == 2
    capsys.readouterr()


def test_usage_error_exit_code(capsys):
    assert run("pinv", "--in", "only") == 2
    capsys.readouterr()


def test_missing_file_exit_code(tmp_path, capsys):
    missing = tmp_path / "nope.mat"
    assert run("pinv", "--in", str(missing), "--out", str(tmp_path / "x.mat")) == 2
    assert "error" in capsys.readouterr().err


def test_version_mentions_prng(capsys):
    assert run("--version") == 0
    out = capsys.readouterr().out
    assert "splitmix64" in out and "res_rtol" in out
