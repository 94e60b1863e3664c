import csv
import json

import numpy as np
import pytest

from gmdecomp import cli
from gmdecomp.decomp import gsvd
from gmdecomp.errors import ParseError, RaggedRowsError


def write_csv(path, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        csv.writer(fh).writerows(rows)
    return str(path)


def write_matrix(path, mat):
    return write_csv(path, [[repr(float(x)) for x in row] for row in mat])


# ---------------------------------------------------------------------------
# CSV loading


def test_load_matrix_plain(tmp_path):
    path = write_csv(tmp_path / "m.csv", [["1", "2"], ["3", "4"]])
    m = cli.load_matrix_csv(path)
    assert np.array_equal(m.values, [[1.0, 2.0], [3.0, 4.0]])
    assert m.row_labels is None and m.col_labels is None


def test_load_matrix_header_and_rownames(tmp_path):
    path = write_csv(
        tmp_path / "m.csv",
        [["", "a", "b"], ["r1", "1", "2"], ["r2", "3", "4"]],
    )
    m = cli.load_matrix_csv(path, has_header=True, has_rownames=True)
    assert m.col_labels == ["a", "b"]
    assert m.row_labels == ["r1", "r2"]
    assert np.array_equal(m.values, [[1.0, 2.0], [3.0, 4.0]])


def test_load_matrix_parse_error_coordinates(tmp_path):
    path = write_csv(tmp_path / "m.csv", [["1", "2"], ["3", "oops"]])
    with pytest.raises(ParseError, match="row 2, column 2"):
        cli.load_matrix_csv(path)


def test_load_matrix_ragged_rows(tmp_path):
    path = write_csv(tmp_path / "m.csv", [["1", "2"], ["3"]])
    with pytest.raises(RaggedRowsError, match="line 2"):
        cli.load_matrix_csv(path)


def test_load_matrix_empty_file(tmp_path):
    path = write_csv(tmp_path / "m.csv", [])
    with pytest.raises(ParseError):
        cli.load_matrix_csv(path)


def test_load_constraint_vector_vs_matrix(tmp_path):
    vec = cli.load_constraint_csv(write_csv(tmp_path / "v.csv", [["1"], ["2"], ["3"]]))
    assert vec.ndim == 1 and np.array_equal(vec, [1.0, 2.0, 3.0])
    mat = cli.load_constraint_csv(
        write_csv(tmp_path / "w.csv", [["1", "0"], ["0", "2"]])
    )
    assert mat.shape == (2, 2)


# ---------------------------------------------------------------------------
# result writing and round-trip


def test_write_result_round_trip_exact(tmp_path, rng):
    x = rng.normal(size=(6, 4))
    result = gsvd(x, lw=rng.uniform(0.5, 2.0, size=6))
    outdir = tmp_path / "out"
    cli.write_result(result, outdir, tol=1e-12, command_line="gmdecomp gsvd",
                     n_rows=6, n_cols=4)
    for name, value in result.fields().items():
        loaded = cli.load_matrix_csv(
            outdir / f"{name}.csv", has_header=(value.ndim == 2)
        ).values
        if value.ndim == 1:
            loaded = loaded[:, 0]
        # repr() emits shortest round-trip decimals, so equality is exact
        assert np.array_equal(loaded, value), name
    summary = json.loads((outdir / "summary.json").read_text())
    assert summary["method"] == "gsvd"
    assert summary["n_rows"] == 6 and summary["n_cols"] == 4
    assert summary["n_retained"] == result.n_retained
    assert summary["tol"] == 1e-12
    assert summary["command_line"] == "gmdecomp gsvd"


def test_write_result_row_labels(tmp_path, rng):
    result = gsvd(rng.normal(size=(3, 2)))
    cli.write_result(result, tmp_path, x_row_labels=["r1", "r2", "r3"],
                     x_col_labels=["c1", "c2"])
    fi = cli.load_matrix_csv(tmp_path / "fi.csv", has_header=True, has_rownames=True)
    assert fi.row_labels == ["r1", "r2", "r3"]
    fj = cli.load_matrix_csv(tmp_path / "fj.csv", has_header=True, has_rownames=True)
    assert fj.row_labels == ["c1", "c2"]


def test_reruns_are_byte_identical(tmp_path, rng):
    x = rng.normal(size=(8, 4))
    path = write_matrix(tmp_path / "x.csv", x)
    out1, out2 = tmp_path / "run1", tmp_path / "run2"
    for out in (out1, out2):
        code = cli.main(["pca", "--x", path, "--route", "triplet_scaled",
                         "--out", str(out), "--plot"])
        assert code == 0
    files1 = sorted(p.name for p in out1.iterdir())
    files2 = sorted(p.name for p in out2.iterdir())
    assert files1 == files2
    assert "scree.svg" in files1 and "scores_fi.svg" in files1
    for name in files1:
        if name == "summary.json":
            continue  # records the command line, which names the out dir
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes(), name


# ---------------------------------------------------------------------------
# end-to-end subcommands and exit codes


def test_main_gsvd_with_constraints(tmp_path, rng):
    x = rng.normal(size=(5, 3))
    xp = write_matrix(tmp_path / "x.csv", x)
    lw = write_csv(tmp_path / "lw.csv", [["0.5"]] * 5)
    code = cli.main(["gsvd", "--x", xp, "--lw", lw, "--out", str(tmp_path / "o")])
    assert code == 0
    summary = json.loads((tmp_path / "o" / "summary.json").read_text())
    assert summary["method"] == "gsvd"


def test_main_gplssvd(tmp_path, rng):
    xp = write_matrix(tmp_path / "x.csv", rng.normal(size=(10, 3)))
    yp = write_matrix(tmp_path / "y.csv", rng.normal(size=(10, 2)))
    out = tmp_path / "o"
    assert cli.main(["gplssvd", "--x", xp, "--y", yp, "--out", str(out)]) == 0
    assert (out / "lx.csv").exists() and (out / "ly.csv").exists()


def test_main_ca_and_mca(tmp_path, rng):
    counts = rng.integers(1, 30, size=(5, 4))
    cp = write_matrix(tmp_path / "c.csv", counts)
    assert cli.main(["ca", "--x", cp, "--out", str(tmp_path / "ca")]) == 0
    cat = [["a", "x"], ["b", "y"], ["a", "y"], ["b", "x"], ["a", "x"], ["b", "y"]]
    catp = write_csv(tmp_path / "cat.csv", cat)
    assert cli.main(["mca", "--x", catp, "--out", str(tmp_path / "mca")]) == 0
    fj = cli.load_matrix_csv(tmp_path / "mca" / "fj.csv", has_header=True,
                             has_rownames=True)
    assert fj.row_labels == ["var1a", "var1b", "var2x", "var2y"]


def test_main_rmca_multi_omega_directories(tmp_path):
    cat = [["a", "x"], ["b", "y"], ["a", "y"], ["b", "x"], ["a", "x"], ["b", "y"]]
    catp = write_csv(tmp_path / "cat.csv", cat)
    out = tmp_path / "rmca"
    assert cli.main(["rmca", "--x", catp, "--omega", "0,1,5",
                     "--out", str(out)]) == 0
    assert sorted(p.name for p in out.iterdir()) == ["omega_0", "omega_1", "omega_5"]
    for sub in out.iterdir():
        assert (sub / "summary.json").exists()


def test_main_wmds_tolerance_off(tmp_path, rng):
    pts = rng.normal(size=(7, 2))
    dist = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1))
    dp = write_matrix(tmp_path / "d.csv", dist)
    wp = write_csv(tmp_path / "w.csv", [[repr(1.0 / (i + 2))] for i in range(7)])
    out = tmp_path / "o"
    assert cli.main(["wmds", "--x", dp, "--w", wp, "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["tol"] == "off"


def test_main_truncation_reported_in_summary(tmp_path, rng):
    xp = write_matrix(tmp_path / "x.csv", rng.normal(size=(8, 5)))
    out = tmp_path / "o"
    assert cli.main(["pca", "--x", xp, "--k", "2", "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["n_retained"] == 2


def test_exit_code_usage():
    assert cli.main(["frobnicate"]) == 2
    assert cli.main(["gsvd"]) == 2  # missing required --x


def test_exit_code_data_errors(tmp_path, capsys):
    assert cli.main(["gsvd", "--x", str(tmp_path / "missing.csv")]) == 3
    bad = write_csv(tmp_path / "bad.csv", [["1", "nope"]])
    assert cli.main(["gsvd", "--x", bad]) == 3
    assert "error:" in capsys.readouterr().err


def test_exit_code_numerical(tmp_path, capsys):
    # indefinite matrix under an active eigen tolerance
    xp = write_matrix(tmp_path / "x.csv", np.diag([2.0, -1.0]))
    assert cli.main(["geigen", "--x", xp, "--out", str(tmp_path / "o")]) == 4
    assert "error:" in capsys.readouterr().err


def test_tol_flag_parsing(tmp_path):
    assert cli._parse_tol(None, 0.5) == 0.5
    assert cli._parse_tol("off", 0.5) is None
    assert cli._parse_tol("1e-8", 0.5) == 1e-8
    with pytest.raises(ParseError):
        cli._parse_tol("huh", 0.5)
