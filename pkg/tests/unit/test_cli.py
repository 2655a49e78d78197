from io import StringIO
from typing import List, Tuple
from unittest.mock import patch

import pytest

from sdcodes.cli import run
from sdcodes.data import read_text
from tests.mocks import I4_I4

SUBSTITUTE_112_ARGS = [
    "gleason",
    "substitute",
    "--n",
    "112",
    "--type",
    "I",
    "--min-weight",
    "18",
    "--pin",
    "B0=0",
    "--anchor",
    "e=B4",
    "--set",
    "a=-90664",
    "--set",
    "b=728",
    "--set",
    "c=0",
    "--set",
    "d=0",
    "--set",
    "e=0",
]


def invoke(argv: List[str]) -> Tuple[int, str, str]:
    stdout, stderr = StringIO(), StringIO()
    status = run(argv, stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


def test_check_c112():
    status, out, _ = invoke(["check", "--code", "c112"])
    assert status == 0
    assert out == "self-dual, singly even, n=112, k=56\n"


def test_check_spec_file(tmp_path):
    path = tmp_path / "c112.txt"
    path.write_text(read_text("c112.txt"))
    status, out, _ = invoke(["check", "--spec", str(path), "--index", "1"])
    assert status == 0
    assert out.startswith("self-dual, singly even")


def test_solve_family_120():
    status, out, _ = invoke(
        ["gleason", "solve-family", "--n", "120", "--type", "II", "--min-weight", "20"]
    )
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "# W_C n=120 type II"
    assert "(a) y^20" in lines
    assert "(39703755 - 20a) y^24" in lines
    assert "(335200280030755776 + 184756a) y^60" in lines


def test_substitute_112():
    status, out, _ = invoke(SUBSTITUTE_112_ARGS)
    assert status == 0
    assert "56 10841051388476292\n" in out
    assert "20 186060\n" in out


def test_neighbor_x(tmp_path):
    support = tmp_path / "support.txt"
    support.write_text(read_text("d112_support.txt"))
    status, out, _ = invoke(["neighbor-x", "--code", "c112", "--support", str(support)])
    assert status == 0
    assert out == "self-dual, doubly even, n=112, k=56\nneighbor of input: yes\n"


def test_distribution_and_invariant():
    assert invoke(["distribution", "--code", "e8"])[1] == "0 1\n4 14\n8 1\n"
    assert invoke(["gram-invariant", "--code", "golay24", "--weight", "8"])[1] == (
        "77 253\n"
    )
    status, out, _ = invoke(["enumerate-weight", "--code", "e8", "--weight", "4"])
    assert status == 0 and len(out.splitlines()) == 14


def test_gleason_commands(tmp_path):
    assert invoke(["gleason", "basis", "--n", "8", "--type", "II"])[1] == (
        "1 + 14y^4 + y^8\n"
    )
    assert invoke(["gleason", "bound", "--n", "112", "--d", "20"])[1] == (
        "20\nd=20 is extremal\n"
    )
    assert invoke(["gleason", "shadow", "--n", "2", "1"])[1] == "2y\n"
    golay = tmp_path / "golay.txt"
    golay.write_text("0 1\n8 759\n12 2576\n16 759\n24 1\n")
    assert invoke(["gleason", "fit", str(golay), "--n", "24", "--type", "II"])[1] == (
        "1 -42\n"
    )


def test_minweight_budget_flag():
    status, out, _ = invoke(["--budget", "4", "minweight", "--code", "golay24"])
    assert status == 0
    assert out.startswith("lower-bound 4")


def test_neighbors(tmp_path):
    generator = tmp_path / "pair.txt"
    generator.write_text("\n".join(I4_I4) + "\n")
    status, out, _ = invoke(["neighbors", "--generator", str(generator)])
    assert status == 0
    assert out.count("self-dual, doubly even, n=8, k=4") == 2


def test_search(tmp_path):
    output = tmp_path / "found.txt"
    argv = ["--seed", "3", "search", "--m", "5", "--target-d", "4"]
    argv += ["--any-parity", "--max-candidates", "100", "--output", str(output)]
    status, out, err = invoke(argv)
    assert status == 0
    lines = out.splitlines()
    assert lines
    assert all(" count:4:" in line for line in lines)
    assert len(output.read_text().splitlines()) == len(lines)
    assert "candidates_drawn 100" in err


def test_domain_error_exit_status():
    status, out, err = invoke(["shadow", "--code", "e8"])
    assert status == 1
    assert out == ""
    assert err == "error: a doubly even code has no shadow\n"


def test_missing_input_exit_status():
    status, _, err = invoke(["check"])
    assert status == 1
    assert err.startswith("error: ")


def test_missing_file_exit_status(tmp_path):
    status, _, err = invoke(["check", "--spec", str(tmp_path / "nope.txt")])
    assert status == 1
    assert "nope.txt" in err


def test_fit_rejects_weights_past_length(tmp_path):
    path = tmp_path / "dist.txt"
    path.write_text("0 1\n4 14\n12 1\n")
    status, out, err = invoke(["gleason", "fit", str(path), "--n", "8", "--type", "II"])
    assert status == 1
    assert out == ""
    assert err == "error: line 3: weight 12 outside 0..8\n"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["check", "--index", "0"],
        ["gleason", "solve-family", "--n", "112", "--type", "III", "--min-weight", "1"],
        ["gleason", "basis", "--n", "8", "--type", "I", "--pin", "B0"],
        ["gleason", "solve-family", "--n", "8", "--type", "I", "--min-weight", "2"]
        + ["--pin", "B0"],
    ],
)
def test_usage_errors(argv, capsys):
    status, out, err = invoke(argv)
    assert status == 2
    assert out == ""
    assert "usage: sdcodes" in err
    assert capsys.readouterr().err == ""


def test_help_goes_to_given_stream(capsys):
    status, out, _ = invoke(["--help"])
    assert status == 0
    assert out.startswith("usage: sdcodes")
    assert capsys.readouterr().out == ""


def test_bad_environment(monkeypatch):
    monkeypatch.setenv("SDCODES_MAX_THREADS", "many")
    status, _, err = invoke(["gleason", "bound", "--n", "8"])
    assert status == 1
    assert "SDCODES_MAX_THREADS" in err


def test_debug_port(monkeypatch):
    monkeypatch.setenv("SDCODES_DEBUG_PORT", "5678")
    with patch("sdcodes.cli._attach_debugger") as attach:
        status, out, _ = invoke(["gleason", "bound", "--n", "8"])
    assert status == 0 and out == "4\n"
    attach.assert_called_once_with(5678)
