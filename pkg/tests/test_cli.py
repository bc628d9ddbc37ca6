import json

import pytest

from burnkit.cli import (
    EXIT_CAP,
    EXIT_CONTRADICTION,
    EXIT_INPUT,
    EXIT_INVALID,
    EXIT_OK,
    main,
)
from burnkit.io import read_certificate, serialize_edge_list
from burnkit.graphs import path_graph


@pytest.fixture
def p9_file(tmp_path):
    path = tmp_path / "p9.txt"
    path.write_text(serialize_edge_list(path_graph(9)))
    return str(path)


def test_burn_exact(p9_file, tmp_path, capsys):
    out = str(tmp_path / "cert.json")
    assert main(["burn", "--algo", "exact", p9_file, "-o", out]) == EXIT_OK
    assert "k = 3" in capsys.readouterr().out
    cert = read_certificate(out)
    assert cert.valid and len(cert) == 3


def test_burn_four_thirds_with_trace(p9_file, tmp_path):
    trace = tmp_path / "trace.jsonl"
    assert (
        main(["burn", "--algo", "four-thirds", p9_file, "--trace", str(trace)])
        == EXIT_OK
    )
    lines = [json.loads(l) for l in trace.read_text().splitlines()]
    assert lines and all("phase" in l for l in lines)


def test_burn_unfold_generator_spec():
    assert main(["burn", "--algo", "unfold", "random-tree:40", "--seed", "3"]) == EXIT_OK


def test_burn_mindeg(capsys):
    assert main(["burn", "--algo", "mindeg3", "random-mindeg3:30", "--seed", "1"]) == EXIT_OK
    assert "valid: True" in capsys.readouterr().out


def test_burn_cap_exit(p9_file, tmp_path):
    big = tmp_path / "p30.txt"
    big.write_text(serialize_edge_list(path_graph(30)))
    assert main(["burn", "--algo", "exact", str(big)]) == EXIT_CAP
    assert main(["burn", "--algo", "exact", str(big), "--force"]) == EXIT_OK


def test_validate_roundtrip(p9_file, tmp_path, capsys):
    out = str(tmp_path / "cert.json")
    main(["burn", "--algo", "exact", p9_file, "-o", out])
    capsys.readouterr()
    assert main(["validate", out, p9_file]) == EXIT_OK
    assert "VALID" in capsys.readouterr().out


def test_validate_wrong_graph(p9_file, tmp_path, capsys):
    out = str(tmp_path / "cert.json")
    main(["burn", "--algo", "exact", p9_file, "-o", out])
    other = tmp_path / "p20.txt"
    other.write_text(serialize_edge_list(path_graph(20)))
    assert main(["validate", out, str(other)]) == EXIT_INVALID


def test_growth_subcommand(p9_file, capsys):
    assert main(["growth", p9_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "growth k = 0" in out


def test_reduce_subcommand(p9_file, capsys):
    assert main(["reduce", p9_file, "--radii", "0,1,2"]) == EXIT_OK
    assert "valid: True" in capsys.readouterr().out


def test_reduce_explicit_path(tmp_path, capsys):
    f = tmp_path / "p7.txt"
    f.write_text(serialize_edge_list(path_graph(7)))
    code = main(["reduce", str(f), "--radii", "0,1,2", "--path", "1,2,3,4,5"])
    assert code == EXIT_OK
    assert "applicable=True" in capsys.readouterr().out


def test_enumerate_subcommand(capsys):
    assert main(["enumerate", "--n", "7"]) == EXIT_OK
    assert "11 trees" in capsys.readouterr().out


def test_verify_subcommand(tmp_path, capsys):
    out = str(tmp_path / "report.json")
    assert main(["verify", "--n-max", "6", "--mode", "conjecture", "-o", out]) == EXIT_OK
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["violations"] == []
    assert report["trees_checked"] == 14


def test_leafy_tree_subcommand(capsys):
    assert main(["leafy-tree", "random-mindeg4:20", "--seed", "2", "--min-degree", "4"]) == EXIT_OK
    assert "leaves" in capsys.readouterr().out


def test_bad_input_exit(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    assert main(["burn", "--algo", "exact", str(bad)]) == EXIT_INPUT
    assert main(["burn", "--algo", "exact", str(tmp_path / "missing.txt")]) == EXIT_INPUT


def test_disconnected_input_exit(tmp_path):
    f = tmp_path / "disc.txt"
    f.write_text("4 2\n0 1\n2 3\n")
    assert main(["burn", "--algo", "exact", str(f)]) == EXIT_INPUT


def test_threshold_subcommand(capsys):
    assert main(["threshold", "--limit", "2000"]) == EXIT_OK
    assert ">= 325" in capsys.readouterr().out


def test_exit_codes_are_distinct():
    codes = {EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_CAP, EXIT_CONTRADICTION}
    assert len(codes) == 5
