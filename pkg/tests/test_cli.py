import json

from rightgroups.cayley import read_edge_list
from rightgroups.cli import EXIT_BOUNDS, EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from rightgroups.topology import loads_certificate


def test_cayley_summary(capsys):
    assert main(["cayley", "Z6", "--gens", "1"]) == EXIT_OK
    assert "6 vertices, 6 edges (C6)" in capsys.readouterr().out


def test_cayley_right_group_is_K33(capsys):
    assert main(["cayley", "Z2xR3", "--gens", "(1,*)"]) == EXIT_OK
    assert "(K3,3)" in capsys.readouterr().out


def test_cayley_dot_export(capsys):
    assert main(["cayley", "Z4xR2", "--gens", "(1,*)", "--export", "dot"]) == EXIT_OK
    out = capsys.readouterr()
    assert out.out.startswith("graph ") and out.out.count(" -- ") == 16
    assert "8 vertices" in out.err


def test_cayley_directed_dot(capsys):
    assert main(["cayley", "Z3", "--gens", "1", "--export", "dot", "--directed"]) == EXIT_OK
    assert capsys.readouterr().out.count(" -> ") == 3


def test_edge_export_round_trip(tmp_path, capsys):
    path = tmp_path / "g.edges"
    assert main(["cayley", "D3", "--gens", "r1,s0", "--export", "edges", "--output", str(path)]) == EXIT_OK
    g = read_edge_list(path.read_text())
    assert (g.n, g.m) == (6, 9)
    assert main(["genus", str(path)]) == EXIT_OK
    assert "6 vertices, 9 edges" in capsys.readouterr().out


def test_bad_generators_are_usage_errors(capsys):
    assert main(["cayley", "Z6", "--gens", "7"]) == EXIT_USAGE
    assert main(["cayley", "Q9", "--gens", "1"]) == EXIT_USAGE
    assert main(["genus", "no-such-thing"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_malformed_edge_list(tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("0 1\n1 x\n")
    assert main(["genus", str(path)]) == EXIT_USAGE


def test_genus_exact(capsys):
    assert main(["genus", "K3,3"]) == EXIT_OK
    assert "exact 1" in capsys.readouterr().out
    assert main(["genus", "C8"]) == EXIT_OK


def test_genus_inconclusive_exit(capsys):
    assert main(["genus", "K6,6", "--budget", "100000", "--effort", "200", "--report", "json"]) == EXIT_BOUNDS
    data = json.loads(capsys.readouterr().out)
    assert not data["exact"] and data["lower"] < data["upper"]


def test_genus_certificate_output(tmp_path, capsys):
    path = tmp_path / "k5.cert"
    assert main(["genus", "K5", "--certificate", str(path)]) == EXIT_OK
    cert = loads_certificate(path.read_text())
    assert cert.genus == 1
    assert main(["genus", str(path)]) == EXIT_OK


def test_genus_of_group_spec(capsys):
    assert main(["genus", "Z3xR3", "--gens", "(1,*)"]) == EXIT_OK
    assert "exact 1" in capsys.readouterr().out


def test_verify_replay_reports_five_steps(capsys):
    assert main(["verify-paper", "--only", "example38"]) == EXIT_FAILED
    out = capsys.readouterr().out
    steps = [line for line in out.splitlines() if "step (" in line]
    assert len(steps) == 5
    assert sum(line.startswith("FAIL") for line in steps) == 1


def test_verify_reduced_table(capsys):
    code = main(["verify-paper", "--only", "theorem", "--max-n", "4", "--max-r", "3", "--skip-a5",
                 "--report", "json"])
    data = json.loads(capsys.readouterr().out)
    groups = {row["group"] for row in data["classification"]}
    assert "Z5" not in groups and "Z4" in groups
    assert {row["r"] for row in data["classification"]} == {1, 2, 3}
    bad = [(row["group"], row["r"]) for row in data["classification"] if not row["agrees"]]
    assert code == (EXIT_OK if not bad else EXIT_FAILED)


def test_verify_passing_suites(capsys):
    assert main(["verify-paper", "--only", "products", "--only", "bounds"]) == EXIT_OK
    assert "checks passed" in capsys.readouterr().out


def test_verify_unknown_suite():
    assert main(["verify-paper", "--only", "nope"]) == EXIT_USAGE
