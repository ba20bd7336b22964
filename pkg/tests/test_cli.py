import io
import json

import pytest

from equidim.cli import main
from equidim.families import fish_graph, path_graph
from equidim.fileio import format_edge_list


@pytest.fixture()
def fish_file(tmp_path):
    path = tmp_path / "fish.edges"
    path.write_text(format_edge_list(fish_graph()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_writes_edge_list(capsys):
    code, out, _ = run(capsys, "gen", "cycle", "4")
    assert code == 0
    assert out.splitlines()[0] == "4 4"


def test_gen_to_file_and_xi(tmp_path, capsys):
    target = tmp_path / "c5.edges"
    assert main(["gen", "cycle", "5", "-o", str(target)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "xi", str(target))
    assert code == 0
    assert out.startswith("3 ")


def test_gen_pipes_into_xi_via_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "gen", "cycle", "5")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "xi", "-")
    assert code == 0 and out.startswith("3 ")


def test_gen_dot(capsys):
    code, out, _ = run(capsys, "gen", "path", "3", "--dot")
    assert code == 0 and out.startswith("graph G {")


def test_empty_bisector_fish(capsys, fish_file):
    code, out, _ = run(capsys, "empty-bisector", fish_file)
    assert code == 0
    assert out == "6 2\n4 5\n4 6\n"


def test_bisector_fish(capsys, fish_file):
    code, out, _ = run(capsys, "bisector", fish_file, "4", "5")
    assert code == 0 and out.strip() == "(empty)"
    code, out, _ = run(capsys, "bisector", fish_file, "1", "2")
    assert code == 0 and out.strip() == "3 4 5 6"


def test_xi_corona_with_decomposition(capsys, fish_file):
    code, out, _ = run(capsys, "xi-corona", fish_file, "--nh", "2")
    assert code == 0
    assert out.startswith("8 ")
    assert "[4]" in out and "[1, 2, 3, 4, 5, 6]" in out


def test_xi_corona_oracle_agreement(capsys, tmp_path):
    from equidim.families import cycle_graph

    g_file = tmp_path / "c4.edges"
    g_file.write_text(format_edge_list(cycle_graph(4)))
    h_file = tmp_path / "p2.edges"
    h_file.write_text(format_edge_list(path_graph(2)))
    code, out, _ = run(
        capsys, "xi-corona", str(g_file), "--nh", "2", "--oracle", str(h_file), "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == payload["oracle"] == 6
    assert payload["agree"] is True


def test_xi_corona_oracle_order_mismatch(capsys, fish_file, tmp_path):
    h_file = tmp_path / "p2.edges"
    h_file.write_text(format_edge_list(path_graph(2)))
    code, _, err = run(
        capsys, "xi-corona", fish_file, "--nh", "3", "--oracle", str(h_file)
    )
    assert code == 1 and "order 2" in err


def test_cover_alpha_omega(capsys, fish_file):
    code, out, _ = run(capsys, "cover", fish_file, "--json")
    assert code == 0 and json.loads(out)["value"] == 4
    code, out, _ = run(capsys, "alpha", fish_file, "--json")
    assert code == 0 and json.loads(out)["value"] == 2
    code, out, _ = run(capsys, "omega", fish_file, "--json")
    assert code == 0 and json.loads(out)["value"] == 3


def test_beta_star_and_k_threshold(capsys, fish_file):
    code, out, _ = run(capsys, "beta-star", fish_file, "--json")
    assert code == 0 and json.loads(out)["value"] == 0
    code, out, _ = run(capsys, "k-threshold", fish_file, "--json")
    payload = json.loads(out)
    assert code == 0
    assert (payload["k"], payload["threshold"], payload["slope"]) == (6, 2, 1)


def test_k_threshold_sweep_csv(capsys, fish_file):
    code, out, _ = run(capsys, "k-threshold", fish_file, "--sweep", "1..4")
    assert code == 0
    assert out.splitlines() == ["nh,xi", "1,6", "2,8", "3,9", "4,10"]


def test_forward_check(capsys, tmp_path):
    from equidim.families import k4_leaves_graph

    path = tmp_path / "k4l.edges"
    path.write_text(format_edge_list(k4_leaves_graph()))
    code, out, _ = run(
        capsys, "forward-check", str(path), "--x", "1,2,3,5,6", "--y", "1,2,3,4"
    )
    assert code == 0 and out.strip() == "forward-equalized"
    code, out, _ = run(
        capsys, "forward-check", str(path), "--x", "1,2,3,4", "--y", "1,2,3,5,6"
    )
    assert code == 0 and out.strip() == "not forward-equalized"


def test_bounds(capsys, fish_file):
    code, out, _ = run(capsys, "bounds", fish_file, "--nh", "1", "--json")
    payload = json.loads(out)
    assert code == 0
    assert (payload["lower"], payload["exact"], payload["upper"]) == (6, 6, 7)


def test_dist(capsys, fish_file):
    code, out, _ = run(capsys, "dist", fish_file, "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["labels"] == [1, 2, 3, 4, 5, 6]
    assert payload["matrix"][3][4] == 3


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "table1")
    assert code == 0
    assert "suite table1: PASS" in out


def test_verify_json_byte_identical_across_thread_hints(capsys):
    code, first, _ = run(capsys, "--threads", "1", "verify", "fig7", "--json")
    assert code == 0
    code, second, _ = run(capsys, "--threads", "4", "verify", "fig7", "--json")
    assert code == 0
    assert first == second


def test_malformed_file_exit_one(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("2 1\n0 0\n")
    code, _, err = run(capsys, "xi", str(bad))
    assert code == 1 and "line 2" in err


def test_missing_file_exit_one(capsys):
    code, _, err = run(capsys, "xi", "/no/such/file.edges")
    assert code == 1 and "error:" in err


def test_budget_violation_exit_one(capsys, tmp_path):
    big = tmp_path / "p20.edges"
    big.write_text(format_edge_list(path_graph(20)))
    code, _, err = run(capsys, "xi", str(big))
    assert code == 1 and "out of budget" in err


def test_budget_flag_only_lowers(capsys, fish_file):
    code, _, err = run(capsys, "xi", fish_file, "--budget", "3")
    assert code == 1 and "out of budget" in err


def test_unknown_subcommand_exit_one(capsys):
    assert main(["frobnicate"]) == 1


def test_unknown_family_exit_one(capsys):
    assert main(["gen", "not-a-family"]) == 1
