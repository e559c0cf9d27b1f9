import json

import pytest

from twominor import (
    complete_graph,
    cycle_graph,
    graph6_encode,
    model_from_text,
    validate_model,
    wall,
)
from twominor.cli import cli_dispatch


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(graph6_encode(g) + "\n")
    return str(path)


def run(capsys, argv):
    code = cli_dispatch(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_wall_graph6(capsys):
    code, out, _ = run(capsys, ["wall", "2"])
    assert code == 0
    assert out.strip() == graph6_encode(wall(2))


def test_wall_edgelist(capsys):
    code, out, _ = run(capsys, ["wall", "1", "--format", "edgelist"])
    assert code == 0
    assert out.splitlines()[0] == "6 6"


def test_treewidth_command(tmp_path, capsys):
    path = write_graph(tmp_path, "k4.g6", complete_graph(4))
    code, out, _ = run(capsys, ["treewidth", path])
    assert code == 0 and out.strip() == "3"

    td_path = tmp_path / "k4.td"
    code, out, _ = run(capsys, ["treewidth", path, "--td", str(td_path), "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["width"] == 3
    assert td_path.read_text().startswith("s td ")


def test_clique_command(tmp_path, capsys):
    path = write_graph(tmp_path, "k4.g6", complete_graph(4))
    code, out, _ = run(capsys, ["clique", path])
    assert code == 0 and out.strip() == "4"


def test_minor_command_found_and_absent(tmp_path, capsys):
    host = write_graph(tmp_path, "c5.g6", cycle_graph(5))
    pattern = write_graph(tmp_path, "c4.g6", cycle_graph(4))
    code, out, _ = run(capsys, ["minor", "--host", host, "--pattern", pattern, "--induced"])
    assert code == 0
    model = model_from_text(out)
    assert validate_model(model, induced=True) == []

    k3 = write_graph(tmp_path, "k3.g6", complete_graph(3))
    claw_host = write_graph(tmp_path, "claw.g6", __import__("twominor").complete_bipartite(1, 3))
    code, out, _ = run(
        capsys, ["minor", "--host", claw_host, "--pattern", k3, "--induced", "--json"]
    )
    assert code == 0
    assert json.loads(out) == {"found": False}


def test_minimize_command(tmp_path, capsys):
    from twominor import MinorModel, model_to_text, path_graph

    m = MinorModel(
        pattern=complete_graph(2),
        host=path_graph(4),
        branch_sets={0: frozenset({0, 1, 2}), 1: frozenset({3})},
    )
    path = tmp_path / "model.txt"
    path.write_text(model_to_text(m))
    code, out, _ = run(capsys, ["minimize", "--model", str(path)])
    assert code == 0
    result = model_from_text(out)
    assert result.branch_sets == {0: frozenset({2}), 1: frozenset({3})}


def test_lsg_command(tmp_path, capsys):
    path = write_graph(tmp_path, "w1.g6", wall(1))
    code, out, _ = run(capsys, ["lsg", path])
    assert code == 0
    model = model_from_text(out)
    assert validate_model(model, induced=True) == []


def test_profile_command(tmp_path, capsys):
    path = write_graph(tmp_path, "c5.g6", cycle_graph(5))
    code, out, _ = run(capsys, ["profile", path])
    assert code == 0
    assert out == "omega,treewidth\n0,-1\n1,0\n2,2\n"

    csv_path = tmp_path / "c5.csv"
    png_path = tmp_path / "c5.png"
    code, out, _ = run(
        capsys, ["profile", path, "--csv", str(csv_path), "--plot", str(png_path)]
    )
    assert code == 0
    assert csv_path.read_text().startswith("omega,treewidth")
    assert png_path.stat().st_size > 0


def test_profile_check_poly(tmp_path, capsys):
    path = write_graph(tmp_path, "c5.g6", cycle_graph(5))
    # Leading-dash values need the = form so argparse does not read them as flags.
    code, out, _ = run(capsys, ["profile", path, "--json", "--check-poly=-1,1"])
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == [[2, 2]]


def test_majorant_command(capsys):
    code, out, _ = run(capsys, ["majorant", "--poly", "2,-3,1"])
    assert code == 0 and out.strip() == "2,0,1"
    code, out, _ = run(capsys, ["majorant", "--poly", "2,-3,1", "--json"])
    assert json.loads(out) == {"coefficients": [2, 0, 1]}


def test_verify_obs7(tmp_path, capsys):
    report_path = tmp_path / "obs7.json"
    plot_path = tmp_path / "obs7.png"
    code, out, _ = run(
        capsys,
        [
            "verify", "obs7", "--ell", "2", "--trials", "5", "--seed", "7",
            "--report", str(report_path), "--plot", str(plot_path),
        ],
    )
    assert code == 0
    assert "verdict=pass" in out
    data = json.loads(report_path.read_text())
    assert data["verdict"] == "pass"
    assert plot_path.stat().st_size > 0


def test_verify_lemma4_json_stdout(capsys):
    code, out, _ = run(
        capsys, ["verify", "lemma4", "--trials", "5", "--seed", "42", "--json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["experiment"] == "lemma4"
    assert data["verdict"] == "pass"


def test_verify_theorem5_single_instance(tmp_path, capsys):
    plot_path = tmp_path / "t5.png"
    code, out, _ = run(
        capsys, ["verify", "theorem5", "--instance", "identity", "--plot", str(plot_path)]
    )
    assert code == 0
    assert "verdict=pass" in out
    assert plot_path.stat().st_size > 0


def test_unreadable_file_is_exit_2(capsys):
    code, _, err = run(capsys, ["treewidth", "/nonexistent/file.g6"])
    assert code == 2
    assert "cannot read" in err


def test_malformed_graph6_is_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("Bww\n")
    code, _, err = run(capsys, ["treewidth", str(path)])
    assert code == 2
    assert "error" in err


def test_resource_cap_is_exit_2(tmp_path, capsys):
    from twominor import empty_graph

    path = write_graph(tmp_path, "big.g6", empty_graph(70))
    code, _, err = run(capsys, ["clique", str(path)])
    assert code == 2
    assert "resource limit" in err


def test_usage_error_is_exit_2(capsys):
    assert run(capsys, ["wall"])[0] == 2
    assert run(capsys, ["nonsense"])[0] == 2


def test_wall_rejects_zero(capsys):
    code, _, err = run(capsys, ["wall", "0"])
    assert code == 2
    assert "at least 1" in err


def test_verify_nonpass_verdict_is_exit_1(monkeypatch, capsys):
    import twominor.cli as cli_mod
    from twominor.experiments import ExperimentReport

    def fake(ell, trials, seed):
        r = ExperimentReport(experiment="obs7", seed=seed, trials=trials, parameters={})
        r.instances.append({"status": "inconclusive"})
        return r

    monkeypatch.setattr(cli_mod, "obs7_experiment", fake)
    code, out, _ = run(capsys, ["verify", "obs7"])
    assert code == 1
    assert "verdict=inconclusive" in out
