"""
Tests for the command-line entry point, driven through main(argv).
"""
import json

from app.cli import main
from app.core.files import read_instance, read_solution


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


FIXTURE_B = {
    "budget": 10,
    "deliveries": [
        {"id": 1, "launch": 0, "rendezvous": 1, "cost": 3},
        {"id": 2, "launch": 0, "rendezvous": 1, "cost": 3},
        {"id": 3, "launch": 2, "rendezvous": 3, "cost": 3},
    ],
}


def test_gen_solve_verify(tmp_path):
    instance = str(tmp_path / "inst.json")
    solution = str(tmp_path / "sol.json")
    assert main(["gen", "--n", "20", "--seed", "4", "--out", instance]) == 0
    assert read_instance(instance).n == 20
    assert main(["solve", instance, "--algorithm", "coloring", "--out", solution]) == 0
    assert read_solution(solution).meta.algorithm == "coloring"
    assert main(["verify", instance, solution]) == 0


def test_verify_failure_exit_code(tmp_path, capsys):
    instance = write_json(tmp_path / "inst.json", FIXTURE_B)
    solution = write_json(
        tmp_path / "sol.json",
        {"algorithm": "exact", "drones_used": 1, "assignments": [{"drone": 1, "delivery_ids": [1, 2, 3]}]},
    )
    assert main(["verify", instance, solution]) == 1
    assert "FAIL conflict in drone 1" in capsys.readouterr().out


def test_invalid_instance_exit_code(tmp_path, capsys):
    instance = write_json(
        tmp_path / "bad.json",
        {"budget": 10, "deliveries": [{"id": 1, "launch": 0, "rendezvous": 1, "cost": 11}]},
    )
    assert main(["solve", instance]) == 2
    assert "cost exceeds budget" in capsys.readouterr().err


def test_solve_exact_over_cap(tmp_path):
    instance = write_json(tmp_path / "inst.json", FIXTURE_B)
    assert main(["solve", instance, "--algorithm", "exact", "--cap", "2"]) == 2


def test_graph_to_stdout(tmp_path, capsys):
    instance = write_json(tmp_path / "inst.json", FIXTURE_B)
    assert main(["graph", instance]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["clique_number"] == 2
    assert summary["edge_count"] == 1


def test_export_lp(tmp_path):
    instance = write_json(tmp_path / "inst.json", FIXTURE_B)
    out = tmp_path / "model.lp"
    assert main(["export-lp", instance, str(out)]) == 0
    assert out.read_text().endswith("end\n")


def test_reduce_bp(tmp_path):
    bp = write_json(tmp_path / "bp.json", {"capacity": 10, "sizes": [5, 5, 5, 5]})
    ddp = tmp_path / "ddp.json"
    assert main(["reduce-bp", bp, str(ddp)]) == 0
    inst = read_instance(ddp)
    assert inst.budget == 10
    assert [d.launch for d in inst.deliveries] == [2, 4, 6, 8]


def test_bench_suite(tmp_path, capsys):
    out = tmp_path / "bench"
    assert main(["bench", "--instances", "10", "--max-n", "6", "--out", str(out)]) == 0
    assert (out / "summary.csv").exists()
    assert (out / "certificates.json").exists()
    assert "instances: 10" in capsys.readouterr().out


def test_bench_scaling(tmp_path):
    out = tmp_path / "scaling"
    assert main(["bench", "--scaling", "--sizes", "200", "2000", "--out", str(out)]) == 0
    records = json.loads((out / "scaling.json").read_text())
    assert [r["n"] for r in records] == [200, 2000]


def test_missing_input_file(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "nowhere.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_bench_replay(tmp_path, capsys):
    instance = write_json(tmp_path / "failure-3.json", FIXTURE_B)
    assert main(["bench", "--replay", instance]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert (cert["m_greedy"], cert["m_coloring"], cert["opt"]) == (2, 2, 2)


def test_bench_replay_reproduces_failure(tmp_path, capsys, monkeypatch):
    from app.harness import suite
    from app.models import Assignment, RunReport, Solution

    def one_drone(inst, graph=None):
        everything = Assignment(drone_index=1, delivery_ids=frozenset(inst.ids))
        return Solution(assignments=(everything,), meta=RunReport(algorithm="greedy", drones_used=1))

    monkeypatch.setattr(suite, "solve_greedy", one_drone)
    instance = write_json(tmp_path / "failure-3.json", FIXTURE_B)
    assert main(["bench", "--replay", instance, "--algorithm", "greedy"]) == 2
    assert "conflict in drone 1" in capsys.readouterr().err
