"""Serialization round-trips and the command-line interface."""

import csv
import io as io_module
import json
from fractions import Fraction as F

import pytest

from droneprivacy import (
    DroneSpec,
    MotionModel,
    ScenarioFile,
    UNIT_FIXTURE_MOTION,
    format_fraction,
    generate,
    load_scenario,
    parse_fraction,
    parse_route,
    pareto_front,
    save_scenario,
    unit_square_fixture,
    write_front_csv,
    write_sweep_csv,
    min_avg_risk_sweep,
)
from droneprivacy.cli import main


def test_fraction_round_trip():
    for value in (F(5, 12), F(1), F(0), F(13, 75), F(7, 3)):
        assert parse_fraction(format_fraction(value)) == value
    assert format_fraction(F(1)) == "1/1"
    assert parse_fraction("3") == F(3)


def test_scenario_round_trip(tmp_path):
    scenario = generate("two_clusters", 4, n_decoys=2, seed=12)
    original = ScenarioFile(scenario=scenario, name="roundtrip", motion=MotionModel(12.5, 45.0))
    path = tmp_path / "scenario.json"
    save_scenario(original, path)
    assert load_scenario(path) == original

    bare = ScenarioFile(scenario=unit_square_fixture("adjacent"), name="bare")
    save_scenario(bare, path)
    assert load_scenario(path) == bare


def test_scenario_format_version_checked(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format_version": 99, "vendors": [], "customers": []}))
    with pytest.raises(ValueError):
        load_scenario(path)


def test_front_csv_columns_and_exact_risks(tmp_path):
    fixture = unit_square_fixture("diagonal")
    drone = DroneSpec(capacity=2)
    front = pareto_front(fixture, drone, motion=UNIT_FIXTURE_MOTION)
    buffer = io_module.StringIO()
    write_front_csv(front, fixture, 2, 0, buffer)
    rows = list(csv.DictReader(io_module.StringIO(buffer.getvalue())))
    assert list(rows[0].keys()) == [
        "n", "c", "n_d", "route", "avg_risk", "worst_risk", "avg_wait", "heuristic_tag", "multiplicity",
    ]
    assert rows[0]["avg_risk"] == "1/2"
    assert parse_fraction(rows[0]["avg_risk"]) == F(1, 2)
    assert float(rows[0]["avg_wait"]) == pytest.approx(2.5)
    assert rows[0]["multiplicity"] == "2"
    assert parse_route(rows[0]["route"]).tokens == rows[0]["route"]
    again = io_module.StringIO()
    write_front_csv(front, fixture, 2, 0, again)
    assert again.getvalue() == buffer.getvalue()


def test_sweep_csv(tmp_path):
    table = min_avg_risk_sweep(range(2, 4), range(1, 3), range(0, 1))
    path = tmp_path / "sweep.csv"
    write_sweep_csv(table, path)
    rows = list(csv.DictReader(open(path)))
    assert [r["min_avg_risk"] for r in rows if r["n"] == "3" and r["c"] == "2"] == ["5/12"]


def test_cli_gen_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["gen", "--topology", "uniform", "--n", "3", "--decoys", "1", "--seed", "5"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    loaded = load_scenario(a)
    assert loaded.scenario.n == 3
    assert loaded.scenario.n_decoys == 1


def test_cli_eval_prints_exact_average(tmp_path, capsys):
    path = tmp_path / "s.json"
    main(["gen", "--topology", "uniform", "--n", "3", "--seed", "2", "--out", str(path)])
    capsys.readouterr()
    code = main(["eval", "--scenario", str(path), "--route", "v1,v2,a2,v3,a3,a1", "--capacity", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "avg_risk = 5/12" in out
    assert "worst_risk = 1/2" in out


def test_cli_eval_invalid_route_exits_3(tmp_path, capsys):
    path = tmp_path / "s.json"
    main(["gen", "--topology", "uniform", "--n", "2", "--seed", "1", "--out", str(path)])
    capsys.readouterr()
    assert main(["eval", "--scenario", str(path), "--route", "a1,v1,v2,a2", "--capacity", "2"]) == 3
    assert main(["eval", "--scenario", str(path), "--route", "v1,v9,a1,a9", "--capacity", "2"]) == 3
    assert main(["eval", "--scenario", str(path), "--route", "zz", "--capacity", "2"]) == 3


def test_cli_usage_error_exits_2():
    assert main(["eval", "--route", "v1,a1"]) == 2
    assert main(["nonsense"]) == 2


def test_cli_guard_exits_4(tmp_path, capsys):
    path = tmp_path / "s.json"
    main(["gen", "--topology", "uniform", "--n", "8", "--seed", "1", "--out", str(path)])
    capsys.readouterr()
    assert main(["pareto", "--scenario", str(path), "--capacity", "8"]) == 4
    err = capsys.readouterr().err
    assert "refused" in err


def test_cli_oracle_output(tmp_path, capsys):
    path = tmp_path / "s.json"
    main(["gen", "--topology", "uniform", "--n", "3", "--seed", "2", "--out", str(path)])
    capsys.readouterr()
    code = main(["oracle", "--scenario", str(path), "--route", "v1,v2,a2,v3,a3,a1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "columns: v1 v2 v3" in out
    assert "a1: 1/4 1/4 1/2" in out
    assert "a2: 1/2 1/2 0/1" in out
    assert "worlds: 4" in out


def test_cli_heuristic_output(tmp_path, capsys):
    path = tmp_path / "s.json"
    main(["gen", "--topology", "two_clusters", "--n", "4", "--seed", "3", "--out", str(path)])
    capsys.readouterr()
    code = main(["heuristic", "--scenario", str(path), "--kind", "split",
                 "--k", "2", "--l", "2", "--capacity", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "heuristic: split(k=2,l=2)" in out
    assert "ordering: exact minimum travel" in out
    assert "avg_risk = 1/2" in out


def test_cli_heuristic_bad_params_exit_3(tmp_path, capsys):
    path = tmp_path / "s.json"
    main(["gen", "--topology", "uniform", "--n", "4", "--seed", "3", "--out", str(path)])
    capsys.readouterr()
    assert main(["heuristic", "--scenario", str(path), "--kind", "split",
                 "--k", "3", "--l", "2", "--capacity", "4"]) == 3


def test_cli_pareto_csv(tmp_path, capsys):
    scenario_path = tmp_path / "unit.json"
    save_scenario(
        ScenarioFile(scenario=unit_square_fixture("diagonal"), name="unit", motion=UNIT_FIXTURE_MOTION),
        scenario_path,
    )
    out_path = tmp_path / "front.csv"
    code = main(["pareto", "--scenario", str(scenario_path), "--capacity", "2",
                 "--out", str(out_path)])
    assert code == 0
    rows = list(csv.DictReader(open(out_path)))
    assert len(rows) == 1
    assert rows[0]["avg_risk"] == "1/2"
    assert float(rows[0]["avg_wait"]) == pytest.approx(2.5)


def test_cli_sweep_csv(tmp_path):
    out_path = tmp_path / "sweep.csv"
    code = main(["sweep", "--n", "1..3", "--capacity", "1..3", "--decoys", "0", "--out", str(out_path)])
    assert code == 0
    rows = {(r["n"], r["c"], r["n_d"]): r["min_avg_risk"] for r in csv.DictReader(open(out_path))}
    assert rows[("3", "2", "0")] == "5/12"
    assert rows[("2", "2", "0")] == "1/2"


def test_cli_sweep_bad_range_exits_2():
    assert main(["sweep", "--n", "3..1", "--capacity", "1"]) == 2


def test_cli_fixtures_all_pass(capsys):
    assert main(["fixtures"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.count("PASS") >= 10
