import json
import subprocess
import sys
from pathlib import Path

import oracles as o
import pytest

from genentropy import Renyi, make_dist
from genentropy.cli import main, sweep_grid

GOLDEN = Path(__file__).parent / "golden"

P3 = "[0.5,0.25,0.25]"
JOINT = "[[0.25,0.25],[0.3,0.2]]"

CASES = [
    ("compute_renyi.txt", ["compute", "--family", "renyi", "--alpha", "2", "--dist", P3]),
    ("compute_shannon.txt", ["compute", "--family", "shannon", "--tau", "-1", "--dist", "[0.5,0.5]"]),
    ("compute_joint_renyi.txt", ["compute", "--family", "renyi", "--alpha", "2", "--dist", JOINT]),
    ("compute_sm.json", ["compute", "--family", "sharma-mittal", "--q", "2", "--alpha", "2", "--gamma", "fd",
                         "--dist", "[0.5,0.5]", "--format", "json"]),
    ("compute_joint_shannon.csv", ["compute", "--family", "shannon", "--dist", JOINT, "--format", "csv"]),
    ("sweep_renyi_alpha.csv", ["sweep", "--family", "renyi", "--param", "alpha", "--start", "0.5", "--stop", "3",
                               "--step", "0.5", "--dist", P3]),
    ("sweep_renyi_uniform.csv", ["sweep", "--family", "renyi", "--param", "alpha", "--start", "0.5", "--stop", "3",
                                 "--step", "0.5", "--dist", "[0.25,0.25,0.25,0.25]"]),
    ("sweep_sm_q.csv", ["sweep", "--family", "sharma-mittal", "--gamma", "fd", "--alpha", "2", "--param", "q",
                        "--start", "0.5", "--stop", "3", "--step", "0.5", "--dist", "[0.5,0.5]"]),
    ("verify_nsk_renyi.json", ["verify", "--system", "NSK", "--family", "renyi", "--alpha", "2", "--seed", "42",
                               "--trials", "1000"]),
]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_golden_values_match_oracle():
    assert float((GOLDEN / "compute_renyi.txt").read_text()) == o.renyi([0.5, 0.25, 0.25], 2)
    rows = (GOLDEN / "sweep_renyi_alpha.csv").read_text().splitlines()[1:]
    for line in rows:
        a, v = map(float, line.split(","))
        assert abs(v - o.renyi([0.5, 0.25, 0.25], a)) <= 1e-12
    values = [float(r.split(",")[1]) for r in rows]
    assert len(values) == 6 and all(x > y for x, y in zip(values, values[1:]))
    joint = dict(line.split() for line in (GOLDEN / "compute_joint_renyi.txt").read_text().splitlines())
    flat = o.flatten(json.loads(JOINT))
    assert abs(float(joint["joint"]) - o.renyi(flat, 2)) <= 1e-12
    assert abs(float(joint["conditional"]) - o.conditional_nath(json.loads(JOINT), -1, -1, 2)) <= 1e-12
    sm = {line.split(",")[0]: float(line.split(",")[1]) for line in (GOLDEN / "sweep_sm_q.csv").read_text().splitlines()[1:]}
    assert sm["2.0"] == 0.5


def test_round_trip_zero_ulp(capsys):
    _, out, _ = run(["compute", "--family", "renyi", "--alpha", "2", "--dist", P3], capsys)
    assert float(out) == Renyi(2.0)(make_dist([0.5, 0.25, 0.25]))


def test_constraint_violation_exit_3(capsys):
    code, out, err = run(["compute", "--family", "tsallis", "--alpha", "2", "--gamma", "0.5", "--dist", "[0.5,0.5]"], capsys)
    assert code == 3 and out == "" and "gamma" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--family", "renyi", "--alpha", "2", "--dist", "[0.5,0.2]"],
        ["compute", "--family", "renyi", "--alpha", "2", "--dist", "not json"],
        ["compute", "--family", "renyi", "--alpha", "2", "--dist", "[[[1.0]]]"],
        ["compute", "--family", "renyi", "--dist", "[0.5,0.5]"],
        ["compute", "--family", "renyi", "--alpha", "2", "--dist", "/nonexistent/file.json"],
        ["compute", "--family", "tsallis", "--alpha", "2", "--gamma", "fd", "--dist", "[0.5,0.5]"],
        ["compute", "--family", "generalized", "--h", "cubic:1", "--dist", "[0.5,0.5]"],
        ["compute", "--family", "boltzmann", "--dist", "[0.5,0.5]"],
        ["sweep", "--family", "renyi", "--param", "alpha", "--start", "3", "--stop", "1", "--step", "0.5",
         "--dist", "[0.5,0.5]"],
        ["sweep", "--family", "renyi", "--param", "alpha", "--start", "1", "--stop", "2", "--step", "0",
         "--dist", "[0.5,0.5]"],
        ["sweep", "--family", "renyi", "--param", "alpha", "--start", "1", "--stop", "2", "--step", "x",
         "--dist", "[0.5,0.5]"],
        ["verify", "--system", "SK", "--family", "renyi", "--alpha", "2"],
        ["verify"],
        ["verify", "--family", "renyi", "--alpha", "2", "--trials", "0"],
        [],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 2 and out == ""


def test_renormalize_flag(capsys):
    code, out, _ = run(["compute", "--family", "shannon", "--dist", "[1,1]", "--renormalize"], capsys)
    assert code == 0 and out == "1.0\n"


def test_file_inputs(capsys):
    code, out, _ = run(["compute", "--family", "renyi", "--alpha", "2", "--dist", str(GOLDEN / "dist.csv")], capsys)
    assert code == 0 and out == (GOLDEN / "compute_renyi.txt").read_text()
    code, out, _ = run(["compute", "--family", "renyi", "--alpha", "2", "--dist", str(GOLDEN / "joint.json")], capsys)
    assert code == 0 and out == (GOLDEN / "compute_joint_renyi.txt").read_text()


def test_csv_column_and_joint(tmp_path, capsys):
    col = tmp_path / "col.csv"
    col.write_text("0.5\n0.5\n")
    grid = tmp_path / "grid.csv"
    grid.write_text("0.25,0.25\n0.3,0.2\n")
    assert run(["compute", "--family", "shannon", "--dist", str(col)], capsys)[1] == "1.0\n"
    assert run(["compute", "--family", "shannon", "--dist", str(grid)], capsys)[1].startswith("joint ")


def test_generalized_and_biparametric(capsys):
    code, out, _ = run(["compute", "--family", "generalized", "--h", "gamma_exp:-1,-1", "--alpha", "2", "--lam", "-1",
                        "--dist", "[0.5,0.5]"], capsys)
    assert code == 0 and float(out) == 0.5
    code, out, _ = run(["compute", "--family", "biparametric", "--tau", "-1", "--lam", "1", "--alpha", "1",
                        "--dist", "[0.5,0.5]"], capsys)
    assert code == 0 and out == "1.0\n"


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = run(["compute", "--family", "shannon", "--dist", "[0.5,0.5]", "-o", str(target)], capsys)
    assert code == 0 and out == "" and target.read_text() == "1.0\n"


def test_verify_injected_fails(capsys):
    code, out, _ = run(["verify", "--inject", "sum_squares", "--trials", "100"], capsys)
    assert code == 1
    report = json.loads(out)
    assert report["passed"] is False and report["version"] == 1


def test_verify_text_format(capsys):
    code, out, _ = run(["verify", "--family", "tsallis", "--alpha", "2", "--gamma", "hc", "--trials", "100",
                        "--format", "text"], capsys)
    assert code == 0 and out.rstrip().endswith("PASS")


def test_verify_seed_from_env(monkeypatch, capsys):
    monkeypatch.setenv("ENTROPY_SEED", "7")
    _, out, _ = run(["verify", "--family", "shannon", "--trials", "50"], capsys)
    assert json.loads(out)["seed"] == 7
    monkeypatch.setenv("ENTROPY_SEED", "seven")
    assert run(["verify", "--family", "shannon", "--trials", "50"], capsys)[0] == 2


def test_verify_tolerance_override(capsys):
    code, out, _ = run(["verify", "--family", "shannon", "--trials", "50", "--tolerance", "1e-30"], capsys)
    assert code == 1


def test_sweep_json(capsys):
    code, out, _ = run(["sweep", "--family", "tsallis", "--gamma", "tsallis", "--param", "alpha", "--start", "2",
                        "--stop", "3", "--step", "1", "--dist", "[0.5,0.5]", "--format", "json"], capsys)
    payload = json.loads(out)
    assert code == 0 and [r["alpha"] for r in payload["rows"]] == [2.0, 3.0]
    assert payload["rows"][0]["entropy"] == 0.5


def test_sweep_constraint_exit_3(capsys):
    code, _, _ = run(["sweep", "--family", "tsallis", "--gamma", "-1", "--param", "alpha", "--start", "0.5",
                      "--stop", "2", "--step", "0.5", "--dist", "[0.5,0.5]"], capsys)
    assert code == 3


def test_sweep_grid_decimal():
    assert sweep_grid("0.1", "0.3", "0.1") == [0.1, 0.2, 0.3]
    assert sweep_grid("1", "0", "1") == []


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "genentropy", "compute", "--family", "renyi", "--alpha", "2",
                          "--dist", P3], capture_output=True, text=True, check=True)
    assert out.stdout == "1.415037499278844\n"


def test_verify_all_byte_identical():
    argv = [sys.executable, "-m", "genentropy", "verify", "--all", "--seed", "42"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["passed"] is True
