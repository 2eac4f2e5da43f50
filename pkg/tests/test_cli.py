import json

from gbfan import (
    DataSet,
    PointSet,
    WeightOrder,
    bm_reduced_gb,
    lac_fds,
    parse_polynomial,
)
from gbfan.cli import main

TOY = {"p": 3, "n": 2, "points": [[0, 0], [1, 0], [2, 1]]}
S5 = {
    "p": 2,
    "n": 4,
    "points": [[0, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 1], [1, 1, 0, 0], [1, 1, 1, 1]],
}


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gb_round_trip(tmp_path, capsys):
    toy = _write(tmp_path, "toy.json", TOY)
    code, out, _ = _run(capsys, ["gb", toy, "--order", "weight:1,1"])
    assert code == 0
    data = json.loads(out)
    direct = bm_reduced_gb(PointSet.from_json(TOY), WeightOrder((1, 1)))
    assert [tuple(u) for u in data["standard_monomials"]] == list(
        direct.standard_monomials.points
    )
    reparsed = {parse_polynomial(text, 3, 2) for text in data["generators"]}
    assert reparsed == {g.poly for g in direct.generators}


def test_gb_text_format(tmp_path, capsys):
    toy = _write(tmp_path, "toy.json", TOY)
    code, out, _ = _run(
        capsys, ["gb", toy, "--order", "weight:1,3", "--format", "text"]
    )
    assert code == 0
    assert out.startswith("standard monomials: 1, x1, x1^2")
    assert "x1^3 + 2*x1" in out


def test_gb_empty_points_exits_2(tmp_path, capsys):
    empty = _write(tmp_path, "empty.json", {"p": 3, "n": 2, "points": []})
    code, _, err = _run(capsys, ["gb", empty, "--order", "grlex"])
    assert code == 2
    assert "empty point set" in err


def test_gb_bad_order_exits_2(tmp_path, capsys):
    toy = _write(tmp_path, "toy.json", TOY)
    code, _, err = _run(capsys, ["gb", toy, "--order", "weird:1"])
    assert code == 2
    assert "unknown order" in err
    code, _, _ = _run(capsys, ["gb", toy, "--order", "weight:1,2,3"])
    assert code == 2


def test_gb_rational_weights(tmp_path, capsys):
    toy = _write(tmp_path, "toy.json", TOY)
    code, out, _ = _run(capsys, ["gb", toy, "--order", "weight:1/2,3/2"])
    assert code == 0
    json.loads(out)


def test_unique_s5(tmp_path, capsys):
    s5 = _write(tmp_path, "s5.json", S5)
    code, out, _ = _run(capsys, ["unique", s5])
    assert code == 0
    assert json.loads(out) == {"unique": False, "gb_count": 13}


def test_fan_schema(tmp_path, capsys):
    toy = _write(tmp_path, "toy.json", TOY)
    code, out, _ = _run(capsys, ["fan", toy])
    assert code == 0
    data = json.loads(out)
    assert len(data["entries"]) == 2
    for entry in data["entries"]:
        assert set(entry) == {"sm", "gb", "witness_weight"}


def test_staircase_command(tmp_path, capsys):
    v2 = _write(tmp_path, "v2.json", {"p": 3, "n": 2, "points": [[0, 1], [0, 2], [2, 2]]})
    code, out, _ = _run(capsys, ["staircase", v2])
    assert code == 0
    data = json.loads(out)
    assert data["found"]
    assert data["shift"] == {"a": [2, 2], "b": [0, 2]}
    assert data["staircase"] == [[0, 0], [0, 1], [1, 0]]

    hard = _write(
        tmp_path,
        "hard.json",
        {"p": 2, "n": 3, "points": [[0, 0, 0], [1, 0, 0], [1, 1, 0], [1, 1, 1]]},
    )
    code, out, _ = _run(capsys, ["staircase", hard])
    assert code == 0
    assert json.loads(out) == {"found": False}


def test_shift_command(tmp_path, capsys):
    a = _write(tmp_path, "a.json", {"p": 3, "n": 2, "points": [[0, 0], [0, 1]]})
    b = _write(tmp_path, "b.json", {"p": 3, "n": 2, "points": [[1, 1], [1, 2]]})
    c = _write(tmp_path, "c.json", {"p": 3, "n": 2, "points": [[1, 1], [2, 2]]})
    code, out, _ = _run(capsys, ["shift", a, b])
    assert code == 0
    assert json.loads(out) == {"found": True, "shift": {"a": [1, 1], "b": [1, 1]}}
    code, out, _ = _run(capsys, ["shift", a, c])
    assert code == 0
    assert json.loads(out) == {"found": False}


def test_classify_command_and_budget(capsys):
    code, out, _ = _run(capsys, ["classify", "--p", "2", "--n", "3", "--m", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 8 and data["unique_sets"] == 8
    code, _, err = _run(
        capsys, ["classify", "--p", "2", "--n", "4", "--m", "5", "--max-sets", "50"]
    )
    assert code == 3
    assert "budget" in err.lower() or "exceed" in err.lower()


def test_classify_deterministic_output(capsys):
    argv = ["classify", "--p", "2", "--n", "2", "--m", "2"]
    _, out1, _ = _run(capsys, argv)
    _, out2, _ = _run(capsys, argv)
    assert out1 == out2


def test_csv_points(tmp_path, capsys):
    csv = tmp_path / "points.csv"
    csv.write_text("0,0\n1,0\n2,1\n")
    code, out, _ = _run(
        capsys, ["gb", str(csv), "--order", "grevlex", "--p", "3", "--n", "2"]
    )
    assert code == 0
    json.loads(out)
    code, _, err = _run(capsys, ["gb", str(csv), "--order", "grevlex"])
    assert code == 2
    assert "--p" in err


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "config.json"
    cfg.write_text(json.dumps({"format": "text", "names": ["x", "y"]}))
    toy = _write(tmp_path, "toy.json", TOY)
    code, out, _ = _run(capsys, ["gb", toy, "--order", "weight:1,1", "--config", str(cfg)])
    assert code == 0
    assert "y^2 + 2*y" in out


def test_fds_state_space_dot(tmp_path, capsys):
    lac = _write(tmp_path, "lac.json", lac_fds().to_json())
    code, out, _ = _run(capsys, ["fds", "state-space", lac, "--format", "dot"])
    assert code == 0
    assert out.startswith("digraph")
    assert '"0100" -> "1000";' in out
    code, out, _ = _run(capsys, ["fds", "state-space", lac])
    data = json.loads(out)
    assert len(data["edges"]) == 16
    assert len(data["components"]) == 4


def test_fds_select_and_models(tmp_path, capsys):
    dataset = DataSet.from_fds(lac_fds(), PointSet.from_json(S5))
    datafile = _write(tmp_path, "data.json", dataset.to_json())
    code, out, _ = _run(
        capsys, ["fds", "select", datafile, "--order", "grevlex", "--coordinate", "1"]
    )
    assert code == 0
    data = json.loads(out)
    assert set(data["models"]) == {"1"}
    code, out, _ = _run(capsys, ["fds", "models", datafile])
    assert code == 0
    models = json.loads(out)
    assert models["counts"] == [4, 1, 4, 4]
    assert models["total"] == 64


def test_fds_augment(tmp_path, capsys):
    stair = _write(
        tmp_path, "stair.json", {"p": 3, "n": 2, "points": [[0, 0], [0, 1], [1, 0]]}
    )
    code, out, _ = _run(capsys, ["fds", "augment", stair, "--max-k", "2"])
    assert code == 0
    assert json.loads(out) == {"k": 0, "witness": []}
    toy = _write(tmp_path, "toy.json", TOY)
    code, out, _ = _run(capsys, ["fds", "augment", toy, "--max-k", "0"])
    assert code == 0
    assert json.loads(out) == {"exhausted": True, "max_k": 0}


def test_lac_demo(capsys):
    code, out, _ = _run(capsys, ["lac-demo"])
    assert code == 0
    data = json.loads(out)
    assert data["model"][0] == "L*Le*Ge + L*Le + L*Ge + Le*Ge + L + Le"
    assert len(data["components"]) == 4
    assert set(data["bases"]) == {"G1", "G2", "G3", "G4"}
    assert data["bases"]["G2"] == ["Ge + 1", "Le", "L^2 + L", "M^2 + M"]
    assert data["shifts"]["phi12"] == {"a": [1, 1, 1, 1], "b": [0, 0, 0, 1]}
    assert data["standard_monomials"] == [
        [0, 0, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [1, 1, 0, 0],
    ]


def test_lac_demo_text(capsys):
    code, out, _ = _run(capsys, ["lac-demo", "--format", "text"])
    assert code == 0
    assert "f_M = L*Le*Ge" in out
    assert "C1 = {0000, 0100, 1000, 1100}" in out


def test_invalid_config_rejected(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"max_box": -1}))
    toy = _write(tmp_path, "toy.json", TOY)
    code, _, err = _run(capsys, ["gb", toy, "--order", "grlex", "--config", str(cfg)])
    assert code == 2
    assert "max_box" in err
