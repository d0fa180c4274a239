import json

import pytest

from main import main

def run(capsys, argv):
    status = main(argv)
    return status, capsys.readouterr().out

def test_basis_json(capsys):
    status, out = run(capsys, ["basis", "--p", "3", "--r", "1", "--json"])
    assert status == 0
    document = json.loads(out)
    assert {r["polynomial"] for r in document["pruned"]} == {"x1*y1", "x1^3 + y1^3", "x1^4", "y1^4"}

def test_basis_trivial_block(capsys):
    status, out = run(capsys, ["basis", "--p", "3", "--s", "1"])
    assert status == 0
    assert "z1 + w1" in out

def test_basis_refuses_composite(capsys):
    assert main(["basis", "--p", "9", "--r", "1"]) == 2

def test_invalid_weights(capsys):
    assert main(["basis", "--p", "3", "--r", "1", "--weights", "3"]) == 2
    assert "weights must be nonzero mod p" in capsys.readouterr().err

def test_usage_errors():
    assert main(["bogus"]) == 2
    assert main(["basis"]) == 2
    assert main(["verify", "--config", "missing.json"]) == 2

def test_verify_fixture(capsys):
    status, out = run(capsys, ["verify", "--config", "data/configs/p3_r1_s0.json", "--json"])
    assert status == 0
    report = json.loads(out)
    assert report["passed"]
    assert len(report["verifications"]) == 12
    assert report["coinvariants"]["dimension"] == 6
    assert report["coinvariants"]["top_degree"] == 3

def test_verify_mixed_rep(capsys):
    status, out = run(capsys, ["verify", "--config", "data/configs/p5_r1_s1.json", "--orders", "4", "--json"])
    assert status == 0
    assert json.loads(out)["formulas"] == [{"name": "top_degree", "expected": 6, "computed": 6}]

def test_verify_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--config", "data/configs/p3_r0_s1.json", "--out", str(first)]) == 0
    assert main(["verify", "--config", "data/configs/p3_r0_s1.json", "--out", str(second)]) == 0
    assert json.loads(first.read_text())["config"]["output"] == str(first)
    assert first.read_text().replace(str(first), "") == second.read_text().replace(str(second), "")

def test_verify_resource_cap(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"rep": {"p": 3, "r": 1}, "sampled_orders": 1, "max_basis_size": 1}))
    assert main(["verify", "--config", str(path)]) == 3

def test_verify_refuses_composite():
    assert main(["verify", "--p", "9", "--r", "1"]) == 2

def test_verify_checks_hsop_bounds(tmp_path, capsys):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"rep": {"p": 3, "r": 1}, "sampled_orders": 1, "hsop_degrees": [2, 2]}))
    status, out = run(capsys, ["verify", "--config", str(path), "--json"])
    assert status == 1
    report = json.loads(out)
    assert not report["passed"]
    assert report["bounds"] == [{"name": "hsop_top_degree", "bound": 2, "computed": 3},
                                {"name": "hsop_dimension", "bound": 4, "computed": 6}]
    assert all(v["checks"]["buchberger_ok"] for v in report["verifications"])

def test_verify_reports_satisfied_hsop_bounds(capsys):
    status, out = run(capsys, ["verify", "--p", "3", "--r", "1", "--orders", "1", "--hsop-degrees", "2,3", "--json"])
    assert status == 0
    assert [(b["bound"], b["computed"]) for b in json.loads(out)["bounds"]] == [(3, 3), (6, 6)]

def test_coinv_bound_too_small(capsys):
    status, out = run(capsys, ["coinv", "--p", "3", "--r", "1", "--hsop-degrees", "2,2", "--json"])
    assert status == 1
    assert json.loads(out)["bounds"]["dim_within"] is False

def test_coinv_with_bounds(capsys):
    status, out = run(capsys, ["coinv", "--config", "data/configs/p3_r1_s0.json", "--json"])
    assert status == 0
    document = json.loads(out)
    assert document["bounds"] == {"top_bound": 3, "dim_bound": 6, "top_within": True, "dim_within": True,
                                  "top_attained": True, "dim_attained": True}

def test_coinv_without_bounds(capsys):
    status, out = run(capsys, ["coinv", "--p", "3", "--s", "1", "--json"])
    document = json.loads(out)
    assert (document["dimension"], document["top_degree"]) == (2, 1)
    assert "bounds" not in document

def test_field(capsys):
    status, out = run(capsys, ["field", "--p", "5"])
    assert status == 0
    assert json.loads(out) == {"p": 5, "k": 4, "modulus_poly": 19, "zeta": 8}

@pytest.mark.parametrize("argv, expected", [
    (["schmid", "--p", "3", "--seq", "1,1,1,2"], "pair (1,2), subset {4}"),
    (["schmid", "--p", "4", "--seq", "1,1,2,2,2", "--pair", "1,2"], "pair (1,2): no completion"),
    (["schmid", "--p", "3", "--seq", "1,1,2,2", "--pair", "3,4"], "pair (3,4), subset {1}"),
])
def test_schmid_witnesses(capsys, argv, expected):
    status, out = run(capsys, argv)
    assert status == 0
    assert out.strip() == expected

def test_schmid_require_pair():
    assert main(["schmid", "--p", "5", "--seq", "1,1,2", "--require-pair"]) == 2

def test_schmid_exhaustive(capsys):
    status, out = run(capsys, ["schmid", "--p", "3", "--exhaustive"])
    assert status == 0
    assert "all" in out
    assert main(["schmid", "--p", "4", "--exhaustive"]) == 1
