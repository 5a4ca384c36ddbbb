from __future__ import annotations

import json

import pytest

from helpers import doubled_edge, triangle
from planarmobiles.cli import main
from planarmobiles.maps import serialize_map


@pytest.fixture
def tri_file(tmp_path):
    p = tmp_path / "triangle.json"
    p.write_text(serialize_map(triangle()))
    return p


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_girth(capsys, tri_file):
    code, out = run(capsys, "girth", str(tri_file))
    assert code == 0 and out.strip() == "3"


def test_mobile_then_close(capsys, tri_file, tmp_path):
    code, out = run(capsys, "mobile", str(tri_file), "--d", "3")
    assert code == 0
    data = json.loads(out)
    assert len(data["exposed_buds"]) == 3
    mob = tmp_path / "m.json"
    mob.write_text(out)
    code, out = run(capsys, "close", str(mob), "--d", "3")
    assert code == 0
    assert json.loads(out)["half_edges"] == 6


def test_class_violation(capsys, tri_file):
    code, _ = run(capsys, "mobile", str(tri_file), "--d", "4")
    assert code == 3


def test_missing_and_malformed_files(capsys, tmp_path):
    code, _ = run(capsys, "girth", str(tmp_path / "absent.json"))
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _ = run(capsys, "girth", str(bad))
    assert code == 2


def test_orient_outputs_records(capsys, tmp_path):
    p = tmp_path / "digon.json"
    p.write_text(serialize_map(doubled_edge()))
    code, out = run(capsys, "orient", str(p), "--d", "2")
    assert code == 0 and out.strip()


def test_series_matches_enumerate_and_is_deterministic(capsys):
    args = ("--d", "2", "--degrees", "2,3,4", "--max-n", "2", "--format", "json")
    code, a = run(capsys, "series", *args)
    assert code == 0
    code, b = run(capsys, "enumerate", *args)
    assert code == 0
    assert json.loads(a) == json.loads(b)
    assert run(capsys, "series", *args)[1] == a


def test_annular_series_matches_enumerate(capsys):
    args = ("--d", "2", "--e", "2", "--p", "2", "--q", "2", "--degrees", "2,3", "--max-n", "1", "--format", "json")
    code, a = run(capsys, "annular-series", *args)
    assert code == 0
    code, b = run(capsys, "enumerate", *args)
    assert code == 0
    assert json.loads(a) == json.loads(b)


def test_formula_loopless(capsys):
    code, out = run(capsys, "formula", "loopless", "--max-n", "4", "--format", "json")
    assert code == 0
    assert "68" in out


def test_guards(capsys):
    assert run(capsys, "series", "--d", "2", "--degrees", "2", "--max-n", "999")[0] == 4
    assert run(capsys, "enumerate", "--d", "2", "--degrees", "2,4", "--max-n", "9")[0] == 4


def test_verify_suite_report(capsys):
    code, out = run(capsys, "verify", "formulas", "--max-e", "3")
    assert code == 0
    assert json.loads(out)["passed"] is True
