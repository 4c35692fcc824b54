from __future__ import annotations

import json
from pathlib import Path

import pytest

import csstress.claims as claims_module
from csstress import LsopNotFound
from csstress.cli import main
from conftest import CORPUS_DIR


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_octahedron_line(capsys):
    path = str(CORPUS_DIR / "crosspoly_d3.json")
    code, out, _ = run(capsys, "info", path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "d=3, f=(1,6,12,8), h=(1,3,3,1), cs=yes"
    assert lines[1] == "g=(1,2)"
    assert lines[2] == "polytope: d=3, 6 vertices"


def test_info_json_mode(capsys):
    path = str(CORPUS_DIR / "noncm_edges.json")
    code, out, _ = run(capsys, "info", path, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["h"] == [1, 2, -1]
    assert obj["cs"] is True
    assert obj["polytope"] is False


def test_info_nonpure_complex(tmp_path, capsys):
    p = tmp_path / "mixed.json"
    p.write_text('{"facets": [[1, 2, 3], [4, 5]]}')
    code, out, _ = run(capsys, "info", str(p))
    assert code == 0
    assert "not pure" in out


def test_stress_table_output(capsys):
    path = str(CORPUS_DIR / "crosspoly_d2.json")
    code, out, _ = run(capsys, "stress", path)
    assert code == 0
    assert out == (
        "seed: 1\n"
        "forms: special_lsop (attempts: 1)\n"
        "degree  dim  plus  minus\n"
        "     0    1     1      0\n"
        "     1    2     2      0\n"
        "     2    1     1      0\n"
    )


def test_stress_single_degree_json(capsys):
    path = str(CORPUS_DIR / "polygon_m3.json")
    code, out, _ = run(
        capsys, "stress", path, "--affine", "--degree", "1",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["mode"] == "affine"
    assert obj["kind"] == "canonical_polytope"
    assert obj["degrees"] == [
        {"degree": 1, "dim": 3, "plus": 2, "minus": 1}
    ]


def test_stress_affine_needs_coordinates(tmp_path, capsys):
    p = tmp_path / "plain.json"
    p.write_text('{"facets": [[1, 2], [-1, -2], [1, -2], [-1, 2]]}')
    code, _, err = run(capsys, "stress", str(p), "--affine")
    assert code == 2
    assert "coordinates" in err


def test_stress_max_degree_extends_table(capsys):
    path = str(CORPUS_DIR / "crosspoly_d2.json")
    code, out, _ = run(capsys, "stress", path, "--max-degree", "4")
    assert code == 0
    rows = out.splitlines()[3:]
    assert len(rows) == 5
    assert rows[-1].split() == ["4", "0", "0", "0"]


def test_stress_basis_listing(capsys):
    path = str(CORPUS_DIR / "crosspoly_d2.json")
    code, out, _ = run(capsys, "stress", path, "--degree", "0", "--basis")
    assert code == 0
    assert "1" in out.splitlines()[-1]


def test_verify_corpus_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", str(CORPUS_DIR))
    assert code == 0
    assert out.startswith("seed: 1\n")
    assert " fail" in out.splitlines()[-1]


def test_verify_json_lines_are_sorted_and_seeded(capsys):
    code, out, _ = run(
        capsys, "verify", str(CORPUS_DIR), "--format", "json"
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    keys = [(r["instance"], r["claim"]) for r in records]
    assert keys == sorted(keys)
    assert all(r["seed"] == 1 for r in records)
    assert all(r["verdict"] != "fail" for r in records)


def test_verify_output_is_byte_identical(capsys):
    _, first, _ = run(capsys, "verify", str(CORPUS_DIR), "--format", "json")
    _, second, _ = run(capsys, "verify", str(CORPUS_DIR), "--format", "json")
    assert first == second


def test_verify_claims_filter(capsys):
    path = str(CORPUS_DIR / "crosspoly_d2.json")
    code, out, _ = run(
        capsys, "verify", path, "--claims", "Lem", "--format", "json"
    )
    assert code == 0
    claims = {json.loads(line)["claim"] for line in out.splitlines()}
    assert claims == {"Lem3.1", "Lem3.2-3.4"}


def test_verify_reports_failure_with_exit_one(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "name": "bad",
        "facets": [[1, 2], [-1, -2]],
        "expected": {"h": [1, 0, 0]},
    }))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    assert "fail" in out


def test_verify_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "verify", "no-such-file.json")
    assert code == 2
    assert "input error" in err


def test_verify_engine_error_exit_three(tmp_path, capsys, monkeypatch):
    def explode(cx, seed):
        raise LsopNotFound("rank check failed on every attempt", 8)

    monkeypatch.setattr(claims_module, "special_lsop", explode)
    claims_module._LINEAR_TABLES.clear()
    target = tmp_path / "sq.json"
    target.write_text(
        '{"facets": [[1, 2], [-1, 2], [1, -2], [-1, -2]], "cs": true}'
    )
    code, _, err = run(capsys, "verify", str(target))
    assert code == 3
    assert "attempts: 8" in err
    claims_module._LINEAR_TABLES.clear()


def test_generate_round_trip(tmp_path, capsys):
    out_path = tmp_path / "bp.json"
    code, out, _ = run(
        capsys, "generate", "bipyramid", "--m", "4", "--out", str(out_path)
    )
    assert code == 0
    assert str(out_path) in out
    obj = json.loads(out_path.read_text())
    assert obj["name"] == "bipyramid_m4"
    code, out, _ = run(capsys, "info", str(out_path))
    assert code == 0
    assert "h=(1,7,7,1)" in out


def test_generate_matches_checked_in_corpus(tmp_path, capsys):
    for family, flag, value, name in [
        ("crosspoly", "--d", "3", "crosspoly_d3"),
        ("polygon", "--m", "4", "polygon_m4"),
        ("bipyramid", "--m", "5", "bipyramid_m5"),
    ]:
        out_path = tmp_path / f"{name}.json"
        code, _, _ = run(
            capsys, "generate", family, flag, value, "--out", str(out_path)
        )
        assert code == 0
        generated = json.loads(out_path.read_text())
        stored = json.loads((CORPUS_DIR / f"{name}.json").read_text())
        stored.pop("expected")
        assert generated == stored


def test_generate_validates_parameters(capsys):
    code, _, err = run(capsys, "generate", "polygon", "--m", "1")
    assert code == 2
    assert "at least 2" in err
    code, _, err = run(capsys, "generate", "crosspoly")
    assert code == 2
