import json

import pytest

from framecert import codes
from framecert.cli import main


def run(capsys, *argv, env=None):
    code = main(list(argv), env or {})
    out, err = capsys.readouterr()
    return code, out, err


def strip_elapsed(doc):
    for r in doc["records"]:
        r.pop("elapsed_ms")
    return doc


def test_min_weight_witness(capsys):
    code, out, _ = run(capsys, "verify", "min-weight", "--format", "json")
    assert code == 0
    w = json.loads(out)["records"][0]["witness"]
    assert {k: w[k] for k in ("A1", "A2", "A3", "A4", "min_weight")} == \
        {"A1": 0, "A2": 0, "A3": 0, "A4": 3300, "min_weight": 4}


def test_steiner_32(capsys):
    code, out, _ = run(capsys, "verify", "steiner", "--n", "32", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["records"]) == 3
    assert all(r["witness"]["blocks"] == 1240 for r in doc["records"])


def test_defaults_and_env_seed(capsys):
    _, out, _ = run(capsys, "verify", "griess", "--format", "json")
    meta = json.loads(out)["metadata"]
    assert (meta["seed"], meta["fixed_coord"], meta["matrix"], meta["samples"]) == (0xB5, 0, "bundled", 1000)
    _, out, _ = run(capsys, "verify", "griess", "--format", "json", env={"FVOA_SEED": "7"})
    assert json.loads(out)["metadata"]["seed"] == 7
    _, out, _ = run(capsys, "verify", "griess", "--format", "json", "--seed", "9", env={"FVOA_SEED": "7"})
    assert json.loads(out)["metadata"]["seed"] == 9


def test_samples_zero_uses_basis_only(capsys):
    code, out, _ = run(capsys, "verify", "span", "--samples", "0", "--format", "json")
    recs = {r["id"]: r for r in json.loads(out)["records"]}
    assert code == 0 and recs["span.certificates"]["witness"]["certified"] == 41


def test_usage_errors(capsys):
    assert run(capsys, "verify", "all", "--bogus")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "griess", env={"FVOA_SEED": "abc"})[0] == 2
    assert run(capsys, "verify", "griess", "--fixed-coord", "48")[0] == 2


def test_ragged_matrix_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("110\n10\n")
    code, out, err = run(capsys, "verify", "code-d", "--matrix", str(bad))
    assert code == 2 and "line 2" in err and out == ""


def test_matrix_override_roundtrip(tmp_path, capsys):
    f = tmp_path / "d.txt"
    f.write_text(codes.emit_generator_matrix(codes.moonshine_frame_matrix()))
    code, out, _ = run(capsys, "verify", "code-d", "--matrix", str(f), "--format", "json")
    assert code == 0 and json.loads(out)["metadata"]["matrix"] == str(f)


def test_injected_failure_exits_1(tmp_path, capsys):
    # replace the (01)^8 row by a weight-12 row: D weights no longer divisible by 8
    rows = codes.emit_generator_matrix(codes.moonshine_frame_matrix()).splitlines()
    rows[6] = "0101 0101 0101 0101 0000 0000 0000 0000 0000 0000 0000 1111"
    f = tmp_path / "broken.txt"
    f.write_text("\n".join(rows) + "\n")
    code, out, _ = run(capsys, "verify", "frame-axioms", "--matrix", str(f), "--format", "json")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "fail"
    assert any(r["status"] == "fail" for r in doc["records"])


def test_broken_partition_fails_cleanly(tmp_path, capsys):
    f = tmp_path / "overlap.txt"
    f.write_text("1100\n0110\n0011\n")
    code, out, _ = run(capsys, "verify", "span", "--format", "json")
    assert code == 0
    code, out, _ = run(capsys, "verify", "span", "--matrix", str(f), "--format", "json")
    doc = json.loads(out)
    recs = {r["id"]: r for r in doc["records"]}
    assert code == 1 and recs["span.rank"]["status"] == "pass"
    assert recs["span.certificates"]["status"] == "fail" and "overlap" in recs["span.certificates"]["witness"]["error"]


@pytest.mark.parametrize("which,expected", [
    ("D", {"0": 1, "16": 3, "24": 120, "32": 3, "48": 1}),
    ("Dprime", {"0": 1, "16": 2, "24": 60, "32": 1}),
])
def test_weight_enum(capsys, which, expected):
    code, out, _ = run(capsys, "weight-enum", "--code", which, "--format", "json")
    assert code == 0 and json.loads(out)["distribution"] == expected


def test_weight_enum_C_text(capsys):
    code, out, _ = run(capsys, "weight-enum", "--code", "C")
    assert code == 0 and "A4 = 3300" in out and out.startswith("C: [48,41]")
    code, out, _ = run(capsys, "weight-enum", "--code", "Cprime", "--format", "json")
    assert json.loads(out)["k"] == 40


def test_text_output_is_one_based(capsys):
    code, out, _ = run(capsys, "verify", "span", "--samples", "0")
    line = next(l for l in out.splitlines() if "example_target_support" in l)
    assert "(1-based)" in line
    _, js, _ = run(capsys, "verify", "span", "--samples", "0", "--format", "json")
    rec = next(r for r in json.loads(js)["records"] if r["id"] == "span.certificates")
    zero_based = rec["witness"]["example_target_support"]
    assert line.split(": ", 1)[1].startswith(str([x + 1 for x in zero_based]))


def test_json_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "span-shortened", "--format", "json", "--samples", "50")
    _, b, _ = run(capsys, "verify", "span-shortened", "--format", "json", "--samples", "50")
    assert strip_elapsed(json.loads(a)) == strip_elapsed(json.loads(b))
    _, c, _ = run(capsys, "verify", "span-shortened", "--format", "json", "--samples", "50", "--seed", "1")
    assert strip_elapsed(json.loads(a)) != strip_elapsed(json.loads(c))
