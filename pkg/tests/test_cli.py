import json

import pytest

from hopf_forge.cli import main
from hopf_forge.io import load


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "braided-line" in out and "small-quantum-sl2" in out


def test_check_catalog_entry_text_and_json(capsys):
    code, out, _ = run(capsys, "check", "--catalog", "taft:n=3")
    assert code == 0 and out.rstrip().endswith("PASS (1 report)")
    code, out, _ = run(capsys, "check", "--catalog", "braided-line:n=3", "--report-format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["format"] == "hopf-forge/1"


def test_dump_then_check_round_trip(capsys, tmp_path):
    path = tmp_path / "line.json"
    assert run(capsys, "dump", "--catalog", "braided-line-pairing:n=2", "--out", str(path))[0] == 0
    text = path.read_text()
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert run(capsys, "dump", "--catalog", "braided-line-pairing:n=2")[1] == text


def test_build_double_then_twist_is_heisenberg(capsys, tmp_path):
    drin = tmp_path / "drin.json"
    code, _, _ = run(capsys, "build", "double", "--catalog", "group-pairing:G=Z3", "--out", str(drin))
    assert code == 0
    doc = load(drin)
    assert doc.metadata["dim"] == 9
    assert {"Drin", "P", "Drin.qt"} <= set(doc.structures)
    code, out, _ = run(capsys, "build", "twist", "--algebra", str(drin), "--cocycle", "indB-triv",
                       "--report-format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    code, out, _ = run(capsys, "check", str(drin), "--structure", "Drin.qt")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["build", "heis", "--catalog", "braided-line-pairing:n=2"],
    ["build", "smash", "--catalog", "sweedler"],
    ["build", "smash", "--catalog", "group-algebra:G=S3", "--action", "adjoint"],
    ["build", "bosonize", "--catalog", "braided-line:n=3"],
    ["build", "twist", "--catalog", "group-algebra:G=V4", "--cocycle", "bicharacter:orders=2x2,matrix=0.1/0.0"],
    ["build", "compose-cocycles", "--catalog", "group-pairing:G=V4",
     "--cocycle", "bicharacter:orders=2x2,matrix=0.1/0.0", "--cocycle2", "group-cycle:orders=2x2,matrix=0.0/1.0"],
    ["build", "compose-cocycles", "--catalog", "braided-line-pairing:n=2",
     "--cocycle", "braided-line-cocycle:n=2,t=3,symbol=e"],
])
def test_build_kinds(capsys, tmp_path, argv):
    out_path = tmp_path / "out.json"
    code, out, err = run(capsys, *argv, "--out", str(out_path))
    assert code == 0, out + err
    code, out, err = run(capsys, "check", str(out_path))
    assert code == 0, out + err


def test_jobs_do_not_change_output(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "build", "double", "--catalog", "braided-line-pairing:n=3", "--out", str(a))
    run(capsys, "build", "double", "--catalog", "braided-line-pairing:n=3", "--jobs", "2", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_corrupted_document_fails_with_witness(capsys, tmp_path):
    path = tmp_path / "h.json"
    run(capsys, "dump", "--catalog", "sweedler", "--out", str(path))
    data = json.loads(path.read_text())
    mult = next(k for k in data["maps"] if k.endswith(".mult"))
    data["maps"][mult]["entries"][1][2] = "5"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "check", str(path), "--report-format", "json")
    report = json.loads(out)
    assert code == 1 and not report["ok"]
    failed = [r for rep in report["reports"] for r in rep["checks"] if not r["passed"]]
    assert failed and any("witness" in r for r in failed)


def test_dangling_reference_is_input_error(capsys, tmp_path):
    path = tmp_path / "h.json"
    run(capsys, "dump", "--catalog", "sweedler", "--out", str(path))
    data = json.loads(path.read_text())
    name = next(iter(data["structures"]))
    data["structures"][name]["mult"] = "nowhere"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert f"/structures/{name}/mult" in err


@pytest.mark.parametrize("argv", [
    ["check"],
    ["check", "--catalog", "no-such-thing"],
    ["build", "compose-cocycles", "--catalog", "braided-line-pairing:n=2",
     "--cocycle", "braided-line-cocycle:n=2,t=3"],
    ["check", "--catalog", "taft:n=3", "--field", "Q(z3)"],
    ["build", "twist", "--catalog", "sweedler", "--cocycle", "taft:n=3"],
    ["build", "double", "--catalog", "braided-line-pairing:n=3", "--max-rewrite-steps", "2"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_unparseable_json_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(capsys, "check", str(path))[0] == 2


def test_non_cocycle_twist_fails(capsys, tmp_path):
    path = tmp_path / "c.json"
    run(capsys, "dump", "--catalog", "bicharacter:orders=2x2,matrix=0.1/0.0", "--out", str(path))
    data = json.loads(path.read_text())
    sigma = next(k for k, s in data["structures"].items() if s["type"] == "cocycle")
    smap = data["structures"][sigma]["sigma"]
    data["maps"][smap]["entries"][-1][2] = "3"
    path.write_text(json.dumps(data))
    code, _, _ = run(capsys, "build", "twist", "--catalog", "group-algebra:G=V4", "--cocycle", f"{path}#{sigma}")
    assert code == 1
