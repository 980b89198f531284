import json
import subprocess
import sys

import pytest

from tracelab.cli import main, parse_alpha, render_text, UsageError
from tracelab.exact import PHI


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_outside(capsys):
    code, out, _ = run(capsys, "analyze", "xyxy", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["analysis"]["verdict"] == "FreeByRootOutsideOmega"
    assert rep["schema_version"] == 1
    assert rep["command"] == ["tracelab", "analyze", "xyxy", "--json"]


def test_analyze_deep_has_census(capsys):
    code, out, _ = run(capsys, "analyze", "xy", "--deep", "--json")
    rep = json.loads(out)
    assert code == 0
    g = rep["deep"][0]["gamma"]
    assert list(g["census"].values()) == [10, 6, 14, 2]
    assert rep["deep"][0]["representation"]["image_order"] == 60


def test_analyze_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "x^3")
    assert code == 2 and "EmptyAfterReduction" in err


def test_bad_option_exit_code(capsys):
    with pytest.raises(SystemExit) as e:
        main(["enumerate", "--kmax", "many"])
    assert e.value.code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--kmax", "2", "--json")
    assert code == 0 and json.loads(out)["census"]["total"] == 72


def test_verify_lemma2_reports_failures(capsys):
    code, out, _ = run(capsys, "verify-lemma2", "--json")
    rep = json.loads(out)["lattice"]
    assert code == (0 if rep["all_passed"] else 1)
    assert rep["checks"]["rank_6"]


def test_subgroup(capsys, tmp_path):
    path = tmp_path / "p.json"
    code, out, _ = run(capsys, "subgroup", "xy", "--json", "--output", str(path))
    rep = json.loads(out)
    assert code == 0 and rep["index"] == 30 and rep["census"] == [10, 6, 14, 2]
    assert json.loads(path.read_text())["generators"] == 31


def test_subgroup_without_root(capsys):
    code, _, err = run(capsys, "subgroup", "xyxy")
    assert code == 2


def test_cover_torus(capsys):
    code, out, _ = run(capsys, "cover", "--builtin", "torus", "--n", "3", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["growth"]["rows"][0]["h1_K"] == 2


def test_cover_from_file_and_csv(capsys, tmp_path):
    run(capsys, "subgroup", "x^2 y^3 x^2 y^4 x y", "--alpha", "phi-1", "--output", str(tmp_path / "g.json"))
    code, out, _ = run(capsys, "cover", "--presentation-file", str(tmp_path / "g.json"), "--n", "3", "--csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("n,") and row.startswith("3,")


def test_cover_assign_and_export(capsys, tmp_path):
    out_file = tmp_path / "cover.txt"
    code, out, _ = run(capsys, "cover", "--builtin", "genus2", "--n", "2", "--assign", "1:1,0;3:0,1",
                       "--export-complex", str(out_file))
    assert code == 0 and "h1_K: 10" in out
    assert out_file.read_text().startswith("# tracelab 2-complex")


def test_jets_check(capsys):
    code, out, _ = run(capsys, "jets-check", "--samples", "10", "--json")
    rep = json.loads(out)["jets"]
    assert code == 0 and rep["z_conjugates"] == 30


def test_seed_is_deterministic(capsys, monkeypatch):
    _, a, _ = run(capsys, "jets-check", "--samples", "5", "--json", "--seed", "7")
    _, b, _ = run(capsys, "jets-check", "--samples", "5", "--json", "--seed", "7")
    assert a == b
    monkeypatch.setenv("TRACELAB_SEED", "7")
    _, c, _ = run(capsys, "jets-check", "--samples", "5", "--json")
    assert json.loads(c)["seed"] == 7
    assert json.loads(c)["jets"] == json.loads(a)["jets"]


def test_text_is_rendering_of_json(capsys):
    _, js, _ = run(capsys, "analyze", "xy^2", "--json")
    _, txt, _ = run(capsys, "analyze", "xy^2")
    rep = json.loads(js)
    rep["command"] = ["tracelab", "analyze", "xy^2"]
    assert txt.strip() == render_text(rep)


def test_parse_alpha():
    assert parse_alpha("phi") == PHI
    assert parse_alpha("1+1*phi") == 1 + PHI
    with pytest.raises(UsageError):
        parse_alpha("pi")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "tracelab", "analyze", "x y"], capture_output=True, text=True)
    assert r.returncode == 0 and "DeferredPriorWork" in r.stdout
