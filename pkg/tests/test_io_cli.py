import json
import subprocess
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

from conftest import fixture, fixture_names
from doihopf.cli import main
from doihopf.gallery import qc2, sweedler_h4
from doihopf.hopf import validate_hopf
from doihopf.io import WorkspaceError, dump_workspace, emit_datum, emit_hopf, load_workspace, parse_workspace
from doihopf.linalg import GF, QQ

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def run(*args, env=None):
    res = CliRunner().invoke(main, [str(a) for a in args], env=env)
    return res.exit_code, res.output


@pytest.mark.parametrize("name", fixture_names())
def test_emit_parse_emit_is_bit_exact(name):
    d = fixture(name)
    text = dump_workspace(d.field, emit_datum(d))
    ws = parse_workspace(text)
    again = dump_workspace(ws.field, emit_datum(ws.get("D", "datum")))
    assert again == text
    back = ws.get("D", "datum")
    assert d.field.equal(back.am, d.am) and d.field.equal(back.rho, d.rho) and d.field.equal(back.act, d.act)


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.json")), ids=lambda p: p.stem)
def test_fixture_files_are_canonical(path):
    text = path.read_text(encoding="utf-8")
    raw = json.loads(text)
    assert text == json.dumps(raw, sort_keys=True, indent=1, ensure_ascii=False) + "\n"
    ws = load_workspace(path)
    for name in ws.names():
        ws.get(name)


def test_fixture_files_are_up_to_date():
    res = subprocess.run([sys.executable, str(ROOT / "tools" / "make_fixtures.py"), "--check"], capture_output=True, text=True)
    assert res.returncode == 0, res.stdout + res.stderr


def test_rationals_are_canonical_strings():
    h = qc2()
    text = dump_workspace(QQ, {"H": emit_hopf(h)})
    assert '"1/2"' not in text
    obj = {"kind": "algebra", "basis": ["x"], "mult": [["x", "x", "x", "2/4"]], "unit": [["x", "-6/3"]]}
    ws = parse_workspace(json.dumps({"field": {"type": "Q"}, "objects": {"a": obj}}))
    out = json.loads(dump_workspace(QQ, {"a": __import__("doihopf.io", fromlist=["x"]).emit_algebra(ws.get("a"))}))
    assert out["objects"]["a"]["mult"] == [["x", "x", "x", "1/2"]]
    assert out["objects"]["a"]["unit"] == [["x", "-2"]]


def test_parse_errors_carry_position():
    with pytest.raises(WorkspaceError) as exc:
        parse_workspace('{"field": {"type": "Q"},\n "objects": {,}}')
    assert "line 2" in str(exc.value)


def test_fp_field():
    text = (FIXTURES / "f2c2.json").read_text()
    ws = parse_workspace(text)
    assert ws.field == GF(2)


# ---------------------------------------------------------------- exit codes


def test_validate_ok():
    code, out = run("validate", FIXTURES / "qc2.json", "H")
    assert code == 0 and "OK H" in out


def test_validate_corrupted_antipode(tmp_path):
    raw = json.loads((FIXTURES / "qc2.json").read_text())
    raw["objects"]["H"]["antipode"] = [["1", "1", "1"], ["g", "1", "1"]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(raw))
    code, out = run("validate", p, "H")
    assert code == 1 and "antipode axiom" in out


def test_malformed_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"field": ')
    code, out = run("validate", p, "H")
    assert code == 2 and "line 1" in out


def test_unknown_names():
    assert run("validate", FIXTURES / "qc2.json", "nope")[0] == 2
    assert run("integrals", FIXTURES / "qc2.json", "nope")[0] == 2
    assert run("integrals", FIXTURES / "qc2.json", "H")[0] == 2  # a hopf object is not a datum
    assert run("validate", FIXTURES / "missing.json", "H")[0] == 2
    assert run("integrals", FIXTURES / "qc2.json", "D", "--space", "v9")[0] == 2


def test_bad_field(tmp_path):
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"field": {"type": "Fp", "p": 4}, "objects": {}}))
    assert run("validate", p, "x")[0] == 2


# ---------------------------------------------------------------- integrals


def test_integrals_matrix_coalgebra_v4():
    code, out = run("integrals", FIXTURES / "matrix-coalgebra.json", "D", "--space", "v4", "--normalized")
    assert code == 0
    assert "space V4   dim 4" in out
    assert "normalization holds: True" in out
    assert "normalized elements: particular + subspace of dim 3" in out
    assert "SEPARABLE: yes (Forgetful)" in out


def test_integrals_m2f2_graded_w1():
    code, out = run("integrals", FIXTURES / "m2f2-graded.json", "D", "--space", "w1", "--normalized")
    assert code == 0 and "SEPARABLE: yes (Induction)" in out
    assert "space W1   dim 2" in out


def test_integrals_f2c2_dual_v3():
    code, out = run("integrals", FIXTURES / "f2c2-dual.json", "D", "--space", "v3", "--normalized")
    assert code == 0 and "SEPARABLE: no (Forgetful)" in out


def test_integrals_classical():
    code, out = run("integrals", FIXTURES / "h4.json", "H", "--space", "classical", "--normalized")
    assert code == 0 and "dim 1" in out and "phi(gx): 1" in out and "none" in out


def test_max_dim_guard():
    code, out = run("integrals", FIXTURES / "yd-qc2.json", "D", "--space", "v1", env={"DOIHOPF_MAX_DIM": "3"})
    assert code == 2 and "DOIHOPF_MAX_DIM" in out


# ---------------------------------------------------------------- maschke


def test_maschke_identity_lifts_to_identity():
    code, out = run("maschke", FIXTURES / "matrix-coalgebra.json", "D", "id", "id")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("  e")]
    assert [l.split(": ")[1] for l in lines] == ["1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"]


def test_maschke_diagonal():
    code, out = run("maschke", FIXTURES / "matrix-coalgebra.json", "D", "diag", "proj1")
    assert code == 0
    assert "A-linear and C-colinear: True" in out and "r~ o u = I: True" in out


def test_maschke_refuses_non_total_gamma():
    code, out = run("maschke", FIXTURES / "matrix-coalgebra.json", "D", "diag", "proj1", "--integral", "gamma-trace2")
    assert code == 1 and "sum gamma(c1)(c2) = eps(c) 1" in out


def test_maschke_without_total_integral():
    code, out = run("run", FIXTURES / "f2c2-dual.json")
    assert code in (0, 1)


# ---------------------------------------------------------------- doubles


def test_double_drinfeld_round_trip(tmp_path):
    out = tmp_path / "d.json"
    code, text = run("double", FIXTURES / "qc2.json", "H", "--kind", "drinfeld", "-o", out)
    assert code == 0 and "dimension 4" in text
    ws = load_workspace(out)
    (name,) = ws.names()
    h = ws.get(name, "hopf")
    assert h.dim == 4 and validate_hopf(h).ok
    assert run("validate", out, name)[0] == 0
    # emitting the reloaded object reproduces the file
    assert dump_workspace(ws.field, {name: emit_hopf(h)}) == out.read_text()


def test_double_trivial():
    code, text = run("double", FIXTURES / "k-trivial.json", "H")
    assert code == 0
    obj = json.loads(text)
    (o,) = obj["objects"].values()
    assert len(o["basis"]) == 1


def test_double_heisenberg_h4(tmp_path):
    out = tmp_path / "h.json"
    code, _ = run("double", FIXTURES / "h4.json", "H", "--kind", "heisenberg", "-o", out)
    assert code == 0
    ws = load_workspace(out)
    (name,) = ws.names()
    assert ws.kind(name) == "algebra" and ws.get(name).dim == 16
    assert run("validate", out, name)[0] == 0


def test_double_needs_antipode(tmp_path):
    raw = json.loads((FIXTURES / "qc2.json").read_text())
    del raw["objects"]["H"]["antipode"]
    p = tmp_path / "noS.json"
    p.write_text(json.dumps(raw))
    assert run("double", p, "H")[0] == 1


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.json")), ids=lambda p: p.stem)
def test_run_queries(path):
    code, out = run("run", path)
    assert code in (0, 1), out
