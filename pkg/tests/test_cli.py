import json

import pytest

from mnl import cli
from mnl.algebra import StructureTensor, catalog_algebra


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# --- loop-check --------------------------------------------------------

def test_loop_check_octonion(capsys):
    code, payload = run_json(capsys, "loop-check", "builtin:octonion-loop")
    assert code == 0
    assert payload["schema"] == 1
    assert payload["order"] == 16
    assert payload["pass"] is True
    assert payload["results"]["moufang"]["pass"] is True
    assert payload["results"]["associative"]["pass"] is False


def test_loop_check_chein(capsys):
    code, payload = run_json(capsys, "loop-check", "builtin:chein-s3")
    assert code == 0
    assert payload["order"] == 12
    assert payload["results"]["associative"]["pass"] is False


def test_loop_check_group(capsys):
    code, payload = run_json(capsys, "loop-check", "builtin:q8")
    assert code == 0
    assert payload["results"]["associative"]["pass"] is True


def test_loop_check_violation(capsys, tmp_path):
    # latin square with unit that is not Moufang -> exit 1
    table = {"order": 5, "table": [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0]]}
    path = tmp_path / "loop.json"
    path.write_text(json.dumps(table))
    code, payload = run_json(capsys, "loop-check", str(path))
    assert code == 1
    assert payload["pass"] is False
    assert payload["results"]["moufang"]["pass"] is False


def test_loop_check_unknown_builtin(capsys):
    code = cli.main(["loop-check", "builtin:nope"])
    assert code == 2


def test_loop_check_truncated_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"order": 3, "table": [[0, 1')
    assert cli.main(["loop-check", str(path)]) == 2


# --- maltsev -----------------------------------------------------------

def test_maltsev_m7(capsys):
    code, payload = run_json(capsys, "maltsev", "builtin:m7")
    assert code == 0
    assert payload["results"]["lie"]["pass"] is False
    assert payload["results"]["maltsev"]["pass"] is True


def test_maltsev_violation(capsys, tmp_path):
    m7 = catalog_algebra("m7")
    ent = dict(m7.entries)
    del ent[(2, 0, 1)]
    del ent[(2, 1, 0)]
    path = tmp_path / "mut.json"
    path.write_text(json.dumps(StructureTensor(7, ent).to_json_dict()))
    code, payload = run_json(capsys, "maltsev", str(path))
    assert code == 1
    assert payload["results"]["maltsev"]["witness"] is not None


# --- envelope ----------------------------------------------------------

def test_envelope_su2(capsys):
    code, payload = run_json(capsys, "envelope", "builtin:su2")
    assert code == 0
    assert payload["envelope"]["dimension"] == 9


def test_envelope_m7_with_oracle(capsys):
    code, payload = run_json(capsys, "envelope", "builtin:m7",
                             "--oracle", "builtin:octonion")
    assert code == 0
    assert payload["envelope"]["dimension"] == 28
    assert payload["oracle"]["matrix_closure_dim"] == 28
    assert payload["oracle"]["dims_match"] is True
    assert payload["oracle"]["realize"]["pass"] is True


def test_envelope_su2_doubled_with_oracle(capsys):
    code, payload = run_json(capsys, "envelope", "builtin:su2-doubled",
                             "--oracle", "builtin:quaternion")
    # the generator map is a homomorphism (realize passes) but not faithful:
    # the 9-dim envelope collapses onto a 6-dim matrix algebra
    assert code == 1
    assert payload["oracle"]["matrix_closure_dim"] == 6
    assert payload["oracle"]["dims_match"] is False
    assert payload["oracle"]["realize"]["pass"] is True


def test_envelope_non_maltsev_precondition(capsys, tmp_path):
    ent = dict(catalog_algebra("m7").entries)
    del ent[(2, 0, 1)]
    del ent[(2, 1, 0)]
    path = tmp_path / "mut.json"
    path.write_text(json.dumps(StructureTensor(7, ent).to_json_dict()))
    code, payload = run_json(capsys, "envelope", str(path))
    assert code == 1
    assert payload["results"]["maltsev-precondition"]["pass"] is False


# --- etc ---------------------------------------------------------------

def test_etc_quaternion(capsys):
    code, payload = run_json(capsys, "etc", "builtin:quaternion", "--trials", "5")
    assert code == 0
    assert payload["results"]["canonical"]["pass"] is True
    assert payload["results"]["theorem"]["pass"] is True
    assert payload["results"]["eq-3"]["pass"] is True
    assert "locality" not in payload["results"]


def test_etc_quaternion_two_sites(capsys):
    code, payload = run_json(capsys, "etc", "builtin:quaternion",
                             "--sites", "2", "--trials", "2")
    assert code == 0
    assert payload["results"]["locality"]["pass"] is True


def test_etc_sites_cap(capsys):
    assert cli.main(["etc", "builtin:octonion", "--sites", "3"]) == 2


def test_etc_file_generators_need_tensor(capsys, tmp_path):
    from mnl.birep import quaternion_lr_generators
    path = tmp_path / "gen.json"
    path.write_text(json.dumps(quaternion_lr_generators().to_json_dict()))
    assert cli.main(["etc", str(path), "--trials", "1"]) == 2
    code, payload = run_json(capsys, "etc", str(path), "--trials", "1",
                             "--tensor", "builtin:su2-doubled")
    assert code == 0


def test_etc_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("MNL_SEED", "7")
    code, payload = run_json(capsys, "etc", "builtin:quaternion", "--trials", "3")
    assert code == 0
    assert payload["scenario"]["seed"] == 7


# --- tangent -----------------------------------------------------------

def test_tangent_default(capsys):
    code, payload = run_json(capsys, "tangent")
    assert code == 0
    assert payload["max_abs_error"] <= 1e-5


def test_tangent_tight_tolerance(capsys):
    code, payload = run_json(capsys, "tangent", "--step", "1e-2", "--tol", "1e-9")
    assert code == 1
    assert payload["pass"] is False


# --- output handling ---------------------------------------------------

def test_json_byte_deterministic(capsys):
    _, out1 = run(capsys, "maltsev", "builtin:m7", "--format", "json")
    _, out2 = run(capsys, "maltsev", "builtin:m7", "--format", "json")
    assert out1 == out2


def test_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out = run(capsys, "maltsev", "builtin:su2", "--format", "json",
                    "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["pass"] is True


def test_text_format(capsys):
    code, out = run(capsys, "maltsev", "builtin:su2")
    assert code == 0
    assert "maltsev: pass" in out


def test_usage_error_exit_code(capsys):
    assert cli.main(["no-such-command"]) == 2
