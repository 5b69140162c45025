"""Document parsing and the command-line interface."""

import json

import numpy as np
import pytest

import oracles
from jordanmm.cli import main
from jordanmm.documents import (
    canonical_json,
    gauge_algebra_from_dict,
    load_json,
    parse_element,
)
from jordanmm.errors import ValidationError
from jordanmm.jordan_core import HermitianElement
from jordanmm.matrix_model import GaugeConfiguration
from jordanmm.projective import ProjectivePoint
from jordanmm.sampling import Sampler


def _write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def _diag_doc(values, ground="O", kind=None):
    n = len(values)
    doc = {
        "n": n,
        "ground": ground,
        "diag": list(values),
        "upper": [[0.0] * 8 for _ in range(n * (n - 1) // 2)],
    }
    if kind:
        doc["kind"] = kind
    return doc


# ---------------------------------------------------------------------------
# documents

def test_parse_element_plain():
    x = parse_element(_diag_doc([1, 2, 3]))
    assert isinstance(x, HermitianElement)
    assert np.allclose(x.diag(), [1, 2, 3])


def test_parse_element_tagged_point():
    p = parse_element(_diag_doc([1, 0, 0], kind="point"))
    assert isinstance(p, ProjectivePoint)


def test_tagged_point_with_wrong_trace_names_invariant():
    with pytest.raises(ValidationError) as excinfo:
        parse_element(_diag_doc([1, 1, 0], kind="point"))
    assert "trace" in str(excinfo.value)


def test_parse_configuration():
    doc = {"coupling": 2.0, "elements": [_diag_doc([1, 0, 0]), _diag_doc([0, 1, 0])]}
    cfg = parse_element(doc)
    assert isinstance(cfg, GaugeConfiguration)
    assert cfg.coupling == 2.0 and cfg.dim == 2


def test_malformed_json_reports_line_and_column():
    with pytest.raises(ValidationError) as excinfo:
        load_json('{"n": 3,\n  "ground": }')
    assert excinfo.value.line == 2
    assert excinfo.value.column is not None


def test_structure_validation_messages():
    with pytest.raises(ValidationError):
        parse_element({"n": 3, "ground": "O", "diag": [1, 2]})
    with pytest.raises(ValidationError):
        parse_element(_diag_doc([1, 2, 3], ground="Q"))
    bad = _diag_doc([1, 2, 3], ground="C")
    bad["upper"][0][5] = 1.0  # outside the complex span
    with pytest.raises(ValidationError):
        parse_element(bad)


def test_roundtrip_random_elements():
    sampler = Sampler(99)
    for ground in ("R", "C", "H", "O", "CO"):
        x = sampler.hermitian(3, ground)
        doc = json.loads(canonical_json(x.to_dict()))
        assert parse_element(doc).is_close(x, 0.0)


def test_gauge_algebra_document_roundtrip():
    alg = gauge_algebra_from_dict({"dim": 3, "entries": [[1, 2, 3, 1.0]]})
    assert alg.to_dict() == {"dim": 3, "entries": [[1, 2, 3, 1.0]]}
    with pytest.raises(ValidationError):
        gauge_algebra_from_dict({"dim": 3, "entries": [[3, 2, 1, 1.0]]})


# ---------------------------------------------------------------------------
# CLI commands

def test_spectral_command(tmp_path, capsys):
    path = _write(tmp_path, "x.json", _diag_doc([1, 2, 3]))
    assert main(["spectral", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert np.allclose(report["eigenvalues"], [1.0, 2.0, 3.0], atol=1e-12)
    assert report["residuals"]["reconstruction"] <= 1e-12


def test_incidence_command_conventions(tmp_path, capsys):
    point = _write(tmp_path, "p.json", _diag_doc([1, 0, 0], kind="point"))
    line = _write(tmp_path, "l.json", _diag_doc([0, 1, 1], kind="line"))
    assert main(["incidence", point, line]) == 0
    assert json.loads(capsys.readouterr().out)["incident"] is False
    assert main(["incidence", point, line, "--incidence", "paper-literal"]) == 0
    assert json.loads(capsys.readouterr().out)["incident"] is True


def test_join_meet_commands(tmp_path, capsys):
    p1 = _write(tmp_path, "p1.json", _diag_doc([1, 0, 0], kind="point"))
    p2 = _write(tmp_path, "p2.json", _diag_doc([0, 1, 0], kind="point"))
    assert main(["join", p1, p2]) == 0
    line_doc = json.loads(capsys.readouterr().out)
    assert line_doc["kind"] == "line"
    assert line_doc["diag"] == [1.0, 1.0, 0.0]

    l1 = _write(tmp_path, "l1.json", _diag_doc([1, 1, 0], kind="line"))
    l2 = _write(tmp_path, "l2.json", _diag_doc([0, 1, 1], kind="line"))
    assert main(["meet", l1, l2]) == 0
    point_doc = json.loads(capsys.readouterr().out)
    assert point_doc["kind"] == "point"
    assert point_doc["diag"] == [0.0, 1.0, 0.0]


def test_action_commands_match_oracle(tmp_path, capsys):
    cfg_doc = {"coupling": 1.0,
               "elements": [_diag_doc([1, 0, 0]), _diag_doc([0, 1, 0]), _diag_doc([0, 0, 1])]}
    path = _write(tmp_path, "cfg.json", cfg_doc)
    assert main(["action-smolin", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert abs(report["action"] - 3.0 / (4.0 * np.pi)) < 1e-12

    cfg_doc = {"coupling": 1.0,
               "elements": [_diag_doc([1, 0, 0], "CO"), _diag_doc([0, 1, 0], "CO"),
                            _diag_doc([0, 0, 1], "CO")]}
    path = _write(tmp_path, "cfg_co.json", cfg_doc)
    assert main(["action-e6", path, "--paper-strict"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert abs(report["action"] - (-0.5)) < 1e-12
    assert report["imaginary_residual"] < 1e-15


def test_action_with_algebra_file(tmp_path, capsys):
    cfg_doc = {"elements": [_diag_doc([1, 0, 0]), _diag_doc([0, 1, 0]),
                            _diag_doc([0, 0, 1]), _diag_doc([1, 2, 3])]}
    cfg = _write(tmp_path, "cfg4.json", cfg_doc)
    alg = _write(tmp_path, "alg.json", {"dim": 4, "entries": [[1, 2, 3, 1.0]]})
    assert main(["action-smolin", cfg, "--algebra", alg]) == 0
    report = json.loads(capsys.readouterr().out)
    assert abs(report["action"] - 3.0 / (4.0 * np.pi)) < 1e-12


def test_lightcone_command(tmp_path, capsys):
    path = _write(tmp_path, "p.json", _diag_doc([1, 0, 0]))
    assert main(["lightcone", path]) == 0
    assert json.loads(capsys.readouterr().out)["lightlike"] is True
    path = _write(tmp_path, "i.json", _diag_doc([1, 1, 1]))
    assert main(["lightcone", path]) == 0
    assert json.loads(capsys.readouterr().out)["lightlike"] is False


def test_random_is_seed_deterministic(capsys):
    assert main(["random", "--kind", "point", "--ground", "O", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["random", "--kind", "point", "--ground", "O", "--seed", "5"]) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["kind"] == "point"
    ProjectivePoint(parse_element(doc).element)  # passes invariants


def test_random_hermitian_has_real_spectrum(capsys):
    from jordanmm.spectral import spectral_decompose

    assert main(["random", "--kind", "hermitian", "--ground", "O", "--seed", "11"]) == 0
    doc = json.loads(capsys.readouterr().out)
    spectral_decompose(parse_element(doc))  # no SpectralError


def test_random_output_feeds_other_commands(tmp_path, capsys):
    x = tmp_path / "x.json"
    assert main(["random", "--kind", "hermitian", "--ground", "O", "--seed", "7",
                 "--out", str(x)]) == 0
    assert main(["spectral", str(x)]) == 0
    assert len(json.loads(capsys.readouterr().out)["eigenvalues"]) == 3

    p, q, line = (tmp_path / name for name in ("p.json", "q.json", "l.json"))
    assert main(["random", "--kind", "point", "--seed", "1", "--out", str(p)]) == 0
    assert main(["random", "--kind", "point", "--seed", "2", "--out", str(q)]) == 0
    assert main(["join", str(p), str(q), "--out", str(line)]) == 0
    capsys.readouterr()
    assert main(["incidence", str(p), str(line)]) == 0
    assert json.loads(capsys.readouterr().out)["incident"] is True

    cfg = tmp_path / "cfg.json"
    assert main(["random", "--kind", "config", "--ground", "CO", "--seed", "3",
                 "--out", str(cfg)]) == 0
    assert main(["action-e6", str(cfg)]) == 0
    assert "action" in json.loads(capsys.readouterr().out)


def test_out_flag_writes_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["random", "--seed", "3", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    json.loads(out.read_text())


def test_verify_smoke_and_list(capsys):
    assert main(["verify", "--list"]) == 0
    listing = json.loads(capsys.readouterr().out)
    assert "jordan-core" in listing["suites"]

    assert main(["verify", "--suite", "division-algebras", "--trials", "50",
                 "--seed", "7"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True


def test_paper_strict_rejects_complex_diagonals(tmp_path, capsys):
    doc = _diag_doc([0, 1, 0], "CO")
    doc["diag"][0] = [0.0, 1.0]  # imaginary diagonal entry
    cfg = {"elements": [doc, _diag_doc([0, 1, 0], "CO"), _diag_doc([0, 0, 1], "CO")]}
    path = _write(tmp_path, "cfg.json", cfg)
    assert main(["action-e6", path]) == 0
    capsys.readouterr()
    assert main(["action-e6", path, "--paper-strict"]) == 1
    assert "strict" in capsys.readouterr().err


def test_exit_code_one_on_bad_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["spectral", str(path)]) == 1
    assert main(["spectral", str(tmp_path / "missing.json")]) == 1
    err = capsys.readouterr().err
    assert "error:" in err


def test_exit_code_two_on_suite_failure(monkeypatch, capsys):
    from jordanmm import verify as verify_mod
    from jordanmm.verify import CheckResult

    def failing_suite(trials, seed, paper_strict):
        return [CheckResult("always-fails", 1, 0.0, 1.0, 1)]

    monkeypatch.setitem(verify_mod.SUITES, "division-algebras", failing_suite)
    assert main(["verify", "--suite", "division-algebras"]) == 2


def test_smolin_derived_cli_fixture(tmp_path, capsys):
    # the two-diagonal / one-off-diagonal configuration, via the CLI
    off = {"n": 3, "ground": "O", "diag": [0, 0, 0],
           "upper": [[0, 1, 0, 0, 0, 0, 0, 0], [0.0] * 8, [0.0] * 8]}
    cfg = {"elements": [_diag_doc([1, 0, 0]), _diag_doc([0, 1, 0]), off]}
    path = _write(tmp_path, "cfg.json", cfg)
    assert main(["action-smolin", path]) == 0
    report = json.loads(capsys.readouterr().out)
    mats = [[[(1, 0, 0, 0, 0, 0, 0, 0) if i == j == 0 else oracles.OZERO for j in range(3)]
             for i in range(3)]]
    assert abs(report["action"]) <= 1e-12
