"""Command-line behaviour: plumbing, formats, exit codes."""

import csv
import io
import json

import pytest

from hyperspectra.cli import _FORMULAS, main
from hyperspectra.core import read_json
from hyperspectra.spectral import spectral_radius
from hyperspectra.verify import REGISTRY, TheoremEntry


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# gen + measurements ----------------------------------------------------------------


def test_gen_writes_valid_interchange_file(tmp_path, capsys):
    out = tmp_path / "star.json"
    code, _, _ = run(capsys, "gen", "star", "--m", "3", "--k", "5", "--out", str(out))
    assert code == 0
    h = read_json(str(out))
    assert (h.m, h.k, h.n) == (3, 5, 11)


def test_gen_prints_json_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "cycle", "--m", "4", "--length", "3")
    assert code == 0
    data = json.loads(out)
    assert data["m"] == 4 and len(data["edges"]) == 3


def test_gen_caterpillar_rejects_bad_position(capsys):
    code, _, err = run(
        capsys, "gen", "caterpillar", "--m", "3", "--length", "3",
        "--pendants", "9:1",
    )
    assert code == 2
    assert "error:" in err


def test_radius_matches_library(tmp_path, capsys):
    out = tmp_path / "h.json"
    run(capsys, "gen", "bundled-cycle", "--m", "3", "--length", "3",
        "--pendants", "1:4", "--out", str(out))
    code, text, _ = run(capsys, "radius", str(out))
    assert code == 0
    data = json.loads(text)
    expected = spectral_radius(read_json(str(out))).value
    assert data["radius"] == pytest.approx(expected, abs=1e-9)
    assert data["residual"] <= 1e-11


def test_spectrum_and_charpoly_agree(tmp_path, capsys):
    out = tmp_path / "h.json"
    run(capsys, "gen", "star", "--m", "3", "--k", "4", "--out", str(out))
    code, text, _ = run(capsys, "spectrum", str(out))
    assert code == 0
    eigs = json.loads(text)["eigenvalues"]
    code, text, _ = run(capsys, "charpoly", str(out))
    assert code == 0
    data = json.loads(text)
    assert data["radius"] == pytest.approx(max(eigs), abs=1e-9)
    assert all(isinstance(c, int) for c in data["coefficients"])


def test_quotient_radius_matches_full(tmp_path, capsys):
    out = tmp_path / "h.json"
    run(capsys, "gen", "fused-triangles", "--m", "3", "--center", "2",
        "--out", str(out))
    code, text, _ = run(capsys, "quotient", str(out))
    assert code == 0
    data = json.loads(text)
    expected = spectral_radius(read_json(str(out))).value
    assert data["radius"] == pytest.approx(expected, abs=1e-9)
    assert sum(len(p) for p in data["parts"]) == data["n"]


# transform -------------------------------------------------------------------------


def test_transform_release_roundtrip(tmp_path, capsys):
    src = tmp_path / "cat.json"
    dst = tmp_path / "released.json"
    run(capsys, "gen", "caterpillar", "--m", "3", "--length", "4",
        "--pendants", "3:2", "--out", str(src))
    code, text, _ = run(capsys, "transform", "release", str(src),
                        "--edge", "1", "--out", str(dst))
    assert code == 0
    data = json.loads(text)
    assert data["certificate"] == "guaranteed-increase"
    assert data["margin"] > 1e-9
    assert read_json(str(dst)).k == data["k"]


def test_transform_rejects_pendant_release(tmp_path, capsys):
    src = tmp_path / "cat.json"
    run(capsys, "gen", "caterpillar", "--m", "3", "--length", "4",
        "--pendants", "3:2", "--out", str(src))
    code, _, err = run(capsys, "transform", "release", str(src), "--edge", "0")
    assert code == 2
    assert "pendant" in err


def test_transform_move_and_spread(tmp_path, capsys):
    src = tmp_path / "uc.json"
    run(capsys, "gen", "bundled-cycle", "--m", "3", "--length", "4",
        "--pendants", "1:3,3:1", "--out", str(src))
    h = read_json(str(src))
    pendant = h.pendant_edges()[-1]  # the singleton bundle on junction 3
    code, text, _ = run(capsys, "transform", "move", str(src),
                        "--target", "0", "--move", f"{pendant}:{2 * 2}")
    assert code == 0
    assert json.loads(text)["margin"] > 0
    code, text, _ = run(capsys, "transform", "spread", str(src),
                        "--group", f"4={pendant}:0")
    assert code == 0
    assert "certificate" in json.loads(text)


# formula ---------------------------------------------------------------------------

_FORMULA_ARGS = {"m": "3", "k": "9", "d": "4", "l": "3"}


@pytest.mark.parametrize("formula_id", sorted(_FORMULAS))
def test_formula_emits_json(formula_id, capsys):
    required, _ = _FORMULAS[formula_id]
    argv = ["formula", formula_id]
    for name in required:
        argv += [f"--{name}", _FORMULA_ARGS[name]]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    data = json.loads(out)
    assert data["id"] == formula_id
    assert set(data["params"]) == set(required)
    payload = {key: val for key, val in data.items() if key not in ("id", "params")}
    assert payload, "formula output must carry at least one value"


def test_formula_missing_argument(capsys):
    code, _, err = run(capsys, "formula", "star-radius", "--m", "3")
    assert code == 2
    assert "--k" in err


# verify ----------------------------------------------------------------------------


def test_verify_list_shows_registry(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    for theorem_id in REGISTRY:
        assert theorem_id in out


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "UCL1", "--param", "total=4")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert data["params"]["total"] == 4


def test_verify_unmet_exit_two(capsys):
    code, out, _ = run(capsys, "verify", "TH3_ODD", "--k", "7")
    assert code == 2
    assert json.loads(out)["status"] == "hypotheses-unmet"


def test_verify_failure_writes_counterexample(tmp_path, capsys, monkeypatch):
    def runner(params, run_ctx):
        from hyperspectra.families import loose_path

        lo = run_ctx.instance("short", loose_path(3, 2))
        hi = run_ctx.instance("long", loose_path(3, 6))
        run_ctx.less("long", "short", hi, lo)

    fake = TheoremEntry("ALWAYS_FAILS", "backwards", {"m": 3},
                        lambda p: None, runner)
    monkeypatch.setitem(REGISTRY, "ALWAYS_FAILS", fake)

    report_path = tmp_path / "report.json"
    code, _, err = run(capsys, "verify", "ALWAYS_FAILS", "--out", str(report_path))
    assert code == 1
    assert json.loads(report_path.read_text())["status"] == "fail"
    ce_path = tmp_path / "ALWAYS_FAILS.counterexample.json"
    assert ce_path.exists()
    ce = json.loads(ce_path.read_text())
    assert ce["inequality"]["holds"] is False
    assert "long" in ce["witnesses"]
    assert str(ce_path) in err


def test_verify_csv_and_md_formats(capsys):
    code, out, _ = run(capsys, "verify", "UCL7", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and rows[0]["theorem_id"] == "UCL7"
    code, out, _ = run(capsys, "verify", "UCL7", "--format", "md")
    assert code == 0
    assert out.startswith("# Verification: UCL7")


def test_verify_renders_figures(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "UCL1", "--param", "total=4",
                       "--figures", str(tmp_path))
    assert code == 0
    assert (tmp_path / "UCL1_radii.png").exists()
    assert (tmp_path / "UCL1_margins.png").exists()
    assert "figure written" in err


def test_verify_budget_error_exit_two(capsys):
    code, _, err = run(capsys, "verify", "T1C_TOP", "--budget", "10")
    assert code == 2
    assert "budget" in err


def test_verify_bad_param_syntax(capsys):
    code, _, err = run(capsys, "verify", "UCL1", "--param", "oops")
    assert code == 2
    assert "KEY=VALUE" in err


def test_verify_requires_id_or_list(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
    assert "theorem id" in err
