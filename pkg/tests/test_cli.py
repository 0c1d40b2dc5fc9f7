import json

import jsonschema
import pytest

from sumrank.cli import (
    EXIT_BAD_ARGS,
    EXIT_BUDGET,
    EXIT_OK,
    main,
)
from sumrank.report import REPORT_SCHEMA, report_to_json

PARAMS_221 = ["--q", "2", "--m", "2", "--eta", "2", "--ell", "1"]
PARAMS_222 = ["--q", "2", "--m", "2", "--eta", "2", "--ell", "2"]


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *args):
    code, out = run_cli(capsys, *args)
    return code, json.loads(out) if out.strip() else None


def test_volume_sphere(capsys):
    code, report = run_json(capsys, "volume", *PARAMS_221, "--kind", "sphere", "--t", "1")
    assert code == EXIT_OK
    assert report["records"][0]["value"] == "9"
    jsonschema.validate(report, REPORT_SCHEMA)


def test_volume_ball_zero(capsys):
    code, report = run_json(capsys, "volume", *PARAMS_222, "--kind", "ball", "--t", "0")
    assert code == EXIT_OK
    assert report["records"][0]["value"] == "1"


def test_volume_distribution(capsys):
    code, report = run_json(capsys, "volume", *PARAMS_221, "--kind", "distribution")
    assert code == EXIT_OK
    assert [r["value"] for r in report["records"]] == ["1", "9", "6"]


def test_volume_distribution_csv(capsys, tmp_path):
    csv_path = tmp_path / "dist.csv"
    code, _ = run_json(
        capsys, "volume", *PARAMS_221, "--kind", "distribution", "--csv", str(csv_path)
    )
    assert code == EXIT_OK
    assert csv_path.read_text() == "t,count\n0,1\n1,9\n2,6\n"


def test_volume_with_oracle_check(capsys):
    code, report = run_json(
        capsys, "volume", *PARAMS_222, "--kind", "sphere", "--t", "2", "--oracle"
    )
    assert code == EXIT_OK
    assert report["records"][0]["match"] == "yes"


def test_intersect_exact(capsys):
    code, report = run_json(
        capsys, "intersect", *PARAMS_222, "--u", "1", "--s", "1", "--profile", "2,0"
    )
    assert code == EXIT_OK
    assert report["records"][0]["formula_variant"] == "exact"
    assert report["records"][0]["value"] == "6"


def test_intersect_radius_clamp(capsys):
    code, report = run_json(
        capsys, "intersect", *PARAMS_222, "--u", "0", "--s", "9", "--profile", "1,1"
    )
    assert code == EXIT_OK
    assert report["records"][0]["value"] == "1"


def test_intersect_disjoint(capsys):
    code, report = run_json(
        capsys, "intersect", *PARAMS_222, "--u", "1", "--s", "0", "--profile", "2,0"
    )
    assert code == EXIT_OK
    assert report["records"][0]["value"] == "0"


def test_intersect_scalar_t_enumerates_profiles(capsys):
    code, report = run_json(
        capsys, "intersect", *PARAMS_222, "--u", "1", "--s", "1", "--t", "2"
    )
    assert code == EXIT_OK
    profiles = [tuple(r["query"]["profile"]) for r in report["records"]]
    assert profiles == [(0, 2), (1, 1), (2, 0)]


def test_intersect_thm2_emits_both_variants(capsys):
    code, report = run_json(
        capsys, "intersect", *PARAMS_222, "--u", "2", "--s", "1", "--t", "2",
        "--variant", "thm2",
    )
    assert code == EXIT_OK
    variants = [r["formula_variant"] for r in report["records"]]
    assert variants.count("thm2-literal") == 1
    assert variants.count("thm2-profile") == 3


def test_intersect_thm3_emits_both_variants(capsys):
    code, report = run_json(
        capsys, "intersect", *PARAMS_222, "--u", "1", "--s", "1", "--t", "2",
        "--variant", "thm3",
    )
    assert code == EXIT_OK
    variants = [r["formula_variant"] for r in report["records"]]
    assert "thm3-literal" in variants
    assert "thm3-aggregate" in variants


def test_invalid_params_exit_2(capsys):
    code = main(["volume", "--q", "1", "--m", "2", "--eta", "2", "--ell", "1",
                 "--kind", "sphere", "--t", "1"])
    captured = capsys.readouterr()
    assert code == EXIT_BAD_ARGS
    assert "q" in captured.err


def test_bad_profile_exit_2(capsys):
    code = main(["intersect", *PARAMS_222, "--u", "1", "--s", "1",
                 "--profile", "3,0"])
    assert code == EXIT_BAD_ARGS


def test_thm2_zero_delta_rejected(capsys):
    code = main(["intersect", *PARAMS_222, "--u", "1", "--s", "1",
                 "--profile", "0,0", "--variant", "thm2"])
    assert code == EXIT_BAD_ARGS


def test_verify_grid_none(capsys):
    code, report = run_json(capsys, "verify", "--grid", "none")
    assert code == EXIT_OK
    assert report["records"] == []
    jsonschema.validate(report, REPORT_SCHEMA)


def test_verify_small_cell(capsys):
    code, report = run_json(capsys, "verify", "--grid", "2,2,2,1")
    assert code == EXIT_OK
    assert all(r["match"] == "yes" for r in report["records"])
    jsonschema.validate(report, REPORT_SCHEMA)


def test_verify_budget_skip_exit_3(capsys):
    code, report = run_json(capsys, "verify", "--grid", "2,2,2,1", "--budget", "8")
    assert code == EXIT_BUDGET
    assert report["records"] == []
    assert report["skipped"][0]["cell"] == {"q": 2, "m": 2, "eta": 2, "ell": 1}
    assert all(s["required_budget"] == "16" for s in report["skipped"])


def test_json_round_trip_is_byte_identical(capsys):
    _, out = run_cli(capsys, "volume", *PARAMS_221, "--kind", "distribution")
    parsed = json.loads(out)
    assert report_to_json(parsed) + "\n" == out


def test_output_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code = main(["volume", *PARAMS_221, "--kind", "sphere", "--t", "1",
                 "--output", str(path)])
    assert code == EXIT_OK
    report = json.loads(path.read_text())
    assert report["records"][0]["value"] == "9"


def test_text_format(capsys):
    code, out = run_cli(capsys, "volume", *PARAMS_221, "--kind", "sphere", "--t", "1",
                        "--format", "text")
    assert code == EXIT_OK
    assert "sphere" in out and "9" in out
