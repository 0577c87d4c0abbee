"""Command-line surface: formats, exit codes, determinism, verification."""

import json

import pytest
from click.testing import CliRunner

from zonalpoly.cli import _emit_json, main
from zonalpoly.reference import GOLDEN_POWERSUM_ROWS


@pytest.fixture()
def runner():
    return CliRunner()


class TestTable:
    def test_degree_one_text(self, runner):
        result = runner.invoke(main, ["table", "--f", "1"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].split() == ["kappa", "s1", "chi"]
        assert lines[1].split() == ["1", "1", "1"]

    def test_degree_two_powersum_csv(self, runner):
        result = runner.invoke(
            main, ["table", "--f", "2", "--basis", "powersum", "--format", "csv"]
        )
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "kappa,s2,s1^2,chi"
        assert lines[1] == "2,2,1,1"
        assert lines[2] == '"1,1",-1,1,2'

    def test_degree_six_powersum_grid(self, runner):
        result = runner.invoke(
            main, ["table", "--f", "6", "--basis", "powersum", "--format", "json"]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert len(payload["rows"]) == 11
        row = {r["partition"]: r for r in payload["rows"]}["3,3"]
        # s3^2 column is the partition (3,3)
        idx = payload["columns"].index("3,3")
        assert row["coefficients"][idx] == "136"
        assert row["character_degree"] == 132

    def test_monomial_basis(self, runner):
        result = runner.invoke(
            main, ["table", "--f", "2", "--basis", "monomial", "--format", "csv"]
        )
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == 'kappa,m[2],"m[1,1]",chi'
        assert lines[1] == "2,3,2,1"
        assert lines[2] == '"1,1",0,2,2'

    def test_json_round_trip_idempotent(self, runner):
        result = runner.invoke(main, ["table", "--f", "3", "--format", "json"])
        assert result.exit_code == 0
        assert _emit_json(json.loads(result.output)) == result.output

    def test_latex_format(self, runner):
        result = runner.invoke(main, ["table", "--f", "2", "--format", "latex"])
        assert result.exit_code == 0
        assert result.output.startswith(r"\begin{tabular}")
        assert r"\end{tabular}" in result.output

    def test_ceiling_is_usage_error(self, runner):
        assert runner.invoke(main, ["table", "--f", "13"]).exit_code == 2
        assert runner.invoke(main, ["table", "--f", "0"]).exit_code == 2

    def test_unknown_format_is_usage_error(self, runner):
        result = runner.invoke(main, ["table", "--f", "2", "--format", "yaml"])
        assert result.exit_code == 2

    def test_deterministic_output(self, runner):
        first = runner.invoke(main, ["table", "--f", "4", "--format", "json"]).output
        second = runner.invoke(main, ["table", "--f", "4", "--format", "json"]).output
        assert first == second


class TestVerify:
    def test_full_range_passes(self, runner):
        result = runner.invoke(main, ["verify", "--f", "1..6"])
        assert result.exit_code == 0
        assert "FAIL" not in result.output
        assert "f=6 golden rows: ok (11 rows)" in result.output

    def test_single_degree(self, runner):
        result = runner.invoke(main, ["verify", "--f", "1"])
        assert result.exit_code == 0

    def test_degree_without_reference_still_checked(self, runner):
        result = runner.invoke(main, ["verify", "--f", "7"])
        assert result.exit_code == 0
        assert "f=7 trace identity: ok" in result.output
        assert "golden rows" not in result.output

    def test_corrupted_reference_names_bad_row(self, runner, monkeypatch):
        corrupted = {k: dict(v) for k, v in GOLDEN_POWERSUM_ROWS[2].items()}
        corrupted[(2,)] = {(1, 1): 1, (2,): 99}
        monkeypatch.setitem(GOLDEN_POWERSUM_ROWS, 2, corrupted)
        result = runner.invoke(main, ["verify", "--f", "2"])
        assert result.exit_code == 1
        assert "FAIL f=2 golden rows" in result.output
        assert "2" in result.output

    def test_bad_range_is_usage_error(self, runner):
        assert runner.invoke(main, ["verify", "--f", "x..y"]).exit_code == 2
        assert runner.invoke(main, ["verify", "--f", "0..2"]).exit_code == 2


class TestEstimate:
    def test_trace_power_first_moment(self, runner):
        result = runner.invoke(
            main,
            [
                "estimate", "trace-power",
                "--f", "1", "--A", "1,2", "--B", "3,1",
                "--samples", "20000", "--seed", "7",
            ],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["exact"] == "6"
        assert abs(float(payload["z_score"])) <= 4
        assert payload["samples"] == 20000

    def test_trace_power_zeroth_moment(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "trace-power", "--f", "0", "--A", "1,2", "--B", "3,1",
             "--samples", "100", "--seed", "0"],
        )
        payload = json.loads(result.output)
        assert payload["exact"] == "1"
        assert float(payload["std_err"]) == 0.0

    def test_zonal_split(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "zonal-split", "--kappa", "2", "--A", "1,2", "--B", "3,1",
             "--samples", "20000", "--seed", "3"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        # Z_(2)(1,2) * Z_(2)(3,1) / Z_(2)(I_2) = 19 * 36 / 8
        assert payload["exact"] == "171/2"
        assert abs(float(payload["z_score"])) <= 4

    def test_trace_ah(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "trace-AH", "--f", "4", "--A", "1,2",
             "--samples", "20000", "--seed", "3"],
        )
        payload = json.loads(result.output)
        assert payload["exact"] == "123/8"
        assert abs(float(payload["z_score"])) <= 4

    def test_exp_series(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "exp-series", "--A", "1,2", "--B", "1,3",
             "--max-degree", "12", "--samples", "50000", "--seed", "5"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        estimate = float(payload["estimate"])
        exact = float(payload["exact"])
        assert abs(exact - estimate) / estimate < 0.02
        assert "tail_bound" in payload

    def test_rational_eigenvalues_accepted(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "trace-power", "--f", "1", "--A", "1/2,2", "--B", "3,1",
             "--samples", "1000", "--seed", "0"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["exact"] == "5"

    def test_deterministic_given_seed(self, runner):
        args = ["estimate", "trace-power", "--f", "2", "--A", "1,2", "--B", "3,1",
                "--samples", "5000", "--seed", "11", "--threads", "2"]
        assert runner.invoke(main, args).output == runner.invoke(main, args).output

    def test_eigenvalue_count_mismatch_is_usage_error(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "trace-power", "--f", "1", "--A", "1,2", "--B", "3",
             "--samples", "100"],
        )
        assert result.exit_code == 2

    def test_kappa_longer_than_dimension_is_usage_error(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "zonal-split", "--kappa", "1,1,1", "--A", "1,2", "--B", "3,1",
             "--samples", "100"],
        )
        assert result.exit_code == 2

    def test_too_few_samples_is_usage_error(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "trace-power", "--f", "1", "--A", "1", "--B", "1",
             "--samples", "1"],
        )
        assert result.exit_code == 2

    def test_bad_eigenvalue_list_is_usage_error(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "trace-power", "--f", "1", "--A", "1,x", "--B", "1,2",
             "--samples", "100"],
        )
        assert result.exit_code == 2

    def test_unknown_kind_is_usage_error(self, runner):
        result = runner.invoke(main, ["estimate", "bogus", "--A", "1"])
        assert result.exit_code == 2


class TestDimensionFlag:
    def test_matching_dimension_accepted(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "trace-power", "--f", "1", "--n", "2", "--A", "1,2",
             "--B", "3,1", "--samples", "100", "--seed", "0"],
        )
        assert result.exit_code == 0

    def test_mismatched_dimension_is_usage_error(self, runner):
        result = runner.invoke(
            main,
            ["estimate", "trace-power", "--f", "1", "--n", "3", "--A", "1,2",
             "--B", "3,1", "--samples", "100"],
        )
        assert result.exit_code == 2
