"""End-to-end tests of the command-line interface."""

import json

from click.testing import CliRunner

from stablekron.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def run_ok(*args):
    result = run(*args)
    assert result.exit_code == 0, result.output + str(result.exception)
    return result


class TestCoeff:
    def test_golden_values(self):
        assert run_ok("coeff", "6,2", "7,4", "2,2,1").output.strip() == "11"
        assert run_ok("coeff", "6,1", "4,3", "1,1,1").output.strip() == "1"
        assert run_ok("coeff", "0", "0", "0").output.strip() == "1"

    def test_json_record(self):
        result = run_ok("coeff", "6,2", "7,4", "2,2,1", "--emit", "json")
        record = json.loads(result.output)
        assert record["value"] == "11"
        assert record["source"] == "tableaux"
        assert record["copieri"] is True

    def test_parse_error_exit_2(self):
        assert run("coeff", "2,3", "4", "4").exit_code == 2
        assert run("coeff", "a", "4", "4").exit_code == 2

    def test_not_applicable_exit_3(self):
        assert run("coeff", "3", "2,1", "2,1").exit_code == 3

    def test_fallback_oracle(self):
        result = run_ok("coeff", "3", "2,1", "2,1", "--fallback-oracle",
                        "--emit", "json")
        record = json.loads(result.output)
        assert record["source"] == "oracle"
        assert record["value"] == "5"

    def test_verbose_text(self):
        out = run_ok("coeff", "6,1", "4,3", "2,1", "--verbose").output
        assert "value: 4" in out
        assert "source: tableaux" in out


class TestTableaux:
    def test_json_schema(self):
        result = run_ok("tableaux", "4,2", "5,3,1", "2,1", "--emit", "json")
        record = json.loads(result.output)
        assert record["lambda"] == [4, 2]
        assert record["nu"] == [5, 3, 1]
        assert record["mu"] == [2, 1]
        assert record["maximal_depth"] is True
        assert record["sstd"] == "3" and record["latt"] == "2"
        classes = record["classes"]
        assert len(classes) == 3
        for entry in classes:
            assert set(entry) == {"word_steps", "word_frames",
                                  "semistandard", "lattice", "size"}
            assert entry["size"] == 2
        assert sum(e["lattice"] for e in classes) == 2

    def test_empty_below_skew_bound(self):
        result = run_ok("tableaux", "4,2", "5,3,1", "1", "--emit", "json")
        assert json.loads(result.output)["classes"] == []

    def test_one_row_listing(self):
        result = run_ok("tableaux", "7", "6", "6", "--emit", "json")
        assert len(json.loads(result.output)["classes"]) == 3


class TestClassify:
    def test_tsv(self):
        result = run_ok("classify", "6,2", "7,4", "2,2", "--emit", "tsv")
        header, row = result.output.strip().split("\n")
        record = dict(zip(header.split("\t"), row.split("\t")))
        assert record["copieri"] == "True"
        assert record["maximal_depth"] == "False"
        assert record["skew_sizes"] == "[0, 3]"


class TestOracle:
    def test_value_and_onset(self):
        result = run_ok("oracle", "6,1", "4,3", "2,1", "--emit", "json")
        record = json.loads(result.output)
        assert record == {"value": "4", "onset_n": 17, "capped": False}

    def test_capped(self):
        result = run_ok("oracle", "3,2", "4,1", "2,2,1", "--n-cap", "9",
                        "--emit", "json")
        assert json.loads(result.output)["capped"] is True

    def test_report_onset_text(self):
        out = run_ok("oracle", "6,1", "4,3", "2,1", "--report-onset").output
        assert out.splitlines() == ["4", "onset_n: 17"]


class TestLr:
    def test_value(self):
        assert run_ok("lr", "4,2", "5,3,1", "2,1").output.strip() == "2"

    def test_shape_mismatch_exit_2(self):
        assert run("lr", "4,2", "3,1", "2").exit_code == 2


class TestVerify:
    def test_small_bounds_pass(self):
        result = run_ok("verify", "--max-size", "2", "--max-s", "2",
                        "--emit", "json")
        record = json.loads(result.output)
        assert record["failures"] == []
        assert record["checks"] > 0

    def test_vacuous_bounds_pass(self):
        assert run("verify", "--max-size", "0", "--max-s", "0").exit_code == 0


class TestDeterminism:
    def test_byte_stable_output(self):
        for args in [("coeff", "6,2", "7,4", "2,2,1", "--emit", "json"),
                     ("tableaux", "7", "6", "3,2,1", "--emit", "json"),
                     ("classify", "2,1", "3,3,2", "2,2,1", "--emit", "tsv")]:
            assert run_ok(*args).output == run_ok(*args).output
