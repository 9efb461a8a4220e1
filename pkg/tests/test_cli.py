from __future__ import annotations

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from dashforge.cli import main
from dashforge.model import parse_model

OVERLAPPING = """
{"id":"d","name":"D","theme":"light","pages":[{"id":"0","name":"P","widgets":[
  {"id":"a","properties":{"vistype":"line"},"layout":{"w":2,"h":2,"x":0,"y":0}},
  {"id":"b","properties":{"vistype":"line"},"layout":{"w":2,"h":2,"x":0,"y":0}}
]}]}
"""


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def sample_path(tmp_path, sample_text):
    path = tmp_path / "sample.json"
    path.write_text(sample_text, encoding="utf-8")
    return str(path)


class TestValidate:
    def test_valid_file_is_silent(self, runner, sample_path):
        result = runner.invoke(main, ["validate", sample_path])
        assert result.exit_code == 0
        assert result.stderr == ""

    def test_overlap_reported_one_line(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(OVERLAPPING)
        result = runner.invoke(main, ["validate", str(path)])
        assert result.exit_code == 1
        lines = [l for l in result.stderr.splitlines() if l]
        assert len(lines) == 1
        assert lines[0].startswith("OVERLAP pages[0].widgets[1].layout ")

    def test_missing_file_is_usage_error(self, runner):
        result = runner.invoke(main, ["validate", "/nonexistent/m.json"])
        assert result.exit_code == 2

    def test_unparseable_file(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{nope")
        result = runner.invoke(main, ["validate", str(path)])
        assert result.exit_code == 1
        assert result.stderr.startswith("PARSE")


class TestRender:
    def test_writes_page_html(self, runner, sample_path, tmp_path):
        out = tmp_path / "page.html"
        result = runner.invoke(main, ["render", sample_path, "-o", str(out)])
        assert result.exit_code == 0
        html = out.read_text(encoding="utf-8")
        assert "Sample Pie Widget" in html

    def test_same_invocation_twice_is_identical(self, runner, sample_path, tmp_path):
        a, b = tmp_path / "a.html", tmp_path / "b.html"
        assert runner.invoke(main, ["render", sample_path, "-o", str(a), "--seed", "7"]).exit_code == 0
        assert runner.invoke(main, ["render", sample_path, "-o", str(b), "--seed", "7"]).exit_code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_unknown_page_is_usage_error(self, runner, sample_path, tmp_path):
        result = runner.invoke(
            main, ["render", sample_path, "-o", str(tmp_path / "x.html"), "--page", "9"],
        )
        assert result.exit_code == 2

    def test_pure_mode(self, runner, sample_path, tmp_path):
        out = tmp_path / "p.html"
        runner.invoke(main, ["render", sample_path, "-o", str(out), "--mode", "pure"])
        assert "<nav" not in out.read_text()

    def test_invalid_model_exits_one(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(OVERLAPPING)
        result = runner.invoke(main, ["render", str(path), "-o", str(tmp_path / "x.html")])
        assert result.exit_code == 1


class TestEdit:
    def test_scripted_edits(self, runner, sample_path, tmp_path):
        script = tmp_path / "edits.json"
        script.write_text(json.dumps([
            {"kind": "setTheme", "payload": {"theme": "dark"}},
            {"kind": "newWidget", "target": "0",
             "payload": {"vistype": "bar", "id": "added"}},
        ]))
        out = tmp_path / "edited.json"
        result = runner.invoke(
            main, ["edit", sample_path, "--script", str(script), "-o", str(out)],
        )
        assert result.exit_code == 0
        model = parse_model(out.read_text())
        assert model.theme.value == "dark"
        assert model.revision == 2
        assert model.find_widget("added") is not None

    def test_failing_script_reports_index(self, runner, sample_path, tmp_path):
        script = tmp_path / "edits.json"
        script.write_text(json.dumps([
            {"kind": "renameWidget", "target": "missing", "payload": {"name": "X"}},
        ]))
        out = tmp_path / "edited.json"
        result = runner.invoke(
            main, ["edit", sample_path, "--script", str(script), "-o", str(out)],
        )
        assert result.exit_code == 1
        assert "command 0" in result.stderr
        assert not out.exists()


class TestDiff:
    def test_identity_rates(self, runner, sample_path):
        result = runner.invoke(main, ["diff", sample_path, sample_path])
        assert result.exit_code == 0
        assert result.output.count("rate 1.0000") == 3

    def test_degraded_interaction_rate(self, runner, sample_path, tmp_path, sample_text):
        replica = tmp_path / "replica.json"
        stripped = sample_text.replace(
            '"interactions": [\n                            "Detail on demand"\n                        ]',
            '"interactions": []',
        )
        assert stripped != sample_text
        replica.write_text(stripped)
        result = runner.invoke(
            main, ["diff", sample_path, str(replica), "--format", "json"],
        )
        report = json.loads(result.output)
        assert report["interaction"]["rate"] == 0.0
        assert report["major"]["rate"] == 1.0
        assert report["minor"]["rate"] == 1.0

    def test_invalid_input_exits_one(self, runner, sample_path, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(OVERLAPPING)
        result = runner.invoke(main, ["diff", sample_path, str(bad)])
        assert result.exit_code == 1

    def test_json_round_trips(self, runner, sample_path):
        result = runner.invoke(main, ["diff", sample_path, sample_path, "--format", "json"])
        report = json.loads(result.output)
        assert set(report) == {"major", "minor", "interaction"}


class TestNewAndGenData:
    def test_new_scaffold_validates(self, runner, tmp_path):
        out = tmp_path / "fresh.json"
        result = runner.invoke(main, ["new", "-o", str(out)])
        assert result.exit_code == 0
        check = runner.invoke(main, ["validate", str(out)])
        assert check.exit_code == 0

    def test_gen_data_deterministic(self, runner, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["gen-data", "--seed", "11", "--kind", "timeSeries", "--n", "50"]
        assert runner.invoke(main, args + ["-o", str(a)]).exit_code == 0
        assert runner.invoke(main, args + ["-o", str(b)]).exit_code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_gen_data_bad_range(self, runner, tmp_path):
        result = runner.invoke(main, [
            "gen-data", "--seed", "1", "--kind", "categorical", "--n", "3",
            "--lo", "5", "--hi", "4", "-o", str(tmp_path / "x.json"),
        ])
        assert result.exit_code == 2

    def test_usage_error_on_unknown_flag(self, runner):
        assert runner.invoke(main, ["gen-data", "--bogus"]).exit_code == 2
