import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from yangslice.cli import main
from yangslice.suite import GROUPS, ReportRecord, emit_report, parse_config, parse_report

SMALL = """\
cartan: A1
seed: 3
cases:
  - lambda: [2]
    mu: [0]
    R: [["0", "1/2"]]
caps:
  superscript: 2
"""


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def go(*args, config=SMALL, stdin=None):
        path = tmp_path / "run.yaml"
        path.write_text(config)
        argv = [a.replace("@CFG", str(path)) for a in args]
        return runner.invoke(main, argv, input=stdin)

    return go


def test_relations_pass(run):
    res = run("verify", "relations", "--config", "@CFG")
    assert res.exit_code == 0, res.output
    header = res.stdout.splitlines()[0]
    assert " 0 fail" in header and res.stdout.count("PASS") >= 1


def test_mutation_fixture_fails_with_witness(run):
    res = run("verify", "relations", "--config", "@CFG", config=SMALL + "mutation: corrupt_e_sign\n")
    assert res.exit_code == 1
    fails = [line for line in res.stdout.splitlines() if line.startswith("FAIL")]
    assert fails and all("witness:" in line for line in fails)


@pytest.mark.parametrize(
    "config, fragment",
    [
        (SMALL.replace("mu: [0]", "mu: [4]"), "cases[0].mu"),
        (SMALL.replace("seed: 3\n", ""), "seed: missing"),
        (SMALL.replace('"1/2"', "0.5"), "cases[0].R[0][1]"),
        (SMALL.replace("A1", "Q7"), "cartan"),
        (SMALL + "colour: red\n", "colour: unknown key"),
        (SMALL.replace("superscript: 2", "superscript: -1"), "caps.superscript"),
    ],
)
def test_configuration_errors_exit_2(run, config, fragment):
    res = run("verify", "relations", "--config", "@CFG", config=config)
    assert res.exit_code == 2
    assert "configuration error" in res.stderr and fragment in res.stderr


def test_missing_config_file_exits_2():
    res = CliRunner().invoke(main, ["verify", "relations", "--config", "/nonexistent/run.yaml"])
    assert res.exit_code == 2


def test_seed_override_does_not_need_config_seed():
    cfg = parse_config(SMALL.replace("seed: 3\n", ""), seed_override=11)
    assert cfg.seed == 11


def test_structured_output_is_deterministic_and_round_trips(run):
    first = run("verify", "truncation", "--config", "@CFG", "--format", "structured")
    second = run("verify", "truncation", "--config", "@CFG", "--format", "structured", "--jobs", "2")
    assert first.exit_code == second.exit_code == 0
    assert first.stdout_bytes == second.stdout_bytes
    doc = json.loads(first.stdout_bytes)
    assert doc["schema"] == "yangslice-report/1"
    assert all(r["millis"] is None for r in doc["records"])
    again = run("report", "--format", "structured", stdin=first.stdout_bytes)
    assert again.exit_code == 0 and again.stdout_bytes == first.stdout_bytes


def test_report_exit_status_tracks_failures(run):
    bad = emit_report([ReportRecord("x", "c", {}, "fail", "w")], "structured")
    assert run("report", stdin=bad).exit_code == 1
    assert run("report", stdin=b"{not json").exit_code == 2


def test_empty_report_is_header_only():
    assert emit_report([], "text") == b"0 checks: 0 pass, 0 fail, 0 oracle-relative-pass, 0 skipped\n"


def test_single_record_renders_one_line():
    rec = ReportRecord("EF[1,1]", "GKLO relations", {"lambda": [2]}, "pass", millis=4)
    lines = emit_report([rec], "text").decode().splitlines()
    assert len(lines) == 2 and "EF[1,1]" in lines[1] and "[GKLO relations]" in lines[1]
    assert "4 ms" in lines[1]
    assert "ms" not in emit_report([rec], "text", timings=False).decode()


def test_failed_record_always_has_witness():
    assert ReportRecord("x", "c", {}, "fail").witness


def test_structured_parse_rejects_other_schema():
    with pytest.raises(ValueError):
        parse_report(b'{"schema": "other", "records": []}')


def test_list_checks(run):
    res = run("list-checks")
    assert res.exit_code == 0
    assert [line.split()[0] for line in res.stdout.splitlines()] == list(GROUPS)


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "yangslice.cli", "list-checks"], capture_output=True, text=True)
    assert res.returncode == 0 and "relations" in res.stdout
