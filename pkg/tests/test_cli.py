import json
import subprocess
import sys

import pytest

from spinorlab import cli
from spinorlab.cli import Certificate, RunOptions, dump_certificates, main, run_check

SCHEMA_KEYS = {"check", "status", "witness", "elapsed_ms", "data_version"}


def test_group_order_command(capsys):
    assert main(["group-order"]) == 0
    assert capsys.readouterr().out.strip() == "46080"


def test_theta_command(capsys):
    assert main(["theta", "--a", "1,0,0,0"]) == 0
    out = capsys.readouterr().out.split()
    assert out[2::3] == ["0", "0", "2/3", "0", "-1/3"]


def test_kummer_command(capsys):
    assert main(["kummer", "--a", "1,2,3,5"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "A = 979200"


def test_gaussian_input_is_accepted(capsys):
    assert main(["theta", "--a", "1+1/2i,2,-3/4,0"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["theta", "--a", "0.5,1,2,3"],
        ["theta", "--a", "1,2,3"],
        ["kummer", "--a", "a,b,c,d"],
        ["joubert", "--pentad", "7", "--a", "1,2,3,5"],
        ["verify", "no-such-suite"],
        ["no-such-command"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2


def test_unknown_preset_is_a_usage_error(capsys):
    assert main(["verify", "smoothness", "--preset", "codim9-9"]) == 2
    assert "unknown preset" in capsys.readouterr().err


def test_single_preset_passes(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["verify", "smoothness", "--preset", "nil-n0", "--json", str(out)]) == 0
    (cert,) = json.loads(out.read_text())
    assert cert["check"] == "smoothness.nil-n0" and cert["status"] == "pass"
    assert cert["witness"]["smooth"] is False


def test_failing_check_gives_exit_one(monkeypatch, tmp_path, capsys):
    suites = dict(cli.SUITES)
    suites["cartan"] = suites["cartan"] + (("cartan.always_false", lambda _: (False, {"why": "injected"})),)
    monkeypatch.setattr(cli, "SUITES", suites)
    out = tmp_path / "c.json"
    assert main(["verify", "cartan", "--json", str(out)]) == 1
    statuses = [c["status"] for c in json.loads(out.read_text())]
    assert statuses == ["pass", "pass", "fail"]


def test_crashing_check_is_recorded_as_fail():
    def boom(_):
        raise RuntimeError("kaput")

    cert = run_check("x.boom", boom, RunOptions())
    assert cert.status == "fail" and "kaput" in cert.witness["error"]


def test_certificate_schema_and_constants(tmp_path):
    out = tmp_path / "c.json"
    assert main(["verify", "binaryforms", "--json", str(out), "--quiet"]) == 0
    certs = json.loads(out.read_text())
    assert certs
    for c in certs:
        assert set(c) == SCHEMA_KEYS
        assert c["status"] in ("pass", "fail", "skipped")
        assert isinstance(c["elapsed_ms"], int)
        consts = c["witness"]["constants"]
        assert consts["theta_constant"] == "-1" and consts["pairing_convention"] == "calibrated"


def test_status_is_validated():
    with pytest.raises(ValueError):
        Certificate("x", "maybe", {})


def test_json_is_byte_identical_across_processes(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        proc = subprocess.run(
            [sys.executable, "-m", "spinorlab.cli", "verify", "smoothness", "--seed", "3", "--json", str(p)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stdout + proc.stderr
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_seed_changes_the_sample():
    a = cli.random_points_off_special_lines(0)
    b = cli.random_points_off_special_lines(1)
    assert a != b and a == cli.random_points_off_special_lines(0)


def test_section_file_round_trip(tmp_path):
    from spinorlab.cartan import preset_section

    path = tmp_path / "section.json"
    records = preset_section("nil-n1").to_records()
    path.write_text(json.dumps(records))
    certs, code = cli.run_suite("smoothness", RunOptions(section_file=str(path)))
    assert code == 0 and certs[0].witness["smooth"] is True


def test_dump_sorts_keys():
    text = dump_certificates([Certificate("b", "pass", {"z": 1, "a": 2})])
    assert text.index('"a"') < text.index('"z"') and text.endswith("\n")
