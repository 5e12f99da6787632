"""The command line: reports, formats, exit codes, determinism."""

import json
import os

from conductor.cli import run

SAMPLES = os.path.join(os.path.dirname(__file__), "..", "sample_inputs")


def sample(name):
    return os.path.join(SAMPLES, name)


def run_capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_iwasawa_worked_case(capsys):
    code, out = run_capture(
        capsys, ["iwasawa", "--h", sample("c7.json"), "--alpha", sample("sq.json"), "--p", "3"]
    )
    assert code == 0
    payload = json.loads(out)
    comps = sorted(
        (c["w"], c["field"]["e"], c["field"]["f"], c["total_valuation"])
        for c in payload["components"]
    )
    assert comps == [(1, 1, 1, 0), (3, 1, 2, 0)]
    assert payload["r_cap_exponent"] == 0


def test_finite_prime_to_order(capsys):
    code, out = run_capture(
        capsys, ["finite", "--group", sample("s3.json"), "--p", "7"]
    )
    assert code == 0
    payload = json.loads(out)
    assert all(c["valuation"] == 0 for c in payload["components"])


def test_finite_with_base_field(capsys, tmp_path):
    field = tmp_path / "base.json"
    field.write_text(json.dumps({"p": 3, "m": 3, "stab_gens": []}))
    code, out = run_capture(
        capsys,
        ["finite", "--group", sample("s3.json"), "--p", "3", "--base", str(field)],
    )
    assert code == 0
    assert json.loads(out)["base"]["m"] == 3


def test_chartab_table_format(capsys):
    code, out = run_capture(
        capsys, ["chartab", "--group", sample("s3.json"), "--format", "table"]
    )
    assert code == 0
    assert "chi" in out.splitlines()[0]


def test_verify_suite_passes(capsys):
    code, out = run_capture(capsys, ["verify", "--suite", "exponents"])
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and all(c["ok"] for c in payload["checks"])


def test_fitting_verdict(capsys):
    code, out = run_capture(
        capsys,
        [
            "fitting",
            "--group",
            sample("s3.json"),
            "--p",
            "3",
            "--matrix",
            sample("times3.json"),
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["annihilates"]
    assert payload["fitting"]["generators"][0]["rows"] == [0]


def test_iwasawa_level_checks(capsys):
    code, out = run_capture(
        capsys,
        [
            "iwasawa",
            "--h",
            sample("c7.json"),
            "--alpha",
            sample("sq.json"),
            "--p",
            "3",
            "--level",
            "1",
        ],
    )
    assert code == 0
    checks = json.loads(out)["level_checks"]
    assert checks == {"level": 1, "trace_lemma": True, "dual_basis": True, "degrees": True}


def test_missing_file_is_input_error(capsys):
    assert run(["finite", "--group", "/no/such.json", "--p", "3"]) == 2


def test_bad_json_is_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(["finite", "--group", str(bad), "--p", "3"]) == 2


def test_bad_prime_is_input_error(capsys):
    assert run(["finite", "--group", sample("s3.json"), "--p", "4"]) == 2


def test_bad_precision_env(capsys, monkeypatch):
    monkeypatch.setenv("CONDUCTOR_PRECISION", "zero")
    assert run(["verify", "--suite", "exponents"]) == 2


def test_output_is_deterministic(capsys):
    argv = ["finite", "--group", sample("s3.json"), "--p", "3"]
    _, first = run_capture(capsys, argv)
    _, second = run_capture(capsys, argv)
    assert first == second


def test_round_trip_property(capsys):
    _, out = run_capture(
        capsys, ["finite", "--group", sample("s3.json"), "--p", "3"]
    )
    payload = json.loads(out)
    from conductor.jsonio import dump_json

    assert json.loads(dump_json(payload)) == payload


def test_table_view_of_verify(capsys):
    code, out = run_capture(
        capsys, ["verify", "--suite", "exponents", "--format", "table"]
    )
    assert code == 0
    assert out.startswith("suite exponents: PASS")
