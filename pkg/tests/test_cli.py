"""Command-line interface: documented commands, formats, exit codes."""

import json

from apobern.cli import build_parser, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_numbers_symbolic_text(capsys):
    code, out, err = run_cli(
        capsys,
        "numbers",
        "--family",
        "apostol-bernoulli",
        "--k",
        "1",
        "--n",
        "2",
        "--lambda",
        "symbolic",
        "--format",
        "text",
    )
    assert code == 0 and not err
    lines = out.splitlines()
    assert lines[1] == "B_0 = 0"
    assert lines[2] == "B_1 = 1/(λ-1)"
    assert lines[3] == "B_2 = -2λ/(λ-1)^2"


def test_numbers_json_machine_symbol(capsys):
    code, out, _ = run_cli(
        capsys, "numbers", "--k", "1", "--n", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["values"][2]["value"] == "-2L/(L-1)^2"


def test_numbers_classical_families(capsys):
    code, out, _ = run_cli(
        capsys, "numbers", "--family", "bernoulli", "--n", "4", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[-1] == "bernoulli,1,1,4,-1/30"
    code, out, _ = run_cli(
        capsys, "numbers", "--family", "euler", "--n", "4", "--format", "text"
    )
    assert code == 0
    assert out.splitlines()[-1] == "E_4 = 5"


def test_poly_monomial_case(capsys):
    code, out, _ = run_cli(
        capsys, "poly", "--family", "apostol-bernoulli", "--k", "0", "--n", "3",
        "--lambda", "2",
    )
    assert code == 0
    assert out == "x^3\n"


def test_poly_json(capsys):
    code, out, _ = run_cli(
        capsys, "poly", "--k", "1", "--n", "1", "--lambda", "1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["poly"] == "x - 1/2"
    assert payload["coefficients"] == ["-1/2", "1"]


def test_expand_three_way(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--coeffs", "0,1", "--k", "1", "--lambda", "symbolic",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["methods"]["oracle"]["exact"] is True
    assert payload["methods"]["oracle"]["coefficients"] == ["L", "L/2-1/2"]
    assert payload["methods"]["closed-form"]["exact"] is False
    assert payload["methods"]["closed-form"]["reconstruction"] == "-L/(L-1)"
    assert payload["methods"]["corrected"]["exact"] is True


def test_expand_corrected_unsupported_at_one(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--coeffs", "0,1", "--k", "1", "--lambda", "1",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["methods"]["corrected"] == {"supported": False}
    assert payload["methods"]["oracle"]["exact"] is True


def test_verify_subset_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--ids", "ID_HANSEN", "--max-m", "6", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["identity"] == "ID_HANSEN"
    assert payload[0]["summary"]["fail"] == 0
    assert all(r["verdict"] == "pass" for r in payload[0]["results"])


def test_verify_expectation_mismatch_exits_1(capsys, tmp_path):
    bad = tmp_path / "expect.json"
    bad.write_text(
        json.dumps(
            [{"identity": "ID_EULER_RAMANUJAN", "grid": [], "results": [], "summary": {}}]
        )
    )
    code, _, err = run_cli(
        capsys, "verify", "--ids", "ID_EULER_RAMANUJAN", "--expect", str(bad),
        "--format", "csv",
    )
    assert code == 1
    assert "expectation mismatch" in err


def test_verify_write_expect_and_recheck(capsys, tmp_path):
    target = tmp_path / "observed.json"
    code, _, _ = run_cli(
        capsys, "verify", "--ids", "ID_EULER_RAMANUJAN", "--write-expect", str(target),
        "--format", "csv",
    )
    assert code == 0
    code, _, err = run_cli(
        capsys, "verify", "--ids", "ID_EULER_RAMANUJAN", "--expect", str(target),
        "--format", "csv",
    )
    assert code == 0 and "mismatch" not in err


def test_output_file(capsys, tmp_path):
    out_file = tmp_path / "table.json"
    code, out, _ = run_cli(
        capsys, "numbers", "--n", "2", "--format", "json", "--output", str(out_file)
    )
    assert code == 0 and out == ""
    payload = json.loads(out_file.read_text(encoding="utf-8"))
    assert payload["k"] == 1


def test_byte_identical_output(capsys):
    commands = [
        ("verify", "--ids", "ID_THM1", "--format", "json"),
        ("numbers", "--k", "2", "--n", "5", "--format", "json"),
        ("poly", "--k", "2", "--n", "5", "--lambda", "1/3", "--format", "csv"),
        ("expand", "--coeffs", "1/2,0,3", "--k", "2", "--format", "text"),
    ]
    for argv in commands:
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second, argv


def test_console_entry_point_subprocess():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-m", "apobern", "poly", "--family", "apostol-bernoulli",
         "--k", "0", "--n", "3", "--lambda", "2"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert out.stdout == "x^3\n"


def test_usage_errors_exit_2(capsys):
    assert run_cli(capsys, "numbers", "--n", "2", "--lambda", "nonsense")[0] == 2
    assert run_cli(capsys, "numbers", "--family", "apostol-euler", "--n", "2",
                   "--lambda", "-1")[0] == 2
    assert run_cli(capsys, "verify", "--ids", "ID_NOPE")[0] == 2
    assert run_cli(capsys, "expand", "--coeffs", "1,,2")[0] == 2
    assert run_cli(capsys, "numbers", "--n", "2", "--bogus-flag")[0] == 2
    assert run_cli(capsys, "numbers", "--n", "-3")[0] == 2


def test_pole_diagnostic_is_one_line(capsys):
    code, _, err = run_cli(
        capsys, "numbers", "--family", "apostol-euler", "--n", "2", "--lambda", "-1"
    )
    assert code == 2
    assert err.strip().count("\n") == 0
    assert "pole" in err


def test_help_lists_documented_flags():
    parser = build_parser()
    sub_actions = next(
        a for a in parser._actions if isinstance(a, type(parser._actions[-1]))
        and hasattr(a, "choices") and a.choices
    )
    documented = {
        "numbers": {"--family", "--k", "--n", "--lambda", "--format", "--output"},
        "poly": {"--family", "--k", "--n", "--lambda", "--format", "--output"},
        "expand": {"--coeffs", "--k", "--lambda", "--format", "--output"},
        "verify": {
            "--ids", "--max-n", "--max-m", "--max-k", "--expect",
            "--write-expect", "--format", "--output",
        },
    }
    for name, flags in documented.items():
        sub = sub_actions.choices[name]
        help_text = sub.format_help()
        advertised = {
            opt
            for action in sub._actions
            for opt in action.option_strings
            if opt.startswith("--")
        }
        assert advertised == flags | {"--help"}
        for flag in flags:
            assert flag in help_text
