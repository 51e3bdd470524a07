# pylint: disable=redefined-outer-name

"""
Tests the pingpong-units command line present in PingPongUnits.cli
"""


import json

import click.testing
import pytest

import PingPongUnits.cli
import PingPongUnits.document


@pytest.fixture
def runner(tmp_path, monkeypatch):
    """
    A CLI runner inside an empty working and home directory.
    """
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("HOME", str(tmp_path))
    return click.testing.CliRunner()


def invoke(runner, *args):
    return runner.invoke(PingPongUnits.cli.entry_point, list(args))


def test_pell(runner):
    """
    Ensures the fundamental unit line for d = 7.
    """
    result = invoke(runner, "pell", "--d", "7")

    assert result.exit_code == 0, result.output
    assert "d=7 x=8 y=3 norm=+1 period=4 cf=[2; 1,1,1,4]" in result.output


def test_pell_range(runner):
    """
    Ensures one line per square-free d up to the bound.
    """
    result = invoke(runner, "pell", "--d-max", "10")

    assert result.exit_code == 0, result.output
    assert [line.split()[0] for line in result.output.splitlines()] == [
        "d=2",
        "d=3",
        "d=5",
        "d=6",
        "d=7",
        "d=10",
    ]


@pytest.mark.parametrize(
    "args",
    [
        ("pell", "--d", "8"),
        ("pell",),
        ("units", "--d", "2", "--family", "pell4"),
        ("units", "--d", "7", "--family", "gauss"),
        ("certify", "semigroup", "--d", "2", "--w-kind", "w3"),
        ("certify", "group", "--d", "3", "--w-kind", "w2"),
        ("certify", "group", "--d", "2", "--corollary"),
        ("certify", "group"),
        ("oracle", "--d", "7", "--n", "0"),
    ],
)
def test_invalid_input_exit_code(runner, args):
    """
    Ensures that invalid input exits with code 2.
    """
    result = invoke(runner, *args)

    assert result.exit_code == 2, result.output


def test_units_gauss(runner):
    """
    Ensures the Gauss unit of d = 7 and m = 2.
    """
    result = invoke(runner, "units", "--d", "7", "--family", "gauss", "--m", "2", "--sign", "1")

    assert result.exit_code == 0, result.output
    assert result.output.startswith("gauss: 2*sqrt(-7) + 2*i + 3*j + 4*k")


def test_units_default_family(runner):
    """
    Ensures that the default family lists u, w1, w2 and w3.
    """
    result = invoke(runner, "units", "--d", "3")

    assert result.exit_code == 0, result.output
    assert [line.split(":")[0] for line in result.output.splitlines()] == ["u", "w1", "w2", "w3"]
    assert "u: 2 + sqrt(-3)*i" in result.output


def test_certify_group_theorem_one(runner):
    """
    Ensures that the d = 1 maps pass.
    """
    result = invoke(runner, "certify", "group", "--theorem1")

    assert result.exit_code == 0, result.output
    assert result.output.startswith("certificate theorem1 d=1: PASS")
    assert "oracle: skipped" in result.output


def test_certify_group_with_oracle(runner):
    """
    Ensures that d = 3 with W1 passes and the oracle finds no relation.
    """
    result = invoke(runner, "certify", "group", "--d", "3", "--w-kind", "w1", "--L", "4")

    assert result.exit_code == 0, result.output
    assert result.output.startswith("certificate w1 d=3: PASS")
    assert "no relation found" in result.output
    assert "[FAIL]" not in result.output


def test_certify_group_d2_fails_with_hint(runner):
    """
    Ensures that (u, w) at d = 2 fails with exit code 1 and a hint.
    """
    result = invoke(runner, "certify", "group", "--d", "2", "--w-kind", "w1")

    assert result.exit_code == 1, result.output
    assert "certificate corollary d=2: FAIL" in result.output
    assert "--d2special" in result.output


def test_certify_group_d2special_powers(runner):
    """
    Ensures that the d = 2 special pair passes and decides n = 2 and n = 3.
    """
    result = invoke(runner, "certify", "group", "--d2special", "--n", "2", "--no-oracle")

    assert result.exit_code == 0, result.output
    assert "powers n=2: free" in result.output

    # u^3 contracts harder than u^2, so the same table still works
    result = invoke(runner, "certify", "group", "--d2special", "--n", "3", "--no-oracle")
    assert result.exit_code == 0, result.output
    assert "powers n=3: free" in result.output


def test_certify_group_table_file(runner, tmp_path):
    """
    Ensures that a table file replaces the recipe table.
    """
    table = tmp_path / "table.yml"
    table.write_text(
        "table:\n"
        '  - {slot: 1, sign: 1, arcs: ["[-sqrt(3), -1/4*sqrt(3)]"]}\n'
        '  - {slot: 1, sign: -1, arcs: ["[1/4*sqrt(3), sqrt(3)]"]}\n'
        '  - {slot: 2, sign: 1, arcs: ["]sqrt(3), -sqrt(3)["]}\n'
        '  - {slot: 2, sign: -1, arcs: ["]-1/4*sqrt(3), 1/4*sqrt(3)["]}\n'
    )

    result = invoke(runner, "certify", "group", "--d", "3", "--table", str(table), "--no-oracle")

    assert result.exit_code == 0, result.output
    assert result.output.startswith("certificate w1+table d=3: PASS")


def test_certify_semigroup(runner):
    """
    Ensures that the norm -1 semigroup data for d = 2 passes.
    """
    result = invoke(runner, "certify", "semigroup", "--d", "2", "--w-kind", "w1", "--L", "6")

    assert result.exit_code == 0, result.output
    assert result.output.startswith("semigroup certificate semigroup-w1 d=2: PASS")
    assert "U = ]-1, 1[, x0 = 1" in result.output


def test_oracle_semigroup(runner):
    """
    Ensures that the d = 2 pair has no positive relation up to length 8.
    """
    result = invoke(runner, "oracle", "--d", "2", "--semigroup", "--L", "8")

    assert result.exit_code == 0, result.output
    assert "no relation found" in result.output


def test_infeasibility(runner):
    """
    Ensures that the coarse grid reports the family infeasible.
    """
    result = invoke(runner, "infeasibility", "--resolution", "5")

    assert result.exit_code == 0, result.output
    assert "infeasible on the grid: True" in result.output


def test_lemmas_and_sweep(runner):
    """
    Ensures that the interval lemmas hold for d = 7 and the small sweep is ok.
    """
    result = invoke(runner, "lemmas", "--d", "7", "--w-kind", "w3")
    assert result.exit_code == 0, result.output
    assert result.output.startswith("interval lemmas w3 d=7: PASS")

    result = invoke(runner, "sweep", "--d-max", "7")
    assert result.exit_code == 0, result.output
    assert "summary:" in result.output


def test_json_output(runner, tmp_path):
    """
    Ensures that JSON output is a valid document, written to --out when
    given.
    """
    result = invoke(runner, "certify", "group", "--d", "3", "--L", "3", "--format", "json")

    assert result.exit_code == 0, result.output
    document = PingPongUnits.document.CertificateDocument.parse(result.output)
    assert document.command == "certify group"
    assert document.certificate["passed"] is True

    out = tmp_path / "pell.json"
    result = invoke(runner, "pell", "--d", "61", "--format", "json", "--out", str(out))

    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["certificate"][0]["x"] == "29718"


def test_config_file(runner, tmp_path):
    """
    Ensures that --config selects the output format and that a bad file
    exits with code 2.
    """
    config = tmp_path / "custom.yml"
    config.write_text("search_config:\n  output_format: json\n")

    result = invoke(runner, "--config", str(config), "pell", "--d", "2")
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["command"] == "pell"

    config.write_text("search_config:\n  group_depth: -1\n")
    result = invoke(runner, "--config", str(config), "pell", "--d", "2")
    assert result.exit_code == 2, result.output
