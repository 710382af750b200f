import csv
import io
import json

import pytest

from qdsx.cli.management.helpers.render import SWEEP_COLUMNS
from qdsx.montecarlo import exact_honest_abort
from qdsx.bounds import default_params


def test_headline_bounds_report(run_json) -> None:
    report = run_json("bounds", "--alpha", "0.2", "--length", "1000000")
    assert set(report) == {"parameters", "derived_rates", "bounds_log10", "constraints"}
    assert report["bounds_log10"]["repudiation"] <= -5.69
    assert report["constraints"]["forge_margin"] == pytest.approx(0.127, abs=1e-3)
    assert report["constraints"]["ok"] is True
    assert report["parameters"]["length"] == 1_000_000


def test_inverted_thresholds_exit_with_1(run_cli) -> None:
    code, out, err = run_cli("bounds", "--alpha", "0.2", "--s-a", "0.5", "--s-v", "0.4")
    assert code == 1
    assert out == ""
    assert "sv_gt_sa" in err


@pytest.mark.parametrize(
    "args",
    [
        ("bounds", "--alpha", "abc"),
        ("bounds", "--alpha", "-0.2"),
        ("bounds", "--r", "1.5"),
        ("bounds", "--format", "xml"),
        ("sweep", "--steps", "1"),
        ("oracle", "--alpha", "0.5", "--length", "200000", "--scenario", "honest"),
        ("simulate", "--alpha", "0.5", "--length", "100", "--trials", "0"),
    ],
)
def test_invalid_input_exits_with_1(run_cli, args: tuple[str, ...]) -> None:
    code, out, _ = run_cli(*args)
    assert code == 1
    assert out == ""


def test_json_round_trip(run_cli, run_json) -> None:
    first = run_json("bounds", "--alpha", "0.37", "--length", "12345")
    params = first["parameters"]
    flags = []
    for key in ("alpha", "length", "s_a", "s_v", "delta", "r", "epsilon"):
        flags += [f"--{key.replace('_', '-')}", repr(params[key])]
    assert run_json("bounds", *flags) == first


def test_simulate_is_byte_identical(run_cli) -> None:
    args = ("simulate", "--scenario", "honest", "--alpha", "0.5", "--length", "200")
    first = run_cli(*args, "--trials", "300", "--seed", "42")
    second = run_cli(*args, "--trials", "300", "--seed", "42", "--workers", "4")
    assert first[0] == 0
    assert first[1] == second[1]
    report = json.loads(first[1])
    assert report["estimates"]["scenario"] == "honest"
    assert report["estimates"]["events"]["abort"]["trials"] == 300
    assert report["estimates"]["means"]["mismatch_fraction"] == 0.0


def test_simulate_csv_has_one_row_per_event(run_cli) -> None:
    code, out, _ = run_cli(
        "simulate", "--scenario", "forge-active", "--align-to-guess", "--alpha", "0.5",
        "--length", "100", "--trials", "50", "--format", "csv",
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [row["event"] for row in rows] == ["abort", "repudiation_success", "forge_success"]
    assert all(row["trials"] == "50" for row in rows)


def test_sweep_csv(run_cli) -> None:
    code, out, _ = run_cli(
        "sweep", "--alpha-min", "0.1", "--alpha-max", "0.5", "--steps", "2",
        "--length", "1000000", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert lines[0].split(",") == SWEEP_COLUMNS


def test_length_sweep_json(run_json) -> None:
    report = run_json("sweep", "--alpha", "0.2", "--lengths", "1000,1000000")
    assert [row["length"] for row in report["sweep"]] == [1000, 1000000]
    assert report["sweep"][1]["log10_rep"] < report["sweep"][0]["log10_rep"]


def test_alpha_sweep_reports_best_entry(run_json) -> None:
    report = run_json("sweep", "--alpha-min", "0.05", "--alpha-max", "1.0", "--steps", "20")
    assert 0.05 < report["best"]["alpha"] < 1.0


def test_honest_oracle(run_json) -> None:
    report = run_json("oracle", "--scenario", "honest", "--alpha", "0.5", "--length", "500")
    expected = exact_honest_abort(default_params(0.5, 500))
    assert report["oracles"]["honest_abort_single"]["probability"] == pytest.approx(
        expected, rel=1e-5
    )


def test_hoeffding_oracle(run_json) -> None:
    report = run_json("oracle", "--hoeffding-t", "0.1", "--alpha", "0.5", "--length", "100")
    assert report["oracles"]["hoeffding"]["probability"] == pytest.approx(0.135335, abs=1e-6)


def test_tiny_probabilities_also_carry_log10(run_json) -> None:
    report = run_json("oracle", "--hoeffding-t", "0.1", "--alpha", "0.5", "--length", "1000")
    entry = report["oracles"]["hoeffding"]
    assert entry["log10"] == pytest.approx(-20 / 2.302585, rel=1e-5)


def test_unknown_command_exits_with_1(run_cli) -> None:
    code, out, _ = run_cli("frobnicate")
    assert code == 1
    assert out == ""


def test_verbose_runs_log_to_stderr_only(run_cli) -> None:
    code, out, err = run_cli(
        "simulate", "--alpha", "0.5", "--length", "100", "--trials", "20", "--verbosity", "2"
    )
    assert code == 0
    assert "honest: abort=" in err
    assert json.loads(out)["estimates"]["trials"] == 20


@pytest.mark.parametrize(
    "args",
    [("--alpha", "-0.5", "--lengths", "1000,2000"), ("--lengths", "1000,x")],
)
def test_sweep_rejects_a_bad_anchor(run_cli, args: tuple[str, ...]) -> None:
    code, out, _ = run_cli("sweep", *args)
    assert code == 1
    assert out == ""
