"""Management command utilities: render

Builds report payloads from library results and renders them as JSON or CSV.

Payloads hold raw floats; rounding to 6 significant digits happens only at
render time and never touches the ``parameters`` section (or a sweep's
``alpha``), so a JSON report can be re-run from its own parameters.
"""

import csv
import io
import json
import math
from typing import Any, Iterable, Optional

import numpy as np

from ....bounds import BoundsReport
from ....montecarlo import Estimate, ExperimentResult
from ....protocol import ProtocolParams
from ...types import OutputFormat

SIGNIFICANT_DIGITS = 6

# probabilities below this are also reported as log10
LOG10_CUTOFF = 1e-6

SWEEP_COLUMNS = [
    "alpha",
    "p_usd",
    "p_min",
    "p_min_prime",
    "log10_rep",
    "log10_forge_passive",
    "log10_forge_active",
    "log10_honest_abort",
    "constraints_ok",
]
ESTIMATE_COLUMNS = ["event", "successes", "trials", "rate", "ci_low", "ci_high", "log10_rate"]
ORACLE_COLUMNS = ["oracle", "probability", "log10"]

_SECTION_ORDER = [
    "parameters",
    "derived_rates",
    "bounds_log10",
    "constraints",
    "estimates",
    "oracles",
    "sweep",
    "best",
]
_EXACT_KEYS = frozenset({"parameters", "alpha"})


def _log10_if_small(p: float) -> Optional[float]:
    return math.log10(p) if 0.0 < p < LOG10_CUTOFF else None


# ============================================================================
# Payload builders
# ============================================================================


def bounds_payload(params: ProtocolParams, report: BoundsReport) -> dict[str, Any]:
    return {
        "parameters": params.as_dict(),
        "derived_rates": report.rates.as_dict(),
        "bounds_log10": report.bounds_log10(),
        "constraints": report.constraints.as_dict(),
    }


def estimate_fields(est: Estimate) -> dict[str, Any]:
    fields: dict[str, Any] = {
        "successes": est.successes,
        "trials": est.trials,
        "rate": est.rate,
        "ci_low": est.ci_low,
        "ci_high": est.ci_high,
    }
    log10_rate = _log10_if_small(est.rate)
    if log10_rate is not None:
        fields["log10_rate"] = log10_rate
    return fields


def experiment_payload(result: ExperimentResult) -> dict[str, Any]:
    return {
        "parameters": result.params.as_dict(),
        "estimates": {
            "scenario": str(result.scenario.kind),
            "strategy": result.scenario.payload(),
            "trials": result.n_trials,
            "seed": result.seed,
            "events": {name: estimate_fields(est) for name, est in result.estimates.items()},
            "means": dict(result.means),
        },
    }


def oracle_entry(probability: float) -> dict[str, Any]:
    entry: dict[str, Any] = {"probability": probability}
    log10 = _log10_if_small(probability)
    if log10 is not None:
        entry["log10"] = log10
    return entry


def sweep_row(alpha: float, length: int, report: BoundsReport) -> dict[str, Any]:
    return {
        "alpha": alpha,
        "length": length,
        "p_usd": report.rates.p_usd,
        "p_min": report.rates.p_min,
        "p_min_prime": report.rates.p_min_prime,
        "log10_rep": report.log10_repudiation_ub,
        "log10_forge_passive": report.log10_forge_passive_ub,
        "log10_forge_active": report.log10_forge_active_ub,
        "log10_honest_abort": report.log10_honest_abort_ub,
        "constraints_ok": report.constraints.ok,
    }


# ============================================================================
# Rendering
# ============================================================================


def _round(value: float) -> Optional[float]:
    if not math.isfinite(value):
        return None
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def _rounded(value: Any, exact: bool = False) -> Any:
    match value:
        case bool() | int() | str() | None:
            return value
        case float():
            if not math.isfinite(value):
                return None
            return value if exact else _round(value)
        case dict():
            return {k: _rounded(v, exact or k in _EXACT_KEYS) for k, v in value.items()}
        case list() | tuple():
            return [_rounded(v, exact) for v in value]
        case np.generic():
            return _rounded(value.item(), exact)
        case _:
            raise TypeError(f"cannot render {type(value).__name__}")


def _cell(value: Any, exact: bool = False) -> str:
    if isinstance(value, np.generic):
        value = value.item()
    match value:
        case None:
            return ""
        case bool():
            return "true" if value else "false"
        case int():
            return str(value)
        case float():
            if not math.isfinite(value):
                return ""
            return repr(value) if exact else f"{value:.{SIGNIFICANT_DIGITS}g}"
        case _:
            return str(value)


def _bounds_row(payload: dict[str, Any]) -> dict[str, Any]:
    rates, logs = payload["derived_rates"], payload["bounds_log10"]
    return {
        "alpha": payload["parameters"]["alpha"],
        **rates,
        "log10_rep": logs["repudiation"],
        "log10_forge_passive": logs["forge_passive"],
        "log10_forge_active": logs["forge_active"],
        "log10_honest_abort": logs["honest_abort"],
        "constraints_ok": payload["constraints"]["ok"],
    }


def _table(payload: dict[str, Any]) -> tuple[list[str], Iterable[dict[str, Any]]]:
    if "sweep" in payload:
        columns = SWEEP_COLUMNS
        if payload.get("axis") == "length":
            columns = ["length", *SWEEP_COLUMNS]
        return columns, payload["sweep"]
    if "estimates" in payload:
        events = payload["estimates"]["events"]
        return ESTIMATE_COLUMNS, ({"event": name, **fields} for name, fields in events.items())
    if "oracles" in payload:
        oracles = payload["oracles"]
        return ORACLE_COLUMNS, ({"oracle": name, **entry} for name, entry in oracles.items())
    return SWEEP_COLUMNS, [_bounds_row(payload)]


def render_output(payload: dict[str, Any], fmt: OutputFormat) -> str:
    """Render a report payload.

    JSON carries every present section under fixed names; CSV is one table
    with a header row: one row per sweep point, estimate or oracle, or a
    single row for a bounds report.
    """
    if fmt is OutputFormat.JSON:
        ordered = {key: payload[key] for key in _SECTION_ORDER if key in payload}
        return json.dumps(_rounded(ordered), indent=2, allow_nan=False) + "\n"

    columns, rows = _table(payload)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(_cell(row.get(col), exact=col == "alpha") for col in columns)
    return buffer.getvalue()


__all__ = [
    "SWEEP_COLUMNS",
    "ESTIMATE_COLUMNS",
    "ORACLE_COLUMNS",
    "bounds_payload",
    "estimate_fields",
    "experiment_payload",
    "oracle_entry",
    "sweep_row",
    "render_output",
]
