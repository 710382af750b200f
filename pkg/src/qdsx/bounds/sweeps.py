import math
from typing import Sequence

import numpy as np

from ..exceptions import ParameterError
from .analytic import compute_bounds, default_params
from .types import BoundsReport


def sweep_alpha(
    alpha_min: float, alpha_max: float, steps: int, length: int
) -> list[tuple[float, BoundsReport]]:
    """Bounds at the default parameters over an evenly spaced amplitude grid.

    Entries whose parameters violate a constraint are kept; their
    ``constraints.ok`` is false.
    """
    if not (math.isfinite(alpha_min) and math.isfinite(alpha_max)):
        raise ParameterError("sweep range must be finite")
    if not 0.0 < alpha_min < alpha_max:
        raise ParameterError(
            f"sweep range must satisfy 0 < alpha_min < alpha_max, got [{alpha_min}, {alpha_max}]"
        )
    if steps < 2:
        raise ParameterError(f"a sweep needs at least 2 steps, got {steps}")
    return [
        (float(alpha), compute_bounds(default_params(float(alpha), length, strict=False)))
        for alpha in np.linspace(alpha_min, alpha_max, steps)
    ]


def sweep_length(alpha: float, lengths: Sequence[int]) -> list[tuple[int, BoundsReport]]:
    """Bounds at the default parameters for several signature lengths."""
    if not lengths:
        raise ParameterError("at least one signature length is required")
    return [
        (int(length), compute_bounds(default_params(alpha, int(length), strict=False)))
        for length in lengths
    ]


def best_alpha(sweep: Sequence[tuple[float, BoundsReport]]) -> tuple[float, BoundsReport]:
    """The feasible sweep entry with the smallest worst-case security log-bound.

    Raises:
        ParameterError: If no entry satisfies the constraints
    """
    feasible = [entry for entry in sweep if entry[1].constraints.ok]
    if not feasible:
        raise ParameterError("no sweep entry satisfies the parameter constraints")
    return min(feasible, key=lambda entry: entry[1].worst_security_log10)


__all__ = ["sweep_alpha", "sweep_length", "best_alpha"]
