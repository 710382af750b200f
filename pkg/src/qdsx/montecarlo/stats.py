import math

from ..exceptions import ParameterError
from .types import Estimate

# two-sided 95%
WILSON_Z = 1.96


def wilson_interval(successes: int, trials: int, z: float = WILSON_Z) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion, clamped to [0, 1].

    The returned interval always contains the point estimate, including the
    degenerate ``0/n`` and ``n/n`` cases where rounding could push an edge
    past it.
    """
    if trials < 1 or not 0 <= successes <= trials:
        raise ParameterError(
            f"need 0 <= successes <= trials and trials >= 1, got {successes}/{trials}"
        )
    rate = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (rate + z2 / (2.0 * trials)) / denom
    half = z / denom * math.sqrt(rate * (1.0 - rate) / trials + z2 / (4.0 * trials * trials))
    low = max(0.0, min(center - half, rate))
    high = min(1.0, max(center + half, rate))
    return low, high


def estimate(successes: int, trials: int) -> Estimate:
    low, high = wilson_interval(successes, trials)
    return Estimate(successes, trials, successes / trials, low, high)


__all__ = ["WILSON_Z", "wilson_interval", "estimate"]
