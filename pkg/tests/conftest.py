import math
from typing import Callable, Iterable, Optional

import numpy as np
import pytest

from qdsx.bounds import default_params
from qdsx.protocol import ProtocolParams


class SequenceSource:
    """Uniform source replaying preset variates, for deterministic sampling tests."""

    def __init__(self, values: Iterable[float]) -> None:
        self._values = list(values)
        self._next = 0

    def random(self, size: Optional[int] = None) -> float | np.ndarray:
        if size is None:
            value = self._values[self._next]
            self._next += 1
            return value
        chunk = self._values[self._next : self._next + size]
        self._next += size
        return np.asarray(chunk, dtype=float)


@pytest.fixture
def sequence_source() -> type[SequenceSource]:
    return SequenceSource


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


@pytest.fixture
def params_05_500() -> ProtocolParams:
    """Default parameter choice at alpha=0.5, L=500."""
    return default_params(0.5, 500)


@pytest.fixture
def within_4_sigma() -> Callable[[float, float, int], bool]:
    """``|observed − expected| ≤ 4·√(expected(1−expected)/n)``."""

    def check(observed: float, expected: float, n: int) -> bool:
        sigma = math.sqrt(max(expected * (1.0 - expected), 0.0) / n)
        return abs(observed - expected) <= 4.0 * sigma + 1e-12

    return check
