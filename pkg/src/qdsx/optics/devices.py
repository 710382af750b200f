"""Passive linear optics acting on coherent-state amplitudes.

Every device in the protocol is a network of 50:50 beam splitters fed with
coherent states, so the outputs are again coherent states whose amplitudes
follow from the classical field relations.
"""

import math

import numpy as np

from .types import ComplexAmplitude, ModeQuadruple

_VACUUM = ComplexAmplitude(0.0, 0.0)

_SQRT2 = math.sqrt(2.0)


def beam_splitter(
    a: ComplexAmplitude, b: ComplexAmplitude
) -> tuple[ComplexAmplitude, ComplexAmplitude]:
    """Balanced beam splitter: returns the sum and difference ports ``((a+b)/√2, (a-b)/√2)``."""
    return (a + b) / _SQRT2, (a - b) / _SQRT2


def multiport(in_b: ComplexAmplitude, in_c: ComplexAmplitude) -> ModeQuadruple:
    """Closed-form output of the symmetrising multiport.

    Both signal ports carry ``(in_b + in_c) / 2`` and both null ports carry
    ``(in_b - in_c) / 2``; the null ports are vacuum only for identical inputs.
    """
    signal = (in_b + in_c) / 2.0
    null = (in_b - in_c) / 2.0
    return ModeQuadruple(b_signal=signal, c_signal=signal, b_null=null, c_null=null)


def multiport_network(in_b: ComplexAmplitude, in_c: ComplexAmplitude) -> ModeQuadruple:
    """The multiport built from its four beam splitters.

    Each recipient splits an incoming copy against vacuum, keeps one half and
    forwards the other; each then mixes the kept half with the half received
    from the other side.
    """
    b_kept, b_forwarded = beam_splitter(in_b, _VACUUM)
    c_kept, c_forwarded = beam_splitter(in_c, _VACUUM)
    b_signal, b_null = beam_splitter(b_kept, c_forwarded)
    c_signal, c_null = beam_splitter(b_forwarded, c_kept)
    return ModeQuadruple(b_signal=b_signal, c_signal=c_signal, b_null=b_null, c_null=c_null)


def multiport_arrays(in_b: np.ndarray, in_c: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Element-wise :func:`multiport` over complex arrays; returns ``(signal, null)``."""
    in_b = np.asarray(in_b, dtype=np.complex128)
    in_c = np.asarray(in_c, dtype=np.complex128)
    return (in_b + in_c) / 2.0, (in_b - in_c) / 2.0


def click_probability(mode: ComplexAmplitude) -> float:
    """Probability that a threshold detector registers at least one photon."""
    return -math.expm1(-mode.photon_number)


def click_probabilities(modes: np.ndarray) -> np.ndarray:
    """Vectorised :func:`click_probability` over an array of complex amplitudes."""
    return -np.expm1(-np.abs(modes) ** 2)


__all__ = [
    "beam_splitter",
    "multiport",
    "multiport_network",
    "multiport_arrays",
    "click_probability",
    "click_probabilities",
]
