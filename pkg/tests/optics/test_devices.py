import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qdsx.optics import (
    ComplexAmplitude,
    beam_splitter,
    click_probabilities,
    click_probability,
    multiport,
    multiport_arrays,
    multiport_network,
)

amplitudes = st.builds(
    ComplexAmplitude,
    st.floats(min_value=-10.0, max_value=10.0, allow_nan=False),
    st.floats(min_value=-10.0, max_value=10.0, allow_nan=False),
)


def _close(a: ComplexAmplitude, b: ComplexAmplitude, scale: float) -> bool:
    tol = 1e-12 * (1.0 + scale)
    return abs(a.re - b.re) <= tol and abs(a.im - b.im) <= tol


@settings(max_examples=1000)
@given(amplitudes, amplitudes)
def test_multiport_conserves_energy(b: ComplexAmplitude, c: ComplexAmplitude) -> None:
    incoming = b.photon_number + c.photon_number
    out = multiport(b, c)
    assert math.isclose(out.total_photon_number, incoming, rel_tol=1e-12, abs_tol=1e-12)
    net = multiport_network(b, c)
    assert math.isclose(net.total_photon_number, incoming, rel_tol=1e-12, abs_tol=1e-12)


@settings(max_examples=1000)
@given(amplitudes, amplitudes)
def test_network_matches_closed_form(b: ComplexAmplitude, c: ComplexAmplitude) -> None:
    scale = abs(b) + abs(c)
    closed, net = multiport(b, c), multiport_network(b, c)
    assert _close(closed.b_signal, net.b_signal, scale)
    assert _close(closed.c_signal, net.c_signal, scale)
    assert _close(closed.b_null, net.b_null, scale)
    assert _close(closed.c_null, net.c_null, scale)


@settings(max_examples=1000)
@given(amplitudes, amplitudes)
def test_bob_and_charlie_signals_are_identical(b: ComplexAmplitude, c: ComplexAmplitude) -> None:
    for out in (multiport(b, c), multiport_network(b, c)):
        assert out.b_signal == out.c_signal


@settings(max_examples=1000)
@given(amplitudes)
def test_identical_inputs_leave_null_ports_dark(b: ComplexAmplitude) -> None:
    out = multiport(b, b)
    assert out.b_null.photon_number == 0.0
    assert out.c_null.photon_number == 0.0


@settings(max_examples=1000)
@given(amplitudes, amplitudes)
def test_different_inputs_light_null_ports(b: ComplexAmplitude, c: ComplexAmplitude) -> None:
    assume(abs(b - c) > 1e-6)
    assert multiport(b, c).b_null.photon_number > 0.0


@settings(max_examples=1000)
@given(amplitudes, amplitudes)
def test_swapping_inputs_only_flips_null_sign(b: ComplexAmplitude, c: ComplexAmplitude) -> None:
    straight, swapped = multiport(b, c), multiport(c, b)
    assert swapped.b_signal == straight.b_signal
    assert swapped.c_signal == straight.c_signal
    assert swapped.b_null == -straight.b_null


def test_beam_splitter_ports() -> None:
    plus, minus = beam_splitter(ComplexAmplitude(1.0), ComplexAmplitude(1.0))
    assert plus.re == pytest.approx(math.sqrt(2.0))
    assert minus.photon_number == 0.0


def test_signal_and_null_for_opposite_inputs() -> None:
    out = multiport(ComplexAmplitude(0.5), ComplexAmplitude(-0.5))
    assert out.b_signal.photon_number == 0.0
    assert out.b_null.re == pytest.approx(0.5)


def test_multiport_arrays_match_scalar_form() -> None:
    b = np.array([0.5, -0.5, 1j], dtype=np.complex128)
    c = np.array([0.5, 0.5, 0.0], dtype=np.complex128)
    signal, null = multiport_arrays(b, c)
    for i in range(3):
        quad = multiport(ComplexAmplitude.of(b[i]), ComplexAmplitude.of(c[i]))
        assert complex(quad.b_signal) == signal[i]
        assert complex(quad.b_null) == null[i]


def test_click_probability() -> None:
    assert click_probability(ComplexAmplitude(0.0)) == 0.0
    assert click_probability(ComplexAmplitude(1.0)) == pytest.approx(1.0 - math.exp(-1.0))
    modes = np.array([0.0, 1.0, 1j], dtype=np.complex128)
    np.testing.assert_allclose(click_probabilities(modes), [0.0, 1 - math.exp(-1), 1 - math.exp(-1)])


def test_non_finite_amplitude_is_rejected() -> None:
    with pytest.raises(ValueError):
        ComplexAmplitude(math.inf)
