"""Invariants of the steppers checked over generated angles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdcwalk.angle import Angle
from pdcwalk.entangled import PHI_PLUS, PSI_PLUS, BellChoice, BellKind, entangled_evolve
from pdcwalk.observables import flip_site, position_probabilities
from pdcwalk.oracle import build_dense_walk_operator, closed_form_leading_amplitude, dense_evolve
from pdcwalk.walk import CoinMode, InitialSpin, evolve

angles = st.builds(Angle, st.integers(-360, 360), st.integers(1, 180))
modes = st.sampled_from(list(CoinMode))
spins = st.sampled_from(list(InitialSpin))
bells = st.sampled_from([PHI_PLUS, PSI_PLUS])


def site_probs(state):
    return np.sum(np.abs(state.amplitudes) ** 2, axis=1)


@settings(max_examples=100, deadline=None)
@given(angles, modes, spins, st.integers(1, 60))
def test_single_unitarity_lightcone_parity(theta, mode, spin, steps):
    _, hist = evolve(spin, theta, mode, steps, record=True)
    for s in hist:
        t = s.steps_taken
        assert abs(s.norm_squared() - 1) <= 1e-12
        p = site_probs(s)
        x = s.positions
        assert np.all(p[np.abs(x) > t] == 0)
        assert p[(x - t) % 2 != 0].sum() <= 1e-24


@settings(max_examples=100, deadline=None)
@given(angles, modes, bells, st.integers(1, 60))
def test_entangled_unitarity_lightcone(theta, mode, bell, steps):
    _, hist = entangled_evolve(bell, theta, mode, steps, record=True)
    for s in hist:
        assert abs(s.norm_squared() - 1) <= 1e-12
        assert np.all(site_probs(s)[np.abs(s.positions) > s.steps_taken] == 0)


@settings(max_examples=60, deadline=None)
@given(angles, st.integers(1, 40))
def test_spin_up_never_reaches_left_edge(theta, steps):
    # the origin coin fixes spin up, so the first step always goes right
    final, _ = evolve(InitialSpin.UP, theta, CoinMode.POSITION_DEPENDENT, steps)
    assert final.amplitude(-steps, 0) == 0 and final.amplitude(-steps, 1) == 0
    assert min(position_probabilities(final)) >= 2 - steps


@settings(max_examples=60, deadline=None)
@given(angles, st.integers(1, 15))
def test_leading_amplitudes(theta, steps):
    up, _ = evolve(InitialSpin.UP, theta, CoinMode.POSITION_DEPENDENT, steps)
    expected = closed_form_leading_amplitude(theta, steps)
    assert abs(up.amplitude(steps, 0) - expected) <= 1e-12

    down, _ = evolve(InitialSpin.DOWN, theta, CoinMode.POSITION_DEPENDENT, steps)
    magnitude = math.prod(abs(math.cos(n * theta.radians)) for n in range(steps))
    assert abs(abs(down.amplitude(-steps, 1)) - magnitude) <= 1e-12
    # the walker reaching -T only ever carries spin down, with sign (-1)^T
    assert down.amplitude(-steps, 0) == 0
    assert abs(down.amplitude(-steps, 1) - (-1) ** steps * expected) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(angles, st.integers(1, 12))
def test_entangled_leading_amplitudes(theta, steps):
    final, _ = entangled_evolve(PHI_PLUS, theta, CoinMode.POSITION_DEPENDENT, steps)
    expected = math.prod(math.cos(n * theta.radians) ** 2 for n in range(steps)) / math.sqrt(2)
    assert abs(final.amplitude(steps, 0) - expected) <= 1e-12
    assert abs(final.amplitude(-steps, 3) - expected) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 45).map(lambda m: Angle(1, 2 * m)), spins, st.integers(1, 60))
def test_flip_site_confinement(theta, spin, steps):
    limit = flip_site(theta)
    final, _ = evolve(spin, theta, CoinMode.POSITION_DEPENDENT, steps)
    p = site_probs(final)
    assert np.all(p[np.abs(final.positions) > limit] == 0)


@settings(max_examples=30, deadline=None)
@given(angles, modes, st.integers(0, 3), st.integers(1, 12))
def test_dense_oracle_equivalence(theta, mode, which, steps):
    hw = steps + 1
    if which < 2:
        spin = InitialSpin(which)
        final, _ = evolve(spin, theta, mode, steps)
        coin = [1, 0] if spin is InitialSpin.UP else [0, 1]
    else:
        bell = (PHI_PLUS, PSI_PLUS)[which - 2]
        final, _ = entangled_evolve(bell, theta, mode, steps)
        coin = bell.coefficients
    op = build_dense_walk_operator(theta, mode, len(coin), hw)
    start = np.zeros((2 * hw + 1, len(coin)), dtype=complex)
    start[hw] = coin
    dense = dense_evolve(op, start, steps)
    np.testing.assert_allclose(dense[1:-1], final.amplitudes, atol=1e-12, rtol=0)


@settings(max_examples=30, deadline=None)
@given(angles, st.integers(0, 60))
def test_psi_state_frozen(theta, steps):
    final, _ = entangled_evolve(PSI_PLUS, theta, CoinMode.POSITION_DEPENDENT, steps)
    expected = np.zeros_like(final.amplitudes)
    expected[final.half_width, 1:3] = (-1) ** steps / math.sqrt(2)
    np.testing.assert_allclose(final.amplitudes, expected, atol=1e-12, rtol=0)


def test_pdec_quarter_pi_confined():
    _, hist = entangled_evolve(PHI_PLUS, Angle(1, 4), CoinMode.POSITION_DEPENDENT, 60,
                               record=True)
    for s in hist:
        assert set(position_probabilities(s)) <= {-2, -1, 0, 1, 2}


@pytest.mark.parametrize("eta", [0.0, 0.3, math.pi / 4, 1.2])
def test_general_eta_preserves_norm(eta):
    for kind in BellKind:
        final, _ = entangled_evolve(BellChoice(kind, eta), Angle(2, 9),
                                    CoinMode.POSITION_DEPENDENT, 20)
        assert final.norm_squared() == pytest.approx(1, abs=1e-12)
