import math

import numpy as np
import pytest

from pdcwalk.angle import Angle
from pdcwalk.observables import position_probabilities
from pdcwalk.walk import (
    CoinDimensionError,
    CoinMode,
    InitialSpin,
    LatticeCapacityError,
    WalkState,
    apply_coin,
    apply_shift,
    coin_matrix_at,
    evolve,
    make_initial,
    step,
)

PDC = CoinMode.POSITION_DEPENDENT
PIC = CoinMode.POSITION_INDEPENDENT
R2 = 1 / math.sqrt(2)


def basis_state(x, coin, half_width=4, coin_dim=2, steps_taken=0):
    amps = np.zeros((2 * half_width + 1, coin_dim), dtype=complex)
    amps[x + half_width, coin] = 1
    return WalkState(steps_taken, half_width, amps)


def dense(state):
    return {(x, i): complex(a)
            for x, row in zip(state.positions, state.amplitudes)
            for i, a in enumerate(row) if abs(a) > 1e-14}


def test_coin_at_origin_is_diag():
    for theta in (Angle(1, 4), Angle(7, 45), Angle(0)):
        np.testing.assert_array_equal(coin_matrix_at(theta, PDC, 0), [[1, 0], [0, -1]])


def test_coin_is_spin_flip_at_flip_site():
    np.testing.assert_array_equal(coin_matrix_at(Angle(1, 6), PDC, 3), [[0, 1], [1, 0]])
    np.testing.assert_array_equal(coin_matrix_at(Angle(1, 4), PDC, -2), [[0, -1], [-1, 0]])


def test_pic_ignores_position():
    theta = Angle(1, 5)
    for x in (-7, 0, 3):
        np.testing.assert_allclose(coin_matrix_at(theta, PIC, x), coin_matrix_at(theta, PDC, 1))


@pytest.mark.parametrize("theta", [Angle(1, 3), Angle(7, 45), Angle(-5, 12)])
@pytest.mark.parametrize("x", [-4, 1, 9])
def test_coin_unitary_symmetric_det(theta, x):
    m = coin_matrix_at(theta, PDC, x)
    np.testing.assert_allclose(m @ m.conj().T, np.eye(2), atol=1e-15)
    np.testing.assert_array_equal(m, m.T)
    assert np.linalg.det(m) == pytest.approx(-1)


def test_make_initial():
    up = make_initial(InitialSpin.UP, 30)
    assert up.amplitude(0, 0) == 1 and up.norm_squared() == 1
    down = make_initial(InitialSpin.DOWN, 30)
    assert down.amplitude(0, 1) == 1
    small = make_initial(InitialSpin.UP, 1)
    assert position_probabilities(small) == {0: 1.0}
    with pytest.raises(ValueError):
        make_initial(InitialSpin.UP, 0)


def test_state_is_read_only():
    s = make_initial(InitialSpin.UP, 2)
    with pytest.raises(ValueError):
        s.amplitudes[0, 0] = 1


def test_apply_coin_examples():
    theta = Angle(1, 4)
    assert dense(apply_coin(basis_state(0, 0), theta, PDC)) == {(0, 0): 1}
    assert dense(apply_coin(basis_state(0, 1), theta, PDC)) == {(0, 1): -1}
    out = apply_coin(basis_state(1, 0), theta, PDC)
    assert out.amplitude(1, 0) == pytest.approx(R2)
    assert out.amplitude(1, 1) == pytest.approx(R2)


def test_apply_coin_wrong_dim():
    with pytest.raises(CoinDimensionError):
        apply_coin(basis_state(0, 0, coin_dim=4), Angle(1, 4), PDC)


def test_apply_shift_examples():
    assert dense(apply_shift(basis_state(0, 0))) == {(1, 0): 1}
    assert dense(apply_shift(basis_state(0, 1))) == {(-1, 1): 1}
    amps = np.zeros((9, 2), dtype=complex)
    amps[5] = [R2, R2]
    out = apply_shift(WalkState(1, 4, amps))
    assert out.steps_taken == 2
    assert out.amplitude(2, 0) == pytest.approx(R2) and out.amplitude(0, 1) == pytest.approx(R2)


def test_apply_shift_capacity():
    with pytest.raises(LatticeCapacityError):
        apply_shift(basis_state(4, 0))
    with pytest.raises(LatticeCapacityError):
        apply_shift(basis_state(-4, 1))
    # inward-moving amplitude at the edge is fine
    assert dense(apply_shift(basis_state(4, 1))) == {(3, 1): 1}


def test_step_examples():
    s = make_initial(InitialSpin.UP, 4)
    s = step(step(s, Angle(1, 4), PDC), Angle(1, 4), PDC)
    assert s.steps_taken == 2
    assert dense(s) == pytest.approx({(2, 0): R2, (0, 1): R2})

    s = step(make_initial(InitialSpin.DOWN, 2), Angle(3, 7), PDC)
    assert dense(s) == {(-1, 1): -1}

    for mode in (PDC, PIC):
        assert dense(step(make_initial(InitialSpin.UP, 2), Angle(0), mode)) == {(1, 0): 1}


def test_three_step_expansion_matches_closed_form():
    # third line of the stepwise expansion from spin up, for a generic angle
    theta = Angle(2, 11)
    t = theta.radians
    final, _ = evolve(InitialSpin.UP, theta, PDC, 3)
    expect = {(3, 0): math.cos(2 * t) * math.cos(t),
              (1, 1): math.sin(2 * t) * math.cos(t),
              (-1, 1): -math.sin(t)}
    assert dense(final) == pytest.approx(expect, abs=1e-14)


def test_three_step_expansion_from_spin_down():
    theta = Angle(2, 11)
    t = theta.radians
    final, _ = evolve(InitialSpin.DOWN, theta, PDC, 3)
    expect = {(-1, 0): -math.sin(2 * t) * math.cos(t),
              (1, 0): math.sin(t),
              (-3, 1): -math.cos(2 * t) * math.cos(t)}
    assert dense(final) == pytest.approx(expect, abs=1e-14)


def test_evolve_free_localized():
    final, _ = evolve(InitialSpin.UP, Angle(0), PDC, 30)
    assert position_probabilities(final) == {30: 1.0}


def test_evolve_bounded_localized():
    final, _ = evolve(InitialSpin.UP, Angle(1, 2), PDC, 30)
    probs = position_probabilities(final)
    assert len(probs) == 1 and set(probs) <= {-1, 0, 1}
    assert max(probs.values()) == pytest.approx(1, abs=1e-12)


def test_evolve_periodic_four_steps():
    final, _ = evolve(InitialSpin.UP, Angle(1, 4), PDC, 4)
    assert position_probabilities(final) == pytest.approx({0: 0.5, 2: 0.25, -2: 0.25}, abs=1e-12)


def test_evolve_record_history():
    final, hist = evolve(InitialSpin.UP, Angle(1, 5), PDC, 7, record=True)
    assert [s.steps_taken for s in hist] == list(range(8))
    assert hist[-1] is final
    assert evolve(InitialSpin.UP, Angle(1, 5), PDC, 7)[1] is None


def test_evolve_zero_steps():
    final, hist = evolve(InitialSpin.UP, Angle(1, 2), PDC, 0, record=True)
    assert final.steps_taken == 0 and final.half_width == 1 and len(hist) == 1
    with pytest.raises(ValueError):
        evolve(InitialSpin.UP, Angle(1, 2), PDC, -1)
