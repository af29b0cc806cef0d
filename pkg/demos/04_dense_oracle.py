"""
Cross-checking the stepper against a dense operator
===================================================

The dense walk operator is built as an explicit matrix from plain float
trigonometry; repeated matrix-vector products must agree with the stepper.
"""

# %%
import numpy as np

from pdcwalk import Angle, CoinMode, InitialSpin, evolve
from pdcwalk.oracle import (
    build_dense_walk_operator,
    closed_form_leading_amplitude,
    dense_evolve,
    periodic_fixture_steps,
)

theta, T = Angle(1, 5), 10
op = build_dense_walk_operator(theta, CoinMode.POSITION_DEPENDENT, 2, T + 1)
print("dimension", op.dimension, "unitarity residual", op.unitarity_residual())

start = np.zeros((2 * T + 3, 2), dtype=complex)
start[T + 1, 0] = 1
dense = dense_evolve(op, start, T)
final, _ = evolve(InitialSpin.UP, theta, CoinMode.POSITION_DEPENDENT, T)
print("max difference", np.max(np.abs(dense[1:-1] - final.amplitudes)))

# %%
# Amplitude of the rightmost site is a product of cosines.
print(final.amplitude(T, 0), closed_form_leading_amplitude(theta, T))

# %%
# Step schedule of the pi/4 walk.
for name, steps in periodic_fixture_steps(max_steps=24).items():
    print(f"{name:>12}: {steps}")
