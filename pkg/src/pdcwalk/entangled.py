"""
Walk driven by two identical coins acting on a four-dimensional coin space.

Coin basis index ``i`` encodes ``|00>, |01>, |10>, |11>`` for ``i = 0..3``.
The coin at each site is the Kronecker square of the single coin, and the
shift moves ``|00>`` right, ``|11>`` left and leaves ``|01>`` and ``|10>``
where they are.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from .angle import Angle
from .walk import (
    CoinMode,
    WalkState,
    _check_edges,
    _require_dim,
    coin_cos_sin,
    coin_matrix_at,
)

__all__ = [
    "BellKind",
    "BellChoice",
    "PHI_PLUS",
    "PSI_PLUS",
    "SHIFT_DIRECTION",
    "entangled_coin_matrix_at",
    "make_bell_initial",
    "entangled_step",
    "entangled_evolve",
]

# displacement per coin basis index: |00> right, |01> and |10> stay, |11> left
SHIFT_DIRECTION = (1, 0, 0, -1)


class BellKind(enum.Enum):
    PHI_PLUS_LIKE = "bell1"
    PSI_PLUS_LIKE = "bell2"


@dataclass(frozen=True)
class BellChoice:
    """
    Initial two-coin state ``cos(eta)|a> + sin(eta)|b>`` at the origin.

    ``(a, b)`` is ``(|00>, |11>)`` for the phi-like choice and
    ``(|01>, |10>)`` for the psi-like one. ``eta = pi/4`` gives the
    maximally entangled Bell states.
    """

    kind: BellKind = BellKind.PHI_PLUS_LIKE
    eta: float = math.pi / 4

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        c, s = math.cos(self.eta), math.sin(self.eta)
        if self.kind is BellKind.PHI_PLUS_LIKE:
            return (c, 0.0, 0.0, s)
        return (0.0, c, s, 0.0)


PHI_PLUS = BellChoice(BellKind.PHI_PLUS_LIKE)
PSI_PLUS = BellChoice(BellKind.PSI_PLUS_LIKE)


def entangled_coin_matrix_at(theta: Angle, mode: CoinMode, x: int) -> NDArray[np.complex128]:
    """``C (x) C`` with ``C = coin_matrix_at(theta, mode, x)``."""
    m = coin_matrix_at(theta, mode, x)
    return np.kron(m, m)


@lru_cache(maxsize=256)
def _coin_stack(theta: Angle, mode: CoinMode, half_width: int) -> NDArray[np.float64]:
    c, s = coin_cos_sin(theta, mode, half_width)
    single = np.empty((c.size, 2, 2))
    single[:, 0, 0], single[:, 0, 1] = c, s
    single[:, 1, 0], single[:, 1, 1] = s, -c
    stack = np.einsum("nij,nkl->nikjl", single, single).reshape(-1, 4, 4)
    stack.flags.writeable = False
    return stack


def make_bell_initial(choice: BellChoice, half_width: int) -> WalkState:
    if half_width < 1:
        raise ValueError(f"half_width must be >= 1 (got {half_width})")
    amps = np.zeros((2 * half_width + 1, 4), dtype=np.complex128)
    amps[half_width, :] = choice.coefficients
    return WalkState(0, half_width, amps)


def entangled_step(state: WalkState, theta: Angle, mode: CoinMode) -> WalkState:
    _require_dim(state, 4)
    coined = np.einsum("nab,nb->na", _coin_stack(theta, mode, state.half_width),
                       state.amplitudes)
    _check_edges(coined, right=[0], left=[3])
    out = np.zeros_like(coined)
    out[1:, 0] = coined[:-1, 0]
    out[:, 1:3] = coined[:, 1:3]
    out[:-1, 3] = coined[1:, 3]
    return WalkState(state.steps_taken + 1, state.half_width, out)


def entangled_evolve(
    choice: BellChoice,
    theta: Angle,
    mode: CoinMode,
    steps: int,
    record: bool = False,
) -> tuple[WalkState, list[WalkState] | None]:
    """Two-coin counterpart of :func:`pdcwalk.walk.evolve`."""
    if steps < 0:
        raise ValueError(f"steps must be >= 0 (got {steps})")
    state = make_bell_initial(choice, max(steps, 1))
    history = [state] if record else None
    for _ in range(steps):
        state = entangled_step(state, theta, mode)
        if record:
            history.append(state)
    return state, history
