"""
Single-coin discrete-time quantum walk on a line.

The walker lives in position (x) tensor coin space with coin basis
``|0>`` (spin up, moves right) and ``|1>`` (spin down, moves left).
One step applies the coin at every site and then the conditional shift.

With a position-dependent coin the coin at site ``x`` is

    [[cos(x*theta),  sin(x*theta)],
     [sin(x*theta), -cos(x*theta)]]

and with a position-independent coin the same matrix is used with the angle
``theta`` everywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from .angle import Angle, cos_sin_multiple

__all__ = [
    "CoinMode",
    "InitialSpin",
    "WalkState",
    "CoinDimensionError",
    "LatticeCapacityError",
    "coin_matrix_at",
    "coin_cos_sin",
    "make_initial",
    "apply_coin",
    "apply_shift",
    "step",
    "evolve",
]


class CoinMode(enum.Enum):
    POSITION_DEPENDENT = "pdc"
    POSITION_INDEPENDENT = "pic"


class InitialSpin(enum.Enum):
    UP = 0
    DOWN = 1


class CoinDimensionError(ValueError):
    """An operation was handed a state with the wrong coin dimension."""


class LatticeCapacityError(RuntimeError):
    """The shift would push amplitude past the edge of the allocated lattice."""


@dataclass(frozen=True)
class WalkState:
    """
    Snapshot of the walker after ``steps_taken`` applications of the walk.

    ``amplitudes[x + half_width, i]`` is the amplitude at lattice position
    ``x`` with coin index ``i``. The array is made read-only on construction.
    """

    steps_taken: int
    half_width: int
    amplitudes: NDArray[np.complex128]

    def __post_init__(self):
        if self.half_width < 1:
            raise ValueError(f"half_width must be >= 1 (got {self.half_width})")
        if self.steps_taken < 0:
            raise ValueError(f"steps_taken must be >= 0 (got {self.steps_taken})")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 2 or amps.shape[0] != 2 * self.half_width + 1:
            raise ValueError(
                f"amplitudes must have shape ({2 * self.half_width + 1}, d), "
                f"got {amps.shape}"
            )
        if amps.shape[1] not in (2, 4):
            raise CoinDimensionError(f"coin dimension must be 2 or 4, got {amps.shape[1]}")
        if amps is self.amplitudes:
            amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def coin_dim(self) -> int:
        return self.amplitudes.shape[1]

    @property
    def positions(self) -> NDArray[np.int64]:
        return np.arange(-self.half_width, self.half_width + 1)

    def amplitude(self, x: int, coin: int) -> complex:
        if abs(x) > self.half_width:
            return 0j
        return complex(self.amplitudes[x + self.half_width, coin])

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


@lru_cache(maxsize=256)
def coin_cos_sin(theta: Angle, mode: CoinMode, half_width: int) -> tuple[NDArray, NDArray]:
    """Per-site ``(cos phi, sin phi)`` for x in ``[-half_width, half_width]``."""
    n = 2 * half_width + 1
    if mode is CoinMode.POSITION_INDEPENDENT:
        c, s = cos_sin_multiple(theta, 1)
        cos, sin = np.full(n, c), np.full(n, s)
    else:
        pairs = [cos_sin_multiple(theta, x) for x in range(-half_width, half_width + 1)]
        cos, sin = np.array(pairs, dtype=float).T.copy()
    cos.flags.writeable = False
    sin.flags.writeable = False
    return cos, sin


def coin_matrix_at(theta: Angle, mode: CoinMode, x: int) -> NDArray[np.complex128]:
    """Coin acting at lattice site ``x``: real, symmetric, unitary, det -1."""
    c, s = cos_sin_multiple(theta, x if mode is CoinMode.POSITION_DEPENDENT else 1)
    return np.array([[c, s], [s, -c]], dtype=np.complex128)


def make_initial(spin: InitialSpin, half_width: int) -> WalkState:
    """Walker localized at the origin with the chosen spin."""
    if half_width < 1:
        raise ValueError(f"half_width must be >= 1 (got {half_width})")
    amps = np.zeros((2 * half_width + 1, 2), dtype=np.complex128)
    amps[half_width, InitialSpin(spin).value] = 1.0
    return WalkState(0, half_width, amps)


def _require_dim(state: WalkState, dim: int):
    if state.coin_dim != dim:
        raise CoinDimensionError(
            f"expected coin dimension {dim}, state has {state.coin_dim}"
        )


def apply_coin(state: WalkState, theta: Angle, mode: CoinMode) -> WalkState:
    _require_dim(state, 2)
    c, s = coin_cos_sin(theta, mode, state.half_width)
    up, down = state.amplitudes[:, 0], state.amplitudes[:, 1]
    out = np.empty_like(state.amplitudes)
    out[:, 0] = c * up + s * down
    out[:, 1] = s * up - c * down
    return WalkState(state.steps_taken, state.half_width, out)


def _check_edges(amps: NDArray, right: list[int], left: list[int]):
    # outward-moving amplitude on the last site has nowhere to go
    if np.any(amps[-1, right] != 0) or np.any(amps[0, left] != 0):
        raise LatticeCapacityError(
            "amplitude at the lattice edge would shift out of range; "
            "allocate half_width >= number of steps"
        )


def apply_shift(state: WalkState) -> WalkState:
    """Move spin-up amplitude one site right and spin-down one site left."""
    _require_dim(state, 2)
    amps = state.amplitudes
    _check_edges(amps, right=[0], left=[1])
    out = np.zeros_like(amps)
    out[1:, 0] = amps[:-1, 0]
    out[:-1, 1] = amps[1:, 1]
    return WalkState(state.steps_taken + 1, state.half_width, out)


def step(state: WalkState, theta: Angle, mode: CoinMode) -> WalkState:
    return apply_shift(apply_coin(state, theta, mode))


def evolve(
    spin: InitialSpin,
    theta: Angle,
    mode: CoinMode,
    steps: int,
    record: bool = False,
) -> tuple[WalkState, list[WalkState] | None]:
    """
    Run ``steps`` walk steps from a localized spin-up or spin-down walker.

    Returns
    -------
    final: WalkState
        State after the last step.
    history: list of WalkState or None
        When ``record`` is set, every state from step 0 to ``steps``
        inclusive (``history[t].steps_taken == t``).
    """
    if steps < 0:
        raise ValueError(f"steps must be >= 0 (got {steps})")
    state = make_initial(spin, max(steps, 1))
    history = [state] if record else None
    for _ in range(steps):
        state = step(state, theta, mode)
        if record:
            history.append(state)
    return state, history
