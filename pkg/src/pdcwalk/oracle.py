"""
Slow, independent reference computations used to validate the steppers.

Nothing here shares code with the fast path beyond the :class:`Angle` and
mode/initial-state tags: the coins use plain floating-point trigonometry,
the walk is one dense matrix, and evolution is repeated matrix-vector
products.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray

from .angle import Angle
from .walk import CoinMode

__all__ = [
    "DenseOperator",
    "build_dense_walk_operator",
    "dense_evolve",
    "closed_form_leading_amplitude",
    "classical_sigma",
    "tag_configuration",
    "periodic_fixture_steps",
    "entangled_fixture_steps",
    "MAX_DENSE_HALF_WIDTH",
]

MAX_DENSE_HALF_WIDTH = 64


class DenseOperator:
    """Full walk operator over ``(2*half_width + 1) * coin_dim`` basis states."""

    def __init__(self, entries: NDArray[np.complex128], half_width: int, coin_dim: int):
        self.entries = entries
        self.half_width = half_width
        self.coin_dim = coin_dim

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def unitarity_residual(self) -> float:
        u = self.entries
        return float(np.max(np.abs(u @ u.conj().T - np.eye(self.dimension))))


def _single_coin(phi: float) -> NDArray:
    return np.array([[math.cos(phi), math.sin(phi)],
                     [math.sin(phi), -math.cos(phi)]])


def build_dense_walk_operator(theta: Angle, mode: CoinMode, coin_dim: int,
                              half_width: int) -> DenseOperator:
    """
    Assemble ``shift @ coin`` as an explicit matrix.

    Basis ordering is position-major: index ``(x + half_width) * coin_dim + i``.
    The shift wraps around the lattice ends so the matrix is exactly unitary;
    results agree with an unbounded line only while the walker stays clear
    of the edge, so callers keep ``half_width`` larger than the step count.
    """
    if half_width < 1:
        raise ValueError(f"half_width must be >= 1 (got {half_width})")
    if coin_dim not in (2, 4):
        raise ValueError(f"coin_dim must be 2 or 4 (got {coin_dim})")
    if half_width > MAX_DENSE_HALF_WIDTH:
        raise ValueError(f"dense oracle is capped at half_width {MAX_DENSE_HALF_WIDTH}")

    n_sites = 2 * half_width + 1
    dim = n_sites * coin_dim
    if coin_dim == 2:
        moves = (1, -1)
    else:
        moves = (1, 0, 0, -1)

    coin = np.zeros((dim, dim))
    for k in range(n_sites):
        x = k - half_width
        phi = x * theta.radians if mode is CoinMode.POSITION_DEPENDENT else theta.radians
        m = _single_coin(phi)
        if coin_dim == 4:
            m = np.kron(m, m)
        coin[k * coin_dim:(k + 1) * coin_dim, k * coin_dim:(k + 1) * coin_dim] = m

    shift = np.zeros((dim, dim))
    for k in range(n_sites):
        for i, dx in enumerate(moves):
            target = (k + dx) % n_sites
            shift[target * coin_dim + i, k * coin_dim + i] = 1.0

    return DenseOperator((shift @ coin).astype(np.complex128), half_width, coin_dim)


def dense_evolve(op: DenseOperator, initial: NDArray, steps: int,
                 record: bool = False):
    """
    Apply the dense operator ``steps`` times to a flattened initial vector.

    Returns the final amplitudes reshaped to ``(n_sites, coin_dim)``, or the
    list of all ``steps + 1`` snapshots when ``record`` is set.
    """
    if steps >= op.half_width:
        raise ValueError("half_width must exceed the number of steps")
    vec = np.asarray(initial, dtype=np.complex128).ravel()
    shape = (2 * op.half_width + 1, op.coin_dim)
    snaps = [vec.reshape(shape)]
    for _ in range(steps):
        vec = op.entries @ vec
        snaps.append(vec.reshape(shape))
    return snaps if record else snaps[-1]


def closed_form_leading_amplitude(theta: Angle, steps: int) -> float:
    """``prod_{n=0}^{steps-1} cos(n * theta)``."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1 (got {steps})")
    return math.prod(math.cos(n * theta.radians) for n in range(steps))


def classical_sigma(steps: int) -> float:
    if steps < 0:
        raise ValueError(f"steps must be >= 0 (got {steps})")
    return math.sqrt(steps)


def _site_probabilities(amps: NDArray, half_width: int) -> dict[int, float]:
    probs = np.sum(np.abs(amps) ** 2, axis=1)
    return {k - half_width: float(p) for k, p in enumerate(probs) if p > 1e-15}


_PATTERNS = {
    "three_peaks": {-2: 0.25, 0: 0.5, 2: 0.25},
    "five_sites": {-2: 0.125, -1: 0.25, 0: 0.25, 1: 0.25, 2: 0.125},
}


def tag_configuration(probs: dict[int, float], tol: float = 1e-12) -> str:
    """
    Name the recurring pi/4 configuration a distribution matches.

    ``localized``: one site with probability 1. ``two_peaks``: two sites with
    1/2 each (x = +-1, or a pair such as {0, 2} in the single-coin walk).
    ``three_peaks``: 1/2 at 0 and 1/4 at +-2. ``five_sites``: 1/4 at 0, +-1
    and 1/8 at +-2. Anything else is ``other``.
    """
    values = list(probs.values())
    if len(values) == 1 and abs(values[0] - 1.0) <= tol:
        return "localized"
    if len(values) == 2 and all(abs(v - 0.5) <= tol for v in values):
        return "two_peaks"
    for name, pattern in _PATTERNS.items():
        if set(pattern) == set(probs) and all(abs(probs[x] - p) <= tol
                                              for x, p in pattern.items()):
            return name
    return "other"


def _fixture_steps(coin_dim: int, initial: NDArray, max_steps: int) -> dict[str, list[int]]:
    theta = Angle(1, 4)
    half_width = max_steps + 1
    op = build_dense_walk_operator(theta, CoinMode.POSITION_DEPENDENT, coin_dim, half_width)
    start = np.zeros((2 * half_width + 1, coin_dim), dtype=np.complex128)
    start[half_width] = initial
    tags: dict[str, list[int]] = {}
    for t, amps in enumerate(dense_evolve(op, start, max_steps, record=True)):
        tags.setdefault(tag_configuration(_site_probabilities(amps, half_width)), []).append(t)
    return tags


def periodic_fixture_steps(theta: Angle = Angle(1, 4), max_steps: int = 60) -> dict[str, list[int]]:
    """
    Steps 0..max_steps of the spin-up pi/4 walk grouped by configuration.

    Keys are the :func:`tag_configuration` names; names with no matching
    step are absent.
    """
    if theta != Angle(1, 4):
        raise ValueError(f"periodic fixtures exist only for pi/4, got {theta}")
    return _fixture_steps(2, np.array([1.0, 0.0]), max_steps)


def entangled_fixture_steps(theta: Angle = Angle(1, 4), max_steps: int = 60) -> dict[str, list[int]]:
    """Same grouping for the two-coin pi/4 walk started from (|00> + |11>)/sqrt 2."""
    if theta != Angle(1, 4):
        raise ValueError(f"periodic fixtures exist only for pi/4, got {theta}")
    r = 1 / math.sqrt(2)
    return _fixture_steps(4, np.array([r, 0.0, 0.0, r]), max_steps)
