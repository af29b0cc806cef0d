"""
Quantities derived from walk states: marginals, entropies, spread, classes.

Entropies use the natural logarithm. Positions whose probability does not
exceed :data:`OCCUPIED_THRESHOLD` are treated as empty everywhere in this
module.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .angle import Angle
from .walk import WalkState

__all__ = [
    "OCCUPIED_THRESHOLD",
    "WalkClass",
    "DistributionReport",
    "TABLE1_ANGLES",
    "position_probabilities",
    "coin_probabilities",
    "shannon_entropy",
    "shannon_entropy_position",
    "shannon_entropy_coin",
    "standard_deviation",
    "flip_site",
    "classify",
    "distribution_report",
    "curve_over_steps",
]

OCCUPIED_THRESHOLD = 1e-15


class WalkClass(enum.Enum):
    FREE_LOCALIZED = "FreeLocalized"
    BOUNDED_LOCALIZED = "BoundedLocalized"
    PERIODIC = "Periodic"
    BOUNDED_CLASSICAL_LIKE = "BoundedClassicalLike"
    CLASSICAL_LIKE = "ClassicalLike"
    FAST_CLASSICAL_LIKE = "FastClassicalLike"
    SEMI_CLASSICAL_LIKE = "SemiClassicalLike"
    BOUNDED_SEMI_CLASSICAL_LIKE = "BoundedSemiClassicalLike"
    FAST_SEMI_CLASSICAL_LIKE = "FastSemiClassicalLike"
    BOUNDED_QUANTUM_LIKE = "BoundedQuantumLike"
    UNCLASSIFIED = "Unclassified"

    def __str__(self) -> str:
        return self.value


# reference angles of the ten named walk classes, in table order
TABLE1_ANGLES: dict[Angle, WalkClass] = {
    Angle(0, 1): WalkClass.FREE_LOCALIZED,
    Angle(1, 2): WalkClass.BOUNDED_LOCALIZED,
    Angle(1, 4): WalkClass.PERIODIC,
    Angle(1, 6): WalkClass.BOUNDED_CLASSICAL_LIKE,
    Angle(7, 45): WalkClass.CLASSICAL_LIKE,
    Angle(1, 5): WalkClass.FAST_CLASSICAL_LIKE,
    Angle(2, 5): WalkClass.SEMI_CLASSICAL_LIKE,
    Angle(1, 20): WalkClass.BOUNDED_SEMI_CLASSICAL_LIKE,
    Angle(1, 3): WalkClass.FAST_SEMI_CLASSICAL_LIKE,
    Angle(1, 90): WalkClass.BOUNDED_QUANTUM_LIKE,
}


@dataclass(frozen=True)
class DistributionReport:
    step: int
    probabilities: dict[int, float]
    s_position: float
    s_coin: float
    sigma: float
    support_min: int
    support_max: int
    flip_site: Optional[int] = None

    @property
    def support_width(self) -> int:
        return self.support_max - self.support_min + 1


def position_probabilities(state: WalkState) -> dict[int, float]:
    """Position marginal ``P(x) = sum_i |a(x, i)|^2`` over occupied sites."""
    probs = np.sum(np.abs(state.amplitudes) ** 2, axis=1)
    return {
        int(x): float(p)
        for x, p in zip(state.positions, probs)
        if p > OCCUPIED_THRESHOLD
    }


def coin_probabilities(state: WalkState) -> np.ndarray:
    return np.sum(np.abs(state.amplitudes) ** 2, axis=0)


def _values(probabilities) -> np.ndarray:
    if isinstance(probabilities, Mapping):
        probabilities = list(probabilities.values())
    p = np.asarray(probabilities, dtype=float).ravel()
    if np.any(p < 0):
        raise ValueError(f"negative probability {p.min()!r}")
    return p


def shannon_entropy(probabilities) -> float:
    """``-sum p ln p`` over entries above the occupation threshold."""
    p = _values(probabilities)
    p = p[p > OCCUPIED_THRESHOLD]
    return float(max(0.0, -np.sum(p * np.log(p))))


def shannon_entropy_position(probabilities: Mapping[int, float] | Sequence[float]) -> float:
    """
    Shannon entropy (nats) of a position distribution.

    Parameters
    ----------
    probabilities: mapping or sequence
        Position probabilities; must be non-negative and sum to one.

    Raises
    ------
    ValueError
        If any probability is negative or the total differs from one by more
        than 1e-10.
    """
    p = _values(probabilities)
    total = p.sum()
    if abs(total - 1.0) > 1e-10:
        raise ValueError(f"probabilities sum to {total!r}, expected 1")
    return shannon_entropy(p)


def shannon_entropy_coin(state: WalkState) -> float:
    return shannon_entropy(coin_probabilities(state))


def standard_deviation(probabilities: Mapping[int, float]) -> float:
    """Population standard deviation of position, ``sqrt(<x^2> - <x>^2)``."""
    xs = np.fromiter(probabilities.keys(), dtype=float)
    p = np.fromiter(probabilities.values(), dtype=float)
    mean = np.dot(p, xs)
    var = np.dot(p, (xs - mean) ** 2)
    return math.sqrt(max(var, 0.0))


def flip_site(theta: Angle) -> Optional[int]:
    """
    Smallest ``x > 0`` where the position-dependent coin is a pure spin flip.

    ``cos(x * p*pi/q) = 0`` requires ``2*x*p = q (mod 2q)``. With ``p/q`` in
    lowest terms this has a solution only for even ``q``, and the smallest
    one is ``x = q/2``.
    """
    p, q = theta.numerator, theta.denominator
    if p == 0 or q % 2:
        return None
    half = q // 2
    # xp = half (mod q) with p invertible mod q
    return (half * pow(p, -1, q)) % q


def classify(theta: Angle) -> WalkClass:
    return TABLE1_ANGLES.get(theta, WalkClass.UNCLASSIFIED)


def distribution_report(state: WalkState, theta: Optional[Angle] = None) -> DistributionReport:
    probs = position_probabilities(state)
    return DistributionReport(
        step=state.steps_taken,
        probabilities=probs,
        s_position=shannon_entropy(list(probs.values())),
        s_coin=shannon_entropy_coin(state),
        sigma=standard_deviation(probs),
        support_min=min(probs),
        support_max=max(probs),
        flip_site=None if theta is None else flip_site(theta),
    )


_CURVES = {
    "entropy_position": lambda s: shannon_entropy(list(position_probabilities(s).values())),
    "entropy_coin": shannon_entropy_coin,
    "sigma": lambda s: standard_deviation(position_probabilities(s)),
}


def curve_over_steps(history: Sequence[WalkState], which: str) -> list[tuple[int, float]]:
    """
    Evaluate one observable along a recorded evolution.

    ``which`` is ``"entropy_position"``, ``"entropy_coin"`` or ``"sigma"``.
    Step 0 (the initial state) is skipped, so the result covers steps 1..T.
    """
    try:
        fn = _CURVES[which]
    except KeyError:
        raise ValueError(f"unknown curve {which!r}; choose from {sorted(_CURVES)}") from None
    return [(s.steps_taken, fn(s)) for s in history if s.steps_taken >= 1]
