"""
Discrete-time quantum walks on a line with position-dependent coins.

The coin at site ``x`` rotates by ``x * theta``; a position-independent coin
with the same parameterization is available for comparison, as is a
two-coin variant acting on a four-dimensional coin space.
"""

from .angle import Angle, AngleParseError, angle_parse, cos_sin_multiple
from .entangled import (
    PHI_PLUS,
    PSI_PLUS,
    BellChoice,
    BellKind,
    entangled_coin_matrix_at,
    entangled_evolve,
    entangled_step,
    make_bell_initial,
)
from .observables import (
    DistributionReport,
    WalkClass,
    classify,
    curve_over_steps,
    distribution_report,
    flip_site,
    position_probabilities,
    shannon_entropy_coin,
    shannon_entropy_position,
    standard_deviation,
)
from .walk import (
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

__version__ = "0.1.0"
