"""
Walk classes from a position-dependent coin
===========================================

Runs the spin-up walker for 30 steps at each reference angle and plots the
final position distribution next to the position-independent walk with the
same angle.
"""

# %%
# Setup
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pdcwalk import Angle, CoinMode, InitialSpin, classify, evolve, flip_site, position_probabilities
from pdcwalk.observables import TABLE1_ANGLES

OUT = os.environ.get("PDCWALK_DEMO_OUT", "demo_output")
os.makedirs(OUT, exist_ok=True)
T = 30

# %%
# One panel per class. The coin at site x rotates by x*theta, so angles
# pi/(2m) turn it into a pure spin flip at x = +-m and the walker is trapped
# between those walls.
fig, axes = plt.subplots(4, 3, figsize=(11, 11))
for ax, theta in zip(axes.flat, TABLE1_ANGLES):
    for mode, style, color in ((CoinMode.POSITION_DEPENDENT, "-", "tab:blue"),
                               (CoinMode.POSITION_INDEPENDENT, "--", "tab:red")):
        final, _ = evolve(InitialSpin.UP, theta, mode, T)
        p = position_probabilities(final)
        xs = sorted(p)
        ax.plot(xs, [p[x] for x in xs], style, color=color, lw=1, marker=".", ms=3)
    ax.set_title(f"{theta}: {classify(theta)}", fontsize=8)
    print(f"{str(theta):>8}  {str(classify(theta)):<26} flip site: {flip_site(theta)}")
for ax in axes.flat[len(TABLE1_ANGLES):]:
    ax.axis("off")
fig.tight_layout()
fig.savefig(os.path.join(OUT, "walk_classes.png"), dpi=80)

# %%
# The periodic walk at pi/4 only ever visits three shapes.
_, hist = evolve(InitialSpin.UP, Angle(1, 4), CoinMode.POSITION_DEPENDENT, 8, record=True)
for s in hist:
    print(s.steps_taken, position_probabilities(s))
