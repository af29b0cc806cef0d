"""
Shannon entropy and standard deviation versus step count
========================================================

Bounded classes saturate; the position-independent walk keeps spreading.
"""

# %%
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pdcwalk import Angle, CoinMode, InitialSpin, curve_over_steps, evolve
from pdcwalk.oracle import classical_sigma

OUT = os.environ.get("PDCWALK_DEMO_OUT", "demo_output")
os.makedirs(OUT, exist_ok=True)
T = 60
PDC, PIC = CoinMode.POSITION_DEPENDENT, CoinMode.POSITION_INDEPENDENT

# %%
# Position entropy (solid) and coin entropy (dashed), PDC blue, PIC red.
angles = [Angle(1, 4), Angle(1, 6), Angle(1, 20), Angle(1, 5)]
fig, axes = plt.subplots(1, len(angles), figsize=(14, 3))
for ax, theta in zip(axes, angles):
    for mode, color in ((PDC, "tab:blue"), (PIC, "tab:red")):
        _, hist = evolve(InitialSpin.UP, theta, mode, T, record=True)
        for which, style in (("entropy_position", "-"), ("entropy_coin", "--")):
            pts = curve_over_steps(hist, which)
            ax.plot([t for t, _ in pts], [v for _, v in pts], style, color=color, lw=1)
    ax.set_title(str(theta))
fig.tight_layout()
fig.savefig(os.path.join(OUT, "entropy.png"), dpi=80)

# %%
# At pi/4 the position entropy only takes 0, ln 2 and 1.5 ln 2.
_, hist = evolve(InitialSpin.UP, Angle(1, 4), PDC, 12, record=True)
print([round(v / math.log(2), 3) for _, v in curve_over_steps(hist, "entropy_position")])

# %%
# Spread of the classical-like family against sqrt(T) and the Hadamard walk.
fig, ax = plt.subplots(figsize=(5, 3.5))
for theta, style in ((Angle(1, 6), ":"), (Angle(7, 45), "-"), (Angle(1, 5), "--")):
    _, hist = evolve(InitialSpin.UP, theta, PDC, T, record=True)
    pts = curve_over_steps(hist, "sigma")
    ax.plot([t for t, _ in pts], [v for _, v in pts], style, color="tab:blue", label=str(theta))
ax.plot(range(T + 1), [classical_sigma(t) for t in range(T + 1)], "--", color="tab:red",
        label="sqrt(T)")
_, hist = evolve(InitialSpin.UP, Angle(1, 4), PIC, T, record=True)
pts = curve_over_steps(hist, "sigma")
ax.plot([t for t, _ in pts], [v for _, v in pts], ":", color="tab:red", label="Hadamard")
ax.legend(fontsize=7)
fig.savefig(os.path.join(OUT, "sigma.png"), dpi=80)
print("Hadamard sigma(60)/60 =", round(pts[-1][1] / T, 4))
