"""
Two entangled coins
===================

With the coin C (x) C the |01> and |10> components do not move, so the
(|01> + |10>)/sqrt(2) start never leaves the origin while (|00> + |11>)/sqrt(2)
spreads both ways.
"""

# %%
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pdcwalk import (
    PHI_PLUS,
    PSI_PLUS,
    Angle,
    CoinMode,
    curve_over_steps,
    entangled_evolve,
    position_probabilities,
)

OUT = os.environ.get("PDCWALK_DEMO_OUT", "demo_output")
os.makedirs(OUT, exist_ok=True)
PDC, PIC = CoinMode.POSITION_DEPENDENT, CoinMode.POSITION_INDEPENDENT

# %%
for theta in (Angle(0), Angle(1, 2), Angle(1, 4)):
    for t in (1, 2, 3, 4):
        final, _ = entangled_evolve(PHI_PLUS, theta, PDC, t)
        print(theta, t, {x: round(p, 4) for x, p in position_probabilities(final).items()})

# %%
final, _ = entangled_evolve(PSI_PLUS, Angle(7, 45), PDC, 40)
print("psi start after 40 steps:", position_probabilities(final))

# %%
angles = [Angle(1, 4), Angle(7, 45), Angle(1, 5), Angle(1, 90)]
fig, axes = plt.subplots(2, len(angles), figsize=(14, 6))
for k, theta in enumerate(angles):
    for mode, style, color in ((PDC, "-", "tab:blue"), (PIC, "--", "tab:red")):
        final, hist = entangled_evolve(PHI_PLUS, theta, mode, 30, record=True)
        p = position_probabilities(final)
        xs = sorted(p)
        axes[0, k].plot(xs, [p[x] for x in xs], style, color=color, lw=1, marker=".", ms=3)
        pts = curve_over_steps(hist, "entropy_position")
        axes[1, k].plot([t for t, _ in pts], [v for _, v in pts], style, color=color)
    axes[0, k].set_title(str(theta))
fig.tight_layout()
fig.savefig(os.path.join(OUT, "entangled.png"), dpi=80)
