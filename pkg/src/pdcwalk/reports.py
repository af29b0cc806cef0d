"""
Deterministic CSV / JSON / SVG writers for walk results.

Numbers are written with 12 significant digits and always carry a decimal
point, so ``1`` is written as ``1.0``.
"""

from __future__ import annotations

import csv
import json
import math
from collections.abc import Iterable, Sequence
from pathlib import Path

__all__ = [
    "fmt",
    "dist_rows",
    "write_table",
    "read_dist_csv",
    "plot_stems",
    "plot_lines",
]


def fmt(value: float) -> str:
    s = f"{value:.12g}"
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def dist_rows(probs: dict[int, float], step: int, same_parity: bool) -> list[tuple[int, float]]:
    """
    Rows ``(x, P(x))`` over ``[min x, max x]`` sorted by ``x``.

    Unoccupied sites inside the support appear with probability 0; when
    ``same_parity`` is set only sites with the parity of ``step`` are listed.
    """
    lo, hi = min(probs), max(probs)
    xs = range(lo, hi + 1)
    if same_parity:
        xs = [x for x in xs if (x - step) % 2 == 0]
    return [(x, probs.get(x, 0.0)) for x in xs]


def write_table(path: Path, header: Sequence[str], rows: Iterable[Sequence], fmt_json: bool = False):
    """Write ``rows`` as CSV, or as a JSON list of objects when ``fmt_json``."""
    rows = [list(r) for r in rows]
    path = Path(path)
    if fmt_json:
        records = [
            {h: (float(fmt(v)) if isinstance(v, float) else v) for h, v in zip(header, r)}
            for r in rows
        ]
        path.write_text(json.dumps(records, indent=1) + "\n", encoding="utf-8")
        return
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([fmt(v) if isinstance(v, float) else ("" if v is None else v) for v in r])


def read_dist_csv(path: Path) -> dict[int, float]:
    with Path(path).open(newline="", encoding="utf-8") as fh:
        return {int(r["x"]): float(r["probability"]) for r in csv.DictReader(fh)}


def _figure():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "pdcwalk"
    matplotlib.rcParams["svg.fonttype"] = "none"
    fig, ax = plt.subplots(figsize=(5, 3.5))
    return plt, fig, ax


def _save(plt, fig, path: Path):
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def plot_stems(path: Path, series: Sequence[tuple[str, dict[int, float], str]], title: str):
    """Stem plot of position distributions; each series is ``(label, probs, linestyle)``."""
    plt, fig, ax = _figure()
    colors = ("tab:blue", "tab:red")
    for k, (label, probs, style) in enumerate(series):
        xs = sorted(probs)
        ax.vlines(xs, 0, [probs[x] for x in xs], colors=colors[k % 2], linestyles=style,
                  label=label)
        ax.plot(xs, [probs[x] for x in xs], "o", color=colors[k % 2], markersize=2)
    ax.set_xlabel("x")
    ax.set_ylabel("P(x)")
    ax.set_title(title)
    ax.legend(fontsize=7)
    _save(plt, fig, path)


def plot_lines(path: Path, series: Sequence[tuple[str, Sequence[tuple[int, float]], str, str]],
               ylabel: str, title: str):
    """Line plot versus step; each series is ``(label, points, color, linestyle)``."""
    plt, fig, ax = _figure()
    for label, pts, color, style in series:
        pts = [(t, v) for t, v in pts if math.isfinite(v)]
        ax.plot([t for t, _ in pts], [v for _, v in pts], color=color, linestyle=style,
                label=label)
    ax.set_xlabel("T")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.legend(fontsize=7)
    _save(plt, fig, path)
