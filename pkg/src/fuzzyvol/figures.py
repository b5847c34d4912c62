"""Figure rendering for the comparison report path.

Draws PNGs next to the delimited outputs: per horizon, the FT deviation over
baseline-adjusted returns, the STD series over mean-adjusted returns, the
point-wise overlay of both measures, and their scatter. Data files stay the
authoritative interface; these are the same series rendered for a quick look.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

RC = {
    "figure.figsize": (9.0, 3.2),
    "figure.dpi": 110,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.titlesize": 10,
    "axes.labelsize": 9,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "legend.fontsize": 8,
}

RETURN_COLOR = "0.75"
FT_COLOR = "tab:blue"
STD_COLOR = "tab:red"


def _save(fig, path: Path) -> Path:
    fig.savefig(path)
    plt.close(fig)
    return path


def _vol_axis_label(annualized: bool) -> str:
    return "volatility (annualized)" if annualized else "volatility (per day)"


def render_comparison_figures(out_dir, details, returns, annualized: bool = False) -> list[Path]:
    """One set of four PNGs per horizon detail; returns the written paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    with plt.rc_context(RC):
        for detail in details:
            written.extend(_render_horizon(out_dir, detail, returns, annualized))
    return written


def _render_horizon(out_dir: Path, detail, returns, annualized: bool) -> list[Path]:
    index = returns.index
    ft, std = detail.ft, detail.std
    name = detail.name
    paths = []

    fig, ax = plt.subplots()
    ax.plot(index, detail.baseline_adjusted, color=RETURN_COLOR, lw=0.6,
            label="baseline-adjusted returns")
    ax.plot(index[ft.defined], ft.values[ft.defined], color=FT_COLOR, lw=1.2,
            label=f"FT deviation (T={detail.horizon})")
    ax.set_xlabel("trading day")
    ax.set_ylabel(_vol_axis_label(annualized))
    ax.set_title(f"FT volatility, {name}")
    ax.legend(loc="upper right")
    paths.append(_save(fig, out_dir / f"fig_ft_{name}.png"))

    fig, ax = plt.subplots()
    ax.plot(index, detail.mean_adjusted, color=RETURN_COLOR, lw=0.6,
            label="mean-adjusted returns")
    ax.plot(index[std.defined], std.values[std.defined], color=STD_COLOR, lw=1.2,
            label=f"rolling STD (T={detail.horizon})")
    ax.set_xlabel("trading day")
    ax.set_ylabel(_vol_axis_label(annualized))
    ax.set_title(f"STD volatility, {name}")
    ax.legend(loc="upper right")
    paths.append(_save(fig, out_dir / f"fig_std_{name}.png"))

    fig, ax = plt.subplots()
    ax.plot(index[ft.defined], ft.values[ft.defined], color=FT_COLOR, lw=1.2,
            label="FT deviation")
    ax.plot(index[std.defined], std.values[std.defined], color=STD_COLOR, lw=1.0,
            ls=":", label="rolling STD")
    ax.set_xlabel("trading day")
    ax.set_ylabel(_vol_axis_label(annualized))
    ax.set_title(f"Point-wise comparison, {name}")
    ax.legend(loc="upper right")
    paths.append(_save(fig, out_dir / f"fig_pointwise_{name}.png"))

    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    if detail.pairs is not None and len(detail.pairs):
        ax.scatter(detail.pairs.x, detail.pairs.y, s=4, alpha=0.5, color=FT_COLOR)
        lim = float(max(np.max(detail.pairs.x), np.max(detail.pairs.y))) or 1.0
        ax.plot([0, lim], [0, lim], color="0.6", lw=0.8, ls="--")
    ax.set_xlabel("FT deviation")
    ax.set_ylabel("rolling STD")
    ax.set_title(f"FT vs STD, {name}")
    paths.append(_save(fig, out_dir / f"fig_scatter_{name}.png"))

    return paths
