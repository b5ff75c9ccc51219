"""SVG figure builders, each a pure function of a CSV data table.

Every renderer reads the plotted series back from the CSV the pipeline
wrote, so regenerating a figure from its table yields byte-identical
SVG.  The matplotlib hash salt and timestamp metadata are pinned for the
same reason.
"""

from __future__ import annotations

import csv
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

import numpy as np  # noqa: E402

__all__ = [
    "read_table",
    "ccdf_figure",
    "percentile_figure",
    "histogram_figure",
    "intensity_figure",
]

# fixed salt keeps generated element ids stable between runs
matplotlib.rcParams["svg.hashsalt"] = "tailcast"


def read_table(path) -> dict[str, np.ndarray]:
    """Read a numeric CSV with header into column arrays; blanks are nan."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        cols: list[list[float]] = [[] for _ in header]
        for row in reader:
            for k, cell in enumerate(row):
                cols[k].append(float(cell) if cell.strip() else math.nan)
    return {name: np.asarray(col) for name, col in zip(header, cols)}


def _save(fig, out_path) -> None:
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)


def ccdf_figure(table_csv, out_svg) -> None:
    """Log-log survival plot: empirical points with fitted overlays.

    Expects columns x, empirical, single and optionally piecewise (blank
    cells where a model was not fitted).
    """
    t = read_table(table_csv)
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    ax.loglog(t["x"], t["empirical"], ".", color="0.4", ms=4, label="empirical")
    ax.loglog(t["x"], t["single"], "-", color="tab:blue", lw=1.5, label="single power law")
    if "piecewise" in t and np.isfinite(t["piecewise"]).any():
        ax.loglog(
            t["x"], t["piecewise"], "--", color="tab:red", lw=1.5, label="piecewise"
        )
    ax.set_xlabel("severity x")
    ax.set_ylabel("P(X ≥ x)")
    ax.legend(frameon=False)
    fig.tight_layout()
    _save(fig, out_svg)


def percentile_figure(table_csv, out_svg) -> None:
    """Sample-max percentiles against the scaling exponent.

    Expects columns alpha, q90, q95, q99, reference (constant column with
    the catastrophe severity marked as a horizontal line); optional
    mc_q90/mc_q95/mc_q99 columns are drawn as points.
    """
    t = read_table(table_csv)
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    for name, color in (("q90", "tab:green"), ("q95", "tab:blue"), ("q99", "tab:red")):
        ax.semilogy(t["alpha"], t[name], "-", color=color, lw=1.5, label=name)
        mc = "mc_" + name
        if mc in t and np.isfinite(t[mc]).any():
            ax.semilogy(t["alpha"], t[mc], "o", color=color, ms=3, mfc="none")
    ref = t["reference"]
    if np.isfinite(ref).any():
        ax.axhline(float(ref[np.isfinite(ref)][0]), ls="--", color="0.3", lw=1.0)
    ax.set_xlabel("scaling exponent alpha")
    ax.set_ylabel("sample-max percentile (severity)")
    ax.legend(frameon=False)
    fig.tight_layout()
    _save(fig, out_svg)


def histogram_figure(table_csv, out_svg, xlabel="estimated alpha") -> None:
    """Bar chart from a (bin_left, bin_right, count) histogram table."""
    t = read_table(table_csv)
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    widths = t["bin_right"] - t["bin_left"]
    ax.bar(t["bin_left"], t["count"], width=widths, align="edge",
           color="tab:blue", edgecolor="white", lw=0.3)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("draws")
    fig.tight_layout()
    _save(fig, out_svg)


def intensity_figure(band_csv, hist_csv, out_svg) -> None:
    """Event-rate band over time with forecast trajectories and an inset
    histogram of forecast totals.

    band_csv columns: time_days, observed, post_mean, lo90, hi90, and
    traj_* columns covering the forecast window (blanks elsewhere).
    hist_csv columns: count, frequency.
    """
    t = read_table(band_csv)
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    days = t["time_days"]
    band = np.isfinite(t["post_mean"])
    ax.fill_between(days[band], t["lo90"][band], t["hi90"][band],
                    color="0.8", label="90% range")
    ax.plot(days[band], t["post_mean"][band], "-", color="black",
            lw=1.2, label="posterior mean")
    ax.plot(days[band], t["observed"][band], ".", color="tab:blue",
            ms=3, label="observed rate")
    for name in sorted(k for k in t if k.startswith("traj_")):
        mask = np.isfinite(t[name])
        ax.plot(days[mask], t[name][mask], "-", lw=0.7, alpha=0.8)
    ax.set_xlabel("days since catalog start")
    ax.set_ylabel("events per day")
    ax.legend(frameon=False, loc="upper left")

    h = read_table(hist_csv)
    inset = fig.add_axes((0.64, 0.62, 0.25, 0.25))
    if len(h["count"]) > 1:
        width = float(h["count"][1] - h["count"][0])
    else:
        width = 1.0
    inset.bar(h["count"], h["frequency"], width=width, align="edge",
              color="tab:blue", edgecolor="white", lw=0.2)
    inset.set_xlabel("forecast total", fontsize=7)
    inset.set_ylabel("fraction", fontsize=7)
    inset.tick_params(labelsize=6)
    _save(fig, out_svg)
