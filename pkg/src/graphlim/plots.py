"""Figure rendering for the command-line report paths.

Every function takes already-computed data plus an output path and writes
one PNG; nothing here touches randomness or recomputes statistics.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .stats import DensityEstimate, EmpiricalDistribution  # noqa: E402


def plot_intervals(intervals, path) -> None:
    """Stacked horizontal bars, one per interval, in index order."""
    fig, ax = plt.subplots(figsize=(7, max(2.0, 0.12 * len(intervals) + 1)))
    for i, iv in enumerate(intervals):
        ax.hlines(i, iv.left, iv.right, lw=2)
    ax.set_xlim(0, 1)
    ax.set_xlabel("position")
    ax.set_ylabel("interval index")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_sweep(rows: Sequence[dict], path) -> None:
    """Per-seed scatter of edge density, omega/n, chi/n against n."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for key, marker in (("edge_density", "o"), ("omega_over_n", "s"),
                        ("chi_over_n", "^")):
        ax.scatter([r["n"] for r in rows], [r[key] for r in rows],
                   s=14, marker=marker, alpha=0.6, label=key)
    ax.set_xlabel("n")
    ax.set_ylabel("value")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_degree_cdf(dist: EmpiricalDistribution, path, reference=None) -> None:
    """Empirical CDF of the (scaled) degrees, optional reference curve."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    xs = dist.values
    ax.step(xs, dist.cdf(xs), where="post", label="empirical")
    if reference is not None:
        ax.plot(xs, reference(xs), "--", label="reference")
        ax.legend()
    ax.set_xlabel("degree fraction")
    ax.set_ylabel("CDF")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_density_vector(vector: Mapping[str, DensityEstimate], path) -> None:
    """Probe densities with error bars."""
    names = list(vector)
    vals = [vector[k].value for k in names]
    errs = [vector[k].stderr for k in names]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.errorbar(range(len(names)), vals, yerr=errs, fmt="o", capsize=3)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=45, ha="right")
    ax.set_ylabel("homomorphism density")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_compare(vector1: Mapping[str, DensityEstimate],
                 vector2: Mapping[str, DensityEstimate], path) -> None:
    """Per-probe absolute gaps against the 4-sigma rejection thresholds."""
    import math
    names = list(vector1)
    gaps = [abs(vector1[k].value - vector2[k].value) for k in names]
    thrs = [4.0 * math.hypot(vector1[k].stderr, vector2[k].stderr)
            for k in names]
    fig, ax = plt.subplots(figsize=(7, 4))
    idx = range(len(names))
    ax.bar(idx, gaps, width=0.6, label="gap")
    ax.plot(idx, thrs, "r_", markersize=18, label="4 sigma threshold")
    ax.set_xticks(list(idx))
    ax.set_xticklabels(names, rotation=45, ha="right")
    ax.set_ylabel("|density gap|")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_battery(values: Mapping[str, float], path) -> None:
    """Bar chart of the forbidden-pattern induced densities."""
    names = list(values)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(len(names)), [values[k] for k in names], width=0.6)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names)
    ax.set_ylabel("induced density")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
