"""Figure rendering for the sweep outputs.

Each sweep command writes a PNG next to its CSV so a run reproduces the
experiment displays without external tooling.  Rendering is headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def plot_cn_sweep(rows: list[dict], path) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ns = [r["n"] for r in rows]
    ax.plot(ns, [r["c_mbps"] for r in rows], marker=".", lw=1)
    ax.set_xlabel("approximation index n")
    ax.set_ylabel("capacity [Mbps]")
    ax.set_title("Capacity of the rational-approximation sequence")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_phase_sweep(rows: list[dict], path) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for n in sorted({r["n"] for r in rows}):
        sub = [r for r in rows if r["n"] == n]
        ax.plot([r["phi"] for r in sub], [r["c_mbps"] for r in sub], lw=1.2, label=f"n={n}")
    ax.set_xlabel("normalized sampling phase")
    ax.set_ylabel("capacity [Mbps]")
    ax.set_title("Capacity versus sampling phase")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_rate_sweep(rows: list[dict], path) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ratios = [r["ratio"] for r in rows]
    ax.plot(ratios, [r["c_mem_bits_per_use"] for r in rows], lw=1.2, label="finite memory")
    if any(r.get("c_memless_bits_per_use") not in (None, "") for r in rows):
        ax.plot(
            ratios,
            [r["c_memless_bits_per_use"] for r in rows],
            lw=1.2,
            ls="--",
            label="memoryless",
        )
    ax.set_xlabel("period-to-sampling-interval ratio")
    ax.set_ylabel("capacity [bits/channel use]")
    ax.set_title("Capacity versus sampling rate (synchronous points)")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_finite_block(rows: list[dict], path) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ks = [r["k"] for r in rows]
    ax.plot(ks, [r["c_oracle_bits_per_use"] for r in rows], marker="o", lw=1.2, label="finite-block capacity")
    ax.plot(ks, [r["mc_mean"] for r in rows], marker="x", lw=0, label="MC information density mean")
    ax.set_xlabel("block length k")
    ax.set_ylabel("bits/channel use")
    ax.set_title("Finite-block capacity and information-density mean")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
