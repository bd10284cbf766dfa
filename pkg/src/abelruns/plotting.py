"""Benchmark figure rendering, kept separate so matplotlib loads lazily."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["render_bench_figure"]


def render_bench_figure(records: list[dict], path: str) -> None:
    """Two-panel figure: operation counts vs n (log-log) and wall time.

    The dashed reference line is 8 * n * p, the budget the test suite
    holds the streaming scanner to.
    """
    ns = [r["n"] for r in records]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.5))

    ax1.loglog(ns, [r["operations"] for r in records], "o-", label="total operations")
    ax1.loglog(ns, [r["window_comparisons"] for r in records], "s--", label="window comparisons")
    ax1.loglog(ns, [r["flush_iterations"] for r in records], "^--", label="flush iterations")
    ax1.loglog(ns, [8 * r["n"] * r["p"] for r in records], "k:", label="8 n p budget")
    ax1.set_xlabel("input length n")
    ax1.set_ylabel("unit operations")
    ax1.set_title("scanner work vs input length")
    ax1.legend(fontsize=8)
    ax1.grid(True, which="both", alpha=0.3)

    ax2.loglog(ns, [max(r["wall_s"], 1e-9) for r in records], "o-", color="tab:red")
    ax2.set_xlabel("input length n")
    ax2.set_ylabel("wall time (s)")
    ax2.set_title("wall time")
    ax2.grid(True, which="both", alpha=0.3)

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
