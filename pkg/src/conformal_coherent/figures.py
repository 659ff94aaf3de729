"""Optional matplotlib rendering for the CLI report paths."""

from __future__ import annotations

import numpy as np

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_metric_figure(rows: list[dict], path: str) -> None:
    """Heatmap of g_tt over the sampled (t, r) grid."""
    ts = sorted({row["t"] for row in rows})
    rs = sorted({row["r"] for row in rows})
    grid = np.empty((len(ts), len(rs)))
    index = {(row["t"], row["r"]): row["g_tt"] for row in rows}
    for i, t in enumerate(ts):
        for j, r in enumerate(rs):
            grid[i, j] = index[(t, r)]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    im = ax.pcolormesh(rs, ts, grid, shading="nearest", cmap="viridis")
    fig.colorbar(im, ax=ax, label=r"$g_{tt}$")
    ax.set_xlabel("r")
    ax.set_ylabel("t")
    ax.set_title("conformal factor of the induced metric")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_flow_figure(rows: list[dict], path: str) -> None:
    """Flow trajectory in the (r, t) plane over the ambient vector field."""
    from .spacetime import killing_field_samples

    traj_t = [row["t"] for row in rows]
    traj_r = [row["r"] for row in rows]
    r_hi = max(max(traj_r) * 1.3, 1.5)
    t_lo, t_hi = min(traj_t) - 0.5, max(traj_t) + 0.5
    samples = killing_field_samples(t_lo, t_hi, 0.0, r_hi, 12, 12)
    pts = np.array([[p.r, p.t] for p, _ in samples])
    vec = np.array([[v[1], v[0]] for _, v in samples])
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.quiver(pts[:, 0], pts[:, 1], vec[:, 0], vec[:, 1],
              color="0.6", angles="xy", width=0.003)
    ax.plot(traj_r, traj_t, "-o", color="C3", markersize=2.5, label="flow trajectory")
    ax.set_xlabel("r")
    ax.set_ylabel("t")
    ax.set_title("U(1) flow and its tangent field")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
