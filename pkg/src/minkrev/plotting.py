"""Figure rendering for the CLI report paths (written to files, never shown)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .curves import PlanarCurve
from .pipeline import _PLANE_COORDS


def render_curve_figure(curve: PlanarCurve, path) -> None:
    """Generating curve in its plane plus both coordinates against the
    parameter."""
    i, j = _PLANE_COORDS[curve.plane]
    s = curve.grid.points
    labels = {"xz": ("x", "z"), "xy": ("x", "y"), "yz": ("y", "z")}[curve.plane]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.plot(curve.points[:, i], curve.points[:, j], lw=1.2)
    ax1.set_xlabel(labels[0])
    ax1.set_ylabel(labels[1])
    ax1.set_title(f"{curve.meta.get('case', 'curve')} generator ({curve.plane}-plane)")
    ax1.set_aspect("equal", adjustable="datalim")
    ax2.plot(s, curve.points[:, i], lw=1.0, label=labels[0])
    ax2.plot(s, curve.points[:, j], lw=1.0, label=labels[1])
    ax2.set_xlabel("parameter")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_verification_figure(details: dict, which: str, path) -> None:
    """Recovered curvature against the prescription and the per-node error."""
    s = details["s"]
    recovered = details["H"] if which == "mean" else details["S"]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.plot(s, details["profile"], lw=1.4, label="prescribed")
    ax1.plot(s, recovered.mean(axis=1), "--", lw=1.0, label="recomputed")
    ax1.set_xlabel("parameter")
    ax1.set_ylabel("H" if which == "mean" else "S")
    ax1.legend()
    ax2.semilogy(s, details["error_per_s"], lw=1.0)
    ax2.set_xlabel("parameter")
    ax2.set_ylabel("max abs error over theta")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
