"""Matplotlib figures written next to the CLI's text reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from kfc.complex import CfkComplex  # noqa: E402
from kfc.hat import HatComplex  # noqa: E402
from kfc.render import layout  # noqa: E402

# PNG/SVG metadata would otherwise embed version strings and dates
_METADATA = {"Software": None}


def _draw_plane(ax, c: CfkComplex | HatComplex, tau: int | None = None) -> None:
    lay = layout(c)
    imin, imax, jmin, jmax = lay.bounds()
    if tau is not None:
        ax.axvspan(-0.2, 0.2, ymin=0, ymax=1, color="0.9", zorder=0)
        ax.fill_between([-0.2, imax + 1], tau - 0.2, tau + 0.2, color="0.9", zorder=0)
    for src, tgt, lab in lay.segments:
        ax.annotate("", xy=(tgt.x, tgt.y), xytext=(src.x, src.y),
                    arrowprops=dict(arrowstyle="->", lw=1.4, color="black"))
        if lab:
            ax.text((src.x + tgt.x) / 2 + 0.05, (src.y + tgt.y) / 2, lab, fontsize=7)
    for it in lay.items:
        ax.plot(it.x, it.y, "o", ms=5, mfc="black" if it.solid else "white", mec="black", zorder=3)
        ax.text(it.x + 0.06, it.y + 0.12, it.label, fontsize=6)
    ax.set_xlim(imin - 1, imax + 1)
    ax.set_ylim(jmin - 1, jmax + 1)
    ax.set_xticks(range(imin - 1, imax + 2))
    ax.set_yticks(range(jmin - 1, jmax + 2))
    ax.grid(color="0.92", lw=0.6)
    ax.axhline(0, color="0.6", lw=0.8)
    ax.axvline(0, color="0.6", lw=0.8)
    ax.set_xlabel("i")
    ax.set_ylabel("j")
    ax.set_title(c.name, fontsize=9)


def _draw_am(ax, h: HatComplex) -> None:
    """Generators at (A, M), arrows for the higher differentials."""
    points: dict[tuple[int, int], list[str]] = {}
    for g in h.generators:
        points.setdefault((g.alexander, g.maslov), []).append(g.id)
    pos = {}
    for (a, m), ids in points.items():
        for k, gid in enumerate(sorted(ids)):
            d = 0.12 * (k - (len(ids) - 1) / 2)
            pos[gid] = (a + d, m - d)
    for arrow in h.arrows:
        (x0, y0), (x1, y1) = pos[arrow.source], pos[arrow.target]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", lw=1.2, color="black"))
    for gid, (x, y) in sorted(pos.items()):
        ax.plot(x, y, "o", ms=4, color="black", zorder=3)
        ax.text(x + 0.08, y + 0.1, gid, fontsize=6)
    ax.grid(color="0.92", lw=0.6)
    ax.set_xlabel("A")
    ax.set_ylabel("M")
    ax.set_title(h.name, fontsize=9)


def save(fig, path: str | Path) -> Path:
    path = Path(path)
    fig.savefig(path, dpi=150, bbox_inches="tight",
                metadata=_METADATA if path.suffix.lower() == ".png" else None)
    plt.close(fig)
    return path


def plot_complex(c: CfkComplex | HatComplex, path: str | Path, tau: int | None = None) -> Path:
    fig, ax = plt.subplots(figsize=(4, 5))
    _draw_plane(ax, c, tau)
    return save(fig, path)


def plot_hat_grid(complexes: list[HatComplex], path: str | Path) -> Path:
    fig, axes = plt.subplots(1, len(complexes), figsize=(4.5 * len(complexes), 4.5), squeeze=False)
    for ax, h in zip(axes[0], complexes):
        _draw_am(ax, h)
    fig.tight_layout()
    return save(fig, path)
