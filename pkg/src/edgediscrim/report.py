"""Figure and delimited-data rendering for census and geometry results.

Writes tab-separated data files next to PNG figures so reports can be read
by both machines and people.  Uses the non-interactive Agg backend; nothing
here opens a window.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

from .analysis import CensusReport
from .geometry import Interval, PointPlacement, Region, format_fraction

# Golden-ratio landscape, comfortable for single-panel figures.
_FIGSIZE = (6.4, 6.4 * 0.618)


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_census(report: CensusReport, outdir: Path) -> list[str]:
    """Write ``census_n<k>.tsv`` and ``census_n<k>.png``; returns the paths."""
    stem = f"census_n{report.n}"
    tsv = outdir / f"{stem}.tsv"
    png = outdir / f"{stem}.png"

    weights = list(range(report.n, report.n * (report.n + 1) // 2 + 1))
    rows = ["weight\tstatus\twitness"]
    for w in weights:
        if w in report.attainable:
            witness = ";".join(",".join(map(str, sorted(c))) for c in report.attainable[w])
            rows.append(f"{w}\tattainable\t{witness}")
        else:
            rows.append(f"{w}\tnon-attainable\t")
    tsv.write_text("\n".join(rows) + "\n")

    fig, ax = plt.subplots(figsize=_FIGSIZE)
    attained = [1 if w in report.attainable else 0 for w in weights]
    colors = ["#2a7e43" if a else "#b23a3a" for a in attained]
    ax.bar(weights, [1] * len(weights), color=colors, width=0.8)
    ax.set_xticks(weights)
    ax.set_yticks([])
    ax.set_xlabel("optimal discriminator weight")
    ax.set_title(
        f"attainable weights for {report.n} edges "
        f"({report.valid_instances} reduced instances)"
    )
    for w, a in zip(weights, attained):
        ax.text(w, 0.5, "yes" if a else "no", ha="center", va="center", color="white")
    _save(fig, png)
    return [str(tsv), str(png)]


def _draw_regions_2d(ax, regions: Sequence[Region]) -> None:
    cmap = plt.get_cmap("tab10")
    for i, r in enumerate(regions, 1):
        color = cmap((i - 1) % 10)
        ax.add_patch(
            Rectangle(
                (float(r.x0), float(r.y0)),
                float(r.x1 - r.x0),
                float(r.y1 - r.y0),
                fill=False,
                edgecolor=color,
                linewidth=1.5,
            )
        )
        ax.annotate(str(i), (float(r.x0), float(r.y1)), color=color,
                    fontsize=9, va="bottom")


def render_placement(
    regions: Sequence[Region], placement: PointPlacement, outdir: Path, stem: str
) -> list[str]:
    """Write ``<stem>_points.tsv``, ``<stem>_regions.tsv``, and ``<stem>.png``."""
    points_tsv = outdir / f"{stem}_points.tsv"
    regions_tsv = outdir / f"{stem}_regions.tsv"
    png = outdir / f"{stem}.png"

    head = "x\ty\tcell" if placement.dimension == 2 else "x\tcell"
    rows = [head]
    for coords, _mult, cls in placement.points:
        rows.append("\t".join(format_fraction(c) for c in coords) + f"\t{cls}")
    points_tsv.write_text("\n".join(rows) + "\n")

    rows = ["region\tcount"]
    for i in sorted(placement.per_region_count):
        rows.append(f"{i}\t{placement.per_region_count[i]}")
    regions_tsv.write_text("\n".join(rows) + "\n")

    fig, ax = plt.subplots(figsize=_FIGSIZE)
    if placement.dimension == 2:
        _draw_regions_2d(ax, regions)
        ax.plot(
            [float(c[0]) for c, _, _ in placement.points],
            [float(c[1]) for c, _, _ in placement.points],
            "k.", markersize=6, linestyle="none",
        )
        ax.set_aspect("equal")
        ax.autoscale_view()
    else:
        cmap = plt.get_cmap("tab10")
        for i, r in enumerate(regions, 1):
            assert isinstance(r, Interval)
            ax.hlines(i, float(r.lo), float(r.hi), color=cmap((i - 1) % 10), linewidth=2)
        for coords, _, _ in placement.points:
            ax.plot([float(coords[0])], [0], "k.", markersize=6)
        ax.set_yticks(range(1, len(regions) + 1))
        ax.set_ylabel("region")
    counts = ", ".join(
        f"{i}:{placement.per_region_count[i]}" for i in sorted(placement.per_region_count)
    )
    ax.set_title(f"{placement.total} points; per-region counts {counts}")
    _save(fig, png)
    return [str(points_tsv), str(regions_tsv), str(png)]
