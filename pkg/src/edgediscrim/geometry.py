"""Geometric set discrimination for interval and axis-aligned rectangle families.

A family of n regions cuts space into cells of constant membership; the
distinct non-empty membership patterns are exactly the incidence classes of
a reduced hypergraph whose edge i collects the cells inside region i.
Solving that hypergraph exactly and dropping each class weight as that many
points into a representative cell yields a smallest point set whose
per-region counts are positive and pairwise distinct.

All coordinates are exact rationals; membership tests use strict
inequalities, so no produced point ever sits on a region boundary.

``.rg`` format: one region per line, ``rect x0 y0 x1 y1`` or
``interval a b`` with decimal or ``p/q`` literals; ``#`` comments and blank
lines ignored.  A file must not mix the two region kinds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import FormatError, HypergraphError, ReducedHypergraph
from .solver import solve_reduced


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise HypergraphError(f"degenerate interval [{self.lo}, {self.hi}]")

    @property
    def dimension(self) -> int:
        return 1

    def contains(self, point: Sequence[Fraction]) -> bool:
        return self.lo < point[0] < self.hi


@dataclass(frozen=True)
class Rect:
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    def __post_init__(self) -> None:
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise HypergraphError("degenerate rectangle")

    @property
    def dimension(self) -> int:
        return 2

    def contains(self, point: Sequence[Fraction]) -> bool:
        return self.x0 < point[0] < self.x1 and self.y0 < point[1] < self.y1


Region = Interval | Rect


@dataclass(frozen=True)
class Cell:
    """Open axis-aligned box between consecutive arrangement coordinates."""

    box: tuple[tuple[Fraction, Fraction], ...]
    incidence: frozenset[int]

    @property
    def midpoint(self) -> tuple[Fraction, ...]:
        return tuple((lo + hi) / 2 for lo, hi in self.box)


def _parse_number(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad coordinate {token!r}", lineno) from None


def parse_regions(text: str) -> list[Region]:
    """Parse the ``.rg`` format; all regions must share one dimension."""
    regions: list[Region] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind, coords = tokens[0], [_parse_number(t, lineno) for t in tokens[1:]]
        if kind == "interval" and len(coords) == 2:
            region: Region = Interval(*coords)
        elif kind == "rect" and len(coords) == 4:
            region = Rect(*coords)
        else:
            raise FormatError(
                f"expected 'interval a b' or 'rect x0 y0 x1 y1', got {line!r}", lineno
            )
        if regions and regions[0].dimension != region.dimension:
            raise FormatError("cannot mix intervals and rectangles", lineno)
        regions.append(region)
    return regions


def _axis_coordinates(regions: Sequence[Region]) -> list[list[Fraction]]:
    if regions[0].dimension == 1:
        xs = sorted({c for r in regions for c in (r.lo, r.hi)})
        return [xs]
    xs = sorted({c for r in regions for c in (r.x0, r.x1)})
    ys = sorted({c for r in regions for c in (r.y0, r.y1)})
    return [xs, ys]


def arrangement_cells(regions: Sequence[Region]) -> list[Cell]:
    """Open grid cells between consecutive region coordinates, with incidence.

    Region boundaries all lie on grid lines, so each open cell is entirely
    inside or entirely outside every region and its midpoint decides
    membership.  Cells meeting no region are dropped.
    """
    if not regions:
        raise HypergraphError("need at least one region")
    if len({r.dimension for r in regions}) != 1:
        raise HypergraphError("regions must share one dimension")
    axes = _axis_coordinates(regions)
    spans = [[(c[k], c[k + 1]) for k in range(len(c) - 1)] for c in axes]
    cells = []
    if len(axes) == 1:
        boxes: Iterable[tuple] = ((sx,) for sx in spans[0])
    else:
        boxes = ((sx, sy) for sx in spans[0] for sy in spans[1])
    for box in boxes:
        mid = tuple((lo + hi) / 2 for lo, hi in box)
        incidence = frozenset(i for i, r in enumerate(regions, 1) if r.contains(mid))
        if incidence:
            cells.append(Cell(box, incidence))
    return cells


def geometric_hypergraph(regions: Sequence[Region]) -> tuple[ReducedHypergraph, dict[int, Cell]]:
    """Reduced hypergraph of the arrangement plus one representative cell per class."""
    cells = arrangement_cells(regions)
    by_incidence: dict[frozenset[int], Cell] = {}
    for cell in cells:
        by_incidence.setdefault(cell.incidence, cell)
    reduced = ReducedHypergraph.from_vectors(by_incidence, len(regions))
    for i in range(1, len(regions) + 1):
        if not any(i in c for c in reduced.classes):
            raise AssertionError(f"region {i} covered by no cell")
    return reduced, {k: by_incidence[vec] for k, vec in enumerate(reduced.classes)}


@dataclass(frozen=True)
class PointPlacement:
    """Finite point set realizing an optimal discriminator geometrically.

    Each entry of ``points`` is (coordinates, multiplicity, class index);
    all produced points are distinct, so every multiplicity is 1.
    """

    dimension: int
    points: tuple[tuple[tuple[Fraction, ...], int, int], ...]
    per_region_count: Mapping[int, int]
    total: int

    def format(self) -> str:
        lines = []
        for coords, _multiplicity, cls in self.points:
            rendered = " ".join(format_fraction(c) for c in coords)
            lines.append(f"point {rendered} cell={cls}")
        for i in sorted(self.per_region_count):
            lines.append(f"region {i} count={self.per_region_count[i]}")
        lines.append(f"total {self.total}")
        return "\n".join(lines) + "\n"


def format_fraction(q: Fraction) -> str:
    """Exact decimal rendering when the denominator allows it, else ``p/q``."""
    if q.denominator == 1:
        return str(q.numerator)
    den, twos, fives = q.denominator, 0, 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(twos, fives)
    scaled = abs(q.numerator) * 10**digits // q.denominator
    sign = "-" if q.numerator < 0 else ""
    text = str(scaled).rjust(digits + 1, "0")
    whole, frac = text[:-digits], text[-digits:].rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def _spread_points(cell: Cell, count: int) -> list[tuple[Fraction, ...]]:
    """``count`` distinct points strictly inside the cell, evenly spaced along
    its longest axis, the other axis held at the midpoint."""
    extents = [hi - lo for lo, hi in cell.box]
    axis = max(range(len(extents)), key=extents.__getitem__)
    mid = cell.midpoint
    out = []
    lo, hi = cell.box[axis]
    for j in range(1, count + 1):
        coords = list(mid)
        coords[axis] = lo + (hi - lo) * Fraction(j, count + 1)
        out.append(tuple(coords))
    return out


def geometric_discriminator(
    regions: Sequence[Region], node_cap: int | None = None
) -> PointPlacement:
    """Smallest point set giving every region a positive, distinct point count."""
    reduced, cells = geometric_hypergraph(regions)
    _, values, _ = solve_reduced(reduced, node_cap)
    points = []
    counts = dict.fromkeys(range(1, len(regions) + 1), 0)
    for cls, value in enumerate(values):
        if value == 0:
            continue
        for coords in _spread_points(cells[cls], value):
            points.append((coords, 1, cls))
        for i in reduced.classes[cls]:
            counts[i] += value
    return PointPlacement(
        dimension=regions[0].dimension,
        points=tuple(points),
        per_region_count=counts,
        total=sum(v for v in values),
    )


def count_points_in_regions(
    regions: Sequence[Region], placement: PointPlacement
) -> dict[int, int]:
    """Recount placed points per region by direct containment tests.

    Independent of the hypergraph route; used to re-verify placements.
    """
    counts = dict.fromkeys(range(1, len(regions) + 1), 0)
    for coords, multiplicity, _cls in placement.points:
        for i, region in enumerate(regions, 1):
            if region.contains(coords):
                counts[i] += multiplicity
    return counts
