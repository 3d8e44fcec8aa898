"""Weight bounds and the exhaustive attainability census.

Bounds side: exact maximum matching and minimum hitting set by
branch-and-bound, combined into a report of the elementary lower and upper
bounds on the optimal discriminator weight.

Census side: every reduced hypergraph with n edges is (up to merging equal
incidence) a set of non-empty subsets of the edge index set covering every
index and separating every index pair.  For n <= 4 the candidate space
(subsets of the 2^n - 1 incidence vectors) is small enough to enumerate
outright; solving each valid instance exactly yields the set of weights
that occur as optimal discriminator weights.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from itertools import permutations
from math import ceil
from typing import Iterator, Mapping

from .core import Hypergraph, ReducedHypergraph
from .solver import solve_reduced

CENSUS_MAX_EDGES = 4


def max_matching(hg: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Exact largest set of pairwise disjoint edges (1-based indices)."""
    n = hg.n
    vmask = []
    for i in range(1, n + 1):
        vmask.append(sum(1 << hg.vertex_index[v] for v in hg.edge(i)))
    best: list[tuple[int, ...]] = [()]

    def grow(i: int, used: int, chosen: tuple[int, ...]) -> None:
        if len(chosen) > len(best[0]):
            best[0] = chosen
        if len(chosen) + (n - i) <= len(best[0]):
            return
        for j in range(i, n):
            if not used & vmask[j]:
                grow(j + 1, used | vmask[j], chosen + (j + 1,))

    grow(0, 0, ())
    return len(best[0]), best[0]


def greedy_hitting_set(hg: Hypergraph) -> tuple[str, ...]:
    """Hitting set grown by repeatedly taking the vertex meeting the most
    uncovered edges (ties broken by vertex order).  Not necessarily minimum."""
    uncovered = set(range(1, hg.n + 1))
    chosen: list[str] = []
    while uncovered:
        v = max(hg.vertices, key=lambda u: (len(hg.incidences[u] & uncovered), -hg.vertex_index[u]))
        gain = hg.incidences[v] & uncovered
        if not gain:
            raise AssertionError("unreachable: some vertex meets every remaining edge")
        chosen.append(v)
        uncovered -= gain
    return tuple(chosen)


def min_hitting_set(hg: Hypergraph) -> tuple[int, tuple[str, ...]]:
    """Exact minimum vertex set meeting every edge.

    Iterative deepening on the set size; branches over the vertices of the
    first uncovered edge, so the witness is deterministic.
    """
    if hg.n == 0:
        return 0, ()

    def extend(chosen: list[str], covered: frozenset[int], budget: int) -> tuple[str, ...] | None:
        if len(covered) == hg.n:
            return tuple(chosen)
        if budget == 0:
            return None
        first = next(i for i in range(1, hg.n + 1) if i not in covered)
        for v in sorted(hg.edge(first), key=hg.vertex_index.__getitem__):
            chosen.append(v)
            hit = extend(chosen, covered | hg.incidences[v], budget - 1)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    for k in range(1, hg.m + 1):
        hit = extend([], frozenset(), k)
        if hit is not None:
            return k, hit
    raise AssertionError("unreachable: the whole vertex set hits every edge")


@dataclass(frozen=True)
class BoundsReport:
    """Elementary bounds on the optimal discriminator weight of one hypergraph."""

    n: int
    matching_size: int
    matching_witness: tuple[int, ...]
    hitting_size: int
    hitting_witness: tuple[str, ...]
    max_degree: int
    lower: int
    upper_general: int
    upper_hitting: int

    def format(self) -> str:
        lines = [
            f"n {self.n}",
            f"matching {self.matching_size} edges {','.join(map(str, self.matching_witness))}",
            f"hitting-set {self.hitting_size} vertices {','.join(self.hitting_witness)}",
            f"max-degree {self.max_degree}",
            f"lower {self.lower}",
            f"upper-general {self.upper_general}",
            f"upper-hitting {self.upper_hitting}",
        ]
        return "\n".join(lines) + "\n"


def bounds(hg: Hypergraph) -> BoundsReport:
    """Assemble the lower bound max(n, d(d+1)/2, ceil(n(n+1)/(2D))) and the
    upper bounds n(n+1)/2 and n(n-1)/2 + hitting set size, with witnesses.

    d is the maximum matching size and D the maximum vertex degree; the
    degree term double-counts the distinct positive edge sums against D.
    """
    n = hg.n
    delta, matching_witness = max_matching(hg)
    hitting_size, hitting_witness = min_hitting_set(hg)
    max_deg = hg.max_degree
    lower = max(n, delta * (delta + 1) // 2)
    if max_deg > 0:
        lower = max(lower, ceil(n * (n + 1) / (2 * max_deg)))
    return BoundsReport(
        n=n,
        matching_size=delta,
        matching_witness=matching_witness,
        hitting_size=hitting_size,
        hitting_witness=hitting_witness,
        max_degree=max_deg,
        lower=lower,
        upper_general=n * (n + 1) // 2,
        upper_hitting=n * (n - 1) // 2 + hitting_size,
    )


def _vector_space(n: int) -> list[int]:
    return list(range(1, 1 << n))


def _valid_masks(masks: tuple[int, ...], n: int) -> bool:
    cover = 0
    for m in masks:
        cover |= m
    if cover != (1 << n) - 1:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if not any((m >> i & 1) != (m >> j & 1) for m in masks):
                return False
    return True


def _permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i, p in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << p
    return out


def _is_canonical(masks: tuple[int, ...], n: int) -> bool:
    base = tuple(sorted(masks))
    for perm in permutations(range(n)):
        if tuple(sorted(_permute_mask(m, perm) for m in masks)) < base:
            return False
    return True


def _mask_to_vector(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def enumerate_reduced(n: int, dedup: bool = False) -> Iterator[ReducedHypergraph]:
    """All reduced hypergraphs with n edges, as incidence-vector sets.

    Enumerates every subset of the non-empty incidence vectors over the edge
    index set, keeping those covering each index with pairwise distinct edge
    supports.  ``dedup`` additionally keeps only the lexicographically least
    representative of each edge-relabeling orbit.
    """
    if n < 1:
        raise ValueError("need at least one edge")
    if n > CENSUS_MAX_EDGES:
        raise ValueError(f"exhaustive enumeration is limited to n <= {CENSUS_MAX_EDGES}")
    vectors = _vector_space(n)
    for bits in range(1, 1 << len(vectors)):
        masks = tuple(vectors[i] for i in range(len(vectors)) if bits >> i & 1)
        if not _valid_masks(masks, n):
            continue
        if dedup and not _is_canonical(masks, n):
            continue
        yield ReducedHypergraph.from_vectors(map(_mask_to_vector, masks), n)


def _witness_key(classes: tuple[frozenset[int], ...]) -> tuple:
    return (len(classes), tuple(sorted(tuple(sorted(c)) for c in classes)))


def _census_chunk(args) -> tuple[dict[int, tuple], int]:
    """Solve all valid candidates in [start, stop); returns per-weight minimal
    witnesses and the count of valid instances, plus instance records."""
    n, start, stop, dedup, node_cap, keep = args
    vectors = _vector_space(n)
    best: dict[int, tuple] = {}
    records = []
    valid = 0
    for bits in range(start, stop):
        masks = tuple(vectors[i] for i in range(len(vectors)) if bits >> i & 1)
        if not _valid_masks(masks, n):
            continue
        if dedup and not _is_canonical(masks, n):
            continue
        valid += 1
        rh = ReducedHypergraph.from_vectors(map(_mask_to_vector, masks), n)
        w, _, _ = solve_reduced(rh, node_cap)
        key = _witness_key(rh.classes)
        if w not in best or key < best[w][0]:
            best[w] = (key, rh.classes)
        if keep:
            records.append((rh.classes, w))
    return best, valid, records


@dataclass(frozen=True)
class CensusReport:
    """Attainable optimal weights among all reduced hypergraphs with n edges."""

    n: int
    instances_examined: int
    valid_instances: int
    attainable: Mapping[int, tuple[frozenset[int], ...]]
    non_attainable: tuple[int, ...]
    instances: tuple[tuple[tuple[frozenset[int], ...], int], ...] | None = None

    def format(self) -> str:
        lines = [f"n={self.n} instances={self.instances_examined}"]
        for w in range(self.n, self.n * (self.n + 1) // 2 + 1):
            if w in self.attainable:
                witness = ";".join(
                    ",".join(map(str, sorted(c))) for c in self.attainable[w]
                )
                lines.append(f"w={w} attainable witness={witness}")
            else:
                lines.append(f"w={w} non-attainable")
        return "\n".join(lines) + "\n"


def census(
    n: int,
    dedup: bool = False,
    workers: int = 1,
    node_cap: int | None = None,
    keep_instances: bool = False,
) -> CensusReport:
    """Solve every reduced hypergraph with n edges and aggregate the optimal
    weights attained, with a minimal witness (fewest classes, then
    lexicographic) per weight.

    The aggregation is associative, so the report does not depend on the
    worker count.  ``keep_instances`` retains the per-instance (classes,
    weight) records for downstream checks.
    """
    if n < 1:
        raise ValueError("need at least one edge")
    if n > CENSUS_MAX_EDGES:
        raise ValueError(f"exhaustive census is limited to n <= {CENSUS_MAX_EDGES}")
    space = 1 << len(_vector_space(n))
    if workers <= 1:
        parts = [_census_chunk((n, 0, space, dedup, node_cap, keep_instances))]
    else:
        step = ceil(space / (workers * 8))
        chunks = [
            (n, lo, min(lo + step, space), dedup, node_cap, keep_instances)
            for lo in range(0, space, step)
        ]
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_census_chunk, chunks)
    best: dict[int, tuple] = {}
    valid = 0
    records: list[tuple[tuple[frozenset[int], ...], int]] = []
    for part_best, part_valid, part_records in parts:
        valid += part_valid
        records.extend(part_records)
        for w, entry in part_best.items():
            if w not in best or entry[0] < best[w][0]:
                best[w] = entry
    attainable = {w: best[w][1] for w in sorted(best)}
    non_attainable = tuple(
        w for w in range(n, n * (n + 1) // 2 + 1) if w not in attainable
    )
    return CensusReport(
        n=n,
        instances_examined=space,
        valid_instances=valid,
        attainable=attainable,
        non_attainable=non_attainable,
        instances=tuple(records) if keep_instances else None,
    )


@dataclass(frozen=True)
class ConjectureScan:
    """Which weights in [n(n-1)/2 + 2, n(n+1)/2 - 1] the census attains.

    Evidence gathering only: the interval is conjectured to contain no
    attainable weight, and the census can confirm or refute that for small n
    without proving anything beyond it.
    """

    n: int
    lower: int
    upper: int
    attained: tuple[int, ...]

    def format(self) -> str:
        attained = ",".join(map(str, self.attained))
        return f"conjecture n={self.n} interval=[{self.lower},{self.upper}] attained={attained}\n"


def conjecture_scan(n: int, report: CensusReport | None = None) -> ConjectureScan:
    """Scan the conjectured non-attainable interval against census results."""
    if report is None:
        report = census(n)
    lower = n * (n - 1) // 2 + 2
    upper = n * (n + 1) // 2 - 1
    attained = tuple(w for w in range(lower, upper + 1) if w in report.attainable)
    return ConjectureScan(n, lower, upper, attained)
