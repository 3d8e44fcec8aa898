"""Shared helpers: deterministic random instances and geometric fixtures."""

from __future__ import annotations

import random
from fractions import Fraction as F

from edgediscrim import Hypergraph, Labeling, Ordering, Rect


def random_hypergraph(rng: random.Random, max_edges: int = 6, max_vertices: int = 10) -> Hypergraph:
    """Uniform-ish hypergraph with distinct non-empty edges, reproducible from rng."""
    n = rng.randint(1, max_edges)
    m = rng.randint(max(1, n.bit_length()), max_vertices)
    verts = [f"x{i}" for i in range(1, m + 1)]
    edges: set[frozenset[str]] = set()
    while len(edges) < n:
        size = rng.randint(1, m)
        edges.add(frozenset(rng.sample(verts, size)))
    ordered = sorted(edges, key=sorted)
    rng.shuffle(ordered)
    return Hypergraph.from_edges([sorted(e) for e in ordered], verts)


def random_ordering(rng: random.Random, hg: Hypergraph) -> Ordering:
    perm = list(hg.vertices)
    rng.shuffle(perm)
    return Ordering.from_sequence(hg, perm)


def random_seed_labeling(rng: random.Random, hg: Hypergraph) -> Labeling:
    """Initial values biased toward zero, occasionally up to 3."""
    return Labeling.for_hypergraph(
        hg, {v: max(0, rng.randint(-2, 3)) for v in hg.vertices}
    )


def squares(*corners, side=1):
    return [Rect(F(x), F(y), F(x) + side, F(y) + side) for x, y in corners]


def disjoint_squares(n):
    return squares(*[(2 * i, 0) for i in range(n)])


def nested_squares(n):
    """Strictly increasing boxes sharing no boundary coordinates."""
    return [Rect(F(-i), F(-i), F(i + 1), F(i + 1)) for i in range(n)]


def chain_squares(n):
    """n-2 isolated unit squares plus one square nested inside a larger last one."""
    regions = squares(*[(3 * i, 0) for i in range(n - 2)])
    base = 3 * (n - 2)
    regions.append(Rect(F(base), F(0), F(base + 1), F(1)))
    regions.append(Rect(F(base) - F(1, 2), F(-1), F(base + 2), F(2)))
    return regions
