"""Distinct-sum integer sets and the labelings they induce on uniform hypergraphs.

A set of positive integers has the order-h distinct-sum property when all
sums of h elements, repetition allowed, are pairwise different.  Assigning
such a set injectively to the vertices of an r-uniform hypergraph (h = r)
discriminates the edges outright: distinct edges pick distinct r-element
label subsets, and those cannot share a sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import ceil, comb

from .core import Hypergraph, HypergraphError, Labeling, Verdict


@dataclass(frozen=True)
class BhSet:
    """Strictly increasing positive integers with distinct h-element sums."""

    h: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.h < 1:
            raise ValueError("order must be at least 1")
        if any(e < 1 for e in self.elements):
            raise ValueError("elements must be positive")
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError("elements must be strictly increasing")


def _sums_distinct(elements: tuple[int, ...], h: int) -> bool:
    seen = set()
    for combo in combinations_with_replacement(elements, h):
        s = sum(combo)
        if s in seen:
            return False
        seen.add(s)
    return True


def verify_bh(candidate: BhSet) -> Verdict:
    """Exhaustively check the distinct-sum property; names the first collision."""
    seen: dict[int, tuple[int, ...]] = {}
    for combo in combinations_with_replacement(candidate.elements, candidate.h):
        s = sum(combo)
        if s in seen and seen[s] != combo:
            first = "+".join(map(str, seen[s]))
            second = "+".join(map(str, combo))
            return Verdict(False, f"collision: {first} = {second} = {s}")
        seen[s] = combo
    return Verdict(True, "valid")


def greedy_bh(h: int, count: int) -> BhSet:
    """Greedily grown distinct-sum set: start at 1, append the least integer
    that keeps all h-element sums (repetition allowed) distinct."""
    if h < 1 or count < 1:
        raise ValueError("order and count must be positive")
    elements = [1]
    candidate = 1
    while len(elements) < count:
        candidate += 1
        if _sums_distinct(tuple(elements) + (candidate,), h):
            elements.append(candidate)
    return BhSet(h, tuple(elements))


def uniformity(hg: Hypergraph) -> int:
    """Common edge size of a uniform hypergraph; error names the first misfit."""
    if hg.n == 0:
        raise HypergraphError("uniformity is undefined without edges")
    r = len(hg.edge(1))
    for i in range(2, hg.n + 1):
        if len(hg.edge(i)) != r:
            raise HypergraphError(f"edge {i} has {len(hg.edge(i))} vertices, expected {r}")
    return r


def sidon_labeling(hg: Hypergraph, r: int | None = None) -> Labeling:
    """Label an r-uniform hypergraph with a greedy order-r distinct-sum set.

    Vertices receive the set elements in canonical vertex order.  The result
    always discriminates the edges; its total is typically far above the
    optimum but bounded independently of the edge count.
    """
    actual = uniformity(hg)
    if r is not None and actual != r:
        raise HypergraphError(f"hypergraph is {actual}-uniform, not {r}-uniform")
    elements = greedy_bh(actual, hg.m).elements
    return Labeling.for_hypergraph(hg, dict(zip(hg.vertices, elements)))


def complete_uniform_lower_bound(m: int, r: int) -> int:
    """Weight lower bound for the complete r-uniform hypergraph on m vertices.

    Each vertex lies on C(m-1, r-1) edges, so the edge sums, which are
    distinct positive integers, total at most that multiple of the labeling
    weight: ceil(C(m,r) * (C(m,r)+1) / (2 * C(m-1,r-1))).
    """
    if not 1 <= r <= m:
        raise ValueError("need 1 <= r <= m")
    edges = comb(m, r)
    degree = comb(m - 1, r - 1)
    return ceil(edges * (edges + 1) / (2 * degree))
