"""Exact minimum-weight search for edge-discriminating labelings.

Iterative deepening over the total weight, with a depth-first search that
assigns weights to the incidence classes of the reduced hypergraph.  The
search prunes on: finalized edge sums that are zero or collide, edge pairs
whose remaining support coincides while their partial sums are equal (no
completion can separate them), and a budget test comparing the cheapest
admissible completion of the edge sums against what the remaining budget
can still contribute.

Deliberately exponential; intended for desk-scale instances.  The node cap
turns runaway searches into a distinct error rather than a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .core import Hypergraph, Labeling, ReducedHypergraph, reduce_hypergraph


class SearchLimitError(RuntimeError):
    """The configured node cap was hit before the search finished."""

    def __init__(self, nodes: int):
        super().__init__(f"search aborted after {nodes} nodes (node cap reached)")
        self.nodes = nodes


@dataclass(frozen=True)
class SolveResult:
    optimal_weight: int
    witness: Labeling
    nodes_explored: int


class _Search:
    """Depth-first search for a class weighting with a fixed total."""

    def __init__(self, masks: tuple[int, ...], edge_count: int, node_cap: int | None):
        # Classes in assignment order: many-edge classes first, then by mask.
        self.order = sorted(range(len(masks)), key=lambda c: (-masks[c].bit_count(), masks[c]))
        self.masks = [masks[c] for c in self.order]
        self.n = edge_count
        self.node_cap = node_cap
        self.nodes = 0
        k = len(self.masks)
        self.edge_classes = [
            [c for c in range(k) if self.masks[c] >> i & 1] for i in range(edge_count)
        ]
        degs = [m.bit_count() for m in self.masks]
        self.max_deg_from = [0] * (k + 1)
        for c in range(k - 1, -1, -1):
            self.max_deg_from[c] = max(degs[c], self.max_deg_from[c + 1])

    def run(self, total: int) -> list[int] | None:
        """Smallest (lexicographic in assignment order) witness of exactly ``total``."""
        k = len(self.masks)
        if k == 0:
            return [] if total == 0 else None
        sums = [0] * self.n
        support = [sum(1 << c for c in self.edge_classes[i]) for i in range(self.n)]
        values = [0] * k
        found = self._dfs(0, total, sums, support, {}, values)
        if found is None:
            return None
        out = [0] * k
        for slot, c in enumerate(self.order):
            out[c] = found[slot]
        return out

    def _min_extra(self, sums: list[int], support: list[int], finalized: dict[int, int]) -> int:
        """Cheapest total increase making all open edge sums positive and distinct."""
        used = set(finalized)
        extra = 0
        for i in sorted(range(self.n), key=sums.__getitem__):
            if support[i] == 0:
                continue
            f = sums[i] if sums[i] >= 1 else 1
            while f in used:
                f += 1
            used.add(f)
            extra += f - sums[i]
        return extra

    def _dfs(self, slot, remaining, sums, support, finalized, values):
        masks = self.masks
        k = len(masks)
        if slot == k:
            return list(values) if remaining == 0 else None
        edges_here = [i for i in range(self.n) if masks[slot] >> i & 1]
        bit = 1 << slot
        lo = remaining if slot == k - 1 else 0
        for x in range(lo, remaining + 1):
            self.nodes += 1
            if self.node_cap is not None and self.nodes > self.node_cap:
                raise SearchLimitError(self.nodes)
            values[slot] = x
            done: list[int] = []
            ok = True
            for i in edges_here:
                sums[i] += x
                support[i] &= ~bit
            for i in edges_here:
                s = sums[i]
                if support[i] == 0:
                    if s == 0 or s in finalized:
                        ok = False
                        break
                    finalized[s] = i
                    done.append(s)
                else:
                    sup = support[i]
                    for j in range(self.n):
                        if j != i and support[j] == sup and sums[j] == s:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                budget = self.max_deg_from[slot + 1] * (remaining - x)
                if self._min_extra(sums, support, finalized) > budget:
                    ok = False
            if ok:
                hit = self._dfs(slot + 1, remaining - x, sums, support, finalized, values)
                if hit is not None:
                    return hit
            for s in done:
                del finalized[s]
            for i in edges_here:
                sums[i] -= x
                support[i] |= bit
        return None


def matching_size(masks: tuple[int, ...], edge_count: int) -> int:
    """Largest set of pairwise disjoint edges, from the class incidence masks."""
    conflict = [0] * edge_count
    for i in range(edge_count):
        for j in range(i + 1, edge_count):
            if any(m >> i & 1 and m >> j & 1 for m in masks):
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    best = 0

    def grow(i: int, blocked: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (edge_count - i) <= best:
            return
        for j in range(i, edge_count):
            if not blocked >> j & 1:
                grow(j + 1, blocked | conflict[j] | 1 << j, size + 1)

    grow(0, 0, 0)
    return best


def reduced_lower_bound(reduced: ReducedHypergraph) -> int:
    """Largest of the three elementary lower bounds on the optimal weight.

    The edge count n (weights are distinct positive integers), the matching
    bound d(d+1)/2 over d pairwise disjoint edges, and the degree bound
    ceil(n(n+1)/(2D)) obtained by double counting edge sums against the
    maximum vertex degree D.
    """
    n = reduced.edge_count
    if n == 0:
        return 0
    masks = reduced.masks()
    d = matching_size(masks, n)
    max_deg = max(m.bit_count() for m in masks)
    return max(n, d * (d + 1) // 2, ceil(n * (n + 1) / (2 * max_deg)))


def solve_reduced(reduced: ReducedHypergraph, node_cap: int | None = None) -> tuple[int, tuple[int, ...], int]:
    """Optimal weight, per-class witness values, and nodes explored."""
    n = reduced.edge_count
    search = _Search(reduced.masks(), n, node_cap)
    for w in range(reduced_lower_bound(reduced), n * (n + 1) // 2 + 1):
        hit = search.run(w)
        if hit is not None:
            return w, tuple(hit), search.nodes
    raise AssertionError("unreachable: a discriminator of weight n(n+1)/2 always exists")


def exists_with_weight(hg: Hypergraph, w: int, node_cap: int | None = None) -> Labeling | None:
    """A valid labeling of total weight exactly ``w``, or None.

    The witness concentrates each class weight on the class representative;
    among such witnesses it is the lexicographically least in class
    assignment order.
    """
    if w < 0:
        raise ValueError("target weight must be non-negative")
    reduced = reduce_hypergraph(hg)
    hit = _Search(reduced.masks(), reduced.edge_count, node_cap).run(w)
    if hit is None:
        return None
    return _expand(hg, reduced, hit)


def _expand(hg: Hypergraph, reduced: ReducedHypergraph, values) -> Labeling:
    assignment = {reduced.representatives[c]: v for c, v in enumerate(values) if v}
    return Labeling.for_hypergraph(hg, assignment)


def exact_optimal(hg: Hypergraph, node_cap: int | None = None) -> SolveResult:
    """Minimum total weight of any edge-discriminating labeling, with witness."""
    reduced = reduce_hypergraph(hg)
    w, values, nodes = solve_reduced(reduced, node_cap)
    return SolveResult(w, _expand(hg, reduced, values), nodes)
