"""Ordered greedy construction of edge-discriminating labelings.

Vertices are processed along an ordering; each vertex receives the smallest
admissible increment over its initial value, where a value is inadmissible
exactly when it would equate the weights of two edges whose symmetric
difference tops out at this vertex, or zero out an edge whose maximal vertex
it is.  The construction always succeeds, and its total weight is capped by
a closed-form certificate computable from the ordering and the initial
values alone (``greedy_weight_bound``).

With all-zero initial values the certificate is n(n+1)/2.  Seeding the
initial values with the indicator of a hitting set placed last in the order
tightens it to n(n-1)/2 + |hitting set| (``hitting_set_labeling``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from .core import Hypergraph, HypergraphError, Labeling


@dataclass(frozen=True)
class Ordering:
    """Bijection position -> vertex; position 1 is processed first."""

    vertices: tuple[str, ...]

    @classmethod
    def default(cls, hg: Hypergraph) -> "Ordering":
        """Canonical vertex order of the hypergraph (first appearance)."""
        return cls(hg.vertices)

    @classmethod
    def from_sequence(cls, hg: Hypergraph, seq: Sequence[str]) -> "Ordering":
        if sorted(seq) != sorted(hg.vertices):
            raise HypergraphError("ordering is not a permutation of the vertex set")
        return cls(tuple(seq))

    def position(self, vertex: str) -> int:
        """1-based position of a vertex."""
        return self.vertices.index(vertex) + 1


class DifferentiatingVertex(NamedTuple):
    vertex: str
    containing_edge: int
    other_edge: int


def differentiating_vertex(hg: Hypergraph, order: Ordering, i: int, j: int) -> DifferentiatingVertex:
    """Order-maximal vertex of the symmetric difference of edges ``i`` and ``j``.

    Reports which of the two edges contains that vertex.  Defined whenever
    the edges differ, which the data model guarantees.
    """
    if i == j:
        raise HypergraphError("differentiating vertex needs two distinct edges")
    a, b = hg.edge(i), hg.edge(j)
    pos = {v: k for k, v in enumerate(order.vertices)}
    diff = a.symmetric_difference(b)
    v = max(diff, key=pos.__getitem__)
    return DifferentiatingVertex(v, i if v in a else j, j if v in a else i)


@dataclass(frozen=True)
class ConstructionState:
    """Per-vertex bookkeeping of one construction run.

    ``pi`` counts edges whose maximal vertex is v, ``chi`` counts edge pairs
    whose differentiating vertex is v; over all vertices they total n and
    n(n-1)/2.  The exclusion sets record, at the moment v was processed, the
    absolute weight gaps of those pairs and the weights of those edges.
    """

    pi: Mapping[str, int]
    chi: Mapping[str, int]
    exclusion_pairs: Mapping[str, frozenset[int]]
    exclusion_edges: Mapping[str, frozenset[int]]


def _prepare(hg: Hypergraph, order: Ordering | None, init: Labeling | None):
    order = order or Ordering.default(hg)
    if sorted(order.vertices) != sorted(hg.vertices):
        raise HypergraphError("ordering is not a permutation of the vertex set")
    init = init if init is not None else Labeling.for_hypergraph(hg)
    init = Labeling.for_hypergraph(hg, dict(init.values))
    pos = {v: k for k, v in enumerate(order.vertices)}
    # pairs_at[v]: (containing edge, other edge) for pairs differentiated at v
    pairs_at: dict[str, list[tuple[int, int]]] = {v: [] for v in hg.vertices}
    maximal_at: dict[str, list[int]] = {v: [] for v in hg.vertices}
    for i in range(1, hg.n + 1):
        maximal_at[max(hg.edge(i), key=pos.__getitem__)].append(i)
        for j in range(i + 1, hg.n + 1):
            d = differentiating_vertex(hg, order, i, j)
            pairs_at[d.vertex].append((d.containing_edge, d.other_edge))
    return order, init, pairs_at, maximal_at


def construction_trace(
    hg: Hypergraph, order: Ordering | None = None, init: Labeling | None = None
) -> tuple[Labeling, ConstructionState]:
    """Run the greedy construction, returning the labeling and its bookkeeping."""
    order, init, pairs_at, maximal_at = _prepare(hg, order, init)
    values = {v: init.get(v) for v in hg.vertices}
    weights = [sum(values[v] for v in e) for e in hg.edges]
    excl_pairs: dict[str, frozenset[int]] = {}
    excl_edges: dict[str, frozenset[int]] = {}
    for v in order.vertices:
        seed = init.get(v)
        excl_pairs[v] = frozenset(abs(weights[hi - 1] - weights[lo - 1]) for hi, lo in pairs_at[v])
        excl_edges[v] = frozenset(weights[i - 1] for i in maximal_at[v])
        # Inadmissible increments: exactly those equating a pair split at v.
        # Gaps on the wrong side (containing edge already heavier) never
        # collide for non-negative increments.
        blocked = {gap for hi, lo in pairs_at[v] if (gap := weights[lo - 1] - weights[hi - 1]) >= 0}
        if seed == 0 and any(weights[i - 1] == 0 for i in maximal_at[v]):
            blocked.add(0)
        bump = 0
        while bump in blocked:
            bump += 1
        if bump:
            values[v] = seed + bump
            for i in hg.incidences[v]:
                weights[i - 1] += bump
    state = ConstructionState(
        pi={v: len(maximal_at[v]) for v in hg.vertices},
        chi={v: len(pairs_at[v]) for v in hg.vertices},
        exclusion_pairs=excl_pairs,
        exclusion_edges=excl_edges,
    )
    return Labeling(values), state


def greedy_labeling(hg: Hypergraph, order: Ordering | None = None, init: Labeling | None = None) -> Labeling:
    """Greedy edge-discriminating labeling for the given ordering and seed."""
    return construction_trace(hg, order, init)[0]


def greedy_weight_bound(hg: Hypergraph, order: Ordering | None = None, init: Labeling | None = None) -> int:
    """Certified cap on the greedy labeling's total weight.

    n(n+1)/2, minus the count of edges whose maximal vertex carries a
    positive initial value, plus the sum of the initial values.
    """
    order = order or Ordering.default(hg)
    init = init if init is not None else Labeling.for_hypergraph(hg)
    pos = {v: k for k, v in enumerate(order.vertices)}
    n = hg.n
    saved = 0
    for i in range(1, n + 1):
        if init.get(max(hg.edge(i), key=pos.__getitem__)) > 0:
            saved += 1
    return n * (n + 1) // 2 - saved + init.total()


def hitting_set_labeling(hg: Hypergraph) -> tuple[Labeling, Ordering, Labeling]:
    """Greedy construction seeded by a greedily-chosen hitting set placed last.

    Returns the labeling together with the ordering and initial values used,
    so the certificate can be recomputed.  The certificate then reads
    n(n-1)/2 + |hitting set|, since every edge's maximal vertex lands in the
    set.
    """
    from .analysis import greedy_hitting_set

    hitting = greedy_hitting_set(hg)
    hitting_set = set(hitting)
    rest = [v for v in hg.vertices if v not in hitting_set]
    order = Ordering(tuple(rest) + hitting)
    init = Labeling.for_hypergraph(hg, {v: 1 for v in hitting})
    return greedy_labeling(hg, order, init), order, init
