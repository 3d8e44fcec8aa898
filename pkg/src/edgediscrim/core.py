"""Hypergraph and labeling data model plus the text formats shared by the toolkit.

A hypergraph is a finite ordered vertex sequence together with an ordered list
of distinct, non-empty vertex subsets (the edges).  A labeling assigns a
non-negative integer to every vertex; it *discriminates* the edges when every
edge has positive total weight and no two edges have the same total.

Both objects are immutable after construction and safe to share across
threads.

Text formats
------------
``.hg``
    One edge per line, whitespace-separated vertex tokens.  Blank lines and
    lines whose first non-blank character is ``#`` are ignored.  Edges are
    numbered 1..n in file order, vertices in first-appearance order.
``.lbl``
    ``v <vertex> <weight>`` per vertex (first-appearance order), then
    ``e <i> <edgeweight>`` per edge, then ``total <w>``.  Comments and blank
    lines as in ``.hg``.  Only the ``v`` lines are read back; ``e``/``total``
    lines are recomputed on output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class HypergraphError(ValueError):
    """An invariant of the data model was violated."""


class FormatError(HypergraphError):
    """A text input could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph with distinct, non-empty edges.

    ``vertices`` fixes the canonical vertex order used by serialization and
    by all deterministic tie-breaking downstream.  Edge indices are 1-based
    everywhere in the public API, matching the text formats.
    """

    vertices: tuple[str, ...]
    edges: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise HypergraphError("vertex sequence contains duplicates")
        seen: dict[frozenset[str], int] = {}
        for idx, edge in enumerate(self.edges, 1):
            if not edge:
                raise HypergraphError(f"edge {idx} is empty")
            for v in edge:
                if v not in known:
                    raise HypergraphError(f"edge {idx} references unknown vertex {v!r}")
            if edge in seen:
                raise HypergraphError(f"edge {idx} duplicates edge {seen[edge]}")
            seen[edge] = idx

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[str]], vertices: Sequence[str] | None = None) -> "Hypergraph":
        """Build a hypergraph from edge vertex sequences.

        When ``vertices`` is omitted the vertex order is first appearance
        across the edges, scanning each edge left to right.
        """
        edge_tuples = [tuple(e) for e in edges]
        if vertices is None:
            order: dict[str, None] = {}
            for e in edge_tuples:
                for v in e:
                    order.setdefault(v)
            vertices = tuple(order)
        return cls(tuple(vertices), tuple(frozenset(e) for e in edge_tuples))

    @property
    def n(self) -> int:
        return len(self.edges)

    @property
    def m(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def incidences(self) -> dict[str, frozenset[int]]:
        """Vertex -> set of 1-based edge indices containing it."""
        inc: dict[str, set[int]] = {v: set() for v in self.vertices}
        for i, edge in enumerate(self.edges, 1):
            for v in edge:
                inc[v].add(i)
        return {v: frozenset(s) for v, s in inc.items()}

    @property
    def max_degree(self) -> int:
        if not self.vertices:
            return 0
        return max(len(s) for s in self.incidences.values())

    def edge(self, i: int) -> frozenset[str]:
        """Edge by 1-based index."""
        if not 1 <= i <= self.n:
            raise HypergraphError(f"edge index {i} out of range 1..{self.n}")
        return self.edges[i - 1]


@dataclass(frozen=True)
class Labeling:
    """Vertex -> non-negative integer weight, total over every vertex."""

    values: Mapping[str, int]

    @classmethod
    def for_hypergraph(cls, hg: Hypergraph, partial: Mapping[str, int] | None = None) -> "Labeling":
        """Labeling covering every vertex of ``hg``; missing entries default to 0."""
        values = dict.fromkeys(hg.vertices, 0)
        for v, w in (partial or {}).items():
            if v not in values:
                raise HypergraphError(f"labeling names unknown vertex {v!r}")
            if not isinstance(w, int) or w < 0:
                raise HypergraphError(f"weight of {v!r} must be a non-negative integer, got {w!r}")
            values[v] = w
        return cls(values)

    def get(self, vertex: str) -> int:
        return self.values.get(vertex, 0)

    def total(self) -> int:
        return sum(self.values.values())


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validity check; ``message`` names the first violation."""

    ok: bool
    message: str
    edges: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def edge_weight(hg: Hypergraph, labeling: Labeling, i: int) -> int:
    """Sum of vertex weights over edge ``i`` (1-based)."""
    return sum(labeling.get(v) for v in hg.edge(i))


def total_weight(labeling: Labeling) -> int:
    """Sum of all vertex weights."""
    return labeling.total()


def validate_discriminator(hg: Hypergraph, labeling: Labeling) -> Verdict:
    """Check that every edge weight is positive and all are pairwise distinct.

    Returns a valid verdict, or one naming the first offending edge (zero
    weight) or edge pair (equal weights) in index order.
    """
    seen: dict[int, int] = {}
    for i in range(1, hg.n + 1):
        w = edge_weight(hg, labeling, i)
        if w <= 0:
            return Verdict(False, f"edge {i} has weight {w}", (i,))
        if w in seen:
            return Verdict(False, f"edges {seen[w]} and {i} both have weight {w}", (seen[w], i))
        seen[w] = i
    return Verdict(True, "valid")


@dataclass(frozen=True)
class ReducedHypergraph:
    """Quotient of a hypergraph by identical edge incidence.

    Vertices sharing the same set of incident edges form one class; isolated
    vertices are dropped.  The optimal discriminator weight is preserved:
    edge sums depend only on per-class totals, and any class total can be
    concentrated on a single representative.

    ``classes`` holds the distinct incidence vectors (1-based edge index
    sets) in canonical order: sorted by their sorted index tuples.
    """

    edge_count: int
    classes: tuple[frozenset[int], ...]
    class_map: Mapping[str, int] = field(default_factory=dict)
    representatives: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        seen = set(self.classes)
        if len(seen) != len(self.classes):
            raise HypergraphError("incidence classes are not distinct")
        for c in self.classes:
            if not c:
                raise HypergraphError("empty incidence class")
            if not all(1 <= i <= self.edge_count for i in c):
                raise HypergraphError("incidence class references edge out of range")
        edges = [frozenset(k for k, c in enumerate(self.classes) if i in c)
                 for i in range(1, self.edge_count + 1)]
        for i, e in enumerate(edges, 1):
            if not e:
                raise HypergraphError(f"edge {i} is covered by no class")
        if len(set(edges)) != len(edges):
            raise HypergraphError("two edges have identical class support")

    @classmethod
    def from_vectors(cls, vectors: Iterable[frozenset[int]], edge_count: int) -> "ReducedHypergraph":
        """Reduced hypergraph given directly by its incidence vectors.

        Each class is represented by a synthetic vertex named after its
        vector, e.g. ``1.3`` for the class incident to edges 1 and 3.
        """
        classes = tuple(sorted((frozenset(v) for v in vectors), key=sorted))
        names = tuple(".".join(str(i) for i in sorted(c)) for c in classes)
        return cls(edge_count, classes, {nm: k for k, nm in enumerate(names)}, names)

    def masks(self) -> tuple[int, ...]:
        """Classes as bitmasks: bit ``i-1`` set when the class meets edge ``i``."""
        return tuple(sum(1 << (i - 1) for i in c) for c in self.classes)

    def to_hypergraph(self) -> Hypergraph:
        """Hypergraph on one representative vertex per class."""
        reps = self.representatives
        edges = [[reps[k] for k, c in enumerate(self.classes) if i in c]
                 for i in range(1, self.edge_count + 1)]
        return Hypergraph.from_edges(edges, vertices=reps)


def reduce_hypergraph(hg: Hypergraph) -> ReducedHypergraph:
    """Merge vertices with identical incidence; drop isolated vertices."""
    by_vector: dict[frozenset[int], list[str]] = {}
    for v in hg.vertices:
        inc = hg.incidences[v]
        if inc:
            by_vector.setdefault(inc, []).append(v)
    classes = tuple(sorted(by_vector, key=sorted))
    class_map: dict[str, int] = {}
    representatives = []
    for k, vec in enumerate(classes):
        members = by_vector[vec]
        representatives.append(min(members, key=hg.vertex_index.__getitem__))
        for v in members:
            class_map[v] = k
    return ReducedHypergraph(hg.n, classes, class_map, tuple(representatives))


def class_labeling(reduced: ReducedHypergraph, labeling: Labeling) -> tuple[int, ...]:
    """Per-class totals of a labeling on the original vertex set."""
    totals = [0] * len(reduced.classes)
    for v, k in reduced.class_map.items():
        totals[k] += labeling.get(v)
    return tuple(totals)


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``.hg`` format; errors carry the offending line number."""
    edges: list[tuple[str, ...]] = []
    seen: dict[frozenset[str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(set(tokens)) != len(tokens):
            dup = next(t for t in tokens if tokens.count(t) > 1)
            raise FormatError(f"duplicate vertex {dup!r} in edge", lineno)
        key = frozenset(tokens)
        if key in seen:
            raise FormatError(f"duplicate edge (same vertex set as line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(tuple(tokens))
    return Hypergraph.from_edges(edges)


def serialize_hypergraph(hg: Hypergraph) -> str:
    """Canonical ``.hg`` text: one line per edge, vertices in canonical order.

    Isolated vertices have no representation in the format and are dropped
    on a round trip; re-serializing the parsed result reproduces the text.
    """
    lines = []
    for edge in hg.edges:
        lines.append(" ".join(sorted(edge, key=hg.vertex_index.__getitem__)))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_labeling(text: str) -> dict[str, int]:
    """Parse ``.lbl`` text into a vertex -> weight mapping (``v`` lines only)."""
    values: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) != 3:
                raise FormatError("expected 'v <vertex> <weight>'", lineno)
            vertex, weight = tokens[1], tokens[2]
            if vertex in values:
                raise FormatError(f"duplicate entry for vertex {vertex!r}", lineno)
            if not weight.isdigit():
                raise FormatError(f"weight of {vertex!r} must be a non-negative integer", lineno)
            values[vertex] = int(weight)
        elif tokens[0] in ("e", "total"):
            continue
        else:
            raise FormatError(f"unknown record {tokens[0]!r}", lineno)
    return values


def serialize_labeling(hg: Hypergraph, labeling: Labeling) -> str:
    """Render a labeling in ``.lbl`` form with recomputed edge weights."""
    lines = [f"v {v} {labeling.get(v)}" for v in hg.vertices]
    lines += [f"e {i} {edge_weight(hg, labeling, i)}" for i in range(1, hg.n + 1)]
    lines.append(f"total {labeling.total()}")
    return "\n".join(lines) + "\n"
