"""Closed-form optimal labelings for special hypergraph families.

Each constructor returns ``(hypergraph, labeling, weight)`` where the
labeling is a minimum-weight edge discriminator and ``weight`` its total.
The optimality of every family is cross-checked against the exact solver in
the test suite; the constructions themselves are direct.

Paths and cycles follow a zigzag pattern that differs by the residue of the
vertex count mod 4: the labels first climb 0,1,2,... and then descend in
equal pairs so that the edge sums sweep the odd values upward and the even
values downward, covering 1..m-1 exactly.
"""

from __future__ import annotations

from itertools import combinations, product

from .core import Hypergraph, Labeling


def _path_hypergraph(m: int) -> Hypergraph:
    verts = [f"v{i}" for i in range(1, m + 1)]
    return Hypergraph.from_edges([(verts[i], verts[i + 1]) for i in range(m - 1)], verts)


def _triple(hg: Hypergraph, labels: dict[str, int]) -> tuple[Hypergraph, Labeling, int]:
    lab = Labeling.for_hypergraph(hg, labels)
    return hg, lab, lab.total()


def nested_chain(n: int) -> tuple[Hypergraph, Labeling, int]:
    """Edges {1}, {1,2}, ..., {1..n}; the all-ones labeling has edge sums 1..n.

    Weight n, the least possible for n edges.
    """
    if n < 1:
        raise ValueError("need at least one edge")
    verts = [str(i) for i in range(1, n + 1)]
    hg = Hypergraph.from_edges([verts[:i] for i in range(1, n + 1)], verts)
    return _triple(hg, {v: 1 for v in verts})


def disjoint_edges(n: int) -> tuple[Hypergraph, Labeling, int]:
    """n disjoint singleton edges labeled 1..n; weight n(n+1)/2.

    Mutually disjoint edges force distinct positive sums on disjoint vertex
    sets, so no labeling does better.
    """
    if n < 1:
        raise ValueError("need at least one edge")
    verts = [str(i) for i in range(1, n + 1)]
    hg = Hypergraph.from_edges([[v] for v in verts], verts)
    return _triple(hg, {v: i for i, v in enumerate(verts, 1)})


def star(n: int) -> tuple[Hypergraph, Labeling, int]:
    """n edges through one center: center 1, leaves 0..n-1; weight n(n-1)/2 + 1.

    Attains the hitting-set upper bound n(n-1)/2 + 1, the center being the
    minimum hitting set.
    """
    if n < 1:
        raise ValueError("need at least one edge")
    leaves = [str(i) for i in range(1, n + 1)]
    hg = Hypergraph.from_edges([("c", leaf) for leaf in leaves], ["c"] + leaves)
    labels = {"c": 1}
    labels.update({leaf: i for i, leaf in enumerate(leaves)})
    return _triple(hg, labels)


def power_set(m: int) -> tuple[Hypergraph, Labeling, int]:
    """All 2^m - 1 non-empty subsets of m vertices; powers of two as labels.

    Every edge sum equals the binary encoding of its subset, so the sums are
    exactly 1..2^m - 1 and the weight 2^m - 1 matches the edge count, which
    is also the lower bound.
    """
    if m < 1:
        raise ValueError("need at least one vertex")
    verts = [f"v{i}" for i in range(1, m + 1)]
    edges = [[verts[i] for i in range(m) if j >> i & 1] for j in range(1, 1 << m)]
    hg = Hypergraph.from_edges(edges, verts)
    return _triple(hg, {verts[i]: 1 << i for i in range(m)})


def _path_labels(m: int) -> list[int]:
    """Zigzag labels for the path on m vertices, total ceil(m(m-1)/4).

    Ends carry (0, 0) when m is 0 or 1 mod 4 and (0, 1) otherwise; the m-1
    edge sums cover 1..m-1 exactly in all four cases.
    """
    labels = [0] * m
    r = m % 4
    climb = m // 2 + 1 if r in (0, 2) else (m + 1) // 2
    for i in range(1, climb + 1):
        labels[i - 1] = i - 1
    if r == 0:
        for i in range(m // 4 + 1, m // 2):
            labels[2 * i - 1] = labels[2 * i] = m - 2 * i
        labels[m - 1] = 0
    elif r == 1:
        for i in range((m + 3) // 4, (m - 1) // 2 + 1):
            labels[2 * i - 2] = labels[2 * i - 1] = m - 2 * i + 1
        labels[m - 1] = 0
    elif r == 2:
        for i in range((m + 6) // 4, m // 2 + 1):
            labels[2 * i - 2] = labels[2 * i - 1] = m - 2 * i + 1
    else:
        for i in range((m + 1) // 4, (m - 1) // 2 + 1):
            labels[2 * i - 1] = labels[2 * i] = m - 2 * i
    return labels


def path(m: int) -> tuple[Hypergraph, Labeling, int]:
    """Path on m vertices; weight ceil(m(m-1)/4)."""
    if m < 2:
        raise ValueError("a path needs at least two vertices")
    hg = _path_hypergraph(m)
    labels = _path_labels(m)
    return _triple(hg, {f"v{i+1}": w for i, w in enumerate(labels) if w})


def _path_end_two_labels(m: int) -> list[int]:
    """Path labels with prescribed ends (0, 2), edge sums 1..m-1, total m(m-1)/4 + 1.

    Needs m to be 0 or 1 mod 4.  Base cases for m in (4, 5); larger paths
    extend the plain zigzag on m-4 vertices (whose ends are both 0) by four
    labels m-4, 1, m-3, 2, appending the edge sums m-4..m-1.
    """
    if m % 4 not in (0, 1) or m < 4:
        raise ValueError("end-two labeling needs m of residue 0 or 1 mod 4, m >= 4")
    if m == 4:
        return [0, 1, 1, 2]
    if m == 5:
        return [0, 1, 1, 2, 2]
    return _path_labels(m - 4) + [m - 4, 1, m - 3, 2]


def path_end_two(m: int) -> tuple[Hypergraph, Labeling, int]:
    """Path variant whose end labels are 0 and 2; one above the path optimum."""
    hg = _path_hypergraph(m)
    labels = _path_end_two_labels(m)
    return _triple(hg, {f"v{i+1}": w for i, w in enumerate(labels) if w})


def cycle(m: int) -> tuple[Hypergraph, Labeling, int]:
    """Cycle on m vertices; weight ceil(m(m+1)/4).

    Built by closing up a path on m+1 vertices whose end labels are both 0:
    the plain zigzag when m is 0 or 3 mod 4, otherwise the end-two labeling
    on m-1 vertices extended by m-1 and 0.  Merging the equal ends turns the
    m path edge sums into the m cycle edge sums unchanged.
    """
    if m < 3:
        raise ValueError("a cycle needs at least three vertices")
    if m % 4 in (0, 3):
        labels = _path_labels(m + 1)[:m]
    else:
        labels = _path_end_two_labels(m - 1) + [m - 1]
    verts = [f"v{i}" for i in range(1, m + 1)]
    edges = [(verts[i], verts[(i + 1) % m]) for i in range(m)]
    hg = Hypergraph.from_edges(edges, verts)
    return _triple(hg, {f"v{i+1}": w for i, w in enumerate(labels) if w})


def partial_products(sizes: tuple[int, ...]) -> list[int]:
    """Prefix products with the empty product 1 in front."""
    out = [1]
    for s in sizes:
        out.append(out[-1] * s)
    return out


def complete_r_partite(sizes: tuple[int, ...]) -> tuple[Hypergraph, Labeling, int]:
    """Complete r-partite hypergraph for non-increasing part sizes.

    Edges pick one vertex from each part.  Within part i < r the labels are
    the multiples 0, P, 2P, ... of the prefix product P of the earlier part
    sizes; the last part uses the same multiples shifted by 1.  Edge sums
    then read as mixed-radix encodings 1..(product of sizes), all distinct:
    two sums whose highest differing digit is at position q differ by at
    least the q-th prefix product minus the largest carry below it, which is
    positive.  Weight: last size + half the sum of (size_q - 1) * prefix_q.
    """
    sizes = tuple(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
        raise ValueError("part sizes must be non-increasing")
    r = len(sizes)
    prods = partial_products(sizes)
    parts = [[f"{i+1}.{j+1}" for j in range(sizes[i])] for i in range(r)]
    verts = [v for part in parts for v in part]
    edges = [tuple(parts[i][pick[i]] for i in range(r)) for pick in product(*(range(s) for s in sizes))]
    hg = Hypergraph.from_edges(edges, verts)
    labels: dict[str, int] = {}
    for i in range(r):
        base = prods[i]
        shift = 1 if i == r - 1 else 0
        for j, v in enumerate(parts[i]):
            labels[v] = j * base + shift
    weight = sizes[-1] + sum((sizes[q] - 1) * prods[q + 1] for q in range(r)) // 2
    hg, lab, total = _triple(hg, labels)
    assert total == weight
    return hg, lab, total


def complete_bipartite_weight(p: int, q: int) -> int:
    """Closed form for the two-part case with p >= q: (2q + p(p-1+q(q-1)))/2."""
    if p < q:
        raise ValueError("sizes must be non-increasing")
    return (2 * q + p * (p - 1 + q * (q - 1))) // 2


def complete_uniform(m: int, r: int) -> Hypergraph:
    """All r-element subsets of m vertices."""
    if not 1 <= r <= m:
        raise ValueError("need 1 <= r <= m")
    verts = [f"v{i}" for i in range(1, m + 1)]
    return Hypergraph.from_edges([combo for combo in combinations(verts, r)], verts)
