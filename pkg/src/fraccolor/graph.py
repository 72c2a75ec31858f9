"""Undirected simple graphs on vertices ``0..n-1`` and the generators used
throughout the package.

Vertex sets are plain iterables of indices. Functions that take one call
:func:`vertex_set` to validate it and turn it into a sorted tuple.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ContractViolation

#: Hard cap on the vertex count of any graph built here.
MAX_VERTICES = 10_000

Edge = tuple[int, int]


class Graph:
    """Immutable undirected simple graph.

    Parameters
    ----------
    n : int
        Number of vertices, labelled ``0..n-1``.
    edges : iterable of pairs
        Unordered vertex pairs. Repeated pairs collapse into one edge;
        self-loops and out-of-range endpoints are rejected.
    labels : sequence, optional
        Metadata per vertex (e.g. the k-subset behind a Kneser vertex).
    max_n : int
        Cap on ``n``.
    """

    __slots__ = ("_n", "_edges", "_adj", "_masks", "_labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        *,
        labels: Sequence | None = None,
        max_n: int = MAX_VERTICES,
    ):
        if n < 0:
            raise ContractViolation(f"vertex count must be non-negative, got {n}")
        if n > max_n:
            raise ContractViolation(f"vertex count {n} exceeds cap {max_n}")
        normalized = set()
        for e in edges:
            u, v = (int(e[0]), int(e[1]))
            if u == v:
                raise ContractViolation(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ContractViolation(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))
        self._n = n
        self._edges = tuple(sorted(normalized))
        adj = [set() for _ in range(n)]
        masks = [0] * n
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = tuple(masks)
        if labels is not None and len(labels) != n:
            raise ContractViolation("labels must have one entry per vertex")
        self._labels = tuple(labels) if labels is not None else None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return self._edges

    @property
    def labels(self) -> tuple | None:
        return self._labels

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an integer bitmask."""
        return self._masks

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def spanning_subgraph(self, edges: Iterable[Sequence[int]]) -> "Graph":
        """Graph on the same vertices keeping only ``edges`` (must be edges of self)."""
        kept = list(edges)
        for u, v in kept:
            if not self.has_edge(u, v):
                raise ContractViolation(f"({u}, {v}) is not an edge of the host graph")
        return Graph(self._n, kept, labels=self._labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


def vertex_set(g: Graph, a: Iterable[int]) -> tuple[int, ...]:
    """Validate ``a`` against ``g`` and return it as a sorted tuple."""
    items = [int(v) for v in a]
    out = tuple(sorted(set(items)))
    if len(out) != len(items):
        raise ContractViolation("vertex set contains duplicates")
    if out and (out[0] < 0 or out[-1] >= g.n):
        raise ContractViolation(f"vertex set {out} has indices outside [0, {g.n})")
    return out


def to_mask(a: Iterable[int]) -> int:
    mask = 0
    for v in a:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


# -- generators --------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ContractViolation(f"complete_graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def edgeless_graph(n: int) -> Graph:
    if n < 1:
        raise ContractViolation(f"edgeless_graph needs n >= 1, got {n}")
    return Graph(n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ContractViolation(f"path_graph needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractViolation(f"cycle_graph needs n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def kneser_graph(n: int, k: int) -> Graph:
    """Kneser graph KG(n, k).

    Vertices are the k-subsets of ``{1..n}`` numbered in lexicographic
    order; the subsets are kept as ``labels``. Two vertices are adjacent
    when their subsets are disjoint.
    """
    if k < 1 or n < 2 * k:
        raise ContractViolation(f"kneser_graph needs n >= 2k >= 2, got n={n}, k={k}")
    subsets = list(combinations(range(1, n + 1), k))
    as_sets = [frozenset(s) for s in subsets]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if as_sets[i].isdisjoint(as_sets[j])
    ]
    return Graph(len(subsets), edges, labels=subsets)


def petersen_graph() -> Graph:
    return kneser_graph(5, 2)


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction on ``g``.

    Vertex ``i`` keeps its index, its shadow is ``n + i`` and the apex is
    ``2n``. Shadow ``n + i`` is adjacent to the original neighbors of ``i``;
    the apex is adjacent to every shadow.
    """
    n = g.n
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges.extend((n + i, 2 * n) for i in range(n))
    return Graph(2 * n + 1, edges)


def grotzsch_graph() -> Graph:
    return mycielskian(mycielskian(complete_graph(2)))


def gnp_random_graph(n: int, p: float, seed: int | random.Random | None = None) -> Graph:
    """Erdos-Renyi G(n, p) with a stdlib ``random.Random`` stream."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


# -- structural queries ------------------------------------------------------


def induced_subgraph(g: Graph, a: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``a``, relabelled to ``0..|a|-1``.

    Returns the graph and the index map: vertex ``i`` of the result is
    vertex ``index_map[i]`` of ``g``.
    """
    verts = vertex_set(g, a)
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    labels = None if g.labels is None else [g.labels[v] for v in verts]
    return Graph(len(verts), edges, labels=labels), verts


def edge_count_within(g: Graph, a: Iterable[int]) -> int:
    """Number of edges of ``g`` with both endpoints in ``a``."""
    verts = vertex_set(g, a)
    mask = to_mask(verts)
    masks = g.masks
    return sum((masks[v] & mask).bit_count() for v in verts) // 2


def average_degree(g: Graph, a: Iterable[int]) -> Fraction:
    """``2 e(a) / |a|`` measured in ``g``, as an exact rational."""
    verts = vertex_set(g, a)
    if not verts:
        raise ContractViolation("average degree of an empty vertex set is undefined")
    return Fraction(2 * edge_count_within(g, verts), len(verts))


def degeneracy_ordering(g: Graph) -> tuple[list[int], int]:
    """Smallest-last removal order and the degeneracy.

    A minimum-degree vertex is removed repeatedly, ties going to the
    smallest index. The degeneracy is the largest degree seen at removal.
    """
    degree = [g.degree(v) for v in g.vertices()]
    alive = set(g.vertices())
    order = []
    d = 0
    while alive:
        v = min(alive, key=lambda u: (degree[u], u))
        d = max(d, degree[v])
        order.append(v)
        alive.remove(v)
        for u in g.neighbors(v):
            if u in alive:
                degree[u] -= 1
    return order, d


def greedy_coloring(g: Graph, order: Iterable[int]) -> dict[int, int]:
    """First-fit coloring of the vertices in ``order`` (a subset is allowed).

    Only neighbors already colored in ``order`` constrain a vertex, so
    coloring a subset colors its induced subgraph.
    """
    color: dict[int, int] = {}
    for v in order:
        used = {color[u] for u in g.neighbors(v) if u in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def greedy_chromatic_bound(g: Graph) -> int:
    """Colors used by first-fit along the reversed degeneracy order."""
    if g.n == 0:
        return 0
    order, _ = degeneracy_ordering(g)
    return max(greedy_coloring(g, reversed(order)).values()) + 1


def is_proper_coloring(g: Graph, color: dict[int, int]) -> bool:
    return all(color[u] != color[v] for u, v in g.edges if u in color and v in color)
