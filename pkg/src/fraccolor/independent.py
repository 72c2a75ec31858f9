"""Independent set testing and enumeration."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ResourceLimitError
from .graph import Graph, from_mask, to_mask, vertex_set

#: Default vertex cap for maximal independent set enumeration.
MAX_ENUMERATION_VERTICES = 40
#: Default cap on the number of maximal independent sets returned.
MAX_MAXIMAL_SETS = 100_000
#: Vertex cap for enumerating every independent set.
MAX_ALL_SETS_VERTICES = 20


@dataclass(frozen=True)
class IndependentSetFamily:
    graph: Graph
    sets: tuple[tuple[int, ...], ...]
    maximal_only: bool

    def __len__(self):
        return len(self.sets)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.sets)

    def containing(self, v: int) -> list[tuple[int, ...]]:
        return [s for s in self.sets if v in s]

    def to_json(self) -> list[list[int]]:
        return [list(s) for s in self.sets]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def is_independent(g: Graph, a: Iterable[int]) -> bool:
    verts = vertex_set(g, a)
    mask = to_mask(verts)
    return all(not (g.masks[v] & mask) for v in verts)


def is_maximal_independent(g: Graph, a: Iterable[int]) -> bool:
    verts = vertex_set(g, a)
    if not is_independent(g, verts):
        return False
    mask = to_mask(verts)
    return all(
        (mask >> v) & 1 or g.masks[v] & mask for v in g.vertices()
    )


def _maximal_masks(g: Graph, max_count: int) -> list[int]:
    # Bron-Kerbosch with pivoting on the cliques of the complement. The
    # complement neighborhood of v is everything except v and N(v); it is
    # formed on the fly from the original adjacency masks.
    full = (1 << g.n) - 1
    masks = g.masks
    found: list[int] = []

    def non_nbrs(v: int) -> int:
        return full & ~masks[v] & ~(1 << v)

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            if len(found) > max_count:
                raise ResourceLimitError(
                    f"more than {max_count} maximal independent sets"
                )
            return
        px = p | x
        pivot, best = -1, -1
        while px:
            low = px & -px
            u = low.bit_length() - 1
            score = (p & non_nbrs(u)).bit_count()
            if score > best:
                pivot, best = u, score
            px ^= low
        branch = p & (masks[pivot] | (1 << pivot))
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            nv = non_nbrs(v)
            expand(r | low, p & nv, x & nv)
            p &= ~low
            x |= low
            branch ^= low

    if g.n:
        expand(0, full, 0)
    else:
        found.append(0)
    return found


def maximal_independent_sets(
    g: Graph,
    *,
    max_n: int = MAX_ENUMERATION_VERTICES,
    max_count: int = MAX_MAXIMAL_SETS,
) -> IndependentSetFamily:
    """All inclusion-maximal independent sets of ``g``, sorted lexicographically.

    Raises
    ------
    ResourceLimitError
        If ``g.n > max_n`` or more than ``max_count`` sets exist.
    """
    if g.n > max_n:
        raise ResourceLimitError(f"n={g.n} exceeds enumeration cap {max_n}")
    sets = sorted(from_mask(m) for m in _maximal_masks(g, max_count))
    return IndependentSetFamily(g, tuple(sets), maximal_only=True)


def all_independent_sets(g: Graph, *, max_n: int = MAX_ALL_SETS_VERTICES) -> IndependentSetFamily:
    """Every independent set of ``g`` including the empty set."""
    if g.n > max_n:
        raise ResourceLimitError(f"n={g.n} exceeds cap {max_n} for full enumeration")
    masks = g.masks
    found = []

    def grow(start: int, current: int, blocked: int) -> None:
        found.append(current)
        for v in range(start, g.n):
            if not (blocked >> v) & 1:
                grow(v + 1, current | (1 << v), blocked | masks[v])

    grow(0, 0, 0)
    sets = sorted(from_mask(m) for m in found)
    return IndependentSetFamily(g, tuple(sets), maximal_only=False)


def independence_number(g: Graph, **caps) -> int:
    return max(len(s) for s in maximal_independent_sets(g, **caps))
