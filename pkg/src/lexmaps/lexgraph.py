"""The lexicographic product C_n[mK_1] with adjacency computed from the rule."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .permgroup import Permutation
from .wreath import vertex_index, vertex_pair, wrap


class InvalidParameters(ValueError):
    """(m, s) outside the domain of a construction."""


@dataclass(frozen=True)
class LexGraph:
    n: int
    m: int

    @property
    def num_vertices(self) -> int:
        return self.m * self.n

    @property
    def num_edges(self) -> int:
        return self.m * self.m * self.n

    @property
    def valence(self) -> int:
        return 2 * self.m

    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def pair(self, v: int) -> tuple[int, int]:
        return vertex_pair(v, self.m)

    def index(self, i: int, j: int) -> int:
        return vertex_index(wrap(i, self.n), j, self.m)

    def adjacent(self, u: int, v: int) -> bool:
        iu, iv = self.pair(u)[0], self.pair(v)[0]
        return iv in (wrap(iu - 1, self.n), wrap(iu + 1, self.n)) and iu != iv

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.vertices():
            for v in neighbors(self, u):
                if u < v:
                    yield u, v


def build(m: int, s: int) -> LexGraph:
    if m < 3 or m % 2 == 0:
        raise InvalidParameters(f"m must be odd and >= 3, got {m}")
    if s < 1:
        raise InvalidParameters(f"s must be >= 1, got {s}")
    return LexGraph(n=s * m, m=m)


def neighbors(g: LexGraph, v: int) -> list[int]:
    """Column i-1 first (fibre ascending), then column i+1."""
    if not 1 <= v <= g.num_vertices:
        raise ValueError(f"invalid vertex {v}")
    i = g.pair(v)[0]
    return [g.index(col, j) for col in (i - 1, i + 1) for j in range(1, g.m + 1)]


def is_automorphism(g: LexGraph, p: Permutation) -> bool:
    if p.degree != g.num_vertices:
        raise ValueError(f"degree {p.degree} does not match {g.num_vertices} vertices")
    # a bijection mapping every edge to an edge preserves non-edges too (finite graph)
    return all(g.adjacent(p(u), p(v)) for u, v in g.edges())


def is_complete_multipartite(g: LexGraph) -> bool:
    for u, v in combinations(g.vertices(), 2):
        if g.pair(u)[0] != g.pair(v)[0] and not g.adjacent(u, v):
            return False
    return True


def is_connected(g: LexGraph) -> bool:
    seen = {1}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in neighbors(g, u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.num_vertices
