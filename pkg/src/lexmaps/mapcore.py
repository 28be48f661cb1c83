"""Maps from cycle double covers, and the combinatorial flag oracle.

A polytopal map is stored as its skeleton plus its set of facial cycles.  All
topological questions (orientability, Euler characteristic, automorphisms,
isomorphism) are answered on the flag system: flags are incident
(vertex, edge, face) triples with three fixed-point-free involutions

* ``s0`` changes the vertex, keeping edge and face,
* ``s1`` changes the edge, keeping vertex and face,
* ``s2`` changes the face, keeping vertex and edge.

Any object with ``vertices()``, ``edges()``, ``adjacent(u, v)``,
``num_vertices`` and ``num_edges`` can serve as the skeleton, so the oracle
also runs on small hand-built graphs.
"""
from __future__ import annotations

import enum
import functools
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .permgroup import (
    GeneratedGroup,
    Permutation,
    compose,
    compose_all,
    enumerate_group,
    is_inverted_by,
    orbit,
    order_of,
    stabilizer_of_arc,
)

Cycle = tuple[int, ...]


class BaseWalkNotCycle(ValueError):
    """The walk ``v, v s1, v s1^2, ...`` revisits ``v`` early or leaves the graph."""


class PreconditionFailed(ValueError):
    pass


class MapClass(str, enum.Enum):
    CHIRAL = "Chiral"
    REFLEXIBLE_ORIENTABLE = "ReflexibleOrientable"
    REFLEXIBLE_NON_ORIENTABLE = "ReflexibleNonOrientable"
    NOT_ROTARY = "NotRotary"


@dataclass(frozen=True)
class SimpleGraph:
    """A small explicit graph on vertices 1..N, used for fixtures."""

    num_vertices: int
    edge_list: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(num_vertices, tuple(sorted((min(e), max(e)) for e in edges)))

    @property
    def num_edges(self) -> int:
        return len(self.edge_list)

    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def edges(self):
        return iter(self.edge_list)

    def adjacent(self, u: int, v: int) -> bool:
        return _edge(u, v) in self._edge_set

    @functools.cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edge_list)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def canonical_cycle(seq: Sequence[int]) -> Cycle:
    """Least rotation over both traversal directions."""
    p = len(seq)
    fwd = list(seq)
    rev = fwd[::-1]
    return min(tuple(s[k:] + s[:k]) for s in (fwd, rev) for k in range(p))


@dataclass(frozen=True)
class CycleDoubleCover:
    cycles: tuple[Cycle, ...]

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> CycleDoubleCover:
        return cls(tuple(sorted({canonical_cycle(c) for c in cycles})))

    def __len__(self):
        return len(self.cycles)


def _cycle_edges(cyc: Cycle) -> list[tuple[int, int]]:
    return [_edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]


def facial_orbit(g, group: GeneratedGroup, sigma1: Permutation, base_vertex: int) -> CycleDoubleCover:
    """The orbit under ``group`` of the cycle traced by ``base_vertex`` under ``sigma1``."""
    base = base_walk(g, sigma1, base_vertex)
    if group.elements is None:
        enumerate_group(group)
    return CycleDoubleCover.from_cycles(tuple(p(x) for x in base) for p in group.elements)


def base_walk(g, sigma1: Permutation, v: int) -> Cycle:
    p = order_of(sigma1)
    walk = [v]
    x = sigma1(v)
    for k in range(1, p):
        if x == v:
            raise BaseWalkNotCycle(f"v = v*sigma1^{k} with {k} < |sigma1| = {p}")
        walk.append(x)
        x = sigma1(x)
    if len(walk) < 3:
        raise BaseWalkNotCycle("walk shorter than 3")
    for a, b in zip(walk, walk[1:] + walk[:1]):
        if not g.adjacent(a, b):
            raise BaseWalkNotCycle(f"{a} and {b} are not adjacent")
    return tuple(walk)


def verify_cdc(cdc: CycleDoubleCover, g) -> bool:
    cover: dict[tuple[int, int], int] = defaultdict(int)
    for cyc in cdc.cycles:
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            return False
        for e in _cycle_edges(cyc):
            if not g.adjacent(*e):
                return False
            cover[e] += 1
    graph_edges = {_edge(*e) for e in g.edges()}
    return set(cover) == graph_edges and all(k == 2 for k in cover.values())


@dataclass(frozen=True)
class VertexFigure:
    vertex: int
    nodes: tuple[int, ...]  # neighbour w stands for the edge {vertex, w}
    links: tuple[tuple[int, int], ...]  # with multiplicity

    @property
    def max_degree(self) -> int:
        deg: dict[int, int] = defaultdict(int)
        for a, b in self.links:
            deg[a] += 1
            deg[b] += 1
        return max(deg.values(), default=0)

    @property
    def connected(self) -> bool:
        if not self.nodes:
            return False
        adj = defaultdict(set)
        for a, b in self.links:
            adj[a].add(b)
            adj[b].add(a)
        return orbit_of(self.nodes[0], adj) == set(self.nodes)

    @property
    def is_cycle(self) -> bool:
        deg: dict[int, int] = defaultdict(int)
        for a, b in self.links:
            deg[a] += 1
            deg[b] += 1
        return self.connected and all(deg[x] == 2 for x in self.nodes)


def orbit_of(start, adj) -> set:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def vertex_figure(cdc: CycleDoubleCover, g, v: int) -> VertexFigure:
    nodes = tuple(w for w in g.vertices() if g.adjacent(v, w))
    links = []
    for cyc in cdc.cycles:
        if v in cyc:
            k = cyc.index(v)
            a, b = cyc[k - 1], cyc[(k + 1) % len(cyc)]
            links.append(_edge(a, b))
    return VertexFigure(v, nodes, tuple(links))


@dataclass(frozen=True)
class FlagSystem:
    """Flags ``(vertex, edge, face)`` with involutions as index tuples."""

    flags: tuple[tuple[int, tuple[int, int], int], ...]
    s0: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]

    def __len__(self):
        return len(self.flags)

    @property
    def involutions(self) -> tuple[tuple[int, ...], ...]:
        return self.s0, self.s1, self.s2

    def index_of(self, vertex: int, edge: tuple[int, int], face: int) -> int:
        return self.flags.index((vertex, _edge(*edge), face))


def build_flag_system(g, cdc: CycleDoubleCover) -> FlagSystem:
    if not verify_cdc(cdc, g):
        raise PreconditionFailed("not a cycle double cover: some edge is not on exactly two cycles")
    for v in g.vertices():
        if not vertex_figure(cdc, g, v).is_cycle:
            raise PreconditionFailed(f"vertex figure at {v} is not a connected cycle")

    # flag (face, pos, dir): vertex cyc[pos], edge {cyc[pos], cyc[pos + dir]}
    keys = []
    for f, cyc in enumerate(cdc.cycles):
        for k in range(len(cyc)):
            keys.append((f, k, 1))
            keys.append((f, k, -1))
    index = {key: i for i, key in enumerate(keys)}

    edge_faces = defaultdict(list)
    for f, cyc in enumerate(cdc.cycles):
        for e in _cycle_edges(cyc):
            edge_faces[e].append(f)
    positions = [{x: k for k, x in enumerate(cyc)} for cyc in cdc.cycles]

    flags, s0, s1, s2 = [], [], [], []
    for f, k, d in keys:
        cyc = cdc.cycles[f]
        p = len(cyc)
        v, w = cyc[k], cyc[(k + d) % p]
        flags.append((v, _edge(v, w), f))
        s0.append(index[(f, (k + d) % p, -d)])
        s1.append(index[(f, k, -d)])
        f2 = next(x for x in edge_faces[_edge(v, w)] if x != f)
        k2 = positions[f2][v]
        p2 = len(cdc.cycles[f2])
        d2 = 1 if cdc.cycles[f2][(k2 + 1) % p2] == w else -1
        s2.append(index[(f2, k2, d2)])
    return FlagSystem(tuple(flags), tuple(s0), tuple(s1), tuple(s2))


@dataclass(frozen=True)
class PolytopalMap:
    graph: object
    cdc: CycleDoubleCover
    flags: FlagSystem
    base_flag: int
    generators: tuple[Permutation, ...] = ()
    group: GeneratedGroup | None = field(default=None, compare=False)

    @property
    def num_faces(self) -> int:
        return len(self.cdc)

    def face_lengths(self) -> set[int]:
        return {len(c) for c in self.cdc.cycles}


def build_map(g, sigma1: Permutation, sigma2: Permutation, base_vertex: int = 1,
              cap: int | None = None) -> PolytopalMap:
    """Facial cycles = orbit of the base face under <sigma1, sigma2>."""
    group = GeneratedGroup(sigma1.degree, [sigma1, sigma2])
    enumerate_group(group, cap)
    cdc = facial_orbit(g, group, sigma1, base_vertex)
    fs = build_flag_system(g, cdc)
    base_face = cdc.cycles.index(canonical_cycle(base_walk(g, sigma1, base_vertex)))
    u = sigma1.inverse()(base_vertex)
    base = fs.index_of(base_vertex, (base_vertex, u), base_face)
    return PolytopalMap(g, cdc, fs, base, (sigma1, sigma2), group)


def map_from_cycles(g, cycles: Iterable[Sequence[int]]) -> PolytopalMap:
    cdc = CycleDoubleCover.from_cycles(cycles)
    return PolytopalMap(g, cdc, build_flag_system(g, cdc), 0)


def euler_characteristic(mp: PolytopalMap) -> int:
    return mp.graph.num_vertices - mp.graph.num_edges + mp.num_faces


def flag_orbit(fs: FlagSystem, start: int = 0) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for s in fs.involutions:
            if s[x] not in seen:
                seen.add(s[x])
                stack.append(s[x])
    return seen


def orientation_classes(fs: FlagSystem) -> list[int] | None:
    """A 0/1 colouring swapped by every involution, or None if there is none."""
    color = [-1] * len(fs)
    for root in range(len(fs)):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for s in fs.involutions:
                y = s[x]
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_orientable(fs: FlagSystem) -> bool:
    return orientation_classes(fs) is not None


@dataclass(frozen=True)
class Surface:
    orientable: bool
    value: int  # genus if orientable, else crosscap number

    @property
    def label(self) -> str:
        return "genus" if self.orientable else "crosscap"

    def __str__(self):
        return f"{self.label} {self.value}"


def genus_or_crosscap(mp: PolytopalMap) -> Surface:
    chi = euler_characteristic(mp)
    if is_orientable(mp.flags):
        if chi % 2:
            raise ArithmeticError(f"odd Euler characteristic {chi} on an orientable map")
        return Surface(True, (2 - chi) // 2)
    return Surface(False, 2 - chi)


def _propagate(a: FlagSystem, b: FlagSystem, start_a: int, start_b: int) -> list[int] | None:
    """The unique flag map sending start_a to start_b and commuting with s0, s1, s2."""
    if len(a) != len(b):
        return None
    image = [-1] * len(a)
    used = [False] * len(b)
    image[start_a] = start_b
    used[start_b] = True
    queue = deque([start_a])
    pairs = tuple(zip(a.involutions, b.involutions))
    while queue:
        x = queue.popleft()
        y = image[x]
        for sa, sb in pairs:
            x2, y2 = sa[x], sb[y]
            if image[x2] < 0:
                if used[y2]:
                    return None
                image[x2] = y2
                used[y2] = True
                queue.append(x2)
            elif image[x2] != y2:
                return None
    if min(image) < 0:
        return None
    return image


@dataclass(frozen=True)
class AutomorphismInfo:
    order: int
    flag_orbits: int
    base_orbit: frozenset[int]  # images of the base flag

    @property
    def flag_transitive(self) -> bool:
        return self.flag_orbits == 1


def map_automorphisms(fs: FlagSystem, base: int = 0) -> AutomorphismInfo:
    autos = []
    for cand in range(len(fs)):
        image = _propagate(fs, fs, base, cand)
        if image is not None:
            autos.append(image)
    parent = list(range(len(fs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for image in autos:
        for x, y in enumerate(image):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    orbits = len({find(x) for x in range(len(fs))})
    return AutomorphismInfo(len(autos), orbits, frozenset(img[base] for img in autos))


def classify(mp: PolytopalMap) -> MapClass:
    fs = mp.flags
    aut = map_automorphisms(fs, mp.base_flag)
    colors = orientation_classes(fs)
    if aut.flag_orbits == 1:
        return MapClass.REFLEXIBLE_ORIENTABLE if colors is not None else MapClass.REFLEXIBLE_NON_ORIENTABLE
    if aut.flag_orbits == 2 and colors is not None:
        same_side = {x for x in range(len(fs)) if colors[x] == colors[mp.base_flag]}
        if aut.base_orbit == same_side:
            return MapClass.CHIRAL
    return MapClass.NOT_ROTARY


def check_rotary_hypotheses(g, sigma1: Permutation, sigma2: Permutation, v: int = 1) -> dict[str, bool]:
    """The three conditions on distinguished generators, checked mechanically."""
    nbrs = {w for w in g.vertices() if g.adjacent(v, w)}
    w0 = next(iter(nbrs)) if nbrs else None
    s12 = compose(sigma1, sigma2)
    return {
        "sigma2_fixes_v": sigma2(v) == v,
        "sigma2_transitive_on_neighbours": w0 is not None and orbit([w0], [sigma2]) == nbrs,
        "sigma1_maps_v_to_neighbour": sigma1(v) in nbrs,
        "sigma1_sigma2_involution": compose(s12, s12).is_identity() and not s12.is_identity(),
    }


def predict_classification(group: GeneratedGroup, sigma1: Permutation, rho: Permutation | None,
                           v: int = 1) -> MapClass:
    """Group-side classification from the arc stabiliser and the reflection.

    ``rho`` is an involution fixing ``v`` and inverting both generators, or
    None when the construction provides no reflection.
    """
    w = sigma1(v)
    stab = len(stabilizer_of_arc(group, v, w))
    if rho is None:
        return MapClass.CHIRAL if stab == 1 else MapClass.NOT_ROTARY
    if stab == 2 and rho in group:
        return MapClass.REFLEXIBLE_NON_ORIENTABLE
    if stab == 1 and rho not in group:
        return MapClass.REFLEXIBLE_ORIENTABLE
    return MapClass.NOT_ROTARY


def petrie_dual(sigma1: Permutation, sigma2: Permutation, rho: Permutation, g,
                base_vertex: int = 1, cap: int | None = None) -> PolytopalMap:
    """Map with distinguished generators ``sigma1 sigma2 rho`` and ``sigma2``."""
    if not compose(rho, rho).is_identity():
        raise PreconditionFailed("rho is not an involution")
    if rho(base_vertex) != base_vertex:
        raise PreconditionFailed("rho does not fix the base vertex")
    if not (is_inverted_by(sigma1, rho) and is_inverted_by(sigma2, rho)):
        raise PreconditionFailed("rho does not invert both generators")
    eta1 = compose_all([sigma1, sigma2, rho])
    return build_map(g, eta1, sigma2, base_vertex, cap)


def map_isomorphic(a: FlagSystem, b: FlagSystem) -> bool:
    if len(a) != len(b):
        return False
    if len(a) == 0:
        return True
    return any(_propagate(a, b, 0, cand) is not None for cand in range(len(b)))


def is_polyhedral(mp: PolytopalMap) -> bool:
    cycles = mp.cdc.cycles
    vsets = [set(c) for c in cycles]
    esets = [set(_cycle_edges(c)) for c in cycles]
    for f1, f2 in combinations(range(len(cycles)), 2):
        common = vsets[f1] & vsets[f2]
        if len(common) <= 1:
            continue
        if len(common) == 2:
            e = _edge(*common)
            if e in esets[f1] and e in esets[f2]:
                continue
        return False
    return True
