"""Exact permutation algebra on points 1..N and brute-force group closure.

Permutations act on the right: ``compose(a, b)`` applies ``a`` first, so the
image of ``i`` is ``b(a(i))``.  Conjugation ``x^y`` means ``y^-1 x y``.
"""
from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_CAP = 5_000_000
CAP_ENV_VAR = "LEXMAPS_GROUP_CAP"


class CapExceeded(RuntimeError):
    """Group closure grew past the configured element cap."""


class NotEnumerated(RuntimeError):
    pass


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..N}``; ``images[i-1]`` is the image of point ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, degree + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def from_function(cls, degree: int, fn) -> Permutation:
        return cls(tuple(fn(i) for i in range(1, degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length > 1, each starting at its least point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __repr__(self):
        cyc = self.cycles()
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation{body}[{self.degree}]"


def _unchecked(images: tuple[int, ...]) -> Permutation:
    # skip the bijection check on products of known permutations
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    bi = b.images
    return _unchecked(tuple(bi[x - 1] for x in a.images))


def compose_all(perms: Sequence[Permutation]) -> Permutation:
    result = perms[0]
    for p in perms[1:]:
        result = compose(result, p)
    return result


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(p.inverse(), -k)
    result = Permutation.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(x: Permutation, y: Permutation) -> Permutation:
    """``x^y = y^-1 x y``."""
    return compose_all([y.inverse(), x, y])


def order_of(p: Permutation) -> int:
    """Least k >= 1 with p^k = 1, as the lcm of the cycle lengths."""
    return math.lcm(1, *(len(c) for c in p.cycles()))


def is_inverted_by(x: Permutation, r: Permutation) -> bool:
    """True iff conjugating ``x`` by ``r`` gives ``x^-1``."""
    if x.degree != r.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {r.degree}")
    return conjugate(x, r) == x.inverse()


@dataclass
class GeneratedGroup:
    degree: int
    generators: list[Permutation]
    elements: frozenset[Permutation] | None = field(default=None, repr=False)

    def __post_init__(self):
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError(f"generator of degree {g.degree} in group of degree {self.degree}")

    @property
    def order(self) -> int:
        if self.elements is None:
            raise NotEnumerated("enumerate the group first")
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        if self.elements is None:
            raise NotEnumerated("enumerate the group first")
        return p in self.elements


def enumerate_group(g: GeneratedGroup, cap: int | None = None) -> frozenset[Permutation]:
    """Breadth-first closure of the generators under right multiplication.

    The result is stored on ``g.elements`` and returned.  Finite groups are
    closed under inverses automatically, so only products are formed.
    """
    cap = default_cap() if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be >= 1")
    ident = Permutation.identity(g.degree)
    seen = {ident}
    frontier = deque([ident])
    gens = [gen.images for gen in g.generators]
    while frontier:
        cur = frontier.popleft().images
        for gi in gens:
            nxt = _unchecked(tuple(gi[x - 1] for x in cur))
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(f"group closure exceeded cap of {cap} elements")
                frontier.append(nxt)
    g.elements = frozenset(seen)
    return g.elements


def stabilizer_of_arc(g: GeneratedGroup, source: int, target: int) -> set[Permutation]:
    """Elements fixing both ``source`` and ``target``."""
    if g.elements is None:
        raise NotEnumerated("enumerate the group first")
    return {p for p in g.elements if p(source) == source and p(target) == target}


def orbit(points: Iterable[int], generators: Sequence[Permutation]) -> set[int]:
    seen = set(points)
    stack = list(seen)
    while stack:
        x = stack.pop()
        for gen in generators:
            y = gen(x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen
