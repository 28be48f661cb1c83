"""Elements of S_m wr D_n written as ``(alpha_1, ..., alpha_n) x``.

Vertices of C_n[mK_1] are pairs ``(i, j)`` with column ``i`` in 1..n and
fibre ``j`` in 1..m, packed into the point ``(i - 1) * m + j``.  An element
acts by ``(i, j) -> (i x, j alpha_i)``.  Column arithmetic is mod n with
representative n, never 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permgroup import Permutation, compose, power


def wrap(i: int, n: int) -> int:
    """Reduce ``i`` mod ``n`` into 1..n."""
    return (i - 1) % n + 1


def vertex_index(i: int, j: int, m: int) -> int:
    return (i - 1) * m + j


def vertex_pair(point: int, m: int) -> tuple[int, int]:
    return (point - 1) // m + 1, (point - 1) % m + 1


@dataclass(frozen=True)
class DihedralPart:
    """``r^rotation z^reflected`` acting on 1..n.

    ``r`` is the n-cycle ``i -> i + 1`` and ``z`` fixes 1 and swaps
    ``j <-> n - j + 2``.  Since z r = r^-1 z, every element has this form.
    """

    rotation: int
    reflected: bool
    n: int

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % self.n)

    def __call__(self, i: int) -> int:
        x = i + self.rotation
        if self.reflected:
            x = 2 - x
        return wrap(x, self.n)

    def __mul__(self, other: DihedralPart) -> DihedralPart:
        if self.n != other.n:
            raise ValueError("dihedral parts of different n")
        k = other.rotation if not self.reflected else -other.rotation
        return DihedralPart(self.rotation + k, self.reflected != other.reflected, self.n)

    def inverse(self) -> DihedralPart:
        if self.reflected:
            return self
        return DihedralPart(-self.rotation, False, self.n)

    def __str__(self):
        parts = []
        if self.rotation:
            parts.append("r" if self.rotation == 1 else f"r^{self.rotation}")
        if self.reflected:
            parts.append("z")
        return "".join(parts) or "1"


@dataclass(frozen=True)
class WreathElement:
    alphas: tuple[Permutation, ...]
    dih: DihedralPart

    def __post_init__(self):
        if len(self.alphas) != self.dih.n:
            raise ValueError(f"expected {self.dih.n} alpha entries, got {len(self.alphas)}")
        degrees = {a.degree for a in self.alphas}
        if len(degrees) != 1:
            raise ValueError("alpha entries must share one degree")

    @property
    def m(self) -> int:
        return self.alphas[0].degree

    @property
    def n(self) -> int:
        return self.dih.n

    @classmethod
    def identity(cls, m: int, n: int) -> WreathElement:
        e = Permutation.identity(m)
        return cls((e,) * n, DihedralPart(0, False, n))

    @classmethod
    def of(cls, alphas: Sequence[Permutation], dih: DihedralPart | None = None) -> WreathElement:
        n = len(alphas)
        return cls(tuple(alphas), dih if dih is not None else DihedralPart(0, False, n))

    @classmethod
    def pure(cls, dih: DihedralPart, m: int) -> WreathElement:
        return cls((Permutation.identity(m),) * dih.n, dih)

    def __mul__(self, other: WreathElement) -> WreathElement:
        return wr_mul(self, other)

    def __pow__(self, k: int) -> WreathElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = WreathElement.identity(self.m, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> WreathElement:
        # (a)x * (b)x^-1 = 1 needs a_i b_{ix} = 1, i.e. b_k = a_{k x^-1}^-1
        xinv = self.dih.inverse()
        alphas = tuple(self.alphas[xinv(k) - 1].inverse() for k in range(1, self.n + 1))
        return WreathElement(alphas, xinv)

    def is_identity(self) -> bool:
        return self.dih.rotation == 0 and not self.dih.reflected and all(a.is_identity() for a in self.alphas)


def wr_mul(a: WreathElement, b: WreathElement) -> WreathElement:
    """Product ``a b`` (apply ``a`` first): ``gamma_i = alpha_i beta_{i x}``."""
    if a.m != b.m or a.n != b.n:
        raise ValueError(f"parameter mismatch: (m, n)=({a.m}, {a.n}) vs ({b.m}, {b.n})")
    x = a.dih
    alphas = tuple(compose(a.alphas[i - 1], b.alphas[x(i) - 1]) for i in range(1, a.n + 1))
    return WreathElement(alphas, a.dih * b.dih)


def to_vertex_perm(w: WreathElement) -> Permutation:
    m, n = w.m, w.n
    images = [0] * (m * n)
    for i in range(1, n + 1):
        ix = w.dih(i)
        alpha = w.alphas[i - 1]
        for j in range(1, m + 1):
            images[vertex_index(i, j, m) - 1] = vertex_index(ix, alpha(j), m)
    return Permutation(tuple(images))


def standard_generators(m: int, n: int) -> tuple[Permutation, Permutation, DihedralPart, DihedralPart]:
    """The cycle ``c``, the involution ``t`` in S_m and ``r``, ``z`` in D_n."""
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be odd and >= 3, got {m}")
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    c = Permutation.from_function(m, lambda j: j % m + 1)
    t = Permutation.from_function(m, lambda j: 1 if j == 1 else m - j + 2)
    return c, t, DihedralPart(1, False, n), DihedralPart(0, True, n)


def ell(i: int, m: int, n: int | None = None) -> int:
    """``1 + 1 + 2 + ... + (i - 2) = 1 + (i-2)(i-1)/2`` reduced mod m."""
    if i < 2 or (n is not None and i > n):
        raise ValueError(f"index {i} out of range 2..{n}")
    return (1 + (i - 2) * (i - 1) // 2) % m


def cpow(c: Permutation, k: int) -> Permutation:
    return power(c, k)
