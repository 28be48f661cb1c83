"""Generator recipes for the five map families on C_n[mK_1].

Each recipe yields the distinguished generators as wreath elements together
with the reflection involution when the family has one.  Reflections of the
non-orientable families are assembled from the generators themselves, so a
recipe never hard-codes them; the closed forms are checked in the identity
suite instead.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations, product

from .lexgraph import InvalidParameters
from .mapcore import MapClass, Surface
from .permgroup import GeneratedGroup, Permutation, compose, conjugate, is_inverted_by, power
from .wreath import WreathElement, ell, standard_generators, to_vertex_perm


class FamilyId(str, enum.Enum):
    CHIRAL = "chiral"
    NONOR_ODD = "nonor-odd"
    OR_ODD = "or-odd"
    NONOR_EVEN = "nonor-even"
    OR_EVEN = "or-even"

    @property
    def expected_class(self) -> MapClass:
        if self is FamilyId.CHIRAL:
            return MapClass.CHIRAL
        if self in (FamilyId.NONOR_ODD, FamilyId.NONOR_EVEN):
            return MapClass.REFLEXIBLE_NON_ORIENTABLE
        return MapClass.REFLEXIBLE_ORIENTABLE

    def in_domain(self, m: int, s: int) -> bool:
        if m < 3 or m % 2 == 0 or s < 1:
            return False
        if self is FamilyId.CHIRAL:
            return True
        if self in (FamilyId.NONOR_ODD, FamilyId.OR_ODD):
            return s % 2 == 1
        return s % 4 == 2


ALL_FAMILIES = tuple(FamilyId)


def check_domain(family: FamilyId, m: int, s: int) -> None:
    if m < 3 or m % 2 == 0:
        raise InvalidParameters(f"m must be odd and >= 3, got {m}")
    if s < 1:
        raise InvalidParameters(f"s must be >= 1, got {s}")
    if not family.in_domain(m, s):
        need = "odd" if family in (FamilyId.NONOR_ODD, FamilyId.OR_ODD) else "congruent to 2 mod 4"
        raise InvalidParameters(f"family {family.value} needs s {need}, got s={s}")


@dataclass(frozen=True)
class ConstructionRecipe:
    family: FamilyId
    m: int
    s: int
    sigma1: WreathElement
    sigma2: WreathElement
    rho: WreathElement | None
    expected_type: tuple[int, int]
    expected_group_order: int

    @property
    def n(self) -> int:
        return self.s * self.m

    @property
    def v(self) -> tuple[int, int]:
        return (1, 1)

    @property
    def w(self) -> tuple[int, int]:
        return self.sigma1.dih(1), self.sigma1.alphas[0](1)

    @property
    def u(self) -> tuple[int, int]:
        inv = self.sigma1.inverse()
        return inv.dih(1), inv.alphas[0](1)

    def vertex_perms(self) -> tuple[Permutation, Permutation, Permutation | None]:
        rho = to_vertex_perm(self.rho) if self.rho is not None else None
        return to_vertex_perm(self.sigma1), to_vertex_perm(self.sigma2), rho


def _parts(m: int, n: int):
    c, t, r, z = standard_generators(m, n)
    one = Permutation.identity(m)
    return c, t, r, z, one


def chiral_recipe(m: int, s: int) -> ConstructionRecipe:
    check_domain(FamilyId.CHIRAL, m, s)
    n = s * m
    c, t, r, z, one = _parts(m, n)
    sigma1 = WreathElement.of([c] + [one] * (n - 1), r)
    sigma2 = WreathElement.of([t] + [compose(t, power(c, ell(i, m, n))) for i in range(2, n + 1)], z)
    return ConstructionRecipe(FamilyId.CHIRAL, m, s, sigma1, sigma2, None, (m * n, 2 * m), 2 * m * m * n)


def _odd_sigma1(m: int, n: int) -> WreathElement:
    c, t, r, z, one = _parts(m, n)
    return WreathElement.of([one] * (n - 1) + [compose(t, c.inverse())], r)


def _assemble_rho(sigma1: WreathElement, sigma2: WreathElement, phi_exp: int, psi_exp: int) -> WreathElement:
    """``sigma1^n phi^a psi^b sigma2`` with phi = sigma2^2, psi = phi^sigma1."""
    n = sigma1.n
    phi = sigma2 * sigma2
    psi = sigma1.inverse() * phi * sigma1
    return (sigma1 ** n) * (phi ** phi_exp) * (psi ** psi_exp) * sigma2


def nonorientable_odd_recipe(m: int, s: int) -> ConstructionRecipe:
    check_domain(FamilyId.NONOR_ODD, m, s)
    n = s * m
    c, t, r, z, one = _parts(m, n)
    sigma1 = _odd_sigma1(m, n)
    sigma2 = WreathElement.of([t] + [power(c, (-1) ** (i - 1) * (2 * i - 3)) for i in range(2, n + 1)], z)
    rho = _assemble_rho(sigma1, sigma2, (m - 1) * (m + 1) // 4, (m + 1) ** 2 // 4)
    return ConstructionRecipe(FamilyId.NONOR_ODD, m, s, sigma1, sigma2, rho, (2 * n, 2 * m), 4 * m * m * n)


def orientable_odd_recipe(m: int, s: int) -> ConstructionRecipe:
    """Petrie dual of the odd non-orientable family: eta1 = sigma1 sigma2 rho."""
    check_domain(FamilyId.OR_ODD, m, s)
    base = nonorientable_odd_recipe(m, s)
    eta1 = base.sigma1 * base.sigma2 * base.rho
    n = base.n
    return ConstructionRecipe(FamilyId.OR_ODD, m, s, eta1, base.sigma2, base.rho, (n, 2 * m), 2 * m * m * n)


def nonorientable_even_recipe(m: int, s: int) -> ConstructionRecipe:
    check_domain(FamilyId.NONOR_EVEN, m, s)
    n = s * m
    c, t, r, z, one = _parts(m, n)
    cinv = c.inverse()
    comps = [t, cinv] + [c if i % 4 in (0, 3) else cinv for i in range(3, n + 1)]
    sigma1 = _odd_sigma1(m, n)
    sigma2 = WreathElement.of(comps, z)
    rho = _assemble_rho(sigma1, sigma2, (m - 1) // 2, (m + 1) // 2)
    return ConstructionRecipe(FamilyId.NONOR_EVEN, m, s, sigma1, sigma2, rho, (2 * n, 2 * m), 4 * m * m * n)


def orientable_even_recipe(m: int, s: int) -> ConstructionRecipe:
    check_domain(FamilyId.OR_EVEN, m, s)
    n = s * m
    c, t, r, z, one = _parts(m, n)
    eta1 = WreathElement.of([t] * n, r)
    eta2 = WreathElement.of([compose(t, power(c, k // 2)) for k in range(n)], z)
    rho = WreathElement.pure(z, m)
    return ConstructionRecipe(FamilyId.OR_EVEN, m, s, eta1, eta2, rho, (n, 2 * m), 2 * m * m * n)


RECIPES = {
    FamilyId.CHIRAL: chiral_recipe,
    FamilyId.NONOR_ODD: nonorientable_odd_recipe,
    FamilyId.OR_ODD: orientable_odd_recipe,
    FamilyId.NONOR_EVEN: nonorientable_even_recipe,
    FamilyId.OR_EVEN: orientable_even_recipe,
}


def recipe(family: FamilyId | str, m: int, s: int) -> ConstructionRecipe:
    return RECIPES[FamilyId(family)](m, s)


def theorem_values(family: FamilyId, m: int, s: int) -> tuple[tuple[int, int], Surface, MapClass]:
    """Closed-form type, surface and class claimed for the family."""
    n = s * m
    if family is FamilyId.CHIRAL:
        return (m * n, 2 * m), Surface(True, 1 + m * (n * (m - 1) // 2 - 1)), MapClass.CHIRAL
    if family in (FamilyId.OR_ODD, FamilyId.OR_EVEN):
        return (n, 2 * m), Surface(True, 1 + m * (n * (m - 1) // 2 - m)), MapClass.REFLEXIBLE_ORIENTABLE
    return (2 * n, 2 * m), Surface(False, 2 + m * (n * (m - 1) - m)), MapClass.REFLEXIBLE_NON_ORIENTABLE


def search_reflection(
    sigma1: WreathElement,
    sigma2: WreathElement | None = None,
    normalize: GeneratedGroup | None = None,
) -> list[WreathElement]:
    """All involutions ``(alpha_1, ..., alpha_n) z`` fixing (1, 1) and inverting ``sigma1``.

    Exhaustive over S_m^n.  Optional extra constraints: invert ``sigma2`` as
    well, or normalise the (enumerated) group ``normalize``.
    """
    m, n = sigma1.m, sigma1.n
    _, _, _, z = standard_generators(m, n)
    sym = [Permutation(p) for p in permutations(range(1, m + 1))]
    s1 = to_vertex_perm(sigma1)
    s2 = to_vertex_perm(sigma2) if sigma2 is not None else None
    found = []
    for alphas in product(sym, repeat=n):
        if alphas[0](1) != 1:
            continue
        cand = WreathElement(alphas, z)
        if not (cand * cand).is_identity():
            continue
        p = to_vertex_perm(cand)
        if not is_inverted_by(s1, p):
            continue
        if s2 is not None and not is_inverted_by(s2, p):
            continue
        if normalize is not None and not all(conjugate(g, p) in normalize for g in normalize.generators):
            continue
        found.append(cand)
    return found
