import pytest
from hypothesis import given, settings, strategies as st

from lexmaps import lexgraph
from lexmaps.constructions import (
    FamilyId,
    check_domain,
    recipe,
    search_reflection,
    theorem_values,
)
from lexmaps.lexgraph import InvalidParameters
from lexmaps.mapcore import check_rotary_hypotheses
from lexmaps.permgroup import GeneratedGroup, enumerate_group, is_inverted_by, order_of
from lexmaps.wreath import standard_generators

GRID = [(3, 1), (3, 2), (3, 3), (5, 1)]
INSTANCES = [(f, m, s) for m, s in GRID for f in FamilyId if f.in_domain(m, s)]


def test_grid_domain_count():
    # each grid point admits the chiral family plus one reflexible pair
    assert len(INSTANCES) == 3 + 3 + 3 + 3


@pytest.mark.parametrize("m, s", [(3, 4), (3, 8), (5, 4)])
@pytest.mark.parametrize("family", [f for f in FamilyId if f is not FamilyId.CHIRAL])
def test_reflexible_rejects_s_divisible_by_4(family, m, s):
    with pytest.raises(InvalidParameters):
        recipe(family, m, s)


@pytest.mark.parametrize("m", [1, 2, 4, 6])
@pytest.mark.parametrize("family", list(FamilyId))
def test_rejects_bad_m(family, m):
    with pytest.raises(InvalidParameters):
        check_domain(family, m, 1)


def test_chiral_accepts_any_s():
    for s in range(1, 9):
        check_domain(FamilyId.CHIRAL, 3, s)


def test_parity_guards():
    with pytest.raises(InvalidParameters):
        recipe(FamilyId.NONOR_ODD, 3, 2)
    with pytest.raises(InvalidParameters):
        recipe(FamilyId.OR_EVEN, 3, 1)


def test_chiral_components():
    m, s = 3, 2
    c, t, r, z = standard_generators(m, s * m)
    rec = recipe(FamilyId.CHIRAL, m, s)
    assert rec.sigma1.alphas[0] == c and all(a.is_identity() for a in rec.sigma1.alphas[1:])
    assert rec.sigma1.dih == r and rec.sigma2.dih == z
    assert rec.sigma2.alphas[0] == t
    assert rec.rho is None


def test_orientable_even_rho_is_z():
    rec = recipe(FamilyId.OR_EVEN, 3, 2)
    assert all(a.is_identity() for a in rec.rho.alphas)
    assert rec.rho.dih.reflected and rec.rho.dih.rotation % rec.n == 0


@pytest.mark.parametrize("family, m, s", INSTANCES)
def test_orders_and_hypotheses(family, m, s):
    rec = recipe(family, m, s)
    g = lexgraph.build(m, s)
    s1, s2, rho = rec.vertex_perms()
    (p, q), _, _ = theorem_values(family, m, s)
    assert (order_of(s1), order_of(s2)) == (p, q) == rec.expected_type
    assert order_of(s1 * s2) == 2
    assert all(check_rotary_hypotheses(g, s1, s2).values())
    assert lexgraph.is_automorphism(g, s1) and lexgraph.is_automorphism(g, s2)
    grp = GeneratedGroup(g.num_vertices, [s1, s2])
    enumerate_group(grp)
    assert grp.order == rec.expected_group_order
    if rho is not None:
        assert is_inverted_by(s1, rho) and is_inverted_by(s2, rho) and rho(1) == 1


def test_neighbour_vertices():
    rec = recipe(FamilyId.CHIRAL, 3, 2)
    assert rec.v == (1, 1)
    assert rec.w == (2, 2)
    assert rec.u == (6, 1)


def test_chiral_base_face_walk():
    m, s = 3, 2
    g = lexgraph.build(m, s)
    s1, _, _ = recipe(FamilyId.CHIRAL, m, s).vertex_perms()
    walk = [1]
    for _ in range(m * s * m - 1):
        walk.append(s1(walk[-1]))
    pairs = [g.pair(v) for v in walk]
    assert pairs[:3] == [(1, 1), (2, 2), (3, 2)]
    assert pairs[-1] == (6, 1)
    assert len(set(walk)) == g.num_vertices  # Hamiltonian


@given(st.sampled_from([3, 5, 7]), st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_theorem_values_euler(m, s):
    # Euler's formula from the type must reproduce the closed-form surface
    n = s * m
    for fam in FamilyId:
        if not fam.in_domain(m, s):
            continue
        (p, q), surf, _ = theorem_values(fam, m, s)
        v, e = m * n, m * m * n
        chi = v - e + 2 * e // p
        assert chi == (2 - 2 * surf.value if surf.orientable else 2 - surf.value)


@pytest.mark.parametrize("s", [1, 2])
def test_chiral_reflection_search(s):
    rec = recipe(FamilyId.CHIRAL, 3, s)
    s1, s2, _ = rec.vertex_perms()
    grp = GeneratedGroup(s1.degree, [s1, s2])
    enumerate_group(grp)
    assert search_reflection(rec.sigma1, normalize=grp) == []
    assert search_reflection(rec.sigma1, rec.sigma2) == []
    # inverting sigma1 alone is too weak: one involution does so without normalising G
    assert len(search_reflection(rec.sigma1)) == 1


@pytest.mark.parametrize("family, s", [(FamilyId.NONOR_ODD, 1), (FamilyId.OR_ODD, 1), (FamilyId.OR_EVEN, 2)])
def test_reflection_search_finds_recipe_rho(family, s):
    rec = recipe(family, 3, s)
    if not rec.rho.dih.reflected or rec.rho.dih.rotation % rec.n:
        pytest.skip("reflection has a rotated dihedral part")
    assert rec.rho in search_reflection(rec.sigma1, rec.sigma2)
