from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexmaps import lexgraph
from lexmaps.constructions import chiral_recipe
from lexmaps.permgroup import Permutation, compose
from lexmaps.wreath import (
    DihedralPart,
    WreathElement,
    ell,
    standard_generators,
    to_vertex_perm,
    vertex_index,
    wr_mul,
)


def wreath_elements(m, n):
    alpha = st.permutations(list(range(1, m + 1))).map(lambda p: Permutation(tuple(p)))
    dih = st.builds(lambda k, e: DihedralPart(k, e, n), st.integers(0, n - 1), st.booleans())
    return st.builds(lambda a, d: WreathElement(tuple(a), d), st.lists(alpha, min_size=n, max_size=n), dih)


def test_t_for_m3():
    c, t, _, _ = standard_generators(3, 3)
    assert t == Permutation.from_cycles(3, [(2, 3)])
    assert c == Permutation.from_cycles(3, [(1, 2, 3)])


def test_t_for_m5():
    _, t, _, _ = standard_generators(5, 5)
    assert t == Permutation.from_cycles(5, [(2, 5), (3, 4)])


@pytest.mark.parametrize("m", [3, 5, 7])
def test_generator_orders(m):
    c, t, r, z = standard_generators(m, 2 * m)
    assert (t ** 2).is_identity() and (c ** m).is_identity()
    assert z(1) == 1 and z(2) == 2 * m and r(2 * m) == 1


@pytest.mark.parametrize("m, n", [(2, 3), (4, 4), (3, 2)])
def test_standard_generators_reject(m, n):
    with pytest.raises(ValueError):
        standard_generators(m, n)


def _symbolic(n, m):
    # alpha_k = the transposition-free marker perm c^k, to track coordinates
    c, _, _, _ = standard_generators(m, n)
    return [c ** k for k in range(n)]


def test_push_r_across():
    m, n = 7, 5
    alphas = _symbolic(n, m)
    _, _, r, _ = standard_generators(m, n)
    lhs = WreathElement.pure(r, m) * WreathElement.of(alphas)
    assert lhs == WreathElement.of(alphas[1:] + alphas[:1], r)


def test_push_z_across():
    m, n = 7, 5
    alphas = _symbolic(n, m)
    _, _, _, z = standard_generators(m, n)
    lhs = WreathElement.pure(z, m) * WreathElement.of(alphas)
    assert lhs == WreathElement.of([alphas[0]] + alphas[:0:-1], z)


def test_identity_product():
    b = chiral_recipe(3, 2).sigma2
    assert WreathElement.identity(3, 6) * b == b


def test_wr_mul_mismatch():
    with pytest.raises(ValueError):
        wr_mul(WreathElement.identity(3, 3), WreathElement.identity(3, 6))


def test_to_vertex_perm_identity():
    assert to_vertex_perm(WreathElement.identity(3, 4)).is_identity()


def test_chiral_sigma_action():
    rec = chiral_recipe(3, 1)
    s1, s2, _ = rec.vertex_perms()
    assert s1(vertex_index(1, 1, 3)) == vertex_index(2, 2, 3)
    assert s2(vertex_index(1, 1, 3)) == vertex_index(1, 1, 3)


def test_ell_values():
    assert ell(2, 7) == 1
    assert ell(4, 5) == 4
    assert ell(5, 3) == 1  # 1 + 1 + 2 + 3 = 7


def test_ell_range():
    with pytest.raises(ValueError):
        ell(1, 3)
    with pytest.raises(ValueError):
        ell(10, 3, n=9)


@pytest.mark.parametrize("m, s", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 3), (3, 6)])
def test_ell_symmetry(m, s):
    n = s * m
    assert all(ell(n - i + 3, m) == ell(i, m) for i in range(3, n + 1))


@pytest.mark.parametrize("m, n", [(3, 3), (3, 6), (5, 5)])
def test_homomorphism(m, n):
    @settings(max_examples=1000, deadline=None)
    @given(wreath_elements(m, n), wreath_elements(m, n))
    def check(a, b):
        assert to_vertex_perm(wr_mul(a, b)) == compose(to_vertex_perm(a), to_vertex_perm(b))
        assert (a * a.inverse()).is_identity()

    check()


def test_injective_on_whole_group():
    m, n = 3, 3
    sym = [Permutation(p) for p in permutations(range(1, m + 1))]
    dihs = [DihedralPart(k, e, n) for k in range(n) for e in (False, True)]
    images = {to_vertex_perm(WreathElement(a, d)) for a in product(sym, repeat=n) for d in dihs}
    assert len(images) == 6 ** 3 * 6


@pytest.mark.parametrize("m, n", [(3, 3), (3, 6)])
def test_images_are_automorphisms(m, n):
    g = lexgraph.LexGraph(n=n, m=m)

    @settings(max_examples=100, deadline=None)
    @given(wreath_elements(m, n))
    def check(w):
        assert lexgraph.is_automorphism(g, to_vertex_perm(w))

    check()
