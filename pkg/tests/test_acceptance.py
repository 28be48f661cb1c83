"""One test per acceptance criterion; the summary prints a PASS/FAIL line for each."""
import time

import pytest
from hypothesis import given, settings, strategies as st

from lexmaps import lexgraph
from lexmaps.cli import main
from lexmaps.constructions import FamilyId, recipe, search_reflection, theorem_values
from lexmaps.mapcore import (
    MapClass,
    classify,
    map_isomorphic,
    petrie_dual,
    predict_classification,
    vertex_figure,
    verify_cdc,
)
from lexmaps.permgroup import GeneratedGroup, compose, enumerate_group, order_of
from lexmaps.verify import verify_instance

GRID = [(3, 1), (3, 2), (3, 3), (5, 1)]
INSTANCES = [(f, m, s) for m, s in GRID for f in FamilyId if f.in_domain(m, s)]
IDS = [f"{f.value}-{m}-{s}" for f, m, s in INSTANCES]


@pytest.mark.acceptance("criterion 1: closed forms hold on the grid")
@pytest.mark.parametrize("family, m, s", INSTANCES, ids=IDS)
def test_c1_closed_form_grid(family, m, s):
    start = time.perf_counter()
    r = verify_instance(m, s, family)
    assert time.perf_counter() - start < 60
    assert r.matches_theorem, r.reason
    (p, q), surf, cls = theorem_values(family, m, s)
    assert (r.type_p, r.type_q) == (p, q)
    assert r.classification == cls.value
    chi = 2 - 2 * surf.value if surf.orientable else 2 - surf.value
    assert r.euler_characteristic == chi and r.genus_or_crosscap == surf.value
    assert r.flags == 4 * m * m * s * m


@pytest.mark.acceptance("criterion 2: generator and group orders")
@pytest.mark.parametrize("family, m, s", INSTANCES, ids=IDS)
def test_c2_orders(family, m, s):
    rec = recipe(family, m, s)
    s1, s2, _ = rec.vertex_perms()
    n = s * m
    grp = GeneratedGroup(m * n, [s1, s2])
    enumerate_group(grp)
    p = {FamilyId.CHIRAL: m * n, FamilyId.NONOR_ODD: 2 * n, FamilyId.NONOR_EVEN: 2 * n}.get(family, n)
    size = (4 if family.expected_class is MapClass.REFLEXIBLE_NON_ORIENTABLE else 2) * m * m * n
    assert (order_of(s1), order_of(s2), order_of(compose(s1, s2)), grp.order) == (p, 2 * m, 2, size)


@pytest.mark.acceptance("criterion 3: flag oracle agrees with group criterion")
@pytest.mark.parametrize("family, m, s", INSTANCES, ids=IDS)
def test_c3_oracle_agreement(family_map, family, m, s):
    mp = family_map(family, m, s)
    _, _, rho = recipe(family, m, s).vertex_perms()
    s1 = mp.generators[0]
    assert classify(mp) is predict_classification(mp.group, s1, rho) is family.expected_class


@pytest.mark.acceptance("criterion 4: Petrie duality")
def test_c4_petrie(family_map):
    for s in (1, 3):
        g = lexgraph.build(3, s)
        s1, s2, rho = recipe(FamilyId.NONOR_ODD, 3, s).vertex_perms()
        dual = petrie_dual(s1, s2, rho, g)
        assert map_isomorphic(dual.flags, family_map(FamilyId.OR_ODD, 3, s).flags)
        if s == 1:
            back = petrie_dual(*dual.generators, rho, g)
            assert map_isomorphic(back.flags, family_map(FamilyId.NONOR_ODD, 3, 1).flags)
    g = lexgraph.build(3, 2)
    s1, s2, rho = recipe(FamilyId.NONOR_EVEN, 3, 2).vertex_perms()
    assert map_isomorphic(petrie_dual(s1, s2, rho, g).flags, family_map(FamilyId.NONOR_EVEN, 3, 2).flags)


@pytest.mark.acceptance("criterion 5: structural properties")
@given(st.sampled_from(INSTANCES))
@settings(max_examples=30, deadline=None)
def test_c5_structure(family_map, inst):
    family, m, s = inst
    mp = family_map(family, m, s)
    g = mp.graph
    assert verify_cdc(mp.cdc, g)
    for v in g.vertices():
        fig = vertex_figure(mp.cdc, g, v)
        assert fig.is_cycle and len(fig.nodes) == 2 * m
    fs = mp.flags
    s0, s1, s2 = fs.involutions
    for x in range(len(fs)):
        assert s0[s0[x]] == s1[s1[x]] == s2[s2[x]] == x
        assert s0[s2[s0[s2[x]]]] == x
    if family is FamilyId.CHIRAL:
        assert all(len(set(c)) == len(c) == g.num_vertices for c in mp.cdc.cycles)


@pytest.mark.acceptance("criterion 5: structural properties")
def test_c5_complete_multipartite():
    g = lexgraph.build(3, 1)
    assert lexgraph.is_complete_multipartite(g) and g.num_edges == 27


@pytest.mark.acceptance("criterion 6: no reflection for the chiral recipe")
@pytest.mark.parametrize("s", [1, 2])
def test_c6_chirality_search(s):
    rec = recipe(FamilyId.CHIRAL, 3, s)
    s1, s2, _ = rec.vertex_perms()
    grp = GeneratedGroup(s1.degree, [s1, s2])
    enumerate_group(grp)
    start = time.perf_counter()
    assert search_reflection(rec.sigma1, normalize=grp) == []
    assert time.perf_counter() - start < 10


@pytest.mark.acceptance("criterion 7: domain guards exit 2")
@pytest.mark.parametrize("family", list(FamilyId))
@pytest.mark.parametrize("m, s", [(3, 4), (3, 8), (4, 1), (6, 2)])
def test_c7_domain_guards(family, m, s, tmp_path, capsys):
    if family is FamilyId.CHIRAL and m % 2:
        pytest.skip("chiral family is defined for every s")
    report = tmp_path / "r.jsonl"
    code = main(["verify", "--m", str(m), "--s", str(s), "--family", family.value, "--report", str(report)])
    assert code == 2
    assert not report.exists() and capsys.readouterr().out == ""
