"""End-to-end verification of one (m, s, family) instance, the identity suite, and census."""
from __future__ import annotations

import json
import logging
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Sequence

from . import lexgraph, mapcore
from .constructions import ConstructionRecipe, FamilyId, check_domain, recipe, theorem_values
from .lexgraph import InvalidParameters
from .permgroup import (
    GeneratedGroup,
    Permutation,
    compose,
    enumerate_group,
    is_inverted_by,
    order_of,
    stabilizer_of_arc,
)
from .wreath import WreathElement, standard_generators, to_vertex_perm, vertex_index

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class MapReport:
    """One verified instance.  Field order is the on-disk order."""

    m: int
    s: int
    n: int
    family: str
    type_p: int
    type_q: int
    vertices: int
    edges: int
    faces: int
    flags: int
    euler_characteristic: int
    orientable: bool
    surface: str  # "genus" or "crosscap"
    genus_or_crosscap: int
    group_order: int
    aut_order: int
    flag_orbits: int
    classification: str
    group_classification: str
    polyhedral: bool
    cdc_valid: bool
    vertex_figures_connected: bool
    matches_theorem: bool
    reason: str = ""
    runtime_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def verify_instance(m: int, s: int, family: FamilyId | str, cap: int | None = None) -> MapReport:
    """Recipe -> vertex permutations -> group -> faces -> flag oracle -> report.

    Raises InvalidParameters for out-of-domain input and CapExceeded when the
    group closure is too large; every other disagreement lands in ``reason``.
    """
    family = FamilyId(family)
    check_domain(family, m, s)
    start = time.perf_counter()
    rec = recipe(family, m, s)
    g = lexgraph.build(m, s)
    s1, s2, rho = rec.vertex_perms()
    problems = []

    hyp = mapcore.check_rotary_hypotheses(g, s1, s2)
    problems += [f"hypothesis {k} fails" for k, ok in hyp.items() if not ok]
    if not (lexgraph.is_automorphism(g, s1) and lexgraph.is_automorphism(g, s2)):
        problems.append("generators are not graph automorphisms")

    mp = mapcore.build_map(g, s1, s2, cap=cap)
    cdc_valid = mapcore.verify_cdc(mp.cdc, g)
    figures_ok = all(mapcore.vertex_figure(mp.cdc, g, v).is_cycle for v in g.vertices())
    surface = mapcore.genus_or_crosscap(mp)
    aut = mapcore.map_automorphisms(mp.flags, mp.base_flag)
    cls = mapcore.classify(mp)
    predicted = mapcore.predict_classification(mp.group, s1, rho)

    lengths = mp.face_lengths()
    type_p = lengths.pop() if len(lengths) == 1 else -1
    if type_p < 0:
        problems.append("faces of unequal length")
    exp_type, exp_surface, exp_class = theorem_values(family, m, s)
    if (type_p, g.valence) != exp_type:
        problems.append(f"type {{{type_p}, {g.valence}}} != {{{exp_type[0]}, {exp_type[1]}}}")
    if surface != exp_surface:
        problems.append(f"{surface} != {exp_surface}")
    if cls is not exp_class:
        problems.append(f"flag oracle says {cls.value}, expected {exp_class.value}")
    if predicted is not cls:
        problems.append(f"group criterion says {predicted.value}, flag oracle says {cls.value}")
    if mp.group.order != rec.expected_group_order:
        problems.append(f"|G| = {mp.group.order} != {rec.expected_group_order}")
    if not (cdc_valid and figures_ok):
        problems.append("faces do not form a valid cycle double cover with disk vertex figures")

    return MapReport(
        m=m, s=s, n=g.n, family=family.value,
        type_p=type_p, type_q=g.valence,
        vertices=g.num_vertices, edges=g.num_edges, faces=mp.num_faces, flags=len(mp.flags),
        euler_characteristic=mapcore.euler_characteristic(mp),
        orientable=surface.orientable, surface=surface.label, genus_or_crosscap=surface.value,
        group_order=mp.group.order, aut_order=aut.order, flag_orbits=aut.flag_orbits,
        classification=cls.value, group_classification=predicted.value,
        polyhedral=mapcore.is_polyhedral(mp),
        cdc_valid=cdc_valid, vertex_figures_connected=figures_ok,
        matches_theorem=not problems, reason="; ".join(problems),
        runtime_ms=round((time.perf_counter() - start) * 1000, 3),
    )


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _vec(m: int, n: int, exps: Sequence[int], dih=None, with_t: Sequence[bool] | None = None) -> WreathElement:
    """Wreath element with components ``t^e c^k`` from an exponent list."""
    c, t, _, _ = standard_generators(m, n)
    comps = []
    for i, k in enumerate(exps):
        a = c ** k
        if with_t is not None and with_t[i]:
            a = compose(t, a)
        comps.append(a)
    return WreathElement.of(comps, dih)


def verify_proof_identities(m: int, s: int, family: FamilyId | str, cap: int | None = None) -> list[Check]:
    """Exact order and closed-form element identities for one recipe."""
    family = FamilyId(family)
    check_domain(family, m, s)
    rec = recipe(family, m, s)
    n = rec.n
    _, _, r, z = standard_generators(m, n)
    x1, x2, rho = rec.sigma1, rec.sigma2, rec.rho
    p1, p2, prho = rec.vertex_perms()
    group = GeneratedGroup(m * n, [p1, p2])
    enumerate_group(group, cap)
    checks: list[Check] = []

    def expect(name, actual, wanted):
        checks.append(Check(name, actual == wanted, f"got {actual}, expected {wanted}" if actual != wanted else ""))

    def same(name, a: WreathElement, b: WreathElement):
        checks.append(Check(name, a == b))

    (p, q), _, _ = theorem_values(family, m, s)
    g1, g2 = ("sigma1", "sigma2") if family in (FamilyId.CHIRAL, FamilyId.NONOR_ODD, FamilyId.NONOR_EVEN) else ("eta1", "eta2")
    expect(f"|{g1}|", order_of(p1), p)
    expect(f"|{g2}|", order_of(p2), q)
    expect(f"|{g1}{g2}|", order_of(compose(p1, p2)), 2)
    expect("|G|", group.order, rec.expected_group_order)
    w = p1(1)
    stab = len(stabilizer_of_arc(group, 1, w))
    expect("arc stabiliser size", stab, 2 if family in (FamilyId.NONOR_ODD, FamilyId.NONOR_EVEN) else 1)

    sq = x2 * x2
    odd_i = range(1, n + 1)
    if family is FamilyId.CHIRAL:
        same("sigma2^2 = (1, c, ..., c^(n-1))", sq, _vec(m, n, [i - 1 for i in odd_i]))
        same("sigma1^n = (c, ..., c)", x1 ** n, _vec(m, n, [1] * n))
        same("sigma2^-2 sigma1 sigma2^2 = sigma1^(n+1)", sq.inverse() * x1 * sq, x1 ** (n + 1))
    elif family in (FamilyId.NONOR_ODD, FamilyId.OR_ODD):
        base = recipe(FamilyId.NONOR_ODD, m, s)
        b1, b2 = base.sigma1, base.sigma2
        phi = b2 * b2
        psi = b1.inverse() * phi * b1
        same("phi = sigma2^2 closed form", phi, _vec(m, n, [(-1) ** (i - 1) * 4 * (i - 1) for i in odd_i]))
        same("psi closed form", psi, _vec(m, n, [(-1) ** i * 4 * (i - 2) for i in odd_i]))
        same("psi^sigma1 = phi^-1 psi^-2", b1.inverse() * psi * b1, phi.inverse() * psi.inverse() * psi.inverse())
        same("sigma1^n = (tc^-1, ..., tc^-1)", b1 ** n, _vec(m, n, [-1] * n, with_t=[True] * n))
        same("phi^a psi^b closed form",
             (phi ** ((m * m - 1) // 4)) * (psi ** ((m + 1) ** 2 // 4)),
             _vec(m, n, [1] + [(-1) ** (i - 1) * (3 - 2 * i) for i in range(2, n + 1)]))
        same("rho = (1, tc^-1, ..., tc^-1)z", rho, _vec(m, n, [0] + [-1] * (n - 1), z, [False] + [True] * (n - 1)))
        same("sigma1 sigma2 closed form", b1 * b2,
             _vec(m, n, [(-1) ** i * (2 * i - 1) for i in range(1, n)] + [1], r * z))
        if family is FamilyId.OR_ODD:
            exps = [0] + [(-1) ** (i + 1) * (2 * i - 1) - 1 for i in range(2, n)] + [1]
            same("eta1 closed form", x1, _vec(m, n, exps, r, [True] * (n - 1) + [False]))
            xi = x1.inverse() * sq * x1
            same("xi = sigma1^-1 sigma2^-2 sigma1", xi, b1.inverse() * phi.inverse() * b1)
    else:
        if family is FamilyId.NONOR_EVEN:
            phi = sq
            psi = x1.inverse() * phi * x1
            same("phi = sigma2^2 closed form", phi,
                 _vec(m, n, [0 if i % 2 else (-2 if i % 4 == 2 else 2) for i in odd_i]))
            same("psi closed form", psi,
                 _vec(m, n, [0 if i % 2 == 0 else (2 if i % 4 == 1 else -2) for i in odd_i]))
            same("psi^sigma1 = phi^-1", x1.inverse() * psi * x1, phi.inverse())
            same("sigma1^n phi^a psi^b closed form",
                 (x1 ** n) * (phi ** ((m - 1) // 2)) * (psi ** ((m + 1) // 2)),
                 _vec(m, n, [0 if ((i - 1) // 2) % 2 == 0 else -2 for i in odd_i], with_t=[True] * n))
            same("rho = (1, tc^-1, ..., tc^-1)z", rho, _vec(m, n, [0] + [-1] * (n - 1), z, [False] + [True] * (n - 1)))
            same("sigma1 sigma2 closed form", x1 * x2, _vec(m, n, [-1 if i % 4 in (0, 1) else 1 for i in odd_i], r * z))
        else:
            zeta = sq
            xi = x1.inverse() * zeta * x1
            same("zeta = eta2^2 closed form", zeta, _vec(m, n, [1 - i for i in odd_i]))
            same("xi closed form", xi, _vec(m, n, [i - 2 for i in odd_i]))
            same("xi^eta1 = zeta^-1 xi^-2", x1.inverse() * xi * x1, zeta.inverse() * xi.inverse() * xi.inverse())
            same("eta1 eta2 closed form", x1 * x2,
                 _vec(m, n, [0] + [(i // 2) for i in range(2, n)] + [0], r * z))
            same("rho = z", rho, WreathElement.pure(z, m))

    if prho is not None:
        checks.append(Check("rho is an involution", compose(prho, prho).is_identity() and not prho.is_identity()))
        checks.append(Check("rho fixes v", prho(1) == 1))
        checks.append(Check(f"rho inverts {g1}", is_inverted_by(p1, prho)))
        checks.append(Check(f"rho inverts {g2}", is_inverted_by(p2, prho)))
        in_group = prho in group
        want_in = family in (FamilyId.NONOR_ODD, FamilyId.NONOR_EVEN)
        checks.append(Check("rho in G" if want_in else "rho not in G", in_group == want_in))
    return checks


# -- census ---------------------------------------------------------------

def _key(rec: dict) -> tuple:
    return rec.get("m"), rec.get("s"), rec.get("family"), rec.get("schema_version")


def census_record(report: MapReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "record": "report",
        "timestamp": datetime.now(timezone.utc).isoformat(),
        **asdict(report),
    }


def skip_record(m: int, s: int, family: FamilyId, reason: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "record": "skipped",
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "m": m, "s": s, "family": family.value, "skipped": True, "reason": reason,
    }


def read_records(path: Path) -> list[dict]:
    if not path.exists():
        return []
    out = []
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out


@dataclass
class CensusResult:
    reports: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    already_present: int = 0

    @property
    def all_match(self) -> bool:
        return all(r["matches_theorem"] for r in self.reports)


def census(m_list: Iterable[int], s_list: Iterable[int], families: Iterable[FamilyId | str] | None,
           output_path: Path | str, cap: int | None = None) -> CensusResult:
    """Verify every (m, s, family) combination, appending one JSON line per result.

    Out-of-domain combinations become explicit ``skipped`` lines.  Keys already
    in the file are not recomputed, so re-runs only append what is missing.
    """
    path = Path(output_path)
    fams = [FamilyId(f) for f in families] if families else list(FamilyId)
    done = {_key(r) for r in read_records(path)}
    result = CensusResult()
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a") as fh:
        for m in m_list:
            for s in s_list:
                for fam in fams:
                    if (m, s, fam.value, SCHEMA_VERSION) in done:
                        result.already_present += 1
                        continue
                    try:
                        check_domain(fam, m, s)
                    except InvalidParameters as exc:
                        log.info("skipping m=%d s=%d %s: %s", m, s, fam.value, exc)
                        rec = skip_record(m, s, fam, str(exc))
                        result.skipped.append(rec)
                    else:
                        rec = census_record(verify_instance(m, s, fam, cap))
                        result.reports.append(rec)
                    fh.write(json.dumps(rec) + "\n")
                    fh.flush()
    return result


def petrie_report(m: int, s: int, family: FamilyId | str, cap: int | None = None) -> dict:
    """Build the Petrie dual of a reflexible recipe and classify it two ways."""
    family = FamilyId(family)
    check_domain(family, m, s)
    rec = recipe(family, m, s)
    if rec.rho is None:
        raise InvalidParameters(f"family {family.value} has no reflection, so no Petrie dual")
    g = lexgraph.build(m, s)
    s1, s2, rho = rec.vertex_perms()
    dual = mapcore.petrie_dual(s1, s2, rho, g, cap=cap)
    original = mapcore.build_map(g, s1, s2, cap=cap)
    cls = mapcore.classify(dual)
    rho_in_dual_group = rho in dual.group
    surface = mapcore.genus_or_crosscap(dual)
    agree = rho_in_dual_group == (cls is mapcore.MapClass.REFLEXIBLE_NON_ORIENTABLE) and cls is not mapcore.MapClass.NOT_ROTARY
    return {
        "schema_version": SCHEMA_VERSION,
        "record": "petrie",
        "m": m, "s": s, "n": g.n, "family": family.value,
        "type_p": dual.face_lengths().pop() if len(dual.face_lengths()) == 1 else -1,
        "type_q": g.valence,
        "faces": dual.num_faces,
        "surface": surface.label,
        "genus_or_crosscap": surface.value,
        "classification": cls.value,
        "rho_in_rotation_group": rho_in_dual_group,
        "self_petrie": mapcore.map_isomorphic(dual.flags, original.flags),
        "oracles_agree": agree,
    }
