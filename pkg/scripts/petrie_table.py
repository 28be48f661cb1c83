"""Petrie duals of the reflexible families, classified by both oracles."""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from lexmaps.constructions import FamilyId
from lexmaps.verify import petrie_report


@dataclass
class PetrieConfig:
    instances: list[tuple[int, int]] = field(default_factory=lambda: [(3, 1), (3, 2), (3, 3), (5, 1)])


def run(cfg: PetrieConfig) -> int:
    bad = 0
    for m, s in cfg.instances:
        for fam in FamilyId:
            if fam is FamilyId.CHIRAL or not fam.in_domain(m, s):
                continue
            r = petrie_report(m, s, fam)
            bad += not r["oracles_agree"]
            print(f"m={m} s={s} {fam.value:<11} -> {r['classification']:<24} {r['surface'] + ' ' + str(r['genus_or_crosscap']):<13} "
                  f"self-Petrie={r['self_petrie']}")
    return 1 if bad else 0


if __name__ == "__main__":
    argparse.ArgumentParser(description=__doc__).parse_args()
    raise SystemExit(run(PetrieConfig()))
