"""Exhaustive search for a reflection of the chiral recipe under three constraint sets.

Inverting sigma1 alone admits a stray involution; once the candidate must
also normalise G (or invert sigma2) nothing survives.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from lexmaps.constructions import FamilyId, recipe, search_reflection
from lexmaps.permgroup import GeneratedGroup, enumerate_group


@dataclass
class SearchConfig:
    m: int = 3
    s_max: int = 2


def run(cfg: SearchConfig) -> None:
    for s in range(1, cfg.s_max + 1):
        rec = recipe(FamilyId.CHIRAL, cfg.m, s)
        s1, s2, _ = rec.vertex_perms()
        grp = GeneratedGroup(s1.degree, [s1, s2])
        enumerate_group(grp)
        start = time.perf_counter()
        only1 = len(search_reflection(rec.sigma1))
        norm = len(search_reflection(rec.sigma1, normalize=grp))
        both = len(search_reflection(rec.sigma1, rec.sigma2))
        print(f"m={cfg.m} s={s}: invert sigma1 -> {only1}, +normalise G -> {norm}, "
              f"+invert sigma2 -> {both}  ({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--s-max", type=int, default=2)
    a = ap.parse_args()
    run(SearchConfig(a.m, a.s_max))
