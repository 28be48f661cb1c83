"""Verify every in-domain family on a grid of (m, s) and print a summary table.

    python3 scripts/run_grid.py --m 3 5 --s 1 2 3 --out results/grid.jsonl
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from lexmaps.verify import census


@dataclass
class GridConfig:
    m_values: list[int] = field(default_factory=lambda: [3, 5])
    s_values: list[int] = field(default_factory=lambda: [1, 2, 3])
    out: Path = Path("results/grid.jsonl")


def run(cfg: GridConfig) -> int:
    res = census(cfg.m_values, cfg.s_values, None, cfg.out)
    print(f"{'m':>3} {'s':>3} {'family':<11} {'type':<10} {'surface':<13} {'|Aut|':>7} {'class':<24} ok")
    for r in res.reports:
        typ = f"{{{r['type_p']},{r['type_q']}}}"
        print(f"{r['m']:>3} {r['s']:>3} {r['family']:<11} {typ:<10} {r['surface'] + ' ' + str(r['genus_or_crosscap']):<13} "
              f"{r['aut_order']:>7} {r['classification']:<24} {'yes' if r['matches_theorem'] else 'NO'}")
    print(f"{len(res.reports)} new, {len(res.skipped)} skipped, {res.already_present} already in {cfg.out}")
    return 0 if res.all_match else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, nargs="+", default=GridConfig().m_values)
    ap.add_argument("--s", type=int, nargs="+", default=GridConfig().s_values)
    ap.add_argument("--out", type=Path, default=GridConfig().out)
    a = ap.parse_args()
    raise SystemExit(run(GridConfig(a.m, a.s, a.out)))
