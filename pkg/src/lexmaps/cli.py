"""Command-line interface.

    lexmaps verify --m 3 --s 1 --family chiral [--report out.jsonl] [--identities]
    lexmaps census --m 3,5 --s 1,2 [--families chiral,or-odd] --out census.jsonl
    lexmaps petrie --m 3 --s 1 --family nonor-odd

Exit codes: 0 verified, 1 verification mismatch, 2 invalid parameters,
3 group enumeration cap exceeded.  The cap can be set with the
LEXMAPS_GROUP_CAP environment variable.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .constructions import FamilyId
from .lexgraph import InvalidParameters
from .permgroup import CapExceeded
from .verify import census, petrie_report, verify_instance, verify_proof_identities

EXIT_OK, EXIT_MISMATCH, EXIT_PARAMS, EXIT_CAP = 0, 1, 2, 3
FAMILY_NAMES = [f.value for f in FamilyId]


def _int_list(values: list[str]) -> list[int]:
    out = []
    for v in values:
        out.extend(int(x) for x in v.split(",") if x.strip())
    return out


def _family_list(values: list[str] | None) -> list[FamilyId] | None:
    if values is None:
        return None
    names = [x.strip() for v in values for x in v.split(",") if x.strip()]
    bad = [x for x in names if x not in FAMILY_NAMES]
    if bad:
        raise InvalidParameters(f"unknown families: {', '.join(bad)}")
    return [FamilyId(x) for x in names]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexmaps", description="Rotary maps on C_n[mK_1]")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify one (m, s, family) instance")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--family", choices=FAMILY_NAMES, required=True)
    p.add_argument("--report", type=Path, help="append the report as one JSON line to this file")
    p.add_argument("--identities", action="store_true", help="also run the order and element identity checks")

    p = sub.add_parser("census", help="verify a grid of instances into a JSON-lines file")
    p.add_argument("--m", nargs="*", default=[], help="comma or space separated list")
    p.add_argument("--s", nargs="*", default=[], help="comma or space separated list")
    p.add_argument("--families", nargs="*", help=f"subset of {', '.join(FAMILY_NAMES)}")
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("petrie", help="build the Petrie dual of a reflexible instance")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--family", choices=FAMILY_NAMES, required=True)
    return parser


def _cmd_verify(args) -> int:
    report = verify_instance(args.m, args.s, args.family)
    print(report.to_json())
    ok = report.matches_theorem
    if args.identities:
        for check in verify_proof_identities(args.m, args.s, args.family):
            status = "PASS" if check.passed else "FAIL"
            print(f"{status} {check.name}" + (f" ({check.detail})" if check.detail else ""))
            ok = ok and check.passed
    if args.report:
        args.report.parent.mkdir(parents=True, exist_ok=True)
        with args.report.open("a") as fh:
            fh.write(report.to_json() + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_census(args) -> int:
    result = census(_int_list(args.m), _int_list(args.s), _family_list(args.families), args.out)
    print(f"{len(result.reports)} verified, {len(result.skipped)} skipped, "
          f"{result.already_present} already present -> {args.out}")
    return EXIT_OK if result.all_match else EXIT_MISMATCH


def _cmd_petrie(args) -> int:
    rec = petrie_report(args.m, args.s, args.family)
    print(json.dumps(rec))
    return EXIT_OK if rec["oracles_agree"] else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {"verify": _cmd_verify, "census": _cmd_census, "petrie": _cmd_petrie}[args.command]
    try:
        return handler(args)
    except InvalidParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
