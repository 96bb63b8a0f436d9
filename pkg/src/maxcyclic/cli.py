"""Command-line front end.

    maxcyclic --n 2 --ell 3 --lambda 1,1 primitives
    maxcyclic --n 1 --ell 5 --lambda 2 --fp lift --out lift.json
    maxcyclic --n 2 --ell 3,5 sweep

Exit codes: 0 all checks pass, 2 a predicted property fails, 1 usage error.
For ``sweep`` the ``--n`` value is the rank and ``--ell`` a comma list.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import analysis
from .cyclotomic import check_ell, is_prime
from .djmm import build_module, reduce_mod_p
from .root_data import parse_weight, steinberg_test

COMMANDS = ("build", "check-relations", "primitives", "socle", "character", "lift", "fp-report", "sweep")

REPORTS = {
    "check-relations": analysis.relations_report,
    "primitives": analysis.primitives_report,
    "socle": analysis.socle_report,
    "character": analysis.character_report,
    "lift": analysis.lift_report,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="maxcyclic", description="Maximal cyclic modules of small quantum groups of type A.")
    p.add_argument("--n", type=int, required=True, help="rank (for sweep: the rank swept over)")
    p.add_argument("--ell", required=True, help="odd order of the root of unity (for sweep: comma list)")
    p.add_argument("--lambda", dest="lam", help="highest weight as comma-separated coordinates")
    p.add_argument("--fp", action="store_true", help="work over F_p via v -> 1 (ell must be prime)")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("command", choices=COMMANDS)
    return p


def _ell(text: str) -> int:
    try:
        ell = int(text)
    except ValueError:
        raise UsageError(f"bad ell {text!r}") from None
    try:
        check_ell(ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return ell


def _need_prime(ell: int) -> None:
    if not is_prime(ell):
        raise UsageError(f"F_p mode needs prime ell, got {ell}")


def _weight(args) -> tuple:
    if args.lam is None:
        raise UsageError("--lambda is required")
    try:
        lam = parse_weight(args.lam)
    except ValueError:
        raise UsageError(f"bad weight {args.lam!r}") from None
    if len(lam) != args.n:
        raise UsageError(f"lambda has {len(lam)} coordinates, expected {args.n}")
    return lam


def single(args) -> dict:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    ell = _ell(args.ell)
    lam = _weight(args)
    if args.command == "fp-report":
        _need_prime(ell)
        return analysis.fp_report(lam, ell)
    if args.fp:
        _need_prime(ell)
    M = build_module(lam, ell)
    if args.fp:
        M = reduce_mod_p(M)
    if args.command == "build":
        out = M.to_json()
        out["dim"] = M.dim
        out["passed"] = True
        return out
    rep = REPORTS[args.command](M)
    rep["params"] = analysis.params_json(M)
    rep["passed"] = all(rep["checks"].values())
    return rep


def sweep(n: int, ells: list, fp: bool) -> dict:
    runs, groups = [], []
    for ell in ells:
        count = failed = 0
        simple = []
        for lam in itertools.product(range(ell), repeat=n):
            rep = analysis.fp_report(lam, ell) if fp else analysis.full_report(build_module(lam, ell))
            bad = sorted(k for k, v in rep["checks"].items() if not v)
            runs.append({
                "ell": ell,
                "lambda": list(lam),
                "passed": not bad,
                "failed_checks": bad,
                "socle_dim": rep["socle_dim"],
                "is_simple": rep["is_simple"],
            })
            count += 1
            failed += bool(bad)
            if rep["is_simple"]:
                simple.append(list(lam))
        groups.append({
            "ell": ell,
            "count": count,
            "failed": failed,
            "simple": simple,
            "steinberg": [list(lam) for lam in itertools.product(range(ell), repeat=n) if steinberg_test(lam, ell)],
        })
    total_failed = sum(g["failed"] for g in groups)
    return {
        "n": n,
        "ell": list(ells),
        "domain": "fp" if fp else "cyclotomic",
        "groups": groups,
        "runs": runs,
        "total": len(runs),
        "failed": total_failed,
        "passed": total_failed == 0,
    }


def _sweep_args(args) -> dict:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    ells = [_ell(part) for part in args.ell.split(",") if part.strip()]
    if args.fp:
        for ell in ells:
            _need_prime(ell)
    return sweep(args.n, ells, args.fp)


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        report = _sweep_args(args) if args.command == "sweep" else single(args)
    except UsageError as exc:
        print(f"maxcyclic: error: {exc}", file=sys.stderr)
        return 1
    text = dump(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["passed"] else 2


if __name__ == "__main__":
    sys.exit(main())
