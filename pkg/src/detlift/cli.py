"""Command-line front end: run named verification suites and emit JSON or text reports.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 nothing ran (all skipped).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time

from . import __version__
from .cohomology import (
    annihilator_containment,
    annihilator_tightness,
    ext_generators_check,
    ext_lift_check,
    hilbert_compare,
    orbit_containment,
)
from .combinatorics import check_schur_oracles
from .complexes import check_full_lift, check_identities, worked_examples
from .report import jsonable
from .weyl import MAX_CAYLEY_DEGREE, cayley_check, orbit_annihilation, pairing_equivariance

TOOL = "detlift"
CHECKS = ("lift", "cayley", "annihilator", "hilbert", "pairing", "schur", "identities")
MAX_LIFT_N = 4
MAX_LIFT_T = 6
EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_SKIPPED = 0, 1, 2, 3


class Skipped(Exception):
    """Parameters outside the feasible range for a check."""


def _detail(report) -> dict:
    d = report.to_dict()
    payload = dict(d["payload"])
    payload["params"] = d["params"]
    return {"name": d["name"], "status": d["status"], "payload": payload}


def _skip(name: str, message: str) -> dict:
    return {"name": name, "status": "skipped", "payload": {"message": message}}


def run_lift(args):
    n, t = args.n, args.t
    if not 2 <= n <= MAX_LIFT_N or not 1 <= t <= MAX_LIFT_T:
        raise Skipped(f"lift needs 2 <= n <= {MAX_LIFT_N} and 1 <= t <= {MAX_LIFT_T}")
    out = [check_full_lift(n, t)]
    if (n, t) == (3, 2):
        out.append(worked_examples())
    return out


def run_cayley(args):
    n = args.n
    if not 2 <= n <= 3:
        raise Skipped("cayley runs for n in {2, 3}")
    out = []
    for s in itertools.product(range(MAX_CAYLEY_DEGREE), repeat=n):
        if sum(s) < MAX_CAYLEY_DEGREE:
            out += [cayley_check(n, s, i) for i in range(1, n + 1)]
    return out


def run_annihilator(args):
    n, t = args.n, args.t
    if not 2 <= n <= 3 or not n - 1 <= t <= 4:
        raise Skipped("annihilator needs n in {2, 3} and n - 1 <= t <= 4")
    out = [annihilator_containment(n, t), annihilator_tightness(n, t)]
    out += [ext_lift_check(n, t), ext_generators_check(n, t)]
    if (n, t) == (3, 3):
        out.append(orbit_containment(n, t, range(args.seed, args.seed + 5)))
    return out


def run_hilbert(args):
    m = args.m if args.m is not None else args.n + 1
    try:
        return [hilbert_compare(m, args.n, args.t, args.rmax)]
    except ValueError as exc:
        raise Skipped(str(exc)) from None


def run_pairing(args):
    out = [pairing_equivariance(args.seed, args.trials)]
    out += [orbit_annihilation(3, k, range(args.seed, args.seed + 5)) for k in (1, 2)]
    return out


def run_schur(args):
    return [check_schur_oracles()]


def run_identities(args):
    return [check_identities()]


RUNNERS = {
    "lift": run_lift,
    "cayley": run_cayley,
    "annihilator": run_annihilator,
    "hilbert": run_hilbert,
    "pairing": run_pairing,
    "schur": run_schur,
    "identities": run_identities,
}


def run(args) -> dict:
    """Execute one request and return the report envelope (without printing)."""
    start = time.perf_counter()
    names = CHECKS if args.check == "all" else (args.check,)
    details = []
    for name in names:
        try:
            details += [_detail(r) for r in RUNNERS[name](args)]
        except Skipped as exc:
            details.append(_skip(name, str(exc)))
    statuses = {d["status"] for d in details}
    if "fail" in statuses:
        status = "fail"
    elif statuses == {"skipped"}:
        status = "skipped"
    else:
        status = "pass"
    params = {
        "m": args.m if args.m is not None else args.n + 1,
        "n": args.n,
        "t": args.t,
        "rmax": args.rmax,
        "seed": args.seed,
        "trials": args.trials,
    }
    return {
        "tool": TOOL,
        "version": __version__,
        "check": args.check,
        "params": params,
        "status": status,
        "details": jsonable(details),
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }


def render_text(env: dict) -> str:
    lines = [f"{env['tool']} {env['version']}  check={env['check']}  status={env['status']}"]
    for d in env["details"]:
        p = {k: v for k, v in d["payload"].get("params", {}).items()}
        extra = f"  {d['payload']['message']}" if d["status"] == "skipped" else ""
        lines.append(f"  [{d['status']:>7}] {d['name']} {json.dumps(p, sort_keys=True)}{extra}")
    lines.append(f"elapsed_ms={env['elapsed_ms']}")
    return "\n".join(lines)


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog=TOOL, description="Exact verification suites for lifts of Koszul complexes and Ext generators.")
    ap.add_argument("--check", required=True, choices=CHECKS + ("all",))
    ap.add_argument("--m", type=_positive, default=None, help="row count for hilbert (default n + 1)")
    ap.add_argument("--n", type=_positive, default=3)
    ap.add_argument("--t", type=_positive, default=3)
    ap.add_argument("--rmax", type=_nonneg, default=4)
    ap.add_argument("--seed", type=_nonneg, default=0)
    ap.add_argument("--trials", type=_positive, default=50)
    mode = ap.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="mode", action="store_const", const="json")
    mode.add_argument("--text", dest="mode", action="store_const", const="text")
    ap.set_defaults(mode="json")
    ap.add_argument("--out", metavar="FILE", default=None, help="write the report here instead of stdout")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    env = run(args)
    text = json.dumps(env, indent=2) if args.mode == "json" else render_text(env)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "skipped": EXIT_SKIPPED}[env["status"]]


if __name__ == "__main__":
    sys.exit(main())
