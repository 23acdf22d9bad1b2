"""Command-line front end: decide, solve, enumerate, three-squares, verify.

Records go to stdout (one per line; JSON with --json), diagnostics to
stderr.  Exit codes: 0 yes, 1 no, 2 malformed arguments / capacity refusal
/ internal failure.
"""

import argparse
import json
import sys

from .errors import CapacityError, ContractViolation
from .oracle import enumerate_representations, verify_range
from .solver import represent, unrepresentable_reason
from .three_squares import DEFAULT_SEARCH_CAP, three_square_decomposition


def _emit(record: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(record, separators=(",", ":")))
    else:
        print(text)


def _instance_record(n: int, t: int, triple=None, representation=None) -> dict:
    """Per-instance output record; field order here is the documented one."""
    reason = unrepresentable_reason(n, t)
    record: dict = {"n": n, "T": t, "representable": reason is None}
    if reason is not None:
        record["reason"] = reason
    record["m"] = 4 * n - t * t
    if triple is not None:
        record["triple"] = list(triple)
    if representation is not None:
        record["representation"] = list(representation)
    return record


def _instance_text(record: dict) -> str:
    bits = [f"n={record['n']}", f"T={record['T']}"]
    if record["representable"]:
        bits.append("representable")
    else:
        bits.append(f"not representable (reason: {record['reason']})")
    bits.append(f"m={record['m']}")
    if "triple" in record:
        bits.append("triple=" + ",".join(map(str, record["triple"])))
    if "representation" in record:
        bits.append("representation=" + ",".join(map(str, record["representation"])))
    return " ".join(bits)


def _cmd_decide(args) -> int:
    record = _instance_record(args.n, args.t)
    _emit(record, args.json_mode, _instance_text(record))
    return 0 if record["representable"] else 1


def _cmd_solve(args) -> int:
    n, t = args.n, args.t
    witness = represent(n, t, args.search_cap)
    if witness is None:
        record = _instance_record(n, t)
        _emit(record, args.json_mode, _instance_text(record))
        return 1
    triple = three_square_decomposition(4 * n - t * t, args.search_cap)
    record = _instance_record(n, t, triple=triple, representation=witness)
    _emit(record, args.json_mode, _instance_text(record))
    return 0


def _cmd_enumerate(args) -> int:
    found = enumerate_representations(args.n, args.t, limit=args.limit)
    if args.count_only:
        record = {"n": args.n, "T": args.t, "count": len(found)}
        _emit(record, args.json_mode, str(len(found)))
    else:
        for quad in found:
            record = {"n": args.n, "T": args.t, "representation": list(quad)}
            _emit(record, args.json_mode, ",".join(map(str, quad)))
    return 0 if found else 1


def _cmd_three_squares(args) -> int:
    triple = three_square_decomposition(args.m, args.search_cap)
    record: dict = {"m": args.m, "representable": triple is not None}
    if triple is not None:
        record["triple"] = list(triple)
        text = f"m={args.m} representable triple=" + ",".join(map(str, triple))
    else:
        text = f"m={args.m} not representable"
    _emit(record, args.json_mode, text)
    return 0 if triple is not None else 1


def _cmd_verify(args) -> int:
    report = verify_range(args.n_max, jobs=args.jobs, search_cap=args.search_cap)
    record = {
        "n_max": report.n_max,
        "scanned_instances": report.scanned_instances,
        "witnesses_checked": report.witnesses_checked,
        "mismatches": [
            {"n": m.n, "T": m.t, "oracle_exists": m.oracle_exists,
             "solver_decides": m.solver_decides}
            for m in report.mismatches
        ],
        "invalid_witnesses": [
            {"n": w.n, "T": w.t,
             "representation": None if w.representation is None
             else list(w.representation)}
            for w in report.invalid_witnesses
        ],
        "clean": report.clean,
        "elapsed": round(report.elapsed, 3),
    }
    lines = [
        f"verify n<={report.n_max}: scanned {report.scanned_instances} instances, "
        f"checked {report.witnesses_checked} witnesses, "
        f"{len(report.mismatches)} mismatches, "
        f"{len(report.invalid_witnesses)} invalid witnesses, "
        f"elapsed {report.elapsed:.2f}s"
    ]
    for m in report.mismatches:
        lines.append(
            f"mismatch n={m.n} T={m.t} oracle={m.oracle_exists} "
            f"solver={m.solver_decides}"
        )
    for w in report.invalid_witnesses:
        lines.append(f"invalid witness n={w.n} T={w.t} representation={w.representation}")
    _emit(record, args.json_mode, "\n".join(lines))
    return 0 if report.clean else 1


def build_parser() -> argparse.ArgumentParser:
    # Shared flags are attached to every subparser so they work both before
    # and after the subcommand; SUPPRESS keeps a subparser's default from
    # clobbering a value given before it.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit one machine-readable JSON record per line",
    )
    common.add_argument(
        "--search-cap", type=int, default=argparse.SUPPRESS, metavar="C",
        help="largest value the three-square witness search accepts "
        f"(default {DEFAULT_SEARCH_CAP})",
    )

    parser = argparse.ArgumentParser(
        prog="foursquares",
        parents=[common],
        description="Sums of four integer squares with a prescribed coordinate sum.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "decide", parents=[common],
        help="test whether n is a sum of four squares with coordinate sum T",
    )
    p.add_argument("n", type=int)
    p.add_argument("t", type=int, metavar="T")
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser(
        "solve", parents=[common],
        help="construct an explicit representation for (n, T)",
    )
    p.add_argument("n", type=int)
    p.add_argument("t", type=int, metavar="T")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser(
        "enumerate", parents=[common],
        help="brute-force list of every representation of (n, T)",
    )
    p.add_argument("n", type=int)
    p.add_argument("t", type=int, metavar="T")
    p.add_argument("--limit", type=int, default=None, metavar="K",
                   help="stop after K representations")
    p.add_argument("--count-only", action="store_true",
                   help="print only how many were found")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser(
        "three-squares", parents=[common],
        help="decide m as a sum of three squares and produce a witness triple",
    )
    p.add_argument("m", type=int)
    p.set_defaults(handler=_cmd_three_squares)

    p = sub.add_parser(
        "verify", parents=[common],
        help="scan all (n, T) up to --n-max and report solver/oracle agreement",
    )
    p.add_argument("--n-max", type=int, required=True, metavar="N")
    p.add_argument("--jobs", type=int, default=1, metavar="J",
                   help="shard the scan across J processes")
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        code = exc.code
        return code if isinstance(code, int) else 0
    args.json_mode = getattr(args, "json", False)
    args.search_cap = getattr(args, "search_cap", DEFAULT_SEARCH_CAP)
    try:
        return args.handler(args)
    except (CapacityError, ContractViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
