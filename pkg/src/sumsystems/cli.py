"""Command-line front end.

Subcommands: count, enumerate, build, verify, table, divisor-fn, check.
Results go to stdout as a single JSON document (CSV for table, bare values
with --format plain); diagnostics go to stderr.  Exit codes: 0 success or
verified, 1 verification failure, 2 usage error, 3 enumeration cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arith, counting, jof, systems


def _parse_tuple(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(chunk) for chunk in text.split(","))
    except ValueError:
        raise ValueError(f"bad tuple {text!r}, expected comma-separated integers")
    if not parts or any(n < 2 for n in parts):
        raise ValueError("tuple entries must be integers >= 2")
    return parts


def _emit(doc: dict, fmt: str, plain_lines) -> None:
    if fmt == "plain":
        for line in plain_lines:
            print(line)
    else:
        print(json.dumps(doc, indent=2))


def _cmd_count(args) -> int:
    if args.tuple is not None:
        if args.m is not None or args.all_m or args.unordered:
            print("error: --tuple does not combine with --m/--all-m/--unordered", file=sys.stderr)
            return 2
        parts = _parse_tuple(args.tuple)
        result = jof.count_for_tuple(parts)
        _emit(
            {"tuple": list(parts), "count": result, "method": "closed-form"},
            args.format,
            [str(result)],
        )
        return 0
    n = args.n
    if n is None:
        print("error: count needs --n or --tuple", file=sys.stderr)
        return 2
    if args.m is not None and args.all_m:
        print("error: --m and --all-m are mutually exclusive", file=sys.stderr)
        return 2
    if n < 1:
        print("error: --n must be positive", file=sys.stderr)
        return 2
    if args.m is not None:
        entry = {"N": n, "m": args.m, "count": counting.count_m_part(n, args.m).value}
        plain = [str(entry["count"])]
        if args.unordered:
            entry["unordered"] = counting.count_unordered(n, args.m).value
            plain = [str(entry["unordered"])]
        entry["method"] = "closed-form"
        _emit(entry, args.format, plain)
        return 0
    # no --m: report every m that can be non-zero
    top = max(1, arith.big_omega(n))
    rows = []
    plain = []
    for m in range(1, top + 1):
        row = {"m": m, "count": counting.count_m_part(n, m).value}
        if args.unordered:
            row["unordered"] = counting.count_unordered(n, m).value
        rows.append(row)
        plain.append(
            f"{m} {row['unordered' if args.unordered else 'count']}"
        )
    _emit({"N": n, "counts": rows, "method": "closed-form"}, args.format, plain)
    return 0


def _cmd_enumerate(args) -> int:
    parts = _parse_tuple(args.tuple)
    found = jof.enumerate_jofs(parts, cap=args.limit)
    doc = {
        "tuple": list(parts),
        "count": len(found),
        "jofs": [jof.jof_to_pairs(j) for j in found],
        "text": [jof.jof_to_text(j) for j in found],
    }
    _emit(doc, args.format, [jof.jof_to_text(j) for j in found])
    return 0


def _cmd_build(args) -> int:
    entries = jof.parse_jof_text(args.jof)
    if args.sum_and_distance:
        built = systems.to_sum_and_distance(systems.build_centred(entries))
    elif args.centred:
        built = systems.build_centred(entries)
    else:
        built = systems.build_sum_system(entries)
    print(json.dumps(systems.system_to_json(built), indent=2))
    return 0


def _cmd_verify(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        ok, reason = False, f"not valid JSON: {exc}"
        system = None
    else:
        try:
            system = systems.system_from_json(doc)
        except ValueError as exc:
            ok, reason = False, str(exc)
            system = None
        else:
            if isinstance(system, systems.CentredSumSystem):
                ok, reason = systems.verify_centred(system)
            else:
                ok, reason = systems.verify_sum_system(system)
    verdict = {"ok": ok, "reason": reason}
    if system is not None:
        verdict["N"] = system.N
        verdict["doubled"] = isinstance(system, systems.CentredSumSystem)
    _emit(verdict, args.format, ["ok" if ok else f"fail: {reason}"])
    return 0 if ok else 1


def _cmd_table(args) -> int:
    if args.max_n < 1 or args.max_m < 1:
        print("error: --max-n and --max-m must be positive", file=sys.stderr)
        return 2
    print("N,m,count")
    for n in range(1, args.max_n + 1):
        for m in range(1, args.max_m + 1):
            print(f"{n},{m},{counting.count_m_part(n, m).value}")
    return 0


def _cmd_divisor_fn(args) -> int:
    if args.r is not None and args.kind != "assoc":
        print("error: --r only applies to --kind assoc", file=sys.stderr)
        return 2
    if args.kind == "d":
        value = arith.classical_divisor(args.j, args.n)
    elif args.kind == "c":
        value = arith.nontrivial_divisor(args.j, args.n)
    elif args.kind == "assoc":
        value = arith.associated_divisor(args.j, args.r or 0, args.n)
    else:
        value = arith.squarefree_ordered_count(args.j, args.n)
    doc = {
        "kind": args.kind,
        "j": args.j,
        "r": args.r if args.kind == "assoc" else None,
        "n": args.n,
        "value": value,
    }
    _emit(doc, args.format, [str(value)])
    return 0


def _cmd_check(args) -> int:
    report = counting.divisor_sum_check(args.n, args.m)
    doc = report.as_dict()
    residuals = doc["residuals"]
    plain = ["ok" if report.ok else "fail " + " ".join(
        f"{k}={v}" for k, v in residuals.items()
    )]
    _emit(doc, args.format, plain)
    return 0 if report.ok else 1


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("json", "plain"), default="json",
        help="output style (default json)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumsys",
        description="Construct, verify and count m-part sum systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts of sum systems")
    p.add_argument("--n", type=int, help="count systems for this N over all part tuples")
    p.add_argument("--tuple", help="count JOFs of one fixed tuple, e.g. 9,5,6")
    p.add_argument("--m", type=int, help="restrict to m parts")
    p.add_argument("--all-m", action="store_true", help="one row per m (default without --m)")
    p.add_argument("--unordered", action="store_true", help="also divide out part order")
    _add_format(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list every JOF of a tuple")
    p.add_argument("--tuple", required=True, help="comma-separated cardinalities")
    p.add_argument("--limit", type=int, default=jof.DEFAULT_CAP,
                   help="enumeration cap (exceeding it is an error, not truncation)")
    _add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("build", help="build the system a JOF describes")
    p.add_argument("--jof", required=True,
                   help="part:factor pairs, e.g. 1:3,3:3,1:3,3:2,2:5")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--centred", action="store_true",
                       help="emit the centred system (doubled values)")
    group.add_argument("--sum-and-distance", action="store_true",
                       help="emit the positive halves with parity classes")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="verify a system JSON file")
    p.add_argument("--file", required=True, help="path to a system document")
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="CSV of counts for N and m up to bounds")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("divisor-fn", help="evaluate one divisor function")
    p.add_argument("--kind", choices=("d", "c", "assoc", "sqfree"), required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--r", type=int, help="upper index for --kind assoc (may be negative)")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_divisor_fn)

    p = sub.add_parser("check", help="divisor-sum identities at one (N, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_check)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except jof.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
