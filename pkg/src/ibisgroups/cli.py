"""Command-line front end: ``ibisgroups <command> [options]``.

Exit codes: 0 on a complete run, 2 when a search cap cut the run short,
1 on any error (bad input, unknown name, cap exceeded while building).
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import LISTING, listing_lines, resolve
from .config import DEFAULT_NODE_CAP, DEFAULT_TIME_CAP, RunConfig
from .errors import CapacityError, InputError, PreconditionError
from .permcore import load_group
from .report import analyze_group, ct_report, to_json, to_text
from .suite import SUITES, run_suite

EXIT_OK, EXIT_ERROR, EXIT_CAPPED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1 rather than argparse's 2 (2 means capped)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_int(s):
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _positive_float(s):
    v = float(s)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--nodes", type=_positive_int, default=DEFAULT_NODE_CAP,
                        help="search node cap")
    common.add_argument("--time", type=_positive_float, default=DEFAULT_TIME_CAP,
                        help="search time cap in seconds")
    common.add_argument("--workers", type=_positive_int, default=1)

    source = argparse.ArgumentParser(add_help=False)
    grp = source.add_mutually_exclusive_group(required=True)
    grp.add_argument("--group", metavar="PATH", help="group file (degree/gen lines)")
    grp.add_argument("--catalog", metavar="NAME", help="catalog name, e.g. psl2:8")

    p = _Parser(prog="ibisgroups", description="Irredundant bases of permutation groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("analyze", parents=[common, source], help="base sizes, spectrum, IBIS verdict")
    sub.add_parser("ct", parents=[common, source], help="decide whether a group is a CT-group")
    sub.add_parser("catalog", parents=[common], help="list catalog names")
    vp = sub.add_parser("verify-paper", parents=[common], help="run the claim suite")
    vp.add_argument("--suite", choices=SUITES, default="small")
    vp.add_argument("--only", metavar="PREFIX", help="restrict to claim ids with this prefix")
    return p


def _config(args):
    return RunConfig(
        node_cap=args.nodes,
        time_cap_seconds=args.time,
        workers=args.workers,
        output_format="json" if args.json else "text",
    )


def _load(args, config):
    if args.group:
        return load_group(args.group), args.group
    e = resolve(args.catalog, config.degree_cap)
    return e.group, e.name


def cmd_analyze(args, config):
    group, name = _load(args, config)
    rec = analyze_group(group, name, config)
    print(to_json(rec) if args.json else to_text(rec))
    return EXIT_CAPPED if rec["capped"] else EXIT_OK


def cmd_ct(args, config):
    group, name = _load(args, config)
    rec = ct_report(group, name, config)
    if args.json:
        print(to_json(rec))
    else:
        print(f"group: {rec['group']}")
        print(f"degree: {rec['degree']}")
        print(f"order: {rec['order']}")
        print(f"CT: {'true' if rec['ct'] else 'false'}")
        print(f"methods agree: {'true' if rec['method_agreement'] else 'false'}")
        print(f"abelian centralizers: {'true' if rec['abelian_centralizers'] else 'false'}")
        if rec["violation"]:
            print("violation: " + " ; ".join(rec["violation"]))
    return EXIT_OK if rec["method_agreement"] else EXIT_ERROR


def cmd_catalog(args, config):
    if args.json:
        rows = [{"name": n, "degree": d, "order": str(o), "expected": e} for n, d, o, e in LISTING]
        print(json.dumps(rows, indent=2))
    else:
        print("\n".join(listing_lines()))
    return EXIT_OK


def cmd_verify_paper(args, config):
    result = run_suite(args.suite, config, only=args.only)
    print(json.dumps(result.to_dict(), indent=2) if args.json else result.table())
    return result.exit_code


COMMANDS = {
    "analyze": cmd_analyze,
    "ct": cmd_ct,
    "catalog": cmd_catalog,
    "verify-paper": cmd_verify_paper,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
        return COMMANDS[args.command](args, config)
    # a cap hit while building or enumerating the input is an error, not a partial result
    except (CapacityError, InputError, PreconditionError, OSError, ValueError) as e:
        print(f"ibisgroups: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
