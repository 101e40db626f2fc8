# bcinverse_engine/cli.py
"""
bcinverse command line.

    bcinverse compute   --ring zn:6 --op bc_inverse --a 2 --b 4 --c 4
    bcinverse verify    --ring zn:6 --suite all [--seed N] [--sampled]
    bcinverse enumerate --ring zn:6
    bcinverse crosscheck --p 2 --k 2

Reports go to stdout as JSON (compact unless --pretty); logs go to stderr.
"""
import argparse
import json
import logging
import sys
from typing import Any, List, Optional

from bcinverse_engine.config import get_settings, setup_logging
from bcinverse_engine.errors import AlgebraError, InvalidCommand
from bcinverse_engine.services import (
    ARGUMENT_NAMES,
    OPERATIONS,
    Command,
    Compute,
    CrossCheck,
    Enumerate,
    Verify,
    execute,
)

logger = logging.getLogger(__name__)


def dump(payload: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(payload, ensure_ascii=False, indent=2)
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="Indent JSON output")

    parser = argparse.ArgumentParser(prog="bcinverse", description="Compute and verify (b,c)-inverses over rings")
    parser.add_argument("--pretty", action="store_true", default=False, help="Indent JSON output")
    sub = parser.add_subparsers(dest="cmd", required=True)

    compute = sub.add_parser(
        "compute",
        parents=[common],
        help="Run one engine operation",
        description="Predicates on a candidate y (is_bc_inverse, is_hybrid_bc, is_annihilator_bc, "
        "star_duality_check, is_left_bc_inverse, is_right_bc_inverse) read y from --d.",
    )
    compute.add_argument("--ring", required=True, help="zn:<n>, mat:q:<k>, mat:zp:<p>:<k>, mat:zn:<n>:<k> or table:<path>")
    compute.add_argument("--op", required=True, choices=sorted(OPERATIONS), metavar="OP", help="Engine operation")
    for name in ARGUMENT_NAMES:
        compute.add_argument(f"--{name}", help=f"Element literal for {name}")

    verify = sub.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument("--ring", required=True)
    verify.add_argument("--suite", required=True, help="Suite id or 'all'")
    verify.add_argument("--seed", type=int, help="Seed for sampled sweeps")
    verify.add_argument("--sampled", action="store_true", help="Sample tuples instead of sweeping exhaustively")

    enumerate_ = sub.add_parser("enumerate", parents=[common], help="List elements, units, idempotents and regular elements")
    enumerate_.add_argument("--ring", required=True)

    crosscheck = sub.add_parser("crosscheck", parents=[common], help="Matrix backend against finite enumeration")
    crosscheck.add_argument("--p", type=int, required=True, help="Prime")
    crosscheck.add_argument("--k", type=int, required=True, help="Matrix size")
    crosscheck.add_argument("--seed", type=int)
    crosscheck.add_argument("--sampled", action="store_true")
    return parser


def to_command(args: argparse.Namespace) -> Command:
    if args.cmd == "compute":
        given = {name: getattr(args, name) for name in ARGUMENT_NAMES if getattr(args, name) is not None}
        return Compute(ring=args.ring, op=args.op, args=given)
    if args.cmd == "verify":
        if args.seed is not None and args.seed < 0:
            raise InvalidCommand("--seed must be non-negative")
        return Verify(ring=args.ring, suite=args.suite, seed=args.seed, sampled=args.sampled)
    if args.cmd == "enumerate":
        return Enumerate(ring=args.ring)
    return CrossCheck(p=args.p, k=args.k, seed=args.seed, sampled=args.sampled)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(get_settings().log_level)

    try:
        command = to_command(args)
        outcome = execute(command)
    except InvalidCommand as exc:
        parser.error(exc.message)
    except AlgebraError as exc:
        logger.error(f"{args.cmd} failed: {exc.code}: {exc.message}")
        print(dump(exc.to_dict(), args.pretty))
        return 1

    print(dump(outcome.payload, args.pretty))
    return 0 if outcome.ok else 1


if __name__ == "__main__":
    sys.exit(main())
