"""
Main Application Module
Command-line entry point for the twistlab workbench.
"""

import argparse
import logging
import sys

import config
from modules.case_runner import BUILTINS, builtin_case, parse_case, render_text, run_case, to_json
from modules.errors import InputError, NotHopfSubalgebra, ReconstructionError, VerificationFailure

logger = logging.getLogger("twistlab")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twistlab",
        description="Exact verification workbench for Drinfeld twists of finite group algebras.",
    )
    parser.add_argument("--case", help="built-in case (s4, s5, s8, a4, a5, d3d5, ...) or family(p,r,q)")
    parser.add_argument("--spec", help="full case text: 'group=...; H=gens:...; cocycle=...; tasks=...'")
    parser.add_argument("--group", help="group expression, e.g. 'S(5)' or 'D(3)xD(5)'")
    parser.add_argument("--subgroup", help="generators of H, e.g. 'gens:(1 2),(3 4)'")
    parser.add_argument("--cocycle", default="nontrivial", help="'trivial', 'nontrivial' or an exponent matrix")
    parser.add_argument("--quotient", help="generators of a normal subgroup to quotient by")
    parser.add_argument("--tasks", default="all", help="'all' or a comma list of tasks")
    parser.add_argument("--json", metavar="PATH", help="write the deterministic JSON report to PATH")
    parser.add_argument("--list", action="store_true", help="list the built-in cases and exit")
    parser.add_argument("--max-enum-dim", type=int, help="bound for block decomposition and enumeration")
    parser.add_argument("--primes", type=int, help="prime budget of the modular idempotent search")
    parser.add_argument("--threads", type=int, help="worker threads for verification loops")
    return parser


def apply_overrides(args):
    """Sets the flag values on the config module, which every module reads at call time."""
    if args.max_enum_dim is not None:
        config.MAX_ENUM_DIM = args.max_enum_dim
    if args.primes is not None:
        config.PRIME_BUDGET = args.primes
    if args.threads is not None:
        config.THREADS = args.threads


def _case_text(args):
    if args.spec:
        return args.spec
    if not (args.group and args.subgroup):
        return None
    text = f"group={args.group}; H={args.subgroup}; cocycle={args.cocycle}; tasks={args.tasks}"
    if args.quotient:
        text += f"; quotient={args.quotient}"
    return text


def start(argv=None):
    """
    Parses the command line, runs the case and prints its report.

    Returns:
        int: 0 when every check passed, 1 on a verification failure, 2 on bad input
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    apply_overrides(args)
    logging.basicConfig(level=config.LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    if args.list:
        for name, (text, _) in BUILTINS.items():
            print(f"{name:<11} {text}")
        print(f"{'family':<11} family(p,r,q): SD(p,q)xSD(r,q) with q | p-1, q | r-1")
        return 0

    try:
        if args.case:
            text, expectations = builtin_case(args.case)
            name = args.case
        else:
            text, expectations, name = _case_text(args), (), None
            if text is None:
                parser.error("give --case, --spec, or both --group and --subgroup")
        spec = parse_case(text)
        report = run_case(spec, name=name, expectations=expectations)
    except InputError as e:
        print(f"Input error: {e}", file=sys.stderr)
        return 2
    except (VerificationFailure, NotHopfSubalgebra, ReconstructionError) as e:
        logger.error("verification aborted: %s", e)
        print(f"Verification failed: {e}", file=sys.stderr)
        witness = getattr(e, "witness", None)
        if witness is not None:
            print(f"Witness: {witness}", file=sys.stderr)
        return 1

    print(render_text(report))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(to_json(report) + "\n")
        print(f"JSON report written to {args.json}")
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(start())
