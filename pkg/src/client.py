import argparse
import json
import logging
import os
import sys

# --- Path Correction ---
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.config import load_settings
from src.errors import FellLabError
from src.conv import conv_tool
from src.ktheory import ktheory_tool
from src.scenarios import scenario_tool

# --- Exit codes ---
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

STATUS_EXIT = {"success": EXIT_PASS, "failure": EXIT_FAIL, "error": EXIT_USAGE, "unsupported": EXIT_USAGE}


# --- Helper Functions ---
def parse_params(pairs):
    """Turns ['m=3', 'k=2'] into {'m': '3', 'k': '2'}; the scenario models convert the values."""
    params = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ValueError(f"Expected --param key=value, got '{pair}'.")
        params[key.strip()] = value.strip()
    return params


def report_result(result, args, text=None):
    """Prints a tool status dictionary and returns the matching exit code."""
    if args.json:
        print(json.dumps(result, indent=2, ensure_ascii=False))
    elif result.get("status") in ("success", "failure"):
        if text:
            print(text)
        print(f"\n--- {'Success!' if result['status'] == 'success' else 'Failed'} ---")
        print(result.get("message"))
    else:
        print(f"\n--- Tool Error ---\n{result.get('message')}", file=sys.stderr)
    return STATUS_EXIT.get(result.get("status"), EXIT_USAGE)


# --- Command Handlers ---
def handle_example(args):
    """Handles the logic for the 'example' command."""
    if args.list:
        for name, scenario in scenario_tool.SCENARIOS.items():
            print(f"{name:20s} {scenario.summary}")
        return EXIT_PASS
    if not args.name:
        print("Error: 'example' needs a scenario name (or --list).", file=sys.stderr)
        return EXIT_USAGE
    try:
        params = parse_params(args.param)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    settings = load_settings()
    scenario = scenario_tool.SCENARIOS.get(args.name)
    fields = scenario.params.model_fields if scenario is not None else {}
    if "seed" in fields and "seed" not in params:
        params["seed"] = args.seed if args.seed is not None else settings.seed
    if "samples" in fields and "samples" not in params and settings.samples is not None:
        params["samples"] = settings.samples

    if not args.json:
        print(f"Running example '{args.name}'...")
    result = scenario_tool.run_example(args.name, params)
    text = None
    if "report" in result and not args.json:
        text = scenario_tool.ScenarioReport.model_validate(result["report"]).to_text()
    return report_result(result, args, text)


def handle_ktheory_solve(args):
    """Handles the logic for the 'ktheory solve' command."""
    if not args.json:
        print(f"Solving the extension in {args.file}...")
    result = ktheory_tool.solve_ses_file(args.file)
    return report_result(result, args)


def handle_verify(args):
    """Handles the logic for the 'verify' command."""
    settings = load_settings()
    workers = args.workers if args.workers is not None else settings.workers
    samples = args.samples if args.samples is not None else settings.samples
    if not args.json:
        print(f"Verifying the element in {args.file}...")
    result = conv_tool.verify_file(args.file, samples=samples, tol=args.tol, workers=workers)
    text = None
    if "report" in result:
        text = conv_tool.VerificationReport.model_validate(result["report"]).to_text()
    return report_result(result, args, text)


# --- Main Function ---
def build_parser():
    parser = argparse.ArgumentParser(prog="fell-lab", description="Fell-algebra examples: models, projections and K-theory.")
    subparsers = parser.add_subparsers(dest='command', required=True, help='Available commands')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the machine-readable report.")
    common.add_argument("--verbose", action="store_true", help="Log library progress to stderr.")

    parser_example = subparsers.add_parser('example', help='Run one of the named example scenarios.', parents=[common])
    parser_example.add_argument("name", nargs="?", help="Scenario name, e.g. aab-ab or twisted-sphere.")
    parser_example.add_argument("--param", action="append", metavar="KEY=VALUE", help="Scenario parameter. Can be used multiple times.")
    parser_example.add_argument("--seed", type=int, help="Seed for the quasi-uniform samples.")
    parser_example.add_argument("--list", action="store_true", help="List the available scenarios.")
    parser_example.set_defaults(func=handle_example)

    parser_ktheory = subparsers.add_parser('ktheory', help='K-theory commands.')
    ktheory_sub = parser_ktheory.add_subparsers(dest='ktheory_command', required=True)
    parser_solve = ktheory_sub.add_parser('solve', help='Solve the six-term sequence of an extension file.', parents=[common])
    parser_solve.add_argument("file", help="Path to the extension JSON file.")
    parser_solve.set_defaults(func=handle_ktheory_solve)

    parser_verify = subparsers.add_parser('verify', help='Verify that an element is a projection.', parents=[common])
    parser_verify.add_argument("file", help="Path to the element JSON file.")
    parser_verify.add_argument("--samples", type=int, help="Number of quasi-uniform samples (overrides the file).")
    parser_verify.add_argument("--tol", type=float, help="Tolerance for the algebraic identities (overrides the file).")
    parser_verify.add_argument("--workers", type=int, help="Threads to verify with.")
    parser_verify.set_defaults(func=handle_verify)
    return parser


def main(argv=None):
    """Main function to parse subcommands and arguments. Returns the exit code."""
    args = build_parser().parse_args(argv)
    if getattr(args, "verbose", False):
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (FellLabError, ValueError, TypeError) as e:
        print(f"\n--- Tool Error ---\n{e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
