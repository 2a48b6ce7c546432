#!/usr/bin/env python3
"""Main entry point for the chernforge command line."""

import argparse
import json
import logging
import sys

from analysis.kahler_obstruction import (
    CupFormFamily, excluded_window, leading_coefficient, non_kahler_threshold, todd_cubic,
)
from constructions.realization import realize_targets
from data.report import Report
from recipe.evaluator import eval_recipe
from recipe.parser import parse_recipe
from recipe.printer import format_recipe
from utils.config_manager import ConfigManager
from utils.constants import (
    BANNER_WIDTH, CONFIG_DIR, EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_PARSE_ERROR, EXIT_POLICY_REJECTION,
    REPORT_SCHEMA_VERSION,
)
from utils.errors import DomainError, PolicyRejection, RecipeSyntaxError
import verify_paper

logger = logging.getLogger("chernforge")

POLICY_CHOICES = ("known", "assume", "reject")


def configure_logging(verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="[%(asctime)s] %(levelname)s %(name)s: %(message)s",
        datefmt="%H:%M:%S",
        force=True,
    )


def _fraction_text(value):
    return str(value) if value.denominator != 1 else str(value.numerator)


def _read_recipe(path):
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def cmd_eval(args):
    policy = ConfigManager().resolve_policy(args.policy)
    report = eval_recipe(parse_recipe(_read_recipe(args.file)), policy)
    if args.json:
        print(report.to_json())
    else:
        print(report.format_table(title=f"{args.file} (policy: {policy.value})"))
    return EXIT_OK


def cmd_format(args):
    print(format_recipe(parse_recipe(_read_recipe(args.file))), end="")
    return EXIT_OK


def cmd_realize(args):
    policy = ConfigManager().resolve_policy(args.policy)
    plan = realize_targets(args.m, args.n, args.ntilde, policy)
    x_J = Report.from_threefold(plan.x_J)
    x_Jtilde = Report.from_threefold(plan.x_Jtilde)

    if args.json:
        print(json.dumps({
            "schema_version": REPORT_SCHEMA_VERSION,
            "m": plan.m,
            "n": plan.n,
            "n_tilde": plan.n_tilde,
            "k": plan.k,
            "l": plan.l,
            "k0": plan.k0,
            "max_n_tilde": plan.max_n_tilde,
            "surface": {"name": plan.surface.name, "chi": plan.surface.chi, "tau": plan.surface.tau},
            "J": x_J.to_dict(),
            "J_tilde": x_Jtilde.to_dict(),
        }, indent=2))
        return EXIT_OK

    print("=" * BANNER_WIDTH)
    print(f"  Realization of (8n, 24m) and (8n~, 48m) for m={plan.m}, n={plan.n}, n~={plan.n_tilde}")
    print("=" * BANNER_WIDTH)
    print(f"  M = {plan.surface.name}: chi = {plan.surface.chi}, tau = {plan.surface.tau}")
    print(f"  k = {plan.k} (k0 = {plan.k0}), l = {plan.l}, max admissible n~ = {plan.max_n_tilde}")
    print(x_J.format_table(title="J: blown-up P(O + K^-1)"))
    print(x_Jtilde.format_table(title="J~: blown-up twistor space"))
    return EXIT_OK


def cmd_threshold(args):
    family = CupFormFamily(
        a3=args.a3, a2b=args.a2b, ab2=args.ab2, b3=args.b3,
        a_p1=args.ap1, b_p1=args.bp1, betti_sum=args.betti_sum,
    )
    threshold = non_kahler_threshold(family)
    cubic = todd_cubic(family)
    window = excluded_window(family, threshold + 1)

    if args.json:
        print(json.dumps({
            "schema_version": REPORT_SCHEMA_VERSION,
            "threshold": threshold,
            "betti_sum": family.betti_sum,
            "leading_coefficient": _fraction_text(leading_coefficient(family)),
            "todd_cubic": [_fraction_text(c) for c in cubic],
        }, indent=2))
        return EXIT_OK

    c0, c1, c2, c3 = (_fraction_text(c) for c in cubic)
    print("=" * BANNER_WIDTH)
    print("  Todd genus of c1 = 2n alpha + beta")
    print("=" * BANNER_WIDTH)
    print(f"  Todd(n) = ({c3}) n^3 + ({c2}) n^2 + ({c1}) n + ({c0})")
    print(f"  Betti sum: {family.betti_sum}")
    print(f"  Non-Kahler threshold N = {threshold}: no J_n with |n| > N is of Kahler type")
    print(f"  Excluded in [-{threshold + 1}, {threshold + 1}]: {window}")
    return EXIT_OK


def cmd_config(args):
    manager = ConfigManager(args.config_dir)
    if args.set_policy:
        config = manager.load_config() or {}
        config.update(ConfigManager.create_config_dict(args.set_policy))
        path = manager.save_config(config)
        print(f"saved policy {args.set_policy} to {path}")
    if args.list:
        for name in manager.list_configs():
            print(name)
    print(f"effective policy: {manager.resolve_policy().value}")
    return EXIT_OK


def cmd_verify(args):
    return EXIT_OK if verify_paper.run_all_checks() else EXIT_DOMAIN_ERROR


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chernforge",
        description="Exact Chern numbers of complex 3-folds built from surfaces.",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a recipe file")
    p.add_argument("file")
    p.add_argument("--policy", choices=POLICY_CHOICES)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("format", help="print a recipe in canonical form")
    p.add_argument("file")
    p.set_defaults(func=cmd_format)

    p = sub.add_parser("realize", help="solve for target Chern numbers")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ntilde", type=int, required=True)
    p.add_argument("--policy", choices=POLICY_CHOICES)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("threshold", help="non-Kahler threshold of a Todd family")
    for name in ("a3", "a2b", "ab2", "b3", "ap1", "bp1"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--betti-sum", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("config", help="show or change the default ASD policy")
    p.add_argument("--set-policy", choices=POLICY_CHOICES)
    p.add_argument("--list", action="store_true", help="list config files")
    p.add_argument("--config-dir", default=CONFIG_DIR)
    p.set_defaults(func=cmd_config)

    p = sub.add_parser("verify-paper", help="run the published identity checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    """Run the CLI and return the exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        return args.func(args)
    except RecipeSyntaxError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except PolicyRejection as err:
        print(f"policy rejection: {err}", file=sys.stderr)
        return EXIT_POLICY_REJECTION
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        max_admissible = getattr(err, "max_admissible", None)
        if max_admissible is not None:
            print(f"max admissible n_tilde: {max_admissible}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except ValueError as err:
        # bad CHERNFORGE_POLICY or config value
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
