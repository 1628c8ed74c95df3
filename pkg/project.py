# project.py - Dynamic pricing engine for constant-elasticity demand with
# variable customer order sizes.
#
# Command line front end: beta tables, optimal price/revenue grids, comparison
# tables between comparable models, and Monte Carlo validation runs.
#
# Exit codes: 0 success, 2 config/usage error, 3 numerical error.

import argparse
import logging
import os
import sys
from dataclasses import replace

# Add the engine/ directory to the path so we can import the engine modules
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'engine'))

import settings
from beta.asymptotics import beta_approximation
from beta.sequence import beta_sequence, gamma
from comparison.tables import PUBLISHED_PAIRS, DEFAULT_N_VALUES, comparison_table, comparison_csv
from export import fixed, to_csv, write_output
from model.config import distribution_names, echo_config, load_config, resolve_distribution
from model.errors import (
    ComparabilityError, ConsistencyError, DomainError, InvalidModelError,
    SolverError, TableRangeError,
)
from pricing.policy import PricePolicy, optimal_revenue
from pricing.tables import closed_market_row, policy_csv, policy_table
from sim.estimate import estimate_revenue, estimate_to_json, path_to_jsonl
from sim.sales import simulate_path

logger = logging.getLogger("project")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

BETA_HEADER = ("n", "beta", "gamma", "approx")


# ========================================================================
# Argument helpers
# ========================================================================

def parse_int_list(text):
    """Parse '1..10,50,100' into [1, 2, ..., 10, 50, 100]."""
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return values


def parse_float_list(text):
    return [float(part) for part in text.split(",") if part.strip()]


def parse_pairs(text, model=None):
    """Parse 'd2:d1,q1:d1' into distribution pairs; a bare name is paired with d1."""
    pairs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        q_name, _, w_name = part.partition(":")
        pairs.append((resolve_distribution(q_name, model), resolve_distribution(w_name or "d1", model)))
    return pairs


# ========================================================================
# Commands
# ========================================================================

def cmd_beta(config, n_max):
    """CSV of n, beta_n, gamma_n and the approximation (n/mu)^((eps-1)/eps) for n = 1..n_max."""
    model = config.model
    rows = []
    if n_max >= 1:
        table = beta_sequence(model.epsilon, model.orders, n_max)
        for n in range(1, n_max + 1):
            rows.append((n, fixed(table.beta(n)), fixed(gamma(table, n)),
                         fixed(beta_approximation(model.epsilon, model.orders, n))))
    return to_csv(BETA_HEADER, rows)


def cmd_policy(config, n_list, t_list):
    """CSV of optimal price and revenue for every (n, t); t = T gives an empty price."""
    model = config.model
    policy = PricePolicy.for_model(model, max(n_list, default=1))
    rows = []
    for n in n_list:
        for t in t_list:
            if t == model.T:
                rows.append(closed_market_row(policy, n))
            else:
                rows.extend(policy_table(policy, [n], [t]))
    logger.info("policy grid: %d rows", len(rows))
    return policy_csv(rows)


def cmd_compare(config, pairs=None, n_list=None, t=0.0, demand=None):
    """Comparison table in the published layout, one column per (q, w) pair.

    Without demand, each w model uses the config's a(t). With demand, a(t)
    is rescaled so that lambda * mu equals demand * a(t) for every pair.
    """
    model = config.model
    pairs = list(PUBLISHED_PAIRS) if pairs is None else pairs
    n_list = list(DEFAULT_N_VALUES) if n_list is None else n_list
    rows = []
    for q, w in pairs:
        arrivals = model.arrivals
        if demand is not None:
            arrivals = arrivals.scaled(demand / w.mean)
        rows.extend(comparison_table(model.epsilon, [(q, w)], n_list, t, arrivals=arrivals))
    return comparison_csv(rows)


def cmd_simulate(config, n, trials, seed, dump=None, workers=1):
    """JSON Monte Carlo estimate of v_n(0) with the analytic value alongside."""
    policy = PricePolicy.for_model(config.model, n)
    estimate = estimate_revenue(policy, n, trials, seed, workers=workers)
    if dump is not None:
        write_output(path_to_jsonl(simulate_path(policy, n, (seed, 0))), dump)
    return estimate_to_json(estimate, analytic=optimal_revenue(policy, n, 0.0))


# ========================================================================
# Command line
# ========================================================================

def _global_options(parser, suppress):
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--config", default=default(None), help="model config JSON")
    parser.add_argument("--out", default=default(None), help="write output here instead of stdout")
    parser.add_argument("--seed", type=int, default=default(None), help="base simulation seed")
    parser.add_argument("--trials", type=int, default=default(None), help="Monte Carlo trials")
    parser.add_argument("--demand", type=float, default=default(None), help="lambda*mu scale for compare")
    parser.add_argument("--workers", type=int, default=default(None), help="threads for simulation trials")
    parser.add_argument("--log-level", default=default(None), help="DEBUG, INFO, WARNING, ...")


def build_parser():
    parser = argparse.ArgumentParser(prog="project.py", description="Optimal dynamic pricing with variable order sizes")
    _global_options(parser, suppress=False)
    parser.add_argument("--echo-config", action="store_true", help="print the parsed config and exit")

    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)

    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("beta", parents=[common], help="beta_n table")
    p.add_argument("--n-max", type=int, default=10)

    p = sub.add_parser("policy", parents=[common], help="optimal price / revenue grid")
    p.add_argument("--n", type=parse_int_list, default=[1])
    p.add_argument("--t", type=parse_float_list, default=[0.0])

    p = sub.add_parser("compare", parents=[common], help="relative differences between comparable models")
    p.add_argument("--pairs", default=None,
                   help=f"q:w pairs, e.g. d2:d1,q1:d1, from {', '.join(distribution_names())} or model"
                        " (default: published pairs)")
    p.add_argument("--n", type=parse_int_list, default=None)
    p.add_argument("--t", type=float, default=0.0)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo estimate of v_n(0)")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--dump", default=None, help="JSON lines dump of the first simulated path")
    return parser


def run(args):
    """Dispatch a parsed command line and return the output text."""
    if args.echo_config:
        return echo_config(args.config)

    config = load_config(args.config)
    config = replace(config, params={k: v for k, v in vars(args).items() if v is not None})
    logger.info("running %s with %s from %s", args.command, config.params, config.source)
    seed = settings.default_seed() if args.seed is None else args.seed
    trials = settings.default_trials() if args.trials is None else args.trials
    workers = settings.default_workers() if args.workers is None else args.workers
    if seed < 0:
        raise InvalidModelError(f"seed must be nonnegative, got {seed}")

    if args.command == "beta":
        return cmd_beta(config, args.n_max)
    if args.command == "policy":
        return cmd_policy(config, args.n, args.t)
    if args.command == "compare":
        pairs = None if args.pairs is None else parse_pairs(args.pairs, config.model)
        return cmd_compare(config, pairs, args.n, args.t, demand=args.demand)
    if args.command == "simulate":
        return cmd_simulate(config, args.n, trials, seed, dump=args.dump, workers=workers)
    raise InvalidModelError("no command given (beta, policy, compare, simulate)")


def main(argv=None):
    """Parse the command line, run one command and return the exit code."""
    args = build_parser().parse_args(argv)
    settings.configure_logging(args.log_level)

    try:
        text = run(args)
    except (InvalidModelError, DomainError, ComparabilityError, TableRangeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (SolverError, ConsistencyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL

    if args.out:
        write_output(text, args.out)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
