# estimate.py - Monte Carlo estimate of the optimal expected revenue.

from __future__ import annotations

import json
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from export import to_json
from model.errors import DomainError
from sim.sales import simulate_path
from sim.streams import RNG_IDENTITY

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RevenueEstimate:
    mean: float
    std_error: float
    trials: int
    seed: int
    rng: str = RNG_IDENTITY

    def within(self, value, sigmas=3.0):
        """True when value lies within sigmas standard errors of the mean."""
        return abs(self.mean - value) <= sigmas * self.std_error


def estimate_revenue(policy, initial_inventory, trials, seed, workers=1):
    """Mean and standard error of total revenue over independent paths.

    Trial i uses the stream (seed, i), so the estimate is identical for any
    number of workers.
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    policy = policy.covering(initial_inventory)

    def run(index):
        return simulate_path(policy, initial_inventory, (seed, index)).total_revenue

    t0 = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            revenues = np.fromiter(pool.map(run, range(trials)), dtype=np.float64, count=trials)
    else:
        revenues = np.fromiter((run(i) for i in range(trials)), dtype=np.float64, count=trials)

    mean = float(np.mean(revenues))
    std_error = float(np.std(revenues, ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    logger.info("estimate n=%d: mean=%.7f se=%.7f over %d trials (%.2fs)",
                initial_inventory, mean, std_error, trials, time.perf_counter() - t0)
    return RevenueEstimate(mean, std_error, int(trials), int(seed))


def estimate_to_dict(estimate, analytic=None):
    data = {
        "mean": estimate.mean,
        "std_error": estimate.std_error,
        "trials": estimate.trials,
        "seed": estimate.seed,
        "rng": estimate.rng,
    }
    if analytic is not None:
        data["analytic"] = analytic
    return data


def estimate_to_json(estimate, analytic=None):
    return to_json(estimate_to_dict(estimate, analytic))


def path_to_jsonl(path):
    """One JSON object per event: t, size, price, inv_before."""
    lines = [
        json.dumps({"t": e.time, "size": e.order_size, "price": e.posted_price,
                    "inv_before": e.inventory_before})
        for e in path.events
    ]
    return "".join(line + "\n" for line in lines)


def dump_path(path, fh):
    fh.write(path_to_jsonl(path))
