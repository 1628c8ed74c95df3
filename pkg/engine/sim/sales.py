# sales.py - Simulated sales under the optimal pricing policy.
#
# With n items left the optimal price makes customers arrive at intensity
#     lambda(t) = a(t) * b_n / A(t),   b_n = beta_n^(eps/(eps-1)),
# whose integral from t0 to t is b_n * ln(A(t0)/A(t)). An exponential draw E
# therefore moves the remaining arrival mass from A(t0) to A(t0) * exp(-E/b_n),
# and the sale time follows by inverting the piecewise-linear A exactly.
# Paths are tracked in log A so the price stays exact as A(t) -> 0 near T.

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from model.arrivals import cumulative_arrivals
from model.errors import DomainError
from sim.streams import make_generator


@dataclass(frozen=True)
class SalesEvent:
    # Times strictly increase along a path, except at last_event_time()
    time: float
    order_size: int
    posted_price: float
    inventory_before: int


@dataclass(frozen=True)
class SalesPath:
    events: tuple
    initial_inventory: int
    final_inventory: int
    total_revenue: float

    @property
    def sold_out(self):
        return self.final_inventory <= 0


def _arrival_exponent(policy, n):
    """b_n = beta_n^(eps/(eps-1)), the intensity scale with n items left."""
    eps = policy.model.epsilon
    return policy.betas.beta(n) ** (eps / (eps - 1.0))


def next_sale_level(policy, n, level, u):
    """Remaining arrival mass A at the next sale, starting from A = level.

    Args:
        u: uniform draw in (0, 1]; E = -ln(u) is the exponential increment
    """
    if n < 1:
        raise DomainError(f"no sale is offered with inventory n={n}")
    if not 0.0 < u <= 1.0:
        raise DomainError(f"u must lie in (0, 1], got {u}")
    return level * math.exp(math.log(u) / _arrival_exponent(policy, n))


def last_event_time(arrivals):
    """The last representable time before T; events whose A rounds to 0 land here."""
    return float(np.nextafter(arrivals.T, -np.inf))


def _time_at_log_level(arrivals, log_level, t_floor, after=False):
    """Invert A at exp(log_level), kept in [t_floor, T).

    With after=True the result is strictly later than t_floor, except at
    last_event_time(), where clamped events may share a time.
    """
    t = arrivals.time_at_level(min(math.exp(log_level), arrivals.total_mass))
    if after and t <= t_floor:
        t = float(np.nextafter(t_floor, np.inf))
    return min(max(t, t_floor), last_event_time(arrivals))


def next_sale_time(policy, n, t0, u):
    """Time of the next sale with n items left, given the uniform draw u.

    Returns t0 when u = 1. Returns T (horizon end) only when no arrival
    mass is left after t0, which needs a(t) = 0 on the rest of the horizon.
    """
    if n < 1:
        raise DomainError(f"no sale is offered with inventory n={n}")
    arrivals = policy.model.arrivals
    if not 0.0 <= t0 < arrivals.T:
        raise DomainError(f"t0={t0} must lie in [0, T={arrivals.T})")
    level = cumulative_arrivals(arrivals, t0)
    if level == 0.0:
        return arrivals.T
    if u == 1.0:
        return t0
    log_level = math.log(level) + math.log(u) / _arrival_exponent(policy, n)
    return _time_at_log_level(arrivals, log_level, t0)


def _price_at_log_level(policy, n, log_level):
    # Same as price_at_level(policy, n, exp(log_level)) without underflow
    eps = policy.model.epsilon
    return policy.betas.beta(n) ** (-1.0 / (eps - 1.0)) * math.exp(log_level / eps)


def simulate_path(policy, initial_inventory, rng_seed):
    """Simulate one selling season starting with initial_inventory items.

    Each customer pays order_size * posted price, even when the order exceeds
    the remaining stock (overselling). The season ends when inventory <= 0.

    Args:
        policy:            PricePolicy covering n = initial_inventory
        initial_inventory: starting stock, >= 1
        rng_seed:          int seed, (seed, index) tuple, or numpy Generator

    Returns:
        SalesPath
    """
    if initial_inventory < 1:
        raise DomainError(f"initial inventory must be >= 1, got {initial_inventory}")
    rng = make_generator(rng_seed)
    arrivals = policy.model.arrivals
    orders = policy.model.orders

    events = []
    revenue = 0.0
    n = int(initial_inventory)
    t = 0.0
    log_level = math.log(arrivals.total_mass)

    while n > 0:
        u = 1.0 - rng.random()      # (0, 1]
        log_level += math.log(u) / _arrival_exponent(policy, n)
        t = _time_at_log_level(arrivals, log_level, t, after=bool(events))
        price = _price_at_log_level(policy, n, log_level)
        size = int(orders.sample(rng))
        events.append(SalesEvent(t, size, price, n))
        revenue += size * price
        n -= size

    return SalesPath(tuple(events), int(initial_inventory), n, revenue)


def pinned_arrivals(policy, n, until, rng_seed):
    """Arrival times in [0, until] with the inventory held fixed at n.

    The count is Poisson with mean b_n * ln(A(0) / A(until)).
    """
    if not 0.0 <= until < policy.model.T:
        raise DomainError(f"until={until} must lie in [0, T)")
    rng = make_generator(rng_seed)
    arrivals = policy.model.arrivals
    b = _arrival_exponent(policy, n)
    log_end = math.log(cumulative_arrivals(arrivals, until))
    log_level = math.log(arrivals.total_mass)
    times = []
    while True:
        log_level += math.log(1.0 - rng.random()) / b
        if log_level < log_end:
            break
        times.append(arrivals.time_at_level(min(math.exp(log_level), arrivals.total_mass)))
    return np.array(times)


def expected_pinned_count(policy, n, until):
    """b_n * ln(A(0) / A(until)), the integrated arrival intensity."""
    arrivals = policy.model.arrivals
    return _arrival_exponent(policy, n) * math.log(arrivals.total_mass / cumulative_arrivals(arrivals, until))
