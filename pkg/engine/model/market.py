# market.py - The constant-elasticity demand model.
# Customers arrive at rate lambda(p, t) = a(t) * p^(-epsilon) and each one
# orders a random number of items drawn from q, so item demand is lambda * mu(q).

from __future__ import annotations

import math
from dataclasses import dataclass

from model.arrivals import ArrivalRateSpec, comparable_arrival_rate
from model.distributions import OrderSizeDistribution
from model.errors import DomainError, InvalidModelError


@dataclass(frozen=True)
class MarketModel:
    epsilon: float
    arrivals: ArrivalRateSpec
    orders: OrderSizeDistribution

    def __post_init__(self):
        try:
            eps = float(self.epsilon)
        except (TypeError, ValueError):
            raise InvalidModelError(f"epsilon must be a number, got {self.epsilon!r}") from None
        # Revenue is unbounded in price unless demand is elastic
        if not math.isfinite(eps) or eps <= 1.0:
            raise InvalidModelError(f"epsilon must be > 1, got {self.epsilon!r}")
        if not isinstance(self.arrivals, ArrivalRateSpec):
            raise InvalidModelError("arrivals must be an ArrivalRateSpec")
        if not isinstance(self.orders, OrderSizeDistribution):
            raise InvalidModelError("orders must be an OrderSizeDistribution")
        object.__setattr__(self, "epsilon", eps)

    @property
    def T(self):
        return self.arrivals.T

    @property
    def mu(self):
        return self.orders.mean

    def with_arrivals(self, arrivals):
        return MarketModel(self.epsilon, arrivals, self.orders)


def arrival_rate(model, p, t):
    """Customer arrival rate lambda(p, t) = a(t) * p^(-epsilon)."""
    if p <= 0:
        raise DomainError(f"price must be positive, got {p}")
    return model.arrivals.rate_at(t) * p ** (-model.epsilon)


def demand(model, p, t):
    """Items demanded per unit time, lambda(p, t) * mu(q)."""
    return arrival_rate(model, p, t) * model.mu


def point_elasticity(model, p, t, rel_step=1e-6):
    """-p * (d lambda / dp) / lambda by central difference; equals epsilon."""
    h = p * rel_step
    slope = (arrival_rate(model, p + h, t) - arrival_rate(model, p - h, t)) / (2 * h)
    return -p * slope / arrival_rate(model, p, t)


def comparable_model(model, w):
    """The model with distribution w and the same demand as model.

    Its arrival rate is a(t) * mu(q) / mu(w), so lambda * mu is unchanged.
    """
    arrivals = comparable_arrival_rate(model.arrivals, model.orders, w)
    return MarketModel(model.epsilon, arrivals, w)
