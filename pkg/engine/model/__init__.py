from model.errors import (
    PricingError, InvalidModelError, DomainError, TableRangeError,
    ComparabilityError, SolverError, ConsistencyError,
)
from model.distributions import OrderSizeDistribution, mean_order_size, delta, NAMED_DISTRIBUTIONS
from model.arrivals import ArrivalRateSpec, cumulative_arrivals, comparable_arrival_rate
from model.market import MarketModel, arrival_rate, demand, point_elasticity, comparable_model
