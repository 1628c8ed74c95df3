# sequence.py - The beta_n table for one (epsilon, q).
# beta_n = 0 for n <= 0 (the overselling base case) and beta_1..beta_N are
# computed serially, each from the previous M values.

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from beta.solver import SOLVER_TOL, solve_for_continuation
from model.errors import DomainError, InvalidModelError, SolverError, TableRangeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BetaTable:
    """beta_1..beta_N for a fixed elasticity and order size distribution."""

    epsilon: float
    orders: object
    values: np.ndarray
    solver_tol: float = SOLVER_TOL

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def max_index(self):
        return int(self.values.size)

    def beta(self, n):
        """beta_n, with beta_n = 0 for n <= 0."""
        if n <= 0:
            return 0.0
        if n > self.max_index:
            raise TableRangeError(n, self.max_index)
        return float(self.values[n - 1])

    def window(self, n):
        """(beta_(n-1), ..., beta_(n-M)) as used by the recursion for beta_n."""
        return np.array([self.beta(n - i) for i in range(1, self.orders.max_size + 1)])

    def continuation(self, n):
        """sum_i q_i * beta_(n-i)."""
        return float(np.dot(self.orders.array, self.window(n)))

    def gamma(self, n):
        return gamma(self, n)

    def residual(self, n):
        return beta_residual(self, n)

    def matches(self, epsilon, orders):
        return self.epsilon == epsilon and self.orders == orders

    def extend(self, n_max):
        """A table covering at least n_max, reusing the values already computed."""
        if n_max <= self.max_index:
            return self
        return _build(self.epsilon, self.orders, n_max, prefix=self.values)


def _build(epsilon, q, n_max, prefix=()):
    m = q.max_size
    probs = q.array[::-1]
    # padded[j] holds beta_(j - m + 1); the first m slots are the zero base case
    padded = np.zeros(n_max + m, dtype=np.float64)
    start = len(prefix)
    padded[m:m + start] = prefix

    t0 = time.perf_counter()
    for n in range(start + 1, n_max + 1):
        # window beta_(n-M)..beta_(n-1) sits at padded[n-1 : n-1+m]
        c = float(np.dot(probs, padded[n - 1:n - 1 + m]))
        try:
            padded[n + m - 1] = solve_for_continuation(epsilon, c, n=n)
        except SolverError as e:
            e.n = n
            raise
    logger.info("beta table eps=%g M=%d N=%d built in %.3fs", epsilon, m, n_max,
                time.perf_counter() - t0)
    return BetaTable(epsilon, q, padded[m:])


def beta_sequence(epsilon, q, n_max):
    """Compute beta_1..beta_(n_max).

    Raises:
        SolverError: carrying the failing index n
    """
    if epsilon <= 1.0:
        raise InvalidModelError(f"epsilon must be > 1, got {epsilon}")
    if int(n_max) != n_max or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    return _build(float(epsilon), q, int(n_max))


def gamma(table, n):
    """Normalized sequence gamma_n = beta_n / n^((eps-1)/eps)."""
    if n < 1:
        raise DomainError(f"gamma_n needs n >= 1, got {n}")
    eps = table.epsilon
    return table.beta(n) / n ** ((eps - 1.0) / eps)


def beta_residual(table, n):
    """beta_n^(1/(eps-1)) * (beta_n - sum q_i beta_(n-i)) - (eps-1)/eps."""
    eps = table.epsilon
    b = table.beta(n)
    return b ** (1.0 / (eps - 1.0)) * (b - table.continuation(n)) - (eps - 1.0) / eps
