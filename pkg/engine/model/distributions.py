# distributions.py - Order size distributions q = (q_1, ..., q_M).
# Customers order i items with probability q_i. The built-in registry holds
# the point masses d1..d4 and the mixed distributions q1..q3 used in the
# published comparison tables.

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from model.errors import InvalidModelError

logger = logging.getLogger(__name__)

# Absolute tolerance on sum(q) == 1
SUM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class OrderSizeDistribution:
    """Probability vector over order sizes 1..M.

    Trailing zeros are trimmed so M is the true maximum order size; interior
    zeros are kept. Probabilities whose sum is within SUM_TOLERANCE of 1 are
    renormalized exactly.
    """

    probs: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        try:
            values = np.asarray(self.probs, dtype=np.float64).ravel()
        except (TypeError, ValueError) as e:
            raise InvalidModelError(f"order size probabilities must be numbers: {e}") from None

        if values.size == 0:
            raise InvalidModelError("order size distribution is empty")
        if not np.all(np.isfinite(values)):
            raise InvalidModelError("order size probabilities must be finite")
        if np.any(values < 0):
            bad = int(np.argmax(values < 0)) + 1
            raise InvalidModelError(f"negative probability for order size {bad}: {values[bad - 1]}")

        total = math.fsum(values)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise InvalidModelError(f"order size probabilities sum to {total!r}, not 1")

        nonzero = np.nonzero(values)[0]
        m = int(nonzero[-1]) + 1
        if m < values.size:
            logger.warning("trimmed %d trailing zero probabilities (M=%d)", values.size - m, m)
            values = values[:m]
        if total != 1.0:
            logger.warning("renormalized order size probabilities (sum was %r)", total)
            values = values / total

        object.__setattr__(self, "probs", tuple(float(v) for v in values))

    @property
    def max_size(self):
        """M, the largest order size with positive probability."""
        return len(self.probs)

    @property
    def array(self):
        return np.array(self.probs, dtype=np.float64)

    @property
    def mean(self):
        return mean_order_size(self)

    @property
    def label(self):
        return self.name or "[" + ",".join(f"{p:g}" for p in self.probs) + "]"

    def cdf(self):
        cdf = np.cumsum(self.array)
        cdf[-1] = 1.0
        return cdf

    def sample(self, rng, size=None):
        """Draw order sizes (1..M) using rng, a numpy Generator."""
        cdf = self.cdf()
        u = rng.random(size)
        return np.searchsorted(cdf, u, side="right") + 1


def mean_order_size(q):
    """Average order size mu(q) = sum_i i * q_i."""
    sizes = np.arange(1, q.max_size + 1, dtype=np.float64)
    return float(np.dot(sizes, q.array))


def delta(k):
    """Point mass on order size k (every customer orders k items)."""
    if int(k) != k or k < 1:
        raise InvalidModelError(f"point mass needs a positive integer order size, got {k!r}")
    k = int(k)
    probs = [0.0] * (k - 1) + [1.0]
    return OrderSizeDistribution(tuple(probs), name=f"d{k}")


# Built-in distributions - read-only, referenced by name from the CLI.
NAMED_DISTRIBUTIONS = {
    "d1": delta(1),
    "d2": delta(2),
    "d3": delta(3),
    "d4": delta(4),
    "q1": OrderSizeDistribution((0.25, 0.25, 0.25, 0.25), name="q1"),
    "q2": OrderSizeDistribution((0.0, 0.4, 0.0, 0.6), name="q2"),
    "q3": OrderSizeDistribution((0.7, 0.1, 0.2), name="q3"),
}


def named_distribution(name):
    try:
        return NAMED_DISTRIBUTIONS[name]
    except KeyError:
        known = ", ".join(NAMED_DISTRIBUTIONS)
        raise InvalidModelError(f"unknown distribution {name!r} (known: {known})") from None
