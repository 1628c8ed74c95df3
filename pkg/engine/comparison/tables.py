# tables.py - Comparison tables in the published layout.
# One column per (q, w) pair, one row per inventory level n. Every value is
# computed in closed form and cross-checked against the direct revenue ratio.

import logging

from beta.sequence import beta_sequence
from comparison.relative import (
    ComparisonRow, relative_difference_closed, relative_difference_direct,
)
from export import fixed, to_csv
from model.arrivals import ArrivalRateSpec, comparable_arrival_rate
from model.distributions import NAMED_DISTRIBUTIONS, delta
from model.errors import ConsistencyError
from model.market import comparable_model

logger = logging.getLogger(__name__)

# Each variable order size distribution against the single-item model d1.
PUBLISHED_PAIRS = tuple(
    (NAMED_DISTRIBUTIONS[name], NAMED_DISTRIBUTIONS["d1"])
    for name in ("d2", "d3", "d4", "q1", "q2", "q3")
)

DEFAULT_N_VALUES = tuple(range(1, 11)) + (50, 100, 200, 500)

# Allowed disagreement between the closed-form and direct g
PATH_TOL = 1e-9


def pair_label(q, w):
    return f"{q.label}|{w.label}"


def comparison_table(epsilon, pairs, n_values, t=0.0, arrivals=None):
    """Relative differences g_(n,t)(q, w) for every pair and n.

    Args:
        epsilon:  shared demand elasticity
        pairs:    list of (q, w) distribution pairs
        n_values: inventory levels (each >= 1)
        t:        evaluation time; g does not depend on it
        arrivals: arrival rate of each w model (default a = 1 on [0, 1]);
                  the q model gets the comparable rate

    Returns:
        ComparisonRow list in (pair, n) order.

    Raises:
        ConsistencyError: if the two computation paths disagree beyond PATH_TOL
    """
    if arrivals is None:
        arrivals = ArrivalRateSpec.constant(1.0, 1.0)
    n_values = list(n_values)
    if not n_values:
        return []
    n_max = max(n_values)

    cache = {}

    def table_for(dist):
        if dist not in cache:
            cache[dist] = beta_sequence(epsilon, dist, n_max)
        return cache[dist]

    rows = []
    for q, w in pairs:
        betas_q, betas_w = table_for(q), table_for(w)
        lambda1 = comparable_arrival_rate(arrivals, w, q)
        label = (q.label, w.label)
        for n in n_values:
            g = relative_difference_closed(n, q, w, epsilon, betas_q, betas_w)
            g_direct = relative_difference_direct(n, t, q, lambda1, w, arrivals, epsilon,
                                                  betas_q=betas_q, betas_w=betas_w)
            if abs(g - g_direct) > PATH_TOL:
                raise ConsistencyError(
                    f"g_{n}({pair_label(q, w)}): closed form {g!r} vs direct {g_direct!r}")
            rows.append(ComparisonRow(n, g, label))
    logger.info("comparison table eps=%g: %d pairs x %d n values", epsilon, len(pairs), len(n_values))
    return rows


def comparison_csv(rows):
    """CSV with header n,g(q|w),... and one line per n."""
    labels = []
    columns = {}
    for row in rows:
        if row.pair not in columns:
            labels.append(row.pair)
            columns[row.pair] = {}
        columns[row.pair][row.n] = row.g

    n_values = list(columns[labels[0]]) if labels else []
    header = ["n"] + [f"g({q}|{w})" for q, w in labels]
    body = [[n] + [fixed(columns[label].get(n)) for label in labels] for n in n_values]
    return to_csv(header, body)


def single_size_approximation(model, k=1):
    """The comparable model where every customer orders exactly k items."""
    return comparable_model(model, delta(k))
