# tables.py - Price / revenue grids over (n, t) for export.

from typing import NamedTuple, Optional

from export import fixed, to_csv
from model.errors import DomainError
from pricing.policy import optimal_price, optimal_revenue

POLICY_HEADER = ("n", "t", "price", "revenue")


class PolicyRow(NamedTuple):
    n: int
    t: float
    price: Optional[float]
    revenue: float


def policy_table(policy, n_values, t_values):
    """Evaluate price and revenue on the grid n_values x t_values (n outer).

    Raises:
        DomainError: naming the (n, t) coordinate that failed
        TableRangeError: if some n is beyond the policy's beta table
    """
    rows = []
    for n in n_values:
        for t in t_values:
            try:
                rows.append(PolicyRow(n, t, optimal_price(policy, n, t), optimal_revenue(policy, n, t)))
            except DomainError as e:
                raise DomainError(f"at (n={n}, t={t}): {e}") from e
    return rows


def closed_market_row(policy, n):
    """The t = T row: no price is posted and nothing more can be earned."""
    return PolicyRow(n, policy.model.T, None, 0.0)


def policy_csv(rows):
    return to_csv(POLICY_HEADER, [(r.n, fixed(r.t), fixed(r.price), fixed(r.revenue)) for r in rows])
