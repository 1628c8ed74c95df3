from pricing.policy import (
    PricePolicy, optimal_revenue, optimal_price, price_at_level,
    maximizing_price_from_values, continuation_gap, revenue_derivative, approximate_revenue,
)
from pricing.tables import PolicyRow, policy_table, closed_market_row, policy_csv
