from comparison.relative import (
    ComparisonRow, check_comparable, relative_difference_direct, relative_difference_closed,
)
from comparison.tables import (
    PUBLISHED_PAIRS, DEFAULT_N_VALUES, comparison_table, comparison_csv, pair_label,
    single_size_approximation,
)
