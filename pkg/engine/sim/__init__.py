from sim.streams import RNG_IDENTITY, make_generator, trial_generator
from sim.sales import (
    SalesEvent, SalesPath, next_sale_level, next_sale_time, simulate_path, last_event_time,
    pinned_arrivals, expected_pinned_count,
)
from sim.estimate import (
    RevenueEstimate, estimate_revenue, estimate_to_dict, estimate_to_json, path_to_jsonl, dump_path,
)
