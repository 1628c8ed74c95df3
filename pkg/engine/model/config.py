# config.py - Model configuration files.
# Parses the JSON model config ({"epsilon", "T", "a", "q"}) into a MarketModel,
# writes it back losslessly, and resolves distribution names for the CLI.

import json
import logging
import os
from dataclasses import dataclass, field

from model.arrivals import ArrivalRateSpec
from model.distributions import NAMED_DISTRIBUTIONS, OrderSizeDistribution, named_distribution
from model.errors import InvalidModelError
from model.market import MarketModel

logger = logging.getLogger(__name__)

CONFIG_KEYS = ("epsilon", "T", "a", "q")

# Used when no --config is given: the a(t) = 1, T = 1 regime of the tables.
DEFAULT_CONFIG = {"epsilon": 2.0, "T": 1.0, "a": 1.0, "q": [1.0]}


@dataclass(frozen=True)
class RunConfig:
    """A parsed model plus the command parameters it was run with."""

    model: MarketModel
    source: str = ""
    params: dict = field(default_factory=dict, compare=False)


def parse_arrivals(a, T):
    """Build an ArrivalRateSpec from a number (constant rate) or a list of pieces."""
    if isinstance(a, bool):
        raise InvalidModelError("'a' must be a number or a list of pieces")
    if isinstance(a, (int, float)):
        return ArrivalRateSpec.constant(a, T)
    if isinstance(a, list):
        pieces = []
        for j, piece in enumerate(a):
            if not isinstance(piece, dict) or set(piece) != {"t", "rate"}:
                raise InvalidModelError(f"piece {j} of 'a' must be {{\"t\": ..., \"rate\": ...}}")
            pieces.append((piece["t"], piece["rate"]))
        return ArrivalRateSpec(tuple(pieces), T)
    raise InvalidModelError("'a' must be a number or a list of pieces")


def resolve_distribution(spec, model=None):
    """Accept a registry name, 'model' (the config's own q), or a list of probabilities."""
    if isinstance(spec, OrderSizeDistribution):
        return spec
    if isinstance(spec, str):
        if spec == "model":
            if model is None:
                raise InvalidModelError("'model' distribution needs a loaded config")
            return model.orders
        return named_distribution(spec)
    if isinstance(spec, (list, tuple)):
        return OrderSizeDistribution(tuple(spec))
    raise InvalidModelError(f"cannot interpret {spec!r} as an order size distribution")


def parse_model(data):
    """Validate a config dict and build the MarketModel it describes."""
    if not isinstance(data, dict):
        raise InvalidModelError("config must be a JSON object")
    unknown = sorted(set(data) - set(CONFIG_KEYS))
    if unknown:
        raise InvalidModelError(f"unknown config keys: {', '.join(unknown)}")
    if "epsilon" not in data:
        raise InvalidModelError("config is missing 'epsilon'")

    T = data.get("T", 1.0)
    if isinstance(T, bool) or not isinstance(T, (int, float)):
        raise InvalidModelError("'T' must be a number")
    arrivals = parse_arrivals(data.get("a", 1.0), T)
    orders = resolve_distribution(data.get("q", [1.0]))
    return MarketModel(data["epsilon"], arrivals, orders)


def config_to_dict(model):
    """Serialize a model in config-file form; parse_model() inverts this."""
    pieces = model.arrivals.pieces
    if len(pieces) == 1:
        a = pieces[0][1]
    else:
        a = [{"t": t, "rate": r} for t, r in pieces]
    return {"epsilon": model.epsilon, "T": model.T, "a": a, "q": list(model.orders.probs)}


def load_config(path):
    """Load a model config file. Raises InvalidModelError on any problem."""
    if path is None:
        return RunConfig(parse_model(DEFAULT_CONFIG), source="<default>")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise InvalidModelError(f"config file not found: {path}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise InvalidModelError(f"config file {path} is not valid JSON: {e}") from None
    except OSError as e:
        raise InvalidModelError(f"cannot read config file {path}: {e}") from None
    logger.info("loaded model config from %s", path)
    return RunConfig(parse_model(data), source=str(path))


def save_config(model, path):
    """Write the model as a config file. Creates parent directories if needed."""
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_config(model))


def dump_config(model):
    """Canonical JSON text for a model (stable key order, full float precision)."""
    return json.dumps(config_to_dict(model), indent=2) + "\n"


def echo_config(path):
    """The parsed form of a config file, for checking what the engine actually read."""
    return dump_config(load_config(path).model)


def distribution_names():
    return list(NAMED_DISTRIBUTIONS)
