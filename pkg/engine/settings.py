# settings.py - Run defaults and logging setup for the pricing engine.
# Defaults are read from environment variables, optionally loaded from an
# .env file next to this directory (never hardcode seeds or trial counts).

import logging
import os

from dotenv import load_dotenv

# Load environment variables from the .env file (PRICING_SEED, PRICING_TRIALS, ...)
load_dotenv(os.path.join(os.path.dirname(__file__), "..", ".env"))

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _env_int(name, default):
    raw = os.environ.get(name, "")
    try:
        return int(raw) if raw.strip() else default
    except ValueError:
        logging.getLogger(__name__).warning("ignoring non-integer %s=%r", name, raw)
        return default


def default_seed():
    """Base seed for simulations when --seed is not given."""
    return _env_int("PRICING_SEED", 42)


def default_trials():
    """Monte Carlo trial count when --trials is not given."""
    return _env_int("PRICING_TRIALS", 10000)


def default_workers():
    """Thread count for trial fan-out (1 = run in the calling thread)."""
    return max(1, _env_int("PRICING_WORKERS", 1))


def default_log_level():
    return os.environ.get("PRICING_LOG_LEVEL", "WARNING").upper()


def configure_logging(level=None):
    """Install a single stderr handler on the root logger.

    Safe to call more than once: an existing handler installed here is
    replaced rather than duplicated.

    Args:
        level: level name or number; defaults to PRICING_LOG_LEVEL
    """
    if level is None:
        level = default_log_level()
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_pricing_handler", False):
            root.removeHandler(handler)

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._pricing_handler = True
    root.addHandler(handler)
    root.setLevel(level)
    return root
