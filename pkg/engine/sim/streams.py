# streams.py - Reproducible random streams for Monte Carlo trials.
# Every trial gets its own PCG64 stream seeded from (seed, trial index), so a
# result never depends on how trials are scheduled across threads.

import numpy as np

RNG_IDENTITY = "numpy.PCG64/SeedSequence"


def make_generator(key):
    """numpy Generator for an int seed or a tuple key such as (seed, index)."""
    if isinstance(key, np.random.Generator):
        return key
    if isinstance(key, tuple):
        key = [int(k) for k in key]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(key)))


def trial_generator(seed, index):
    return make_generator((seed, index))

