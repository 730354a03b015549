"""
Counter-based seeding for replication streams.

Every (master, stream) pair maps to its own ``SeedSequence`` through the
spawn key, so a replication's random numbers depend only on its index and
never on the order replications are scheduled in.
"""

import zlib

import numpy as np

from ..domain.value_objects.seed_spec import SeedSpec


def rng_for(seed: SeedSpec) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed.master, spawn_key=(seed.stream,))
    )


def derive_master(master: int, purpose: str, index: int = 0) -> int:
    """A new 64-bit master seed for a named family of streams.

    Used where one run needs several independent stream families, e.g. the
    observed patterns of a power study next to its null simulations.
    """
    tag = zlib.crc32(purpose.encode("utf-8"))
    sequence = np.random.SeedSequence(entropy=master, spawn_key=(tag, index))
    low, high = sequence.generate_state(2, dtype=np.uint32)
    return (int(high) << 32) | int(low)
