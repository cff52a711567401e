"""Named, counter-based random streams.

Every source of randomness in the pipeline (weight init, mask sampling, data
sampling, ...) draws from its own Philox stream, keyed by a seed plus a stream
name and optional integer subkeys (typically the step index). Streams are
stateless between calls: ``stream(seed, "masks", step)`` always yields the
same generator, which is what makes interrupted runs resumable bit-for-bit.
"""

from __future__ import annotations

import zlib

import numpy as np


def _name_key(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


def stream(seed: int, name: str, *subkeys: int) -> np.random.Generator:
    """A fresh generator for (seed, name, *subkeys), independent of all others."""
    if seed < 0:
        raise ValueError("seed must be non-negative")
    seq = np.random.SeedSequence(entropy=seed, spawn_key=(_name_key(name), *subkeys))
    return np.random.Generator(np.random.Philox(seq))
