"""Deterministic random-stream derivation.

Every source of randomness in a run is a named substream derived from one
master seed, so that plays sharing a (game, play) pair see identical type
pools and opponent rolls regardless of which prior method is being run.
"""

from __future__ import annotations

import hashlib

import numpy as np

# substream codes used by the experiment runner
TYPES = 0
OPPONENT = 1
TIES = 2
ACTIONS = 3
PRIOR = 4
EVO = 5


def _as_key(part) -> int:
    if isinstance(part, (int, np.integer)):
        if part < 0:
            raise ValueError(f"spawn key parts must be non-negative, got {part}")
        return int(part)
    if isinstance(part, str):
        digest = hashlib.sha256(part.encode("utf-8")).digest()
        return int.from_bytes(digest[:4], "big")
    raise TypeError(f"unsupported spawn key part: {part!r}")


def seed_sequence(master_seed: int, *parts) -> np.random.SeedSequence:
    """SeedSequence for the substream named by `parts` (ints or strings)."""
    return np.random.SeedSequence(master_seed, spawn_key=tuple(_as_key(p) for p in parts))


def substream(master_seed: int, *parts) -> np.random.Generator:
    """Independent generator for the substream named by `parts`."""
    return np.random.Generator(np.random.PCG64(seed_sequence(master_seed, *parts)))
