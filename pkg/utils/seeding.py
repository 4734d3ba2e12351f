"""
Seed handling for every randomized operation.

A run is reproducible from one 64-bit master seed. Independent sub-tasks (restarts,
survey trials) get their own seed derived from the master seed and a counter, so
they can run in any order or on any worker and still give the same results.
"""
import secrets

import numpy as np

from utils.exceptions import ComplexInputError

SEED_MASK = (1 << 64) - 1


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed & SEED_MASK)


def derive_seed(master_seed: int, counter: int) -> int:
    """Seed of the ``counter``-th sub-task of a run started with ``master_seed``."""
    sequence = np.random.SeedSequence(entropy=master_seed & SEED_MASK, spawn_key=(counter,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def resolve_seed(raw) -> int:
    """
    Turn a user-supplied seed into an integer.

    Args:
        raw: an integer, a decimal string, or the literal ``'auto'``.

    Returns:
        int: the seed, reduced to 64 bits.

    Raises:
        ComplexInputError: if no seed was given or it cannot be parsed.
    """
    if raw is None:
        raise ComplexInputError("A --seed is required for randomized commands (use '--seed auto' to draw one)")
    if isinstance(raw, int) and not isinstance(raw, bool):
        return raw & SEED_MASK
    text = str(raw).strip().lower()
    if text == 'auto':
        return secrets.randbits(64)
    try:
        return int(text, 0) & SEED_MASK
    except ValueError:
        raise ComplexInputError(f"Invalid seed '{raw}': expected an integer or 'auto'")


def choose(rng: np.random.Generator, items: list):
    """Pick one element of a non-empty list uniformly at random."""
    return items[int(rng.integers(len(items)))]
