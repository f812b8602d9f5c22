"""Seeded random number generation for reproducible chains."""

import random
from typing import List, Sequence

import numpy as np

_SEED_MASK = (1 << 64) - 1


class ChainRNG:
    """
    Deterministic generator owned by one chain.

    Scalar draws in the hot loop go through `random.Random`; vectorized
    draws (stub shuffles) go through a numpy `Generator`. Both are seeded
    from the same 64-bit seed, so the seed alone fixes the stream.

    Sub-streams: `ChainRNG.derive_seeds(seed, n)` returns the 64-bit seeds of
    `numpy.random.SeedSequence(seed).spawn(n)`; chain c always receives
    child c, so adding chains never perturbs existing ones.
    """

    def __init__(self, seed: int):
        self._seed = int(seed) & _SEED_MASK
        self._rng = random.Random(self._seed)
        self._np = np.random.default_rng(self._seed)

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def numpy(self) -> np.random.Generator:
        return self._np

    def random(self) -> float:
        return self._rng.random()

    def randrange(self, stop: int) -> int:
        return self._rng.randrange(stop)

    def sample(self, population: Sequence, k: int) -> list:
        return self._rng.sample(population, k)

    def shuffle(self, seq: list) -> None:
        self._rng.shuffle(seq)

    def distinct_pair(self, m: int):
        """Two distinct indices, uniform over the C(m, 2) unordered pairs."""
        i = self._rng.randrange(m)
        j = self._rng.randrange(m - 1)
        if j >= i:
            j += 1
        return i, j

    @staticmethod
    def derive_seeds(seed: int, n: int) -> List[int]:
        children = np.random.SeedSequence(int(seed) & _SEED_MASK).spawn(n)
        return [
            int(child.generate_state(1, dtype=np.uint64)[0])
            for child in children
        ]

    @classmethod
    def spawn(cls, seed: int, n: int) -> List["ChainRNG"]:
        return [cls(child) for child in cls.derive_seeds(seed, n)]
