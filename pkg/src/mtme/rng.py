"""Deterministic pseudo-random numbers for init, dropout and shuffling.

The generator is xoshiro256** (a 64-bit shift-register generator) seeded via
splitmix64.  To keep mask generation cheap, ``Rng`` runs LANES independent
xoshiro streams in parallel numpy uint64 arrays and interleaves their outputs
round-robin (lane 0 draw 0, lane 1 draw 0, ..., lane 0 draw 1, ...).  The
resulting stream is a pure function of the seed, identical across platforms
and runs.

Named substreams (``rng.stream("dropout")``) derive their seed from the
parent seed and an FNV-1a hash of the name, so the draw order in one
subsystem can never perturb another.
"""

import numpy as np

_U64 = np.uint64
_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_LANES = 1024
_DOUBLE_SCALE = float(2.0**-53)


def _splitmix64(x: np.ndarray) -> np.ndarray:
    z = (x + _GOLDEN) & _MASK
    z = ((z ^ (z >> _U64(30))) * _U64(0xBF58476D1CE4E5B9)) & _MASK
    z = ((z ^ (z >> _U64(27))) * _U64(0x94D049BB133111EB)) & _MASK
    return z ^ (z >> _U64(31))


def _fnv1a64(text: str) -> int:
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def _rotl(x: np.ndarray, k: int) -> np.ndarray:
    return ((x << _U64(k)) | (x >> _U64(64 - k))) & _MASK


class Rng:
    """Seeded xoshiro256** stream with block generation and named substreams."""

    def __init__(self, seed: int):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        base = (np.arange(_LANES, dtype=np.uint64) * _U64(4)) + _U64(self.seed)
        with np.errstate(over="ignore"):
            s = [_splitmix64((base + _U64(i)) * _GOLDEN) for i in range(4)]
        self._state = s
        self._buffer = np.empty(0, dtype=np.uint64)
        self._pos = 0

    def _step(self) -> np.ndarray:
        s0, s1, s2, s3 = self._state
        with np.errstate(over="ignore"):
            out = (_rotl((s1 * _U64(5)) & _MASK, 7) * _U64(9)) & _MASK
            t = (s1 << _U64(17)) & _MASK
            s2 = s2 ^ s0
            s3 = s3 ^ s1
            s1 = s1 ^ s2
            s0 = s0 ^ s3
            s2 = s2 ^ t
            s3 = _rotl(s3, 45)
        self._state = [s0, s1, s2, s3]
        return out

    def _draw_u64(self, n: int) -> np.ndarray:
        while self._buffer.size - self._pos < n:
            block = self._step()
            remainder = self._buffer[self._pos:]
            self._buffer = np.concatenate([remainder, block])
            self._pos = 0
        out = self._buffer[self._pos:self._pos + n]
        self._pos += n
        return out

    def next_u64(self) -> int:
        return int(self._draw_u64(1)[0])

    def uniform(self, n: int, low: float = 0.0, high: float = 1.0) -> np.ndarray:
        """n doubles in [low, high) with 53-bit resolution."""
        bits = self._draw_u64(n) >> _U64(11)
        u = bits.astype(np.float64) * _DOUBLE_SCALE
        return low + u * (high - low)

    def below(self, bound: int) -> int:
        """Unbiased integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> np.ndarray:
        idx = list(range(n))
        self.shuffle(idx)
        return np.asarray(idx, dtype=np.int64)

    def stream(self, name: str) -> "Rng":
        """Independent child generator keyed by name."""
        mixed = np.asarray([self.seed ^ _fnv1a64(name)], dtype=np.uint64)
        child_seed = int(_splitmix64(mixed)[0])
        return Rng(child_seed)
