"""Deterministic pseudo-random generator used everywhere randomness is needed.

Every stochastic step in the pipeline (parameter init, shuffling, dropout)
draws from the generator below so that a seed fixes every downstream artifact
bit-exactly, independent of Python or NumPy versions.

Generator specification (SplitMix64, Steele et al. 2014):

    state   <- (state + 0x9E3779B97F4A7C15) mod 2^64      advance per draw
    z       <- state
    z       <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9     mod 2^64
    z       <- (z XOR (z >> 27)) * 0x94D049BB133111EB     mod 2^64
    output  <- z XOR (z >> 31)

Derived draws:

    uniform in [0, 1):   (output >> 11) * 2^-53
    integer in [0, n):   output mod n
    shuffle:             Fisher-Yates, i from len-1 down to 1,
                         j = integer in [0, i], swap(seq[i], seq[j])

Because the state advances by a fixed constant per draw, a block of n draws
can be produced vectorially from ``state + k * GAMMA`` for k = 1..n; the
vector path emits exactly the same numbers as n scalar draws.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix(x: int) -> int:
    x = ((x ^ (x >> 30)) * _MIX1) & _MASK
    x = ((x ^ (x >> 27)) * _MIX2) & _MASK
    return (x ^ (x >> 31)) & _MASK


def derive_seed(seed: int, *parts: int) -> int:
    """Fold integers into a seed to obtain an independent child stream.

    Used to give every (epoch, batch) pair its own dropout stream and every
    stage of the pipeline its own shuffle stream without correlated draws.
    """
    x = seed & _MASK
    for p in parts:
        x = _mix((x + _GAMMA + (p & _MASK)) & _MASK)
    return x


class SplitMix64:
    """Stateful SplitMix64 stream; see module docstring for the exact spec."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def uniform(self, low: float = 0.0, high: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * 2.0**-53
        return low + u * (high - low)

    def randint(self, n: int) -> int:
        """Integer in [0, n). Modulo bias is acceptable for desk-scale n."""
        if n <= 0:
            raise ValueError("randint needs n >= 1")
        return self.next_u64() % n

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.next_u64() % (i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def uniform_array(self, shape, low: float = 0.0, high: float = 1.0) -> np.ndarray:
        """Vectorized block of uniforms, stream-identical to scalar draws."""
        n = int(np.prod(shape)) if shape else 1
        ks = np.arange(1, n + 1, dtype=np.uint64)
        states = np.uint64(self._state) + np.uint64(_GAMMA) * ks  # wraps mod 2^64
        z = states
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        z = z ^ (z >> np.uint64(31))
        self._state = (self._state + _GAMMA * n) & _MASK
        u = (z >> np.uint64(11)).astype(np.float64) * 2.0**-53
        return (low + u * (high - low)).reshape(shape)
