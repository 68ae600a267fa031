"""Self-contained 64-bit PRNG used by every seeded generator in the package.

The generator is the splitmix64 recurrence, chosen because it is trivial to
reproduce bit-exactly on any platform and in any language:

    state_{i+1} = (state_i + 0x9E3779B97F4A7C15) mod 2^64
    output_i    = mix64(state_{i+1})

where mix64 is the finalizer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9  (mod 2^64)
    z ^= z >> 27;  z *= 0x94D049BB133111EB  (mod 2^64)
    z ^= z >> 31

Derived conveniences, also fixed bit-exactly:

  * unit doubles are the top 53 bits: (output >> 11) * 2^-53, in [0, 1);
  * fair coins are the top bit: output >> 63;
  * the stream is counter-based, so output_i = mix64(seed + (i+1) * GAMMA),
    which lets numpy evaluate whole blocks of the stream at once.
"""

from __future__ import annotations

import numpy as np

GAMMA = 0x9E3779B97F4A7C15
_MASK = 0xFFFFFFFFFFFFFFFF
_INV_2_53 = 2.0**-53


def mix64(z: int) -> int:
    """splitmix64 finalizer on a 64-bit integer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential splitmix64 stream starting from ``seed``."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_uint64(self) -> int:
        self._state = (self._state + GAMMA) & _MASK
        return mix64(self._state)

    def next_unit(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_uint64() >> 11) * _INV_2_53

    def next_coin(self) -> int:
        """Fair coin: the top bit of the next output."""
        return self.next_uint64() >> 63


def stream_uint64(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Outputs ``offset`` .. ``offset+count-1`` of the stream, vectorized.

    Identical to calling ``SplitMix64(seed).next_uint64()`` count times after
    discarding ``offset`` values.
    """
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK) + idx * np.uint64(GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def stream_unit(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Uniform doubles in [0, 1), the vectorized form of next_unit."""
    return (stream_uint64(seed, count, offset) >> np.uint64(11)) * _INV_2_53
