"""Seedable, platform-independent random number generation.

All randomness in the package flows through SplitMix64 (Steele, Lea &
Flood's 64-bit mixer). It is implemented both here and, identically, inside
the compiled kernels, so that the pure-Python and compiled sampling paths
produce bit-identical draw sequences for the same seed.

Doubles are produced as ``(next_u64() >> 11) * 2**-53`` and lie in [0, 1).
"""

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_INV53 = 2.0**-53


def mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanching 64-bit hash of z."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential SplitMix64 stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def next_double(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * _INV53

    def next_below(self, k: int) -> int:
        """Uniform integer in [0, k)."""
        idx = int(self.next_double() * k)
        return k - 1 if idx >= k else idx


def derive_stream(master: int, iteration: int, sample: int) -> int:
    """Seed for the per-sample stream of (run seed, iteration, sample index).

    Deterministic and order-free, so samples of one iteration may be drawn
    in any order (or in parallel) without changing results.
    """
    z = mix64((master + _GOLDEN * (iteration + 1)) & _MASK)
    return mix64((z + _GOLDEN * (sample + 1)) & _MASK)
