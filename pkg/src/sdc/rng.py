"""Deterministic 64-bit RNG with cheap per-index stream derivation.

SplitMix64 is used everywhere randomness is needed so that results are
bit-for-bit reproducible across the pure-Python and compiled kernels and
independent of how work is split across threads: stream ``i`` of a seed is
derived from ``(seed, i)`` alone, never from how many draws other streams
made.  The compiled kernel (``_kernel.pyx``) mirrors these exact integer
recurrences; change one and you must change both.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective avalanche mix of a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_state(seed: int, index: int) -> int:
    """Initial generator state for stream ``index`` of ``seed``.

    Distinct indices give distinct, well-spread states (the finalizer is a
    bijection of the distinct inputs ``mix64(seed) + (index+1)*gamma``).
    """
    return mix64((mix64(seed) + ((index + 1) * _GAMMA)) & MASK64)


class SplitMix64:
    """Sequential SplitMix64 generator over an explicit 64-bit state."""

    __slots__ = ("_state",)

    def __init__(self, state: int):
        self._state = state & MASK64

    @classmethod
    def stream(cls, seed: int, index: int) -> "SplitMix64":
        return cls(stream_state(seed, index))

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & MASK64
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` (multiply-shift; bias < bound/2^64)."""
        return (self.next_u64() * bound) >> 64

    def unit_open_closed(self) -> float:
        """Uniform float in ``(0, 1]``."""
        return (self.next_u64() + 1) * 2.0 ** -64
