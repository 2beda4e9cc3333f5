"""Deterministic random streams for reproducible protocol runs.

Every random decision in a run draws from its own named SplitMix64 stream,
derived from the run seed and a purpose tag.  Event scheduling therefore
never perturbs the draw order of any stream, and the compiled kernels can
reproduce a full event-level run bit-for-bit by consuming the same streams
in the same per-qubit order.

SplitMix64 is a counter-based generator: output k is a pure function of
``seed + k * GOLDEN``, so a stream can also be materialized as a numpy
array (`splitmix_outputs`) that matches the sequential class exactly.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TRIAL = 0xD1342543DE82EF95

# Stream purpose tags.  These values are mirrored in the compiled kernel;
# do not renumber.
STREAM_ALICE = 1     # per qubit: basis bit, value bit
STREAM_ADV = 2       # adversary-private draws, order defined per strategy
STREAM_KEEP1 = 3     # Bob's first-pass keep coin, one bit per arriving qubit
STREAM_GATE = 4      # Bob's Pauli request, one bit per kept qubit (0=X, 1=Z)
STREAM_KEEP2 = 5     # Bob's second-pass keep coin, one bit per returned qubit
STREAM_BASIS = 6     # Bob's basis request, one bit per measured qubit (0=R, 1=D)
STREAM_CHARLIE = 7   # honest Charlie's Born draws, one double per measurement
STREAM_PUBLIC = 8    # public coin for the check-set selection


def mix64(z: int) -> int:
    """Finalizer of SplitMix64; a 64-bit bijective hash."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def stream_seed(run_seed: int, purpose: int) -> int:
    return mix64((run_seed & MASK64) ^ ((purpose * GOLDEN) & MASK64))


def trial_seed(master_seed: int, index: int) -> int:
    """Per-trial seed; a deterministic counter split of the master seed."""
    return mix64(mix64(master_seed) ^ (((index + 1) * _TRIAL) & MASK64))


class SplitMix64:
    """Sequential SplitMix64 stream over 64-bit outputs."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        return mix64(self._state)

    def next_bit(self) -> int:
        return self.next_u64() >> 63

    def next_double(self) -> float:
        # 53 uniform mantissa bits in [0, 1)
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by masked rejection.

        bound <= 1 returns 0 without consuming a draw (the kernel mirrors
        this, so consumption counts stay aligned).
        """
        if bound <= 1:
            return 0
        mask = (1 << (bound - 1).bit_length()) - 1
        while True:
            v = self.next_u64() & mask
            if v < bound:
                return v


def splitmix_outputs(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Outputs offset+1 .. offset+count of the stream, as a uint64 array.

    Identical to calling ``SplitMix64(seed).next_u64()`` that many times
    (after skipping `offset` outputs).
    """
    if count == 0:
        return np.empty(0, dtype=np.uint64)
    ks = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK64) + ks * np.uint64(GOLDEN)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def u64_to_bits(arr: np.ndarray) -> np.ndarray:
    return (arr >> np.uint64(63)).astype(np.int64)


def u64_to_doubles(arr: np.ndarray) -> np.ndarray:
    return (arr >> np.uint64(11)).astype(np.float64) * 2.0**-53


def choose_check_ranks(rng: SplitMix64, pool: int, count: int) -> tuple[list[int], list[int]]:
    """Partial Fisher-Yates pick of `count` ranks out of range(pool).

    Returns (chosen sorted, remaining sorted).  This is the public-coin
    check-set selection; the kernels implement the identical sequence.
    """
    idx = list(range(pool))
    for i in range(count):
        j = i + rng.next_below(pool - i)
        idx[i], idx[j] = idx[j], idx[i]
    return sorted(idx[:count]), sorted(idx[count:])
