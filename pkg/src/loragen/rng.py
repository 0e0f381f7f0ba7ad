"""Seeded random numbers: xoshiro256++ core, splitmix64 seeding, Box-Muller normals.

One Rng instance is one stream. Identical seeds give identical streams, which is
what makes every training run and every generated adapter bit-reproducible.
"""

from __future__ import annotations

import math

import numpy as np

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4B7C15
_INV_2_53 = 1.0 / (1 << 53)


def _mix64(z: int) -> int:
    # splitmix64 finalizer
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _M64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _M64
    return z ^ (z >> 31)


def splitmix64_stream(seed: int, n: int) -> list[int]:
    """First n outputs of a splitmix64 sequence started at seed."""
    out = []
    x = seed & _M64
    for _ in range(n):
        x = (x + _GOLDEN) & _M64
        out.append(_mix64(x))
    return out


def split_seed(seed: int, *indices: int) -> int:
    """Derive a sub-seed from a master seed and a path of integer indices.

    Used to fan one global seed out into per-stage and per-task seeds without
    correlated streams.
    """
    h = seed & _M64
    for idx in indices:
        h = _mix64((h + (idx + 1) * _GOLDEN) & _M64)
    return h


class Rng:
    """xoshiro256++ with splitmix64 seed expansion.

    Gaussian draws use the Box-Muller transform on two successive uniform
    draws; the spare value is cached so scalar and bulk draws see the same
    stream.
    """

    def __init__(self, seed: int):
        self.seed = seed & _M64
        s = splitmix64_stream(self.seed, 4)
        if not any(s):
            s[0] = 1  # xoshiro state must not be all zero
        self._s = s
        self._spare_normal: float | None = None

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s
        tmp = (s0 + s3) & _M64
        result = ((((tmp << 23) | (tmp >> 41)) & _M64) + s0) & _M64
        t = (s1 << 17) & _M64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _M64
        self._s = [s0, s1, s2, s3]
        return result

    def _u64_block(self, n: int) -> list[int]:
        # inlined next_u64 loop; this is the hot path for bulk sampling
        s0, s1, s2, s3 = self._s
        out = []
        ap = out.append
        for _ in range(n):
            tmp = (s0 + s3) & _M64
            ap((((tmp << 23) | (tmp >> 41)) & _M64) + s0 & _M64)
            t = (s1 << 17) & _M64
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = ((s3 << 45) | (s3 >> 19)) & _M64
        self._s = [s0, s1, s2, s3]
        return out

    def uniform(self) -> float:
        """One double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * _INV_2_53

    def uniforms(self, n: int) -> np.ndarray:
        block = np.array(self._u64_block(n), dtype=np.uint64)
        return ((block >> np.uint64(11)).astype(np.float64)) * _INV_2_53

    def normal(self) -> float:
        if self._spare_normal is not None:
            z = self._spare_normal
            self._spare_normal = None
            return z
        # u1 in (0, 1] so the log is finite
        u1 = ((self.next_u64() >> 11) + 1) * _INV_2_53
        u2 = (self.next_u64() >> 11) * _INV_2_53
        r = math.sqrt(-2.0 * math.log(u1))
        self._spare_normal = r * math.sin(2.0 * math.pi * u2)
        return r * math.cos(2.0 * math.pi * u2)

    def normals(self, n: int) -> np.ndarray:
        """n i.i.d. standard normals, identical to n successive normal() calls."""
        out = np.empty(n, dtype=np.float64)
        k = 0
        if n > 0 and self._spare_normal is not None:
            out[0] = self._spare_normal
            self._spare_normal = None
            k = 1
        m = n - k
        if m > 0:
            pairs = (m + 1) // 2
            block = np.array(self._u64_block(2 * pairs), dtype=np.uint64)
            u1 = ((block[0::2] >> np.uint64(11)).astype(np.float64) + 1.0) * _INV_2_53
            u2 = ((block[1::2] >> np.uint64(11)).astype(np.float64)) * _INV_2_53
            r = np.sqrt(-2.0 * np.log(u1))
            z0 = r * np.cos(2.0 * np.pi * u2)
            z1 = r * np.sin(2.0 * np.pi * u2)
            if m % 2 == 1:
                self._spare_normal = float(z1[-1])
                z1 = z1[:-1]
            interleaved = np.empty(2 * pairs - (m % 2), dtype=np.float64)
            interleaved[0::2] = z0[: (m + 1) // 2]
            interleaved[1::2] = z1
            out[k:] = interleaved[:m]
        return out

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi)."""
        if hi <= lo:
            raise ValueError(f"empty range [{lo}, {hi})")
        return lo + int(self.uniform() * (hi - lo))

    def permutation(self, n: int) -> np.ndarray:
        """Fisher-Yates shuffle of range(n)."""
        idx = np.arange(n)
        for i in range(n - 1, 0, -1):
            j = self.randint(0, i + 1)
            idx[i], idx[j] = idx[j], idx[i]
        return idx

    def choice_without_replacement(self, n: int, k: int) -> list[int]:
        if k > n:
            raise ValueError(f"cannot draw {k} distinct values from range({n})")
        pool = list(range(n))
        picked = []
        for _ in range(k):
            j = self.randint(0, len(pool))
            picked.append(pool.pop(j))
        return picked

    def spawn(self, *indices: int) -> "Rng":
        """Independent child stream addressed by an index path."""
        return Rng(split_seed(self.seed, *indices))
