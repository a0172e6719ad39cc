"""Deterministic pseudo-random streams.

State layout is xoshiro256** seeded through splitmix64, so a (seed, label)
pair always yields the same draw sequence regardless of platform. Every
stochastic operation in the package takes an explicit Stream; nothing reads
global randomness.

Constants:
    splitmix64 increment  0x9E3779B97F4A7C15
    splitmix64 mixers     0xBF58476D1CE4E5B9, 0x94D049BB133111EB
    xoshiro256** scrambler: rotl(s1 * 5, 7) * 9
"""

import numpy as np

_MASK = (1 << 64) - 1


def _splitmix64(state):
    """One splitmix64 step; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & _MASK


class Stream:
    """A single xoshiro256** sequence."""

    def __init__(self, seed, label=""):
        state = seed & _MASK
        # fold the label into the seed so spawned streams do not collide
        for ch in label.encode("utf-8"):
            state, z = _splitmix64(state ^ ch)
            state ^= z
        s = []
        for _ in range(4):
            state, z = _splitmix64(state)
            s.append(z)
        self._s = s
        self._seed = seed
        self._label = label
        self._gauss_spare = None

    def spawn(self, label):
        """Derive an independent stream keyed by (this stream's key, label)."""
        return Stream(self._seed, self._label + "/" + label)

    def next_u64(self):
        s0, s1, s2, s3 = self._s
        out = (_rotl((s1 * 5) & _MASK, 7) * 9) & _MASK
        t = (s1 << 17) & _MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return out

    def uniform(self, size=None, low=0.0, high=1.0):
        """Uniform floats in [low, high) with 53-bit resolution."""
        n = 1 if size is None else int(np.prod(size))
        raw = np.empty(n, dtype=np.float64)
        for i in range(n):
            raw[i] = (self.next_u64() >> 11) * 2.0 ** -53
        out = low + raw * (high - low)
        if size is None:
            return float(out[0])
        return out.reshape(size)

    def normal(self, size=None, mean=0.0, std=1.0):
        """Gaussian draws via Box-Muller on paired uniforms."""
        n = 1 if size is None else int(np.prod(size))
        out = np.empty(n, dtype=np.float64)
        i = 0
        if self._gauss_spare is not None and n > 0:
            out[0] = self._gauss_spare
            self._gauss_spare = None
            i = 1
        while i < n:
            u1 = max((self.next_u64() >> 11) * 2.0 ** -53, 2.0 ** -53)
            u2 = (self.next_u64() >> 11) * 2.0 ** -53
            r = np.sqrt(-2.0 * np.log(u1))
            out[i] = r * np.cos(2.0 * np.pi * u2)
            i += 1
            if i < n:
                out[i] = r * np.sin(2.0 * np.pi * u2)
                i += 1
            else:
                self._gauss_spare = r * np.sin(2.0 * np.pi * u2)
        out = mean + std * out
        if size is None:
            return float(out[0])
        return out.reshape(size)

    def integers(self, n, size=None):
        """Uniform integers in [0, n) by rejection-free modulo of 64-bit draws.

        The modulo bias is below 2**-50 for any n that fits desk-scale use.
        """
        if n <= 0:
            raise ValueError("n must be positive")
        count = 1 if size is None else int(np.prod(size))
        out = np.empty(count, dtype=np.int64)
        for i in range(count):
            out[i] = self.next_u64() % n
        if size is None:
            return int(out[0])
        return out.reshape(size)

    def shuffle(self, items):
        """Fisher-Yates shuffle of a list, in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_u64() % (i + 1)
            items[i], items[j] = items[j], items[i]

    def choice(self, n, k):
        """k distinct indices drawn from range(n)."""
        if k > n:
            raise ValueError("cannot draw more distinct indices than available")
        idx = list(range(n))
        self.shuffle(idx)
        return idx[:k]
