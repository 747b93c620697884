"""Seeded 64-bit mixing hashes used for bucket indexing."""

MASK64 = (1 << 64) - 1

# splitmix64 finalizer constants
_C1 = 0xBF58476D1CE4E5B9
_C2 = 0x94D049BB133111EB


def mix64(x: int) -> int:
    """Avalanche an integer into a uniform 64-bit value."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * _C1) & MASK64
    x = ((x ^ (x >> 27)) * _C2) & MASK64
    return x ^ (x >> 31)


class HashPair:
    """Two independent seeded hash streams over integer keys.

    Bucket indices are taken modulo the array length, so growing an array
    by a power of two leaves roughly half of the keys in place.
    """

    __slots__ = ("seed_1", "seed_2", "_m1", "_m2")

    def __init__(self, seed_1: int, seed_2: int):
        if seed_1 == seed_2:
            raise ValueError("hash seeds must differ")
        self.seed_1 = seed_1
        self.seed_2 = seed_2
        self._m1 = mix64(seed_1)
        self._m2 = mix64(seed_2)

    def pair(self, key: int) -> tuple[int, int]:
        """Return the two hash values for one key."""
        # mix64 inlined: this sits on the hot path of every operation
        x = (key ^ self._m1) & MASK64
        x = ((x ^ (x >> 30)) * _C1) & MASK64
        x = ((x ^ (x >> 27)) * _C2) & MASK64
        y = (key ^ self._m2) & MASK64
        y = ((y ^ (y >> 30)) * _C1) & MASK64
        y = ((y ^ (y >> 27)) * _C2) & MASK64
        return x ^ (x >> 31), y ^ (y >> 31)
