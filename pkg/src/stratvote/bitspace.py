"""Strategy bitstrings, Hamming geometry, and bounded-radius neighborhoods."""

from functools import lru_cache
from itertools import combinations
from math import comb


class Strategy:
    """An immutable length-n bitstring, stored as its integer encoding.

    Position 0 is the leftmost (most significant) decision, matching the
    string form: ``str(Strategy.from_string("100")) == "100"`` and
    ``Strategy.from_string("100").index == 4``.
    """

    __slots__ = ("n", "index", "_hash")

    def __init__(self, n, index):
        if n < 1:
            raise ValueError(f"strategy length must be >= 1, got {n}")
        if not 0 <= index < (1 << n):
            raise ValueError(f"index {index} out of range for {n} decisions")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "_hash", hash((n, index)))

    def __setattr__(self, name, value):
        raise AttributeError("Strategy is immutable")

    @classmethod
    def from_bits(cls, bits):
        bits = tuple(bits)
        index = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {b!r}")
            index = (index << 1) | b
        return cls(len(bits), index)

    @classmethod
    def from_string(cls, text):
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls(len(text), int(text, 2))

    def bits(self):
        """The decisions as a tuple of 0/1 ints, leftmost first."""
        return tuple((self.index >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def __str__(self):
        return format(self.index, f"0{self.n}b")

    def __repr__(self):
        return f"Strategy({str(self)!r})"

    def __eq__(self, other):
        if not isinstance(other, Strategy):
            return NotImplemented
        return self.n == other.n and self.index == other.index

    def __lt__(self, other):
        if not isinstance(other, Strategy):
            return NotImplemented
        return (self.n, self.index) < (other.n, other.index)

    def __hash__(self):
        return self._hash


def hamming_distance(a, b):
    """Number of decisions on which two equal-length strategies differ."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    return (a.index ^ b.index).bit_count()


@lru_cache(maxsize=None)
def _neighbor_masks(n, radius):
    """All xor masks with 1..radius set bits, for length-n strategies."""
    masks = []
    for k in range(1, radius + 1):
        for positions in combinations(range(n), k):
            m = 0
            for p in positions:
                m |= 1 << p
            masks.append(m)
    return tuple(masks)


def neighborhood_size(n, radius):
    """Number of strategies within Hamming distance 1..radius of any center."""
    return sum(comb(n, k) for k in range(1, radius + 1))


def neighborhood(center, radius):
    """All strategies within Hamming distance 1..radius of center.

    The center itself is excluded.  Enumeration order is canonical:
    ascending integer encoding.  radius may equal n, in which case the
    result is the full cube minus the center.
    """
    if not 0 < radius <= center.n:
        raise ValueError(f"radius must be in 1..{center.n}, got {radius}")
    n, c = center.n, center.index
    indices = sorted(c ^ m for m in _neighbor_masks(n, radius))
    return tuple(Strategy(n, i) for i in indices)


def flip(center, positions):
    """Copy of center with the decisions at the given positions inverted.

    Positions are 0-based string indices (0 = leftmost decision) and are
    treated as a set; an empty set returns an equal strategy.
    """
    n = center.n
    mask = 0
    for p in set(positions):
        if not 0 <= p < n:
            raise ValueError(f"position {p} out of range for {n} decisions")
        mask |= 1 << (n - 1 - p)
    return Strategy(n, center.index ^ mask)
