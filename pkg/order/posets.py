"""
Finite posets stored as bit masks.

Element i of a Poset of size n is the integer i; a subset of the carrier is the
int whose bit i is set iff i belongs to it. Carriers are capped at MAX_CARRIER.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from tensym.exceptions import CycleError, SizeGuard

logger = logging.getLogger(__name__)

MAX_CARRIER = 64


def members(mask: int) -> Iterator[int]:
    """Yield the element indices of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical subset order: by cardinality, then lexicographic on sorted indices."""
    return mask.bit_count(), tuple(members(mask))


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class Poset:
    """
    Immutable finite partial order on range(size).
    above[i] is the mask of every j with i <= j (so bit i is always set).
    """
    size: int
    above: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @property
    def elements(self) -> range:
        return range(self.size)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.above[i] >> j & 1)

    @cached_property
    def below(self) -> tuple[int, ...]:
        below = [0] * self.size
        for i in self.elements:
            for j in members(self.above[i]):
                below[j] |= 1 << i
        return tuple(below)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse diagram as (lower, upper) pairs in canonical order."""
        pairs = []
        for i in self.elements:
            strictly_above = self.above[i] & ~(1 << i)
            for j in members(strictly_above):
                between = strictly_above & self.below[j] & ~(1 << j)
                if not between:
                    pairs.append((i, j))
        return tuple(pairs)

    def up_closure(self, mask: int) -> int:
        result = 0
        for i in members(mask):
            result |= self.above[i]
        return result

    def down_closure(self, mask: int) -> int:
        result = 0
        for i in members(mask):
            result |= self.below[i]
        return result

    def is_upset(self, mask: int) -> bool:
        return self.up_closure(mask) == mask

    def is_downset(self, mask: int) -> bool:
        return self.down_closure(mask) == mask

    def dual(self) -> "Poset":
        return Poset(self.size, self.below)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)


def poset_from_leq(size: int, leq) -> Poset:
    """Build a Poset from a predicate already known to be a partial order."""
    if size > MAX_CARRIER:
        raise SizeGuard("carrier", size, MAX_CARRIER)
    above = tuple(
        mask_of(j for j in range(size) if leq(i, j))
        for i in range(size)
    )
    return Poset(size, above)


def build_poset(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """
    Reflexive-transitive closure of the generating pairs.
    Raises IndexError for out-of-range indices and CycleError if the closure is not antisymmetric.
    """
    if n < 1:
        raise ValueError("a poset needs at least one element")
    if n > MAX_CARRIER:
        raise SizeGuard("carrier", n, MAX_CARRIER)

    above = [1 << i for i in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"pair ({a}, {b}) is out of range for {n} elements")
        above[a] |= 1 << b

    # Warshall closure, one pivot at a time
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if above[i] & bit:
                above[i] |= above[k]

    for i in range(n):
        for j in members(above[i] & ~((1 << (i + 1)) - 1)):
            if above[j] >> i & 1:
                raise CycleError(i, j)

    return Poset(n, tuple(above))


def upset_family(poset: Poset) -> list[int]:
    """
    Every up-set of the poset exactly once, in canonical subset order.
    Branches on an undecided element: either it is in (with everything above
    it) or out (with everything below it).
    """
    found: list[int] = []
    full = poset.full
    stack = [(0, 0)]
    while stack:
        inside, outside = stack.pop()
        undecided = full & ~(inside | outside)
        if not undecided:
            found.append(inside)
            continue
        x = (undecided & -undecided).bit_length() - 1
        stack.append((inside | poset.above[x], outside))
        stack.append((inside, outside | poset.below[x]))
    found.sort(key=subset_key)
    return found


def count_antichains(poset: Poset) -> int:
    """Number of antichains (the empty one included), counted independently of upset_family."""
    def count(start: int, chosen: int) -> int:
        total = 1
        for x in range(start, poset.size):
            if any(poset.comparable(x, y) for y in members(chosen)):
                continue
            total += count(x + 1, chosen | 1 << x)
        return total

    return count(0, 0)


def linear_extension(poset: Poset) -> list[int]:
    """Elements sorted so that every element comes after all elements below it."""
    return sorted(poset.elements, key=lambda i: (poset.below[i].bit_count(), i))
