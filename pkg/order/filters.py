from dataclasses import dataclass

from .lattices import Lattice
from .posets import Poset, members, poset_from_leq, subset_key


@dataclass(frozen=True)
class PrimeFilters:
    """Prime filters of a lattice (masks over its carrier) and their inclusion order."""
    filters: tuple[int, ...]
    order: Poset

    def index(self, mask: int) -> int:
        return self.filters.index(mask)

    def containing(self, element: int) -> int:
        """Mask over filter indices of the filters holding the element."""
        result = 0
        for i, f in enumerate(self.filters):
            if f >> element & 1:
                result |= 1 << i
        return result


def join_irreducibles(lattice: Lattice) -> list[int]:
    """Elements other than the bottom with exactly one lower cover."""
    lower_covers = [0] * lattice.size
    for lower, upper in lattice.poset.covers:
        lower_covers[upper] += 1
    return [j for j in lattice.elements if j != lattice.bottom and lower_covers[j] == 1]


def prime_filters(lattice: Lattice) -> PrimeFilters:
    """
    In a finite distributive lattice the prime filters are exactly the
    principal filters of join-irreducible elements.
    """
    filters = sorted((lattice.poset.above[j] for j in join_irreducibles(lattice)), key=subset_key)
    order = poset_from_leq(len(filters), lambda i, k: filters[i] & ~filters[k] == 0)
    return PrimeFilters(tuple(filters), order)


def is_filter(lattice: Lattice, mask: int) -> bool:
    if not mask >> lattice.top & 1:
        return False
    if lattice.poset.up_closure(mask) != mask:
        return False
    return all(mask >> lattice.meet(a, b) & 1 for a in members(mask) for b in members(mask))


def is_ideal(lattice: Lattice, mask: int) -> bool:
    if not mask >> lattice.bottom & 1:
        return False
    if lattice.poset.down_closure(mask) != mask:
        return False
    return all(mask >> lattice.join(a, b) & 1 for a in members(mask) for b in members(mask))


def is_prime_filter(lattice: Lattice, mask: int) -> bool:
    if mask >> lattice.bottom & 1 or not is_filter(lattice, mask):
        return False
    return all(
        mask >> a & 1 or mask >> b & 1
        for a in lattice.elements
        for b in lattice.elements
        if mask >> lattice.join(a, b) & 1
    )


def is_prime_ideal(lattice: Lattice, mask: int) -> bool:
    if mask >> lattice.top & 1 or not is_ideal(lattice, mask):
        return False
    return all(
        mask >> a & 1 or mask >> b & 1
        for a in lattice.elements
        for b in lattice.elements
        if mask >> lattice.meet(a, b) & 1
    )
