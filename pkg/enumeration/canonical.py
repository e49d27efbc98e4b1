"""
Canonical forms by exhaustive relabeling. Points are first grouped by an
isomorphism-invariant signature; only relabelings that keep the groups in
signature order are tried, and the smallest encoding wins.
"""
from itertools import permutations, product
from typing import Callable, Hashable, Sequence

from duality.spaces import TmsSpace
from order.posets import Poset, members


def relabel_mask(mask: int, position: Sequence[int]) -> int:
    return sum(1 << position[x] for x in members(mask))


def _orderings(signatures: Sequence[Hashable]):
    classes: dict[Hashable, list[int]] = {}
    for x, signature in enumerate(signatures):
        classes.setdefault(signature, []).append(x)
    groups = [classes[s] for s in sorted(classes)]
    for choice in product(*(permutations(group) for group in groups)):
        yield [x for group in choice for x in group]


def canonical_relabeling(
    signatures: Sequence[Hashable],
    encode: Callable[[list[int]], tuple],
) -> tuple[tuple, list[int]]:
    """
    Smallest encode(position) over the admissible orderings, with its
    position map (old index -> new index).
    """
    best = None
    for order in _orderings(signatures):
        position = [0] * len(order)
        for new, old in enumerate(order):
            position[old] = new
        encoding = encode(position)
        if best is None or encoding < best[0]:
            best = (encoding, position)
    return best


def poset_signatures(poset: Poset) -> list[tuple[int, int]]:
    return [(poset.below[x].bit_count(), poset.above[x].bit_count()) for x in poset.elements]


def _encode_poset(poset: Poset, position: list[int]) -> tuple[int, ...]:
    above = [0] * poset.size
    for x in poset.elements:
        above[position[x]] = relabel_mask(poset.above[x], position)
    return tuple(above)


def canonical_poset(poset: Poset) -> Poset:
    """The isomorphic copy whose above-masks are the smallest admissible encoding."""
    if poset.size == 0:
        return poset
    encoding, _ = canonical_relabeling(poset_signatures(poset), lambda p: _encode_poset(poset, p))
    return Poset(poset.size, encoding)


def _space_signatures(space: TmsSpace) -> list[tuple]:
    out_g = [0] * space.size
    out_h = [0] * space.size
    for x, _ in space.rel_g:
        out_g[x] += 1
    for x, _ in space.rel_h:
        out_h[x] += 1
    pred_g = space.predecessors("RG")
    return [
        (*signature, space.g[x] == x, out_g[x], pred_g[x].bit_count(), out_h[x])
        for x, signature in enumerate(poset_signatures(space.poset))
    ]


def _encode_space(space: TmsSpace, position: list[int]) -> tuple:
    n = space.size
    g = [0] * n
    for x in range(n):
        g[position[x]] = position[space.g[x]]
    return (
        _encode_poset(space.poset, position),
        tuple(g),
        tuple(sorted((position[x], position[y]) for x, y in space.rel_g)),
        tuple(sorted((position[x], position[y]) for x, y in space.rel_h)),
    )


def space_canonical_form(space: TmsSpace) -> tuple:
    """Isomorphism invariant of a decorated space: equal forms mean isomorphic spaces."""
    if space.size == 0:
        return (0, space.m)
    encoding, _ = canonical_relabeling(_space_signatures(space), lambda p: _encode_space(space, p))
    return (space.size, space.m, *encoding)


def automorphisms(poset: Poset) -> list[tuple[int, ...]]:
    """Order automorphisms as position maps, the identity first."""
    return [
        position
        for position in permutations(poset.elements)
        if all(relabel_mask(poset.above[x], position) == poset.above[position[x]] for x in poset.elements)
    ]


def conjugate(g: Sequence[int], position: Sequence[int]) -> tuple[int, ...]:
    """The map g read through the relabeling: position . g . position^-1."""
    image = [0] * len(g)
    for x, y in enumerate(g):
        image[position[x]] = position[y]
    return tuple(image)


class PairRelabeling:
    """
    Applies a relabeling of n points to relation masks, where pair (x, y)
    sits at bit x * n + y. Works a byte at a time through lookup tables.
    """

    def __init__(self, position: Sequence[int], n: int):
        self.tables = []
        for start in range(0, n * n, 8):
            table = []
            for byte in range(256):
                image = 0
                for bit in members(byte):
                    if start + bit < n * n:
                        x, y = divmod(start + bit, n)
                        image |= 1 << (position[x] * n + position[y])
                table.append(image)
            self.tables.append(table)

    def __call__(self, mask: int) -> int:
        image = 0
        for k, table in enumerate(self.tables):
            image |= table[mask >> (8 * k) & 255]
        return image
