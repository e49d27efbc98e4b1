"""
Decorations of a finite poset: every (g, R_G, R_H) making it a tms-space,
one per isomorphism class.

Two decorations of the same poset are isomorphic exactly when an order
automorphism carries one onto the other. Candidates are therefore g up to
conjugation by automorphisms, and for each g the least relation of every
orbit under the automorphisms commuting with g. Each surviving candidate is
then accepted or rejected by validate_tms_space alone.
"""
import logging
from itertools import product
from typing import Iterator

from django.conf import settings

from duality.spaces import TmsSpace, validate_tms_space
from order.posets import Poset, members, poset_from_leq, upset_family
from tensym.exceptions import SizeGuard

from .canonical import PairRelabeling, automorphisms, conjugate

logger = logging.getLogger(__name__)


def symmetric_maps(poset: Poset, m: int) -> list[tuple[int, ...]]:
    """Order-reversing maps g with g^(2m) = id, in lexicographic order."""
    n = poset.size
    found = []
    for g in product(range(n), repeat=n):
        if not all(poset.leq(g[y], g[x]) for x in range(n) for y in members(poset.above[x])):
            continue
        power = list(range(n))
        for _ in range(2 * m):
            power = [g[x] for x in power]
        if power == list(range(n)):
            found.append(g)
    return found


def symmetric_map_classes(poset: Poset, m: int) -> list[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    """
    The least symmetric map of each conjugacy class under the order
    automorphisms, paired with the automorphisms commuting with it.
    """
    autos = automorphisms(poset)
    classes = []
    for g in symmetric_maps(poset, m):
        conjugates = [conjugate(g, position) for position in autos]
        if min(conjugates) == g:
            classes.append((g, [position for position, c in zip(autos, conjugates) if c == g]))
    return classes


def monotone_relation_masks(poset: Poset) -> list[int]:
    """
    Relations up-closed in the first argument and down-closed in the second,
    as the up-sets of P x P^op on pairs indexed x * n + y, in increasing order.
    """
    n = poset.size
    pairs = poset_from_leq(
        n * n,
        lambda a, b: poset.leq(a // n, b // n) and poset.leq(b % n, a % n),
    )
    return sorted(upset_family(pairs))


def relation_of_mask(mask: int, n: int) -> frozenset[tuple[int, int]]:
    return frozenset(divmod(i, n) for i in members(mask))


def monotone_relations(poset: Poset) -> list[frozenset[tuple[int, int]]]:
    return [relation_of_mask(mask, poset.size) for mask in monotone_relation_masks(poset)]


def paired_relation(g: tuple[int, ...], relation: frozenset[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """{(g y, g x) : (x, y) in relation}; for bijective g this is the only R_H that S2 and S3 allow."""
    return frozenset((g[y], g[x]) for x, y in relation)


def decoration(poset: Poset, g: tuple[int, ...], rel_g: frozenset, m: int) -> TmsSpace:
    return TmsSpace(poset=poset, g=g, rel_g=rel_g, rel_h=paired_relation(g, rel_g), m=m)


def iter_decorations(poset: Poset, m: int) -> Iterator[TmsSpace]:
    """Orbit representatives passing validate_tms_space, ordered by g and then by relation mask."""
    n = poset.size
    identity = tuple(range(n))
    relations = monotone_relation_masks(poset)
    upsets = upset_family(poset)
    for g, centralizer in symmetric_map_classes(poset, m):
        relabelings = [PairRelabeling(position, n) for position in centralizer if position != identity]
        for mask in relations:
            if any(relabel(mask) < mask for relabel in relabelings):
                continue
            space = decoration(poset, g, relation_of_mask(mask, n), m)
            if validate_tms_space(space, upsets).passed:
                yield space


def enumerate_spaces(poset: Poset, m: int, guard: int | None = None) -> list[TmsSpace]:
    """Every tms-space structure on the poset with degree m, up to decorated isomorphism."""
    guard = guard if guard is not None else settings.TENSYM_DECORATION_GUARD
    if poset.size > guard:
        logger.warning("decoration enumeration refused: %d points, guard %d", poset.size, guard)
        raise SizeGuard("decorated poset", poset.size, guard)

    spaces = list(iter_decorations(poset, m))
    logger.debug("%d decorations of a %d-point poset with m=%d", len(spaces), poset.size, m)
    return spaces
