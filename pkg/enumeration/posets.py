import logging

from django.conf import settings

from order.posets import Poset, upset_family
from tensym.exceptions import ShapeError, SizeGuard

from .canonical import canonical_poset

logger = logging.getLogger(__name__)


def _extensions(poset: Poset):
    """Every poset obtained by adding a new maximal element above a down-set."""
    n = poset.size
    for downset in upset_family(poset.dual()):
        above = [mask | (1 << n if downset >> x & 1 else 0) for x, mask in enumerate(poset.above)]
        above.append(1 << n)
        yield Poset(n + 1, tuple(above))


def enumerate_posets(n_max: int, guard: int | None = None) -> list[Poset]:
    """
    One representative per isomorphism class of every poset with 1..n_max
    elements, in canonical form, sorted by size and then encoding.
    """
    guard = guard if guard is not None else settings.TENSYM_POSET_GUARD
    if n_max > guard:
        logger.warning("poset enumeration refused: size %d, guard %d", n_max, guard)
        raise SizeGuard("poset enumeration", n_max, guard)
    if n_max < 1:
        raise ShapeError(f"poset enumeration needs a size of at least 1, got {n_max}")

    layer = [Poset(1, (1,))]
    result = list(layer)
    for size in range(2, n_max + 1):
        seen: dict[tuple[int, ...], Poset] = {}
        for poset in layer:
            for extended in _extensions(poset):
                canonical = canonical_poset(extended)
                seen.setdefault(canonical.above, canonical)
        layer = [seen[key] for key in sorted(seen)]
        logger.info("posets of size %d: %d", size, len(layer))
        result.extend(layer)
    return result
