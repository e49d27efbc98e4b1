"""
tms-subsets of a finite tms-space and the congruences Theta(Y) they induce
on the algebra whose dual the space is.
"""
import logging
from dataclasses import dataclass, field

from django.conf import settings

from algebras.partitions import Congruence
from algebras.structures import TmsAlgebra
from duality.constructions import dual_space_with_filters
from duality.spaces import RELATIONS, TmsSpace
from order.filters import PrimeFilters
from order.posets import members, subset_key
from tensym.exceptions import NotATmsSubset, SizeGuard

logger = logging.getLogger(__name__)


def tms_subset_failure(space: TmsSpace, mask: int) -> str | None:
    """Reason the mask is not a tms-subset of the space, or None."""
    if mask & ~space.full:
        return "mask mentions points outside the carrier"
    below = space.poset.below
    for name in RELATIONS:
        pred = space.predecessors(name)
        for u in members(mask):
            for v in members(pred[u]):
                if not mask & pred[u] & below[v]:
                    return f"tms1({name[1]}) fails at u={u}, v={v}"
    if space.g_image(mask, 2 * space.m - 1) != mask:
        return "tms2 fails: Y differs from its image under g^(2m-1)"
    return None


@dataclass(frozen=True)
class TmsSubset:
    mask: int
    space: TmsSpace = field(repr=False)

    def __post_init__(self):
        reason = tms_subset_failure(self.space, self.mask)
        if reason is not None:
            raise NotATmsSubset(reason)

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(members(self.mask))

    def __le__(self, other: "TmsSubset") -> bool:
        return self.mask & ~other.mask == 0


def is_tms_subset(space: TmsSpace, mask: int) -> bool:
    return tms_subset_failure(space, mask) is None


def _guard_space(space: TmsSpace, guard: int | None) -> None:
    guard = guard if guard is not None else settings.TENSYM_SPACE_GUARD
    if space.size > guard:
        logger.warning("subset scan refused: %d points, guard %d", space.size, guard)
        raise SizeGuard("space", space.size, guard)


def all_subsets(space: TmsSpace, guard: int | None = None) -> list[int]:
    _guard_space(space, guard)
    return sorted(range(1 << space.size), key=subset_key)


def tms_subsets(space: TmsSpace, guard: int | None = None) -> list[TmsSubset]:
    """Every tms-subset of the space, in canonical subset order."""
    found = [TmsSubset(mask, space) for mask in all_subsets(space, guard) if is_tms_subset(space, mask)]
    logger.debug("%d of %d subsets are tms-subsets", len(found), 1 << space.size)
    return found


def theta(algebra: TmsAlgebra, family: PrimeFilters, mask: int) -> Congruence:
    """a ~ b iff sigma(a) and sigma(b) meet the mask in the same points."""
    return Congruence.from_key(algebra.size, lambda a: family.containing(a) & mask)


def theta_of_subset(algebra: TmsAlgebra, subset: TmsSubset) -> Congruence:
    space, family = dual_space_with_filters(algebra)
    if subset.space != space:
        raise NotATmsSubset("subset belongs to a different space than the dual of the algebra")
    return theta(algebra, family, subset.mask)
