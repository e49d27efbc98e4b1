import logging
from dataclasses import dataclass
from typing import Sequence

from tensym.exceptions import NotALattice, NotBounded, NotDistributive

from .posets import Poset, members, poset_from_leq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lattice:
    """
    Bounded distributive lattice on range(size) with explicit meet/join tables.
    Every field is determined by the order, so two Lattice values built from the
    same Poset compare equal however they were constructed.
    """
    poset: Poset
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def elements(self) -> range:
        return self.poset.elements

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    @classmethod
    def of_sets(cls, family: Sequence[int]) -> "Lattice":
        """
        Lattice of a family of sets (as masks) closed under intersection and
        union, indexed in the given order.
        """
        index = {mask: i for i, mask in enumerate(family)}
        poset = poset_from_leq(len(family), lambda i, j: family[i] & ~family[j] == 0)
        meet = tuple(tuple(index[u & v] for v in family) for u in family)
        join = tuple(tuple(index[u | v] for v in family) for u in family)
        return cls(
            poset=poset,
            meet_table=meet,
            join_table=join,
            bottom=index[min(family, key=int.bit_count)],
            top=index[max(family, key=int.bit_count)],
        )


def _extremum(candidates: int, closure: tuple[int, ...]) -> int | None:
    # the candidate whose closure is exactly the candidate set
    for c in members(candidates):
        if closure[c] == candidates:
            return c
    return None


def lattice_from_poset(poset: Poset) -> Lattice:
    """
    View a finite poset as a bounded distributive lattice.
    Raises NotBounded, NotALattice (with the first pair lacking an inf or sup)
    or NotDistributive (with the first failing triple).
    """
    full = poset.full
    bottoms = [i for i in poset.elements if poset.above[i] == full]
    tops = [i for i in poset.elements if poset.below[i] == full]
    if not bottoms or not tops:
        raise NotBounded("poset has no least or no greatest element")

    n = poset.size
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in poset.elements:
        for b in range(a, n):
            inf = _extremum(poset.below[a] & poset.below[b], poset.below)
            if inf is None:
                raise NotALattice(f"elements {a} and {b} have no infimum", (a, b))
            sup = _extremum(poset.above[a] & poset.above[b], poset.above)
            if sup is None:
                raise NotALattice(f"elements {a} and {b} have no supremum", (a, b))
            meet[a][b] = meet[b][a] = inf
            join[a][b] = join[b][a] = sup

    for x in poset.elements:
        for y in poset.elements:
            for z in poset.elements:
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    logger.debug("distributivity witness x=%d y=%d z=%d", x, y, z)
                    raise NotDistributive((x, y, z))

    return Lattice(
        poset=poset,
        meet_table=tuple(map(tuple, meet)),
        join_table=tuple(map(tuple, join)),
        bottom=bottoms[0],
        top=tops[0],
    )
