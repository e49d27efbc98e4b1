from dataclasses import dataclass
from typing import Iterable

from algebras.homomorphisms import TMS_OPERATIONS, compatibility_failure
from algebras.partitions import Congruence
from algebras.structures import TmsAlgebra
from order.posets import Poset, poset_from_leq
from tensym.exceptions import NotACongruence, NotALattice


@dataclass(frozen=True)
class CongruenceLattice:
    """Congruences in canonical order (finest first), refinement order, meet and join tables."""
    congruences: tuple[Congruence, ...]
    order: Poset
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.congruences)

    def index(self, congruence: Congruence) -> int:
        return self.congruences.index(congruence)

    def __iter__(self):
        return iter(self.congruences)

    def __len__(self) -> int:
        return len(self.congruences)


def _require_compatible(algebra: TmsAlgebra, congruence: Congruence, operations: tuple[str, ...]) -> None:
    failure = compatibility_failure(algebra, congruence.blocks, operations)
    if failure is not None:
        witness, operation = failure
        raise NotACongruence(witness, operation)


def congruence_lattice(
    congruences: Iterable[Congruence],
    algebra: TmsAlgebra | None = None,
    operations: Iterable[str] = TMS_OPERATIONS,
) -> CongruenceLattice:
    """
    Order, meet and join tables for a family of congruences. Meets are common
    refinements and joins transitive closures of unions; with an algebra given,
    every member and every join is re-tested for compatibility, so a family
    that is not a sublattice of the congruences of the lattice reduct is caught.
    """
    operations = tuple(operations)
    members = sorted(set(congruences), key=Congruence.sort_key)
    if not members:
        raise NotALattice("empty family of congruences")
    if algebra is not None:
        for congruence in members:
            _require_compatible(algebra, congruence, operations)

    n = members[0].size
    index = {c: i for i, c in enumerate(members)}
    for required in (Congruence.identity(n), Congruence.total(n)):
        if required not in index:
            raise NotALattice(f"family misses {required.blocks}")

    tables = {"meet": [], "join": []}
    for i, c in enumerate(members):
        meets, joins = [], []
        for j, d in enumerate(members):
            for name, result, row in (("meet", c.meet(d), meets), ("join", c.join(d), joins)):
                if result not in index:
                    if algebra is not None:
                        _require_compatible(algebra, result, operations)
                    raise NotALattice(f"{name} of members {i} and {j} is not in the family", (i, j))
                row.append(index[result])
        tables["meet"].append(tuple(meets))
        tables["join"].append(tuple(joins))

    return CongruenceLattice(
        congruences=tuple(members),
        order=poset_from_leq(len(members), lambda i, j: members[i].refines(members[j])),
        meet_table=tuple(tables["meet"]),
        join_table=tuple(tables["join"]),
    )
