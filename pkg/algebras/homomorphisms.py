import logging
from itertools import product
from typing import Iterable, Sequence

from order.lattices import lattice_from_poset
from order.posets import poset_from_leq
from tensym.exceptions import NotACongruence, ShapeError
from tensym.reports import Check, Report, first_failure

from .partitions import Congruence
from .structures import TmsAlgebra

logger = logging.getLogger(__name__)

TMS_OPERATIONS = ("meet", "join", "N", "G", "H")
LATTICE_OPERATIONS = ("meet", "join")


def check_homomorphism(h: Sequence[int], source: TmsAlgebra, target: TmsAlgebra) -> Report:
    """Preservation of meet, join, both bounds, N, G and H; failures carry witnesses."""
    if len(h) != source.size or any(not 0 <= v < target.size for v in h):
        raise ShapeError(f"map is not total from {source.size} to {target.size} elements")

    pairs = list(product(source.elements, repeat=2))
    singles = [(x,) for x in source.elements]
    checks = [
        first_failure("meet", pairs, lambda x, y: h[source.meet(x, y)] == target.meet(h[x], h[y])),
        first_failure("join", pairs, lambda x, y: h[source.join(x, y)] == target.join(h[x], h[y])),
        Check("bottom", h[source.bottom] == target.bottom, () if h[source.bottom] == target.bottom else (source.bottom,)),
        Check("top", h[source.top] == target.top, () if h[source.top] == target.top else (source.top,)),
    ]
    for name in ("N", "G", "H"):
        s_op, t_op = source.operation(name), target.operation(name)
        checks.append(first_failure(name, singles, lambda x: h[s_op[x]] == t_op[h[x]]))
    return Report("homomorphism", tuple(checks))


def _image(algebra: TmsAlgebra, operation: str, x: int, z: int) -> int:
    if operation == "meet":
        return algebra.meet(x, z)
    if operation == "join":
        return algebra.join(x, z)
    return algebra.operation(operation)[x]


def compatibility_failure(
    algebra: TmsAlgebra,
    blocks: Sequence[int],
    operations: Iterable[str] = TMS_OPERATIONS,
) -> tuple[tuple[int, int], str] | None:
    """First related pair (in canonical order) whose images under an operation fall in different blocks."""
    operations = tuple(operations)
    n = algebra.size
    for x in range(n):
        for y in range(x + 1, n):
            if blocks[x] != blocks[y]:
                continue
            for op in operations:
                partners = range(n) if op in LATTICE_OPERATIONS else (0,)
                for z in partners:
                    if blocks[_image(algebra, op, x, z)] != blocks[_image(algebra, op, y, z)]:
                        return (x, y), op
    return None


def is_compatible(algebra: TmsAlgebra, congruence: Congruence, operations: Iterable[str] = TMS_OPERATIONS) -> bool:
    return compatibility_failure(algebra, congruence.blocks, operations) is None


def quotient(algebra: TmsAlgebra, theta: Congruence) -> tuple[TmsAlgebra, tuple[int, ...]]:
    """
    The quotient algebra on the blocks of theta, with the quotient map.
    Blocks are indexed by first occurrence and named after their first element.
    """
    if theta.size != algebra.size:
        raise ShapeError("partition and algebra sizes differ")
    failure = compatibility_failure(algebra, theta.blocks)
    if failure is not None:
        witness, operation = failure
        raise NotACongruence(witness, operation)

    q = theta.blocks
    reps = [cls[0] for cls in theta.classes()]
    k = len(reps)
    poset = poset_from_leq(k, lambda b, c: q[algebra.join(reps[b], reps[c])] == c)
    lattice = lattice_from_poset(poset)
    quotient_algebra = TmsAlgebra(
        lattice=lattice,
        negation=tuple(q[algebra.negation[r]] for r in reps),
        future=tuple(q[algebra.future[r]] for r in reps),
        past=tuple(q[algebra.past[r]] for r in reps),
        m=algebra.m,
        labels=tuple(algebra.labels[r] for r in reps),
    )
    logger.debug("quotient of %d elements by %d blocks", algebra.size, k)
    return quotient_algebra, q


def principal_congruence(algebra: TmsAlgebra, a: int, b: int, operations: Iterable[str] = TMS_OPERATIONS) -> Congruence:
    """Least congruence relating a and b, by closing {(a, b)} under the operations."""
    operations = tuple(operations)
    n = algebra.size
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = [(a, b)]
    while pending:
        x, y = pending.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        # images of merging pairs suffice: any related pair is a chain of them
        for op in operations:
            partners = range(n) if op in LATTICE_OPERATIONS else (0,)
            for z in partners:
                pending.append((_image(algebra, op, x, z), _image(algebra, op, y, z)))
    return Congruence.from_labels([find(x) for x in range(n)])
