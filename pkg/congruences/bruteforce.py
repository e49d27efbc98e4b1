"""
Direct enumeration of congruences: restricted growth strings over the
carrier, pruned as soon as an assigned pair is sent to different blocks.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from django.conf import settings

from algebras.homomorphisms import TMS_OPERATIONS, LATTICE_OPERATIONS
from algebras.partitions import Congruence
from algebras.structures import TmsAlgebra
from tensym.exceptions import SizeGuard

from .lattice import CongruenceLattice, congruence_lattice

logger = logging.getLogger(__name__)

Constraint = tuple[int, int, int, int]


def _constraints(algebra: TmsAlgebra, operations: tuple[str, ...]) -> list[list[Constraint]]:
    """
    For every element k, the constraints (x, y, u, v) meaning "x ~ y forces
    u ~ v" whose largest index is k, so they can be tested once k is assigned.
    """
    n = algebra.size
    by_level: list[set[Constraint]] = [set() for _ in range(n)]
    unary = [algebra.operation(op) for op in operations if op not in LATTICE_OPERATIONS]
    binary = [op for op in operations if op in LATTICE_OPERATIONS]
    for x in range(n):
        for y in range(x + 1, n):
            images = [(table[x], table[y]) for table in unary]
            for op in binary:
                combine = algebra.meet if op == "meet" else algebra.join
                images.extend((combine(x, z), combine(y, z)) for z in range(n))
            for u, v in images:
                if u != v:
                    u, v = min(u, v), max(u, v)
                    by_level[max(y, v)].add((x, y, u, v))
    return [sorted(level) for level in by_level]


def _search(size: int, constraints: list[list[Constraint]], prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
    blocks = list(prefix) + [0] * (size - len(prefix))
    found: list[tuple[int, ...]] = []

    def consistent(k: int) -> bool:
        return all(blocks[x] != blocks[y] or blocks[u] == blocks[v] for x, y, u, v in constraints[k])

    def extend(k: int, used: int) -> None:
        if k == size:
            found.append(tuple(blocks))
            return
        for b in range(used + 1):
            blocks[k] = b
            if consistent(k):
                extend(k + 1, max(used, b + 1))

    for k in range(len(prefix)):
        if not consistent(k):
            return found
    extend(len(prefix), max(prefix, default=-1) + 1)
    return found


def _prefixes(depth: int) -> list[tuple[int, ...]]:
    result = [()]
    for _ in range(depth):
        result = [p + (b,) for p in result for b in range(max(p, default=-1) + 2)]
    return result


def _search_job(args):
    return _search(*args)


def congruences_bruteforce(
    algebra: TmsAlgebra,
    guard: int | None = None,
    operations: Iterable[str] = TMS_OPERATIONS,
    workers: int | None = None,
) -> CongruenceLattice:
    """
    Every partition of the carrier compatible with the given operations
    (all of meet, join, N, G, H by default), as a CongruenceLattice.
    With workers > 1 the search is split over restricted-growth prefixes;
    the result does not depend on the split.
    """
    guard = guard if guard is not None else settings.TENSYM_GUARD
    workers = workers if workers is not None else settings.TENSYM_WORKERS
    if algebra.size > guard:
        logger.warning("congruence enumeration refused: %d elements, guard %d", algebra.size, guard)
        raise SizeGuard("algebra", algebra.size, guard)

    operations = tuple(operations)
    constraints = _constraints(algebra, operations)
    if workers > 1 and algebra.size > 3:
        jobs = [(algebra.size, constraints, p) for p in _prefixes(3)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = [blocks for chunk in pool.map(_search_job, jobs) for blocks in chunk]
    else:
        found = _search(algebra.size, constraints, ())

    logger.info("found %d congruences on %d elements", len(found), algebra.size)
    return congruence_lattice((Congruence(b) for b in found), algebra, operations)
