"""
The two constructions relating algebras and spaces, the unit and counit
isomorphisms sigma and epsilon, and the action of both constructions on maps.
"""
import logging
from itertools import product
from typing import Sequence

from algebras.axioms import validate_tms_algebra
from algebras.homomorphisms import check_homomorphism
from algebras.structures import TmsAlgebra
from order.filters import PrimeFilters, prime_filters
from order.lattices import Lattice
from order.posets import upset_family
from tensym.exceptions import (
    InvalidAlgebra,
    InvalidSpace,
    NotAHomomorphism,
    NotATmsFunction,
    ShapeError,
)
from tensym.reports import Check, Report, first_failure

from .maps import StructureMap
from .spaces import TmsSpace, validate_tms_space

logger = logging.getLogger(__name__)


def _require_algebra(algebra: TmsAlgebra) -> None:
    report = validate_tms_algebra(algebra)
    if not report.passed:
        raise InvalidAlgebra(report)


def _require_space(space: TmsSpace) -> None:
    report = validate_tms_space(space)
    if not report.passed:
        raise InvalidSpace(report)


def _preimage(table: Sequence[int], mask: int) -> int:
    return sum(1 << a for a, value in enumerate(table) if mask >> value & 1)


def dual_space_with_filters(algebra: TmsAlgebra) -> tuple[TmsSpace, PrimeFilters]:
    """
    Prime filters ordered by inclusion, with
      g_N(P) = {a : N(a) not in P}
      R_T = {(P, F) : T^-1(F) contained in P} for T = G, H.
    Point i of the space is the i-th prime filter in canonical order.
    """
    _require_algebra(algebra)
    family = prime_filters(algebra.lattice)
    filters = family.filters
    index = {mask: i for i, mask in enumerate(filters)}
    full = algebra.lattice.poset.full

    g = tuple(index[full & ~_preimage(algebra.negation, p)] for p in filters)
    relations = []
    for table in (algebra.future, algebra.past):
        pulled = [_preimage(table, f) for f in filters]
        relations.append(frozenset(
            (i, j)
            for i, p in enumerate(filters)
            for j in range(len(filters))
            if pulled[j] & ~p == 0
        ))
    space = TmsSpace(
        poset=family.order,
        g=g,
        rel_g=relations[0],
        rel_h=relations[1],
        m=algebra.m,
        labels=tuple(f"p{i}" for i in range(len(filters))),
    )
    logger.debug("dual space of %d elements has %d points", algebra.size, space.size)
    return space, family


def dual_space(algebra: TmsAlgebra) -> TmsSpace:
    return dual_space_with_filters(algebra)[0]


def complex_algebra_with_upsets(space: TmsSpace) -> tuple[TmsAlgebra, list[int]]:
    """
    Up-sets of the space under intersection and union, with
      N_g(U) = X minus g^-1(U)
      G(U) = {y : R_G^-1(y) contained in U}, H likewise with R_H.
    Element i of the algebra is the i-th up-set in canonical order.
    """
    _require_space(space)
    upsets = upset_family(space.poset)
    index = {mask: i for i, mask in enumerate(upsets)}
    algebra = TmsAlgebra(
        lattice=Lattice.of_sets(upsets),
        negation=tuple(index[space.negation(u)] for u in upsets),
        future=tuple(index[space.necessity("RG", u)] for u in upsets),
        past=tuple(index[space.necessity("RH", u)] for u in upsets),
        m=space.m,
        labels=tuple(f"u{i}" for i in range(len(upsets))),
    )
    return algebra, upsets


def complex_algebra(space: TmsSpace) -> TmsAlgebra:
    return complex_algebra_with_upsets(space)[0]


def sigma_iso(algebra: TmsAlgebra) -> tuple[StructureMap, Report]:
    """sigma(a) = {P : a in P}, from the algebra onto the up-sets of its dual space."""
    space, family = dual_space_with_filters(algebra)
    target, upsets = complex_algebra_with_upsets(space)
    index = {mask: i for i, mask in enumerate(upsets)}
    sigma = StructureMap(tuple(index[family.containing(a)] for a in algebra.elements), "algebra")

    checks = [Check("bijective", sigma.is_bijective_onto(target.size))]
    checks.extend(check_homomorphism(sigma.mapping, algebra, target).checks)
    return sigma, Report("sigma", tuple(checks))


def epsilon_iso(space: TmsSpace) -> tuple[StructureMap, Report]:
    """epsilon(x) = {U : x in U}, from the space onto the prime filters of its complex algebra."""
    algebra, upsets = complex_algebra_with_upsets(space)
    target, family = dual_space_with_filters(algebra)
    index = {mask: i for i, mask in enumerate(family.filters)}
    images = [
        index.get(sum(1 << i for i, u in enumerate(upsets) if u >> x & 1), -1)
        for x in space.elements
    ]
    epsilon = StructureMap(tuple(images), "space")
    bijective = Check("bijective", epsilon.is_bijective_onto(target.size))
    if not bijective.passed:
        return epsilon, Report("epsilon", (bijective,))

    e = epsilon.mapping
    pairs = list(product(space.elements, repeat=2))
    checks = [
        bijective,
        first_failure("order-preserving", pairs, lambda x, y: not space.poset.leq(x, y) or target.poset.leq(e[x], e[y])),
        first_failure("order-reflecting", pairs, lambda x, y: not target.poset.leq(e[x], e[y]) or space.poset.leq(x, y)),
        first_failure("g-commutes", ((x,) for x in space.elements), lambda x: e[space.g[x]] == target.g[e[x]]),
    ]
    for name in ("RG", "RH"):
        ours, theirs = space.relation(name), target.relation(name)
        checks.append(first_failure(f"{name}-preserved", pairs, lambda x, y: (x, y) not in ours or (e[x], e[y]) in theirs))
        checks.append(first_failure(f"{name}-reflected", pairs, lambda x, y: (e[x], e[y]) not in theirs or (x, y) in ours))
    return epsilon, Report("epsilon", tuple(checks))


def dual_function(h: Sequence[int], source: TmsAlgebra, target: TmsAlgebra) -> StructureMap:
    """Phi(h)(F) = h^-1(F), from the dual of the target to the dual of the source."""
    report = check_homomorphism(h, source, target)
    if not report.passed:
        raise NotAHomomorphism(report)
    source_filters = prime_filters(source.lattice)
    target_filters = prime_filters(target.lattice)
    index = {mask: i for i, mask in enumerate(source_filters.filters)}
    return StructureMap(tuple(index[_preimage(h, f)] for f in target_filters.filters), "space")


def check_tms_function(f: Sequence[int], source: TmsSpace, target: TmsSpace) -> Report:
    """Monotone, commutes with g, and satisfies (r1)-(r4) for both relations."""
    if len(f) != source.size or any(not 0 <= v < target.size for v in f):
        raise ShapeError(f"map is not total from {source.size} to {target.size} points")

    pairs = list(product(source.elements, repeat=2))
    checks = [
        first_failure("monotone", pairs, lambda x, y: not source.poset.leq(x, y) or target.poset.leq(f[x], f[y])),
        first_failure("g-equivariant", ((x,) for x in source.elements), lambda x: f[source.g[x]] == target.g[f[x]]),
    ]
    for forward, backward, name in (("r1", "r2", "RG"), ("r3", "r4", "RH")):
        ours, theirs = source.relation(name), target.relation(name)
        checks.append(first_failure(forward, sorted(ours), lambda x, y: (f[x], f[y]) in theirs))
        lifts = [(y, z) for y in target.elements for z in source.elements if (y, f[z]) in theirs]
        checks.append(first_failure(
            backward,
            lifts,
            lambda y, z: any((x, z) in ours and target.poset.leq(f[x], y) for x in source.elements),
        ))
    return Report("tms-function", tuple(checks))


def complex_function(f: Sequence[int], source: TmsSpace, target: TmsSpace) -> StructureMap:
    """Psi(f)(U) = f^-1(U), from the complex algebra of the target to that of the source."""
    report = check_tms_function(f, source, target)
    if not report.passed:
        raise NotATmsFunction(report)
    source_upsets = upset_family(source.poset)
    index = {mask: i for i, mask in enumerate(source_upsets)}
    return StructureMap(
        tuple(index[_preimage(f, u)] for u in upset_family(target.poset)),
        "algebra",
    )


def check_naturality(h: Sequence[int], source: TmsAlgebra, target: TmsAlgebra) -> Report:
    """sigma_target(h(a)) equals Phi(h)^-1(sigma_source(a)) for every a."""
    phi = dual_function(h, source, target)
    source_filters = prime_filters(source.lattice)
    target_filters = prime_filters(target.lattice)
    check = first_failure(
        "naturality",
        ((a,) for a in source.elements),
        lambda a: target_filters.containing(h[a]) == _preimage(phi.mapping, source_filters.containing(a)),
    )
    return Report("naturality", (check,))
