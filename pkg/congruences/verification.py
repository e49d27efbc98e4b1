"""
Exhaustive checks that the dual route through tms-subsets and the direct
partition search produce the same congruences, order-reversed.
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from algebras.homomorphisms import LATTICE_OPERATIONS, compatibility_failure, quotient
from algebras.partitions import Congruence
from algebras.structures import TmsAlgebra
from duality.constructions import dual_space_with_filters
from order.filters import prime_filters
from tensym.exceptions import SizeGuard
from tensym.reports import Check, Report, first_failure

from .bruteforce import congruences_bruteforce
from .lattice import CongruenceLattice
from .subsets import TmsSubset, all_subsets, is_tms_subset, theta, tms_subsets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AntiIsomorphism:
    subsets: tuple[TmsSubset, ...]
    images: tuple[Congruence, ...]
    oracle: CongruenceLattice
    report: Report

    @property
    def passed(self) -> bool:
        return self.report.passed

    def summary(self) -> str:
        verdict = "anti-isomorphism verified" if self.passed else "anti-isomorphism FAILED"
        return f"{self.oracle.size} congruences ↔ {len(self.subsets)} tms-subsets, {verdict}"


def _guard_algebra(algebra: TmsAlgebra, guard: int | None) -> int:
    guard = guard if guard is not None else settings.TENSYM_GUARD
    if algebra.size > guard:
        raise SizeGuard("algebra", algebra.size, guard)
    return guard


def _injective(name: str, images: list[Congruence]) -> Check:
    seen: dict[Congruence, int] = {}
    for i, image in enumerate(images):
        if image in seen:
            return Check(name, False, (seen[image], i))
        seen[image] = i
    return Check(name, True)


def _same_set(name: str, images: list[Congruence], oracle: CongruenceLattice) -> Check:
    expected = set(oracle.congruences)
    for i, image in enumerate(images):
        if image not in expected:
            return Check(name, False, (i,), "image of this subset is not a congruence")
    produced = set(images)
    for j, congruence in enumerate(oracle.congruences):
        if congruence not in produced:
            return Check(name, False, (j,), "congruence missing from the image")
    return Check(name, True)


def _order_checks(masks: list[int], images: list[Congruence]) -> tuple[Check, Check]:
    pairs = [(i, j) for i in range(len(masks)) for j in range(len(masks))]
    return (
        first_failure("order-reversing", pairs,
                      lambda i, j: masks[i] & ~masks[j] != 0 or images[j].refines(images[i])),
        first_failure("order-reflecting", pairs,
                      lambda i, j: not images[j].refines(images[i]) or masks[i] & ~masks[j] == 0),
    )


def _reconstruction(algebra: TmsAlgebra, oracle: CongruenceLattice, space, family) -> Check:
    """Each congruence comes back from the preimages of the prime filters of its quotient."""
    for index, congruence in enumerate(oracle.congruences):
        quotient_algebra, q = quotient(algebra, congruence)
        mask = 0
        for f in prime_filters(quotient_algebra.lattice).filters:
            preimage = sum(1 << a for a in algebra.elements if f >> q[a] & 1)
            mask |= 1 << family.index(preimage)
        if not is_tms_subset(space, mask):
            return Check("reconstruction", False, (index,), "preimage set is not a tms-subset")
        if theta(algebra, family, mask) != congruence:
            return Check("reconstruction", False, (index,), "Theta of the preimage set differs")
    return Check("reconstruction", True)


def verify_anti_isomorphism(
    algebra: TmsAlgebra,
    guard: int | None = None,
    space_guard: int | None = None,
) -> AntiIsomorphism:
    """
    Compare Y -> Theta(Y) on the tms-subsets of the dual space with the
    partition search: injective, same image, order reversed both ways,
    every image compatible, and each congruence recovered from its quotient.
    """
    guard = _guard_algebra(algebra, guard)
    space, family = dual_space_with_filters(algebra)
    subsets = tms_subsets(space, space_guard)
    masks = [s.mask for s in subsets]
    images = [theta(algebra, family, mask) for mask in masks]
    oracle = congruences_bruteforce(algebra, guard)

    checks = [
        _injective("injective", images),
        _same_set("image-equals-oracle", images, oracle),
        *_order_checks(masks, images),
        first_failure("compatible", [(i,) for i in range(len(images))],
                      lambda i: compatibility_failure(algebra, images[i].blocks) is None),
        _reconstruction(algebra, oracle, space, family),
    ]
    report = Report("anti-isomorphism", tuple(checks))
    logger.info("anti-isomorphism on %d elements: %s", algebra.size, "pass" if report.passed else "fail")
    return AntiIsomorphism(tuple(subsets), tuple(images), oracle, report)


def verify_lattice_reduct(
    algebra: TmsAlgebra,
    guard: int | None = None,
    space_guard: int | None = None,
) -> Report:
    """Theta over every subset of the dual carrier against the congruences of the bare lattice."""
    guard = _guard_algebra(algebra, guard)
    space, family = dual_space_with_filters(algebra)
    masks = all_subsets(space, space_guard)
    images = [theta(algebra, family, mask) for mask in masks]
    oracle = congruences_bruteforce(algebra, guard, operations=LATTICE_OPERATIONS)
    checks = [
        _injective("injective", images),
        _same_set("image-equals-oracle", images, oracle),
        *_order_checks(masks, images),
    ]
    return Report("lattice-reduct", tuple(checks))
