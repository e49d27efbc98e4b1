"""
Finite tms-spaces: a poset with an order-reversing map g and two binary
relations R_G, R_H. Every subset of a finite discrete carrier is closed, so
the closedness conditions on relations hold automatically and are not checked.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from order.posets import Poset, members, upset_family
from tensym.exceptions import ShapeError
from tensym.reports import Check, Report, first_failure

logger = logging.getLogger(__name__)

RELATIONS = ("RG", "RH")


@dataclass(frozen=True)
class TmsSpace:
    poset: Poset
    g: tuple[int, ...]
    rel_g: frozenset[tuple[int, int]]
    rel_h: frozenset[tuple[int, int]]
    m: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.poset.size
        if len(self.g) != n or any(not 0 <= v < n for v in self.g):
            raise ShapeError(f"g is not a total map on {n} points")
        for name, relation in zip(RELATIONS, (self.rel_g, self.rel_h)):
            if any(not (0 <= x < n and 0 <= y < n) for x, y in relation):
                raise ShapeError(f"{name} mentions a point outside the carrier")
        if self.m < 1:
            raise ShapeError("symmetry degree m must be positive")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        elif len(self.labels) != n:
            raise ShapeError("one label per point is required")

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def elements(self) -> range:
        return self.poset.elements

    @property
    def full(self) -> int:
        return self.poset.full

    def relation(self, name: str) -> frozenset[tuple[int, int]]:
        return {"RG": self.rel_g, "RH": self.rel_h}[name]

    @cached_property
    def _predecessors(self) -> dict[str, tuple[int, ...]]:
        result = {}
        for name in RELATIONS:
            pred = [0] * self.size
            for x, y in self.relation(name):
                pred[y] |= 1 << x
            result[name] = tuple(pred)
        return result

    def predecessors(self, name: str) -> tuple[int, ...]:
        """R^-1(y) = {x : (x, y) in R} as a mask, for every y."""
        return self._predecessors[name]

    def g_power(self, x: int, k: int) -> int:
        for _ in range(k):
            x = self.g[x]
        return x

    def g_preimage(self, mask: int) -> int:
        return sum(1 << x for x in self.elements if mask >> self.g[x] & 1)

    def g_image(self, mask: int, k: int = 1) -> int:
        return sum(1 << self.g_power(x, k) for x in members(mask))

    def negation(self, upset: int) -> int:
        """N_g(U) = X minus g^-1(U)."""
        return self.full & ~self.g_preimage(upset)

    def necessity(self, name: str, upset: int) -> int:
        """{y : R^-1(y) is contained in U} for R = R_G or R_H."""
        pred = self.predecessors(name)
        return sum(1 << y for y in self.elements if pred[y] & ~upset == 0)


def _monotone(space: TmsSpace, name: str) -> Check:
    # x <= x', y' <= y and (x, y) in R give (x', y') in R
    poset = space.poset
    pred = space.predecessors(name)
    for x, y in sorted(space.relation(name)):
        for y2 in members(poset.below[y]):
            missing = poset.above[x] & ~pred[y2]
            if missing:
                x2 = (missing & -missing).bit_length() - 1
                return Check(f"monotone({name})", False, (x, y, x2, y2))
    return Check(f"monotone({name})", True)


def _necessity_preserves_upsets(space: TmsSpace, name: str, upsets: list[int]) -> Check:
    label = f"R2({name[1]})"
    for upset in upsets:
        image = space.necessity(name, upset)
        if not space.poset.is_upset(image):
            return Check(label, False, tuple(members(upset)), f"image of U={sorted(members(upset))} is not an up-set")
    return Check(label, True)


def validate_tms_space(space: TmsSpace, upsets: list[int] | None = None) -> Report:
    """
    Every space condition with its first witness. Callers validating many
    decorations of one poset may pass its up-set family to share it.
    """
    s = space
    poset = s.poset
    comparable = [(x, y) for x, y in product(s.elements, repeat=2) if poset.leq(x, y)]
    if upsets is None:
        upsets = upset_family(poset)

    checks = (
        first_failure("g-order-reversing", comparable, lambda x, y: poset.leq(s.g[y], s.g[x])),
        first_failure("S1", ((x,) for x in s.elements), lambda x: s.g_power(x, 2 * s.m) == x),
        first_failure("S2", sorted(s.rel_g), lambda x, y: (s.g[y], s.g[x]) in s.rel_h),
        first_failure("S3", sorted(s.rel_h), lambda x, y: (s.g[y], s.g[x]) in s.rel_g),
        _monotone(s, "RG"),
        _monotone(s, "RH"),
        _necessity_preserves_upsets(s, "RG", upsets),
        _necessity_preserves_upsets(s, "RH", upsets),
    )
    report = Report("tms-space", checks)
    for failed in report.failures():
        logger.info("space condition %s fails at %s", failed.name, failed.witness)
    return report
