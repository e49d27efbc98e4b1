import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from django.conf import settings

from algebras.samples import HAND_LISTED
from algebras.structures import TmsAlgebra
from duality.constructions import complex_algebra
from duality.spaces import TmsSpace
from order.posets import Poset
from tensym.exceptions import SizeGuard

from .posets import enumerate_posets
from .spaces import enumerate_spaces

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    space: TmsSpace
    algebra: TmsAlgebra
    poset_id: int
    decoration_id: int
    m: int

    @property
    def name(self) -> str:
        return f"P{self.poset_id}-D{self.decoration_id}-m{self.m}"


@dataclass(frozen=True)
class Corpus:
    entries: tuple[CorpusEntry, ...]
    hand_listed: dict[str, TmsAlgebra] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def algebras(self) -> list[TmsAlgebra]:
        return [entry.algebra for entry in self.entries]


def _decorate(job: tuple[int, Poset, int, int]) -> list[CorpusEntry]:
    poset_id, poset, m, guard = job
    return [
        CorpusEntry(space, complex_algebra(space), poset_id, decoration_id, m)
        for decoration_id, space in enumerate(enumerate_spaces(poset, m, guard))
    ]


def build_corpus(n_max: int, ms: Iterable[int], workers: int | None = None) -> Corpus:
    """
    Every tms-space on every poset of size 1..n_max for each degree in ms,
    paired with its complex algebra, plus the hand-listed algebras.
    Entries are ordered by poset, then degree, then decoration.
    """
    workers = workers if workers is not None else settings.TENSYM_WORKERS
    guard = settings.TENSYM_DECORATION_GUARD
    if n_max > guard:
        logger.warning("corpus refused: posets up to %d, decoration guard %d", n_max, guard)
        raise SizeGuard("decorated poset", n_max, guard)
    posets = enumerate_posets(n_max)
    jobs = [(poset_id, poset, m, guard) for poset_id, poset in enumerate(posets) for m in sorted(set(ms))]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_decorate, jobs))
    else:
        chunks = [_decorate(job) for job in jobs]

    entries = tuple(entry for chunk in chunks for entry in chunk)
    logger.info("corpus of %d spaces from %d posets", len(entries), len(posets))
    return Corpus(entries, {name: build() for name, build in HAND_LISTED.items()})
