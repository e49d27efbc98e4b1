from dataclasses import dataclass
from typing import Callable, Sequence


def normalize(labels: Sequence) -> tuple[int, ...]:
    """Relabel blocks by first occurrence (restricted growth string form)."""
    seen: dict = {}
    return tuple(seen.setdefault(label, len(seen)) for label in labels)


@dataclass(frozen=True)
class Congruence:
    """
    Partition of range(size) as a block-index array in restricted growth form:
    blocks[0] == 0 and each new block index is one more than the largest before it.
    """
    blocks: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Congruence":
        return cls(normalize(labels))

    @classmethod
    def from_key(cls, size: int, key: Callable[[int], object]) -> "Congruence":
        return cls(normalize([key(x) for x in range(size)]))

    @classmethod
    def identity(cls, size: int) -> "Congruence":
        return cls(tuple(range(size)))

    @classmethod
    def total(cls, size: int) -> "Congruence":
        return cls((0,) * size)

    @property
    def size(self) -> int:
        return len(self.blocks)

    @property
    def num_blocks(self) -> int:
        return max(self.blocks, default=-1) + 1

    def related(self, a: int, b: int) -> bool:
        return self.blocks[a] == self.blocks[b]

    def classes(self) -> tuple[tuple[int, ...], ...]:
        grouped: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.blocks):
            grouped[b].append(x)
        return tuple(map(tuple, grouped))

    def refines(self, other: "Congruence") -> bool:
        """self is contained in other as a relation."""
        image: dict[int, int] = {}
        return all(image.setdefault(b, o) == o for b, o in zip(self.blocks, other.blocks))

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence.from_labels(list(zip(self.blocks, other.blocks)))

    def join(self, other: "Congruence") -> "Congruence":
        """Transitive closure of the union of the two relations."""
        parent = list(range(self.size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for partition in (self, other):
            first: dict[int, int] = {}
            for x, b in enumerate(partition.blocks):
                y = first.setdefault(b, x)
                parent[find(x)] = find(y)
        return Congruence.from_labels([find(x) for x in range(self.size)])

    def sort_key(self) -> tuple:
        return -self.num_blocks, self.blocks
