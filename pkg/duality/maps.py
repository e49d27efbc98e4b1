from dataclasses import dataclass
from typing import Literal

Direction = Literal["algebra", "space"]


@dataclass(frozen=True)
class StructureMap:
    """A total map between two carriers, tagged with the kind of structure it relates."""
    mapping: tuple[int, ...]
    direction: Direction

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __len__(self) -> int:
        return len(self.mapping)

    def compose(self, first: "StructureMap") -> "StructureMap":
        """self after first."""
        if first.direction != self.direction:
            raise ValueError("cannot compose maps of different directions")
        return StructureMap(tuple(self.mapping[y] for y in first.mapping), self.direction)

    def is_bijective_onto(self, size: int) -> bool:
        return sorted(self.mapping) == list(range(size))
