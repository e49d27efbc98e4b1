from dataclasses import dataclass

from order.lattices import Lattice
from tensym.exceptions import ShapeError

OPERATIONS = ("N", "G", "H")


@dataclass(frozen=True)
class TmsAlgebra:
    """
    Finite lattice with unary tables N (negation), G (future necessity) and
    H (past necessity), and a stored symmetry degree m.
    Tables only have to be total here; validate_tms_algebra checks the axioms.
    """
    lattice: Lattice
    negation: tuple[int, ...]
    future: tuple[int, ...]
    past: tuple[int, ...]
    m: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.lattice.size
        for name, table in zip(OPERATIONS, (self.negation, self.future, self.past)):
            if len(table) != n or any(not 0 <= v < n for v in table):
                raise ShapeError(f"{name} is not a total map on {n} elements")
        if self.m < 1:
            raise ShapeError("symmetry degree m must be positive")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        elif len(self.labels) != n:
            raise ShapeError("one label per element is required")

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def elements(self) -> range:
        return self.lattice.elements

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    def meet(self, a: int, b: int) -> int:
        return self.lattice.meet(a, b)

    def join(self, a: int, b: int) -> int:
        return self.lattice.join(a, b)

    def leq(self, a: int, b: int) -> bool:
        return self.lattice.leq(a, b)

    def operation(self, name: str) -> tuple[int, ...]:
        return {"N": self.negation, "G": self.future, "H": self.past}[name]

    def neg_power(self, x: int, k: int) -> int:
        for _ in range(k):
            x = self.negation[x]
        return x
