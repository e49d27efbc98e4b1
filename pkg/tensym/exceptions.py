"""
Exception hierarchy shared by every app of the workbench.

Validators report axiom failures as data; these exceptions are for inputs a
construction cannot work with at all.
"""


class TensymError(Exception):
    """Base class for every error raised by the workbench."""


class CycleError(TensymError):
    def __init__(self, first: int, second: int):
        self.witness = (first, second)
        super().__init__(f"order closure is not antisymmetric: {first} <= {second} <= {first}")


class NotBounded(TensymError):
    pass


class NotALattice(TensymError):
    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        self.witness = witness
        super().__init__(message)


class NotDistributive(TensymError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        x, y, z = witness
        super().__init__(f"distributivity fails at x={x}, y={y}, z={z}")


class ShapeError(TensymError):
    pass


class InvalidAlgebra(TensymError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"not a tense m-symmetric algebra: {report.summary()}")


class InvalidSpace(TensymError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"not a tms-space: {report.summary()}")


class NotAHomomorphism(TensymError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"not a homomorphism: {report.summary()}")


class NotACongruence(TensymError):
    def __init__(self, witness: tuple[int, int], operation: str):
        self.witness = witness
        self.operation = operation
        super().__init__(f"partition is not compatible with {operation} at pair {witness}")


class NotATmsSubset(TensymError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"not a tms-subset: {reason}")


class SizeGuard(TensymError):
    def __init__(self, what: str, actual: int, limit: int):
        self.actual = actual
        self.limit = limit
        super().__init__(f"{what} has size {actual}, above the guard of {limit}")


class ParseError(TensymError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SemanticError(TensymError):
    pass


class NotATmsFunction(TensymError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"not a tms-function: {report.summary()}")
