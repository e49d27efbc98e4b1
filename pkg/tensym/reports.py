from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence


@dataclass(frozen=True)
class Check:
    """Outcome of one named condition; a failure carries the first failing tuple."""
    name: str
    passed: bool
    witness: tuple[int, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class Report:
    subject: str
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def summary(self) -> str:
        failed = self.failures()
        if not failed:
            return f"{self.subject}: all {len(self.checks)} checks pass"
        names = ", ".join(f"{c.name} at {c.witness}" for c in failed)
        return f"{self.subject}: failed {names}"


def first_failure(
    name: str,
    candidates: Iterable[Sequence[int]],
    holds: Callable[..., bool],
    detail: str = "",
) -> Check:
    """Run holds(*tuple) over candidates in order and keep the first counterexample."""
    for candidate in candidates:
        if not holds(*candidate):
            return Check(name, False, tuple(candidate), detail)
    return Check(name, True)
