"""
Exhaustive axiom checks for tense m-symmetric algebras and the subvariety
tests for De Morgan, Kleene and Boolean reducts.
"""
import logging
import math
from dataclasses import dataclass
from itertools import product

from tensym.exceptions import InvalidAlgebra
from tensym.reports import Check, Report, first_failure

from .structures import TmsAlgebra

logger = logging.getLogger(__name__)

AXIOMS = (
    "O1", "O2", "O3", "O4", "m-symmetry",
    "T1(G)", "T1(H)", "T2(G)", "T2(H)", "T3(G)", "T3(H)",
)


def validate_tms_algebra(algebra: TmsAlgebra) -> Report:
    """
    Check every axiom over all elements and pairs. The T3 check reads
    x <= G(N(H(N^(2m-1)(x)))) and x <= H(N(G(N^(2m-1)(x)))).
    """
    a = algebra
    N, G, H = a.negation, a.future, a.past
    singles = [(x,) for x in a.elements]
    pairs = list(product(a.elements, repeat=2))
    odd = 2 * a.m - 1

    checks = (
        Check("O1", N[a.bottom] == a.top, () if N[a.bottom] == a.top else (a.bottom,)),
        Check("O2", N[a.top] == a.bottom, () if N[a.top] == a.bottom else (a.top,)),
        first_failure("O3", pairs, lambda x, y: N[a.meet(x, y)] == a.join(N[x], N[y])),
        first_failure("O4", pairs, lambda x, y: N[a.join(x, y)] == a.meet(N[x], N[y])),
        first_failure("m-symmetry", singles, lambda x: a.neg_power(x, 2 * a.m) == x),
        Check("T1(G)", G[a.top] == a.top, () if G[a.top] == a.top else (a.top,)),
        Check("T1(H)", H[a.top] == a.top, () if H[a.top] == a.top else (a.top,)),
        first_failure("T2(G)", pairs, lambda x, y: G[a.meet(x, y)] == a.meet(G[x], G[y])),
        first_failure("T2(H)", pairs, lambda x, y: H[a.meet(x, y)] == a.meet(H[x], H[y])),
        first_failure("T3(G)", singles, lambda x: a.leq(x, G[N[H[a.neg_power(x, odd)]]])),
        first_failure("T3(H)", singles, lambda x: a.leq(x, H[N[G[a.neg_power(x, odd)]]])),
    )
    report = Report("tms-algebra", checks)
    for failed in report.failures():
        logger.info("axiom %s fails at %s", failed.name, failed.witness)
    return report


def minimal_symmetry_degree(algebra: TmsAlgebra) -> int | None:
    """Least k >= 1 with N^(2k) = id, or None when N is not a bijection."""
    N = algebra.negation
    if len(set(N)) != algebra.size:
        return None
    order = 1
    seen = set()
    for start in algebra.elements:
        if start in seen:
            continue
        length, x = 0, start
        while True:
            seen.add(x)
            x = N[x]
            length += 1
            if x == start:
                break
        order = math.lcm(order, length)
    return math.lcm(order, 2) // 2


@dataclass(frozen=True)
class Subvarieties:
    de_morgan: bool
    kleene: bool
    boolean: bool
    tense_algebra: bool
    kleene_witness: tuple[int, ...] = ()
    boolean_witness: tuple[int, ...] = ()


def classify(algebra: TmsAlgebra) -> Subvarieties:
    """
    Subvariety flags of a valid algebra. A tense algebra is a 1-symmetric
    algebra whose negation is a Boolean complement.
    """
    report = validate_tms_algebra(algebra)
    if not report.passed:
        raise InvalidAlgebra(report)

    a = algebra
    N = a.negation
    de_morgan = all(N[N[x]] == x for x in a.elements)
    kleene = first_failure(
        "kleene",
        product(a.elements, repeat=2),
        lambda x, y: a.join(a.meet(x, N[x]), a.join(y, N[y])) == a.join(y, N[y]),
    )
    boolean = first_failure("boolean", ((x,) for x in a.elements), lambda x: a.meet(x, N[x]) == a.bottom)
    return Subvarieties(
        de_morgan=de_morgan,
        kleene=de_morgan and kleene.passed,
        boolean=de_morgan and boolean.passed,
        tense_algebra=a.m == 1 and de_morgan and boolean.passed,
        kleene_witness=kleene.witness,
        boolean_witness=boolean.witness,
    )
