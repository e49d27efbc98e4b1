"""Small hand-listed algebras used for negative paths and as fixed reference points."""
from order.lattices import lattice_from_poset
from order.posets import build_poset

from .structures import TmsAlgebra


def two_element() -> TmsAlgebra:
    """B2: the 2-chain with N swapping the bounds and G = H = id."""
    return TmsAlgebra(
        lattice=lattice_from_poset(build_poset(2, [(0, 1)])),
        negation=(1, 0),
        future=(0, 1),
        past=(0, 1),
        m=1,
        labels=("0", "1"),
    )


def kleene_three() -> TmsAlgebra:
    """K3: the 3-chain 0 < c < 1 with N fixing c."""
    return TmsAlgebra(
        lattice=lattice_from_poset(build_poset(3, [(0, 1), (1, 2)])),
        negation=(2, 1, 0),
        future=(0, 1, 2),
        past=(0, 1, 2),
        m=1,
        labels=("0", "c", "1"),
    )


def de_morgan_four() -> TmsAlgebra:
    """DM4: the square 0 < a, b < 1 with N fixing a and b."""
    return TmsAlgebra(
        lattice=lattice_from_poset(build_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])),
        negation=(3, 1, 2, 0),
        future=(0, 1, 2, 3),
        past=(0, 1, 2, 3),
        m=1,
        labels=("0", "a", "b", "1"),
    )


def one_element() -> TmsAlgebra:
    """The degenerate algebra: a single element that is both bounds."""
    return TmsAlgebra(
        lattice=lattice_from_poset(build_poset(1, [])),
        negation=(0,),
        future=(0,),
        past=(0,),
        m=1,
        labels=("0",),
    )


def two_element_without_t3() -> TmsAlgebra:
    """B2 with G constantly 1 and H = id; the second half of T3 fails at x = 1."""
    return TmsAlgebra(
        lattice=lattice_from_poset(build_poset(2, [(0, 1)])),
        negation=(1, 0),
        future=(1, 1),
        past=(0, 1),
        m=1,
        labels=("0", "1"),
    )


HAND_LISTED = {
    "B2": two_element,
    "K3": kleene_three,
    "DM4": de_morgan_four,
    "B2-no-T3": two_element_without_t3,
}
