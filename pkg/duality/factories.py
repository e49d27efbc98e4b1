import factory

from order.posets import build_poset

from .spaces import TmsSpace


def full_relation(n):
    return frozenset((x, y) for x in range(n) for y in range(n))


class TmsSpaceFactory(factory.Factory):
    """Defaults to the one-point space with full relations (the dual of B2)."""

    class Meta:
        model = TmsSpace

    poset = factory.LazyFunction(lambda: build_poset(1, []))
    g = (0,)
    rel_g = factory.LazyFunction(lambda: full_relation(1))
    rel_h = factory.LazyFunction(lambda: full_relation(1))
    m = 1
    labels = ()

    class Params:
        swap = factory.Trait(
            poset=factory.LazyFunction(lambda: build_poset(2, [])),
            g=(1, 0),
            rel_g=factory.LazyFunction(lambda: full_relation(2)),
            rel_h=factory.LazyFunction(lambda: full_relation(2)),
        )
        four_cycle = factory.Trait(
            poset=factory.LazyFunction(lambda: build_poset(4, [])),
            g=(1, 2, 3, 0),
            rel_g=factory.LazyFunction(lambda: full_relation(4)),
            rel_h=factory.LazyFunction(lambda: full_relation(4)),
            m=2,
        )
        chain_identity = factory.Trait(
            poset=factory.LazyFunction(lambda: build_poset(2, [(0, 1)])),
            g=(0, 1),
            rel_g=frozenset(),
            rel_h=frozenset(),
        )
