from dataclasses import fields

import factory

from . import samples
from .structures import TmsAlgebra


def sample_fields(build) -> dict:
    """Field values of a hand-listed algebra, usable as factory declarations."""
    algebra = build()
    return {f.name: getattr(algebra, f.name) for f in fields(algebra)}


_B2 = sample_fields(samples.two_element)


class TmsAlgebraFactory(factory.Factory):
    """Defaults to B2; traits switch to the other hand-listed algebras."""

    class Meta:
        model = TmsAlgebra

    lattice = _B2["lattice"]
    negation = _B2["negation"]
    future = _B2["future"]
    past = _B2["past"]
    m = _B2["m"]
    labels = _B2["labels"]

    class Params:
        kleene = factory.Trait(**sample_fields(samples.kleene_three))
        square = factory.Trait(**sample_fields(samples.de_morgan_four))
        trivial = factory.Trait(**sample_fields(samples.one_element))
        without_t3 = factory.Trait(**sample_fields(samples.two_element_without_t3))
