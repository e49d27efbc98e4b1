from dataclasses import replace

from django.test import SimpleTestCase

from algebras.axioms import validate_tms_algebra
from algebras.factories import TmsAlgebraFactory
from algebras.homomorphisms import principal_congruence, quotient
from algebras.samples import HAND_LISTED
from duality.constructions import (
    check_naturality,
    check_tms_function,
    complex_algebra,
    complex_function,
    dual_function,
    dual_space,
    epsilon_iso,
    sigma_iso,
)
from duality.factories import TmsSpaceFactory
from duality.maps import StructureMap
from duality.spaces import validate_tms_space
from tensym.exceptions import InvalidAlgebra, InvalidSpace, NotAHomomorphism, NotATmsFunction


def valid_samples():
    return [build() for name, build in HAND_LISTED.items() if name != "B2-no-T3"]


class DualSpaceTests(SimpleTestCase):
    def test_two_element(self):
        space = dual_space(TmsAlgebraFactory())
        self.assertEqual(space.size, 1)
        self.assertEqual(space.g, (0,))
        self.assertEqual(space.rel_g, {(0, 0)})
        self.assertEqual(space.rel_h, {(0, 0)})

    def test_kleene_three(self):
        space = dual_space(TmsAlgebraFactory(kleene=True))
        self.assertEqual(space.size, 2)
        self.assertTrue(space.poset.leq(0, 1))
        self.assertEqual(space.g, (1, 0))
        self.assertEqual(space.rel_g, {(0, 0), (1, 1), (1, 0)})
        self.assertEqual(space.rel_h, space.rel_g)

    def test_de_morgan_four(self):
        space = dual_space(TmsAlgebraFactory(square=True))
        self.assertFalse(space.poset.comparable(0, 1))
        self.assertEqual(space.g, (1, 0))

    def test_degenerate_algebra_has_empty_dual(self):
        space = dual_space(TmsAlgebraFactory(trivial=True))
        self.assertEqual(space.size, 0)
        self.assertTrue(validate_tms_space(space).passed)

    def test_invalid_algebra_rejected(self):
        with self.assertRaises(InvalidAlgebra):
            dual_space(TmsAlgebraFactory(future=(1, 1)))

    def test_dual_spaces_are_valid(self):
        for algebra in valid_samples():
            space = dual_space(algebra)
            self.assertTrue(validate_tms_space(space).passed)
            # m = 1: g_N is an involution
            self.assertTrue(all(space.g[space.g[x]] == x for x in space.elements))


class ValidateSpaceTests(SimpleTestCase):
    def test_point_with_empty_relations(self):
        self.assertTrue(validate_tms_space(TmsSpaceFactory(rel_g=frozenset(), rel_h=frozenset())).passed)

    def test_antichain_swap_with_full_relations(self):
        self.assertTrue(validate_tms_space(TmsSpaceFactory(swap=True)).passed)

    def test_identity_on_chain_is_not_order_reversing(self):
        report = validate_tms_space(TmsSpaceFactory(chain_identity=True))
        self.assertEqual([c.name for c in report.failures()], ["g-order-reversing"])
        self.assertEqual(report.check("g-order-reversing").witness, (0, 1))
        self.assertTrue(report.check("S1").passed)

    def test_s2_coupling(self):
        report = validate_tms_space(TmsSpaceFactory(rel_h=frozenset()))
        self.assertEqual(report.check("S2").witness, (0, 0))
        self.assertTrue(report.check("S3").passed)

    def test_monotonicity_reported_separately(self):
        # K3 dual without the pair (1, 0)
        space = dual_space(TmsAlgebraFactory(kleene=True))
        broken = replace(space, rel_g=frozenset({(0, 0), (1, 1)}), rel_h=frozenset({(0, 0), (1, 1)}))
        report = validate_tms_space(broken)
        self.assertFalse(report.check("monotone(RG)").passed)
        self.assertEqual(report.check("monotone(RG)").witness, (0, 0, 1, 0))
        self.assertTrue(report.check("S2").passed)

    def test_four_cycle_needs_m2(self):
        self.assertTrue(validate_tms_space(TmsSpaceFactory(four_cycle=True)).passed)
        self.assertFalse(validate_tms_space(TmsSpaceFactory(four_cycle=True, m=1)).check("S1").passed)


class ComplexAlgebraTests(SimpleTestCase):
    def test_point_gives_two_element(self):
        algebra = complex_algebra(TmsSpaceFactory())
        b2 = TmsAlgebraFactory()
        self.assertEqual(algebra.lattice, b2.lattice)
        self.assertEqual((algebra.negation, algebra.future, algebra.past), ((1, 0), (0, 1), (0, 1)))

    def test_four_cycle_is_properly_two_symmetric(self):
        algebra = complex_algebra(TmsSpaceFactory(four_cycle=True))
        self.assertEqual(algebra.size, 16)
        self.assertTrue(any(algebra.neg_power(x, 2) != x for x in algebra.elements))
        self.assertTrue(all(algebra.neg_power(x, 4) == x for x in algebra.elements))
        self.assertEqual(algebra.future, (0,) * 15 + (15,))
        self.assertTrue(validate_tms_algebra(algebra).passed)
        self.assertFalse(validate_tms_algebra(replace(algebra, m=1)).passed)

    def test_empty_relations_give_constant_top(self):
        algebra = complex_algebra(TmsSpaceFactory(swap=True, rel_g=frozenset(), rel_h=frozenset()))
        self.assertEqual(algebra.size, 4)
        self.assertEqual(algebra.negation, (3, 1, 2, 0))
        self.assertEqual(algebra.future, (3, 3, 3, 3))
        self.assertEqual(algebra.past, (3, 3, 3, 3))

    def test_invalid_space_rejected(self):
        with self.assertRaises(InvalidSpace):
            complex_algebra(TmsSpaceFactory(chain_identity=True))

    def test_round_trip_sizes(self):
        for algebra in valid_samples():
            self.assertEqual(complex_algebra(dual_space(algebra)).size, algebra.size)


class SigmaEpsilonTests(SimpleTestCase):
    def test_sigma_two_element(self):
        sigma, report = sigma_iso(TmsAlgebraFactory())
        self.assertEqual(sigma.mapping, (0, 1))
        self.assertTrue(report.passed)

    def test_sigma_kleene_three(self):
        sigma, report = sigma_iso(TmsAlgebraFactory(kleene=True))
        self.assertEqual(sigma.mapping, (0, 1, 2))
        self.assertTrue(report.check("N").passed)
        self.assertTrue(report.passed)

    def test_sigma_samples(self):
        for algebra in valid_samples():
            self.assertTrue(sigma_iso(algebra)[1].passed)

    def test_epsilon_point(self):
        epsilon, report = epsilon_iso(TmsSpaceFactory())
        self.assertEqual(epsilon.mapping, (0,))
        self.assertTrue(report.passed)

    def test_epsilon_kleene_dual(self):
        space = dual_space(TmsAlgebraFactory(kleene=True))
        epsilon, report = epsilon_iso(space)
        self.assertTrue(report.passed)
        self.assertTrue(report.check("g-commutes").passed)

    def test_epsilon_four_cycle(self):
        self.assertTrue(epsilon_iso(TmsSpaceFactory(four_cycle=True))[1].passed)


class MorphismTests(SimpleTestCase):
    def setUp(self):
        self.b2 = TmsAlgebraFactory()
        self.k3 = TmsAlgebraFactory(kleene=True)
        self.dm4 = TmsAlgebraFactory(square=True)

    def test_identity_dualizes_to_identity(self):
        self.assertEqual(dual_function((0, 1), self.b2, self.b2).mapping, (0,))

    def test_inclusion_into_kleene(self):
        phi = dual_function((0, 2), self.b2, self.k3)
        self.assertEqual(phi.mapping, (0, 0))
        self.assertTrue(check_tms_function(phi.mapping, dual_space(self.k3), dual_space(self.b2)).passed)

    def test_non_homomorphism_rejected(self):
        with self.assertRaises(NotAHomomorphism):
            dual_function((0, 1, 1), self.k3, self.b2)

    def test_contravariance(self):
        h = StructureMap((0, 3), "algebra")
        k = StructureMap((0, 2, 1, 3), "algebra")
        composite = k.compose(h)
        phi_h = dual_function(h.mapping, self.b2, self.dm4)
        phi_k = dual_function(k.mapping, self.dm4, self.dm4)
        self.assertEqual(dual_function(composite.mapping, self.b2, self.dm4), phi_h.compose(phi_k))

    def test_identity_is_tms_function(self):
        for algebra in valid_samples():
            space = dual_space(algebra)
            identity = tuple(space.elements)
            self.assertTrue(check_tms_function(identity, space, space).passed)

    def test_swap_on_kleene_dual(self):
        space = dual_space(self.k3)
        report = check_tms_function((1, 0), space, space)
        self.assertTrue(report.check("g-equivariant").passed)
        self.assertFalse(report.check("monotone").passed)
        self.assertEqual(report.check("r1").witness, (1, 0))

    def test_quotient_map_dualizes_to_tms_function(self):
        boolean = TmsAlgebraFactory(square=True, negation=(3, 2, 1, 0))
        image, q = quotient(boolean, principal_congruence(boolean, 0, 1))
        phi = dual_function(q, boolean, image)
        self.assertTrue(check_tms_function(phi.mapping, dual_space(image), dual_space(boolean)).passed)

    def test_complex_function_of_identity(self):
        space = TmsSpaceFactory(swap=True)
        psi = complex_function((0, 1), space, space)
        self.assertEqual(psi.mapping, (0, 1, 2, 3))

    def test_complex_function_rejects_non_tms_function(self):
        space = dual_space(self.k3)
        with self.assertRaises(NotATmsFunction):
            complex_function((1, 0), space, space)

    def test_naturality(self):
        boolean = TmsAlgebraFactory(square=True, negation=(3, 2, 1, 0))
        image, q = quotient(boolean, principal_congruence(boolean, 0, 1))
        cases = [
            ((0, 1), self.b2, self.b2),
            ((0, 2), self.b2, self.k3),
            ((0, 3), self.b2, self.dm4),
            ((0, 2, 1, 3), self.dm4, self.dm4),
            (q, boolean, image),
        ]
        for h, source, target in cases:
            self.assertTrue(check_naturality(h, source, target).passed)

    def test_psi_of_phi_matches_sigma(self):
        phi = dual_function((0, 2), self.b2, self.k3)
        psi = complex_function(phi.mapping, dual_space(self.k3), dual_space(self.b2))
        sigma_b2, _ = sigma_iso(self.b2)
        sigma_k3, _ = sigma_iso(self.k3)
        h = (0, 2)
        for a in self.b2.elements:
            self.assertEqual(psi(sigma_b2(a)), sigma_k3(h[a]))
