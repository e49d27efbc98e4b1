from django.test import SimpleTestCase, override_settings

from algebras.factories import TmsAlgebraFactory
from algebras.homomorphisms import LATTICE_OPERATIONS, is_compatible, principal_congruence
from algebras.partitions import Congruence
from congruences.bruteforce import congruences_bruteforce
from congruences.lattice import congruence_lattice
from congruences.subsets import TmsSubset, is_tms_subset, theta_of_subset, tms_subsets
from congruences.verification import verify_anti_isomorphism, verify_lattice_reduct
from duality.constructions import complex_algebra, dual_space
from duality.factories import TmsSpaceFactory
from enumeration.corpus import build_corpus
from order.posets import build_poset
from tensym.exceptions import NotACongruence, NotALattice, NotATmsSubset, SizeGuard


def sixteen_element():
    """Complex algebra of the 4-antichain with a 4-cycle g and full relations, m = 2."""
    return complex_algebra(TmsSpaceFactory(four_cycle=True))


class BruteforceTests(SimpleTestCase):
    def test_two_element(self):
        lattice = congruences_bruteforce(TmsAlgebraFactory())
        self.assertEqual([c.blocks for c in lattice], [(0, 1), (0, 0)])

    def test_kleene_three_has_only_trivial_congruences(self):
        lattice = congruences_bruteforce(TmsAlgebraFactory(kleene=True))
        self.assertEqual(lattice.congruences, (Congruence.identity(3), Congruence.total(3)))

    def test_degenerate_algebra(self):
        lattice = congruences_bruteforce(TmsAlgebraFactory(trivial=True))
        self.assertEqual(lattice.size, 1)
        self.assertEqual(lattice.congruences[0].blocks, (0,))

    def test_negation_cuts_square_congruences(self):
        square = TmsAlgebraFactory(square=True)
        self.assertEqual(congruences_bruteforce(square).size, 2)
        reduct = congruences_bruteforce(square, operations=LATTICE_OPERATIONS)
        self.assertEqual(
            [c.blocks for c in reduct],
            [(0, 1, 2, 3), (0, 0, 1, 1), (0, 1, 0, 1), (0, 0, 0, 0)],
        )
        self.assertTrue(reduct.order.leq(1, 3))
        self.assertFalse(reduct.order.comparable(1, 2))
        self.assertEqual(reduct.meet_table[1][2], 0)
        self.assertEqual(reduct.join_table[1][2], 3)

    def test_every_congruence_is_compatible(self):
        square = TmsAlgebraFactory(square=True)
        for congruence in congruences_bruteforce(square, operations=LATTICE_OPERATIONS):
            self.assertTrue(is_compatible(square, congruence, LATTICE_OPERATIONS))

    def test_principal_congruences_generate_everything(self):
        for algebra in (TmsAlgebraFactory(square=True), TmsAlgebraFactory(kleene=True)):
            for operations in (LATTICE_OPERATIONS, ("meet", "join", "N", "G", "H")):
                found = set(congruences_bruteforce(algebra, operations=operations))
                n = algebra.size
                for a in range(n):
                    for b in range(a + 1, n):
                        self.assertIn(principal_congruence(algebra, a, b, operations), found)
                for congruence in found:
                    generated = Congruence.identity(n)
                    for cls in congruence.classes():
                        for b in cls[1:]:
                            generated = generated.join(principal_congruence(algebra, cls[0], b, operations))
                    self.assertEqual(generated, congruence)

    def test_size_guard(self):
        with self.assertRaises(SizeGuard) as caught:
            congruences_bruteforce(sixteen_element())
        self.assertEqual((caught.exception.actual, caught.exception.limit), (16, 12))

    @override_settings(TENSYM_GUARD=16)
    def test_guard_from_settings(self):
        self.assertEqual(congruences_bruteforce(sixteen_element()).size, 2)

    def test_explicit_guard_wins(self):
        with self.assertRaises(SizeGuard):
            congruences_bruteforce(TmsAlgebraFactory(square=True), guard=3)

    def test_parallel_search_finds_the_same_set(self):
        algebra = sixteen_element()
        serial = congruences_bruteforce(algebra, guard=16, operations=LATTICE_OPERATIONS, workers=1)
        parallel = congruences_bruteforce(algebra, guard=16, operations=LATTICE_OPERATIONS, workers=2)
        self.assertEqual(serial.size, 16)
        self.assertEqual(serial, parallel)


class CongruenceLatticeTests(SimpleTestCase):
    def test_two_chain(self):
        lattice = congruence_lattice([Congruence.total(2), Congruence.identity(2)])
        self.assertEqual(lattice.congruences[0], Congruence.identity(2))
        self.assertTrue(lattice.order.leq(0, 1))
        self.assertEqual(lattice.meet_table, ((0, 0), (0, 1)))
        self.assertEqual(lattice.join_table, ((0, 1), (1, 1)))

    def test_missing_total_relation(self):
        with self.assertRaises(NotALattice):
            congruence_lattice([Congruence.identity(3)])

    def test_incompatible_member(self):
        square = TmsAlgebraFactory(square=True)
        family = [Congruence.identity(4), Congruence((0, 0, 1, 1)), Congruence.total(4)]
        with self.assertRaises(NotACongruence) as caught:
            congruence_lattice(family, square)
        self.assertEqual((caught.exception.witness, caught.exception.operation), ((0, 1), "N"))

    def test_family_not_closed_under_join(self):
        family = [
            Congruence.identity(4),
            Congruence((0, 0, 1, 2)),
            Congruence((0, 1, 1, 2)),
            Congruence.total(4),
        ]
        with self.assertRaises(NotALattice):
            congruence_lattice(family)

    def test_sixteen_element_sublattice(self):
        algebra = sixteen_element()
        tms = congruences_bruteforce(algebra, guard=16)
        checked = congruence_lattice(tms.congruences, algebra)
        self.assertEqual(checked.size, 2)


class TmsSubsetTests(SimpleTestCase):
    def test_one_point_space(self):
        self.assertEqual([s.mask for s in tms_subsets(TmsSpaceFactory())], [0, 1])

    def test_kleene_dual_needs_g_invariance(self):
        space = dual_space(TmsAlgebraFactory(kleene=True))
        self.assertEqual([s.mask for s in tms_subsets(space)], [0, 0b11])
        self.assertFalse(is_tms_subset(space, 0b01))
        with self.assertRaises(NotATmsSubset):
            TmsSubset(0b10, space)

    def test_empty_relations_identity_g(self):
        space = TmsSpaceFactory(poset=build_poset(3, []), g=(0, 1, 2), rel_g=frozenset(), rel_h=frozenset(), m=2)
        self.assertEqual(len(tms_subsets(space)), 8)

    def test_four_cycle(self):
        self.assertEqual([s.mask for s in tms_subsets(TmsSpaceFactory(four_cycle=True))], [0, 0b1111])

    def test_subset_inclusion(self):
        space = TmsSpaceFactory(swap=True)
        empty, full = tms_subsets(space)
        self.assertTrue(empty <= full)
        self.assertFalse(full <= empty)
        self.assertEqual(full.points, (0, 1))

    def test_space_guard(self):
        space = TmsSpaceFactory(poset=build_poset(3, []), g=(0, 1, 2), rel_g=frozenset(), rel_h=frozenset())
        with self.assertRaises(SizeGuard):
            tms_subsets(space, guard=2)


class ThetaTests(SimpleTestCase):
    def test_full_and_empty(self):
        for algebra in (TmsAlgebraFactory(), TmsAlgebraFactory(kleene=True), TmsAlgebraFactory(square=True)):
            space = dual_space(algebra)
            self.assertEqual(theta_of_subset(algebra, TmsSubset(space.full, space)), Congruence.identity(algebra.size))
            self.assertEqual(theta_of_subset(algebra, TmsSubset(0, space)), Congruence.total(algebra.size))

    def test_subset_of_another_space(self):
        with self.assertRaises(NotATmsSubset):
            theta_of_subset(TmsAlgebraFactory(kleene=True), TmsSubset(0, TmsSpaceFactory()))

    def test_sixteen_element_images_are_compatible(self):
        algebra = sixteen_element()
        space = dual_space(algebra)
        for subset in tms_subsets(space):
            self.assertTrue(is_compatible(algebra, theta_of_subset(algebra, subset)))


class AntiIsomorphismTests(SimpleTestCase):
    def test_two_element_bijection(self):
        result = verify_anti_isomorphism(TmsAlgebraFactory())
        self.assertTrue(result.passed)
        self.assertEqual([s.mask for s in result.subsets], [0, 1])
        self.assertEqual(result.images, (Congruence.total(2), Congruence.identity(2)))

    def test_kleene_three(self):
        result = verify_anti_isomorphism(TmsAlgebraFactory(kleene=True))
        self.assertTrue(result.passed, result.report.summary())
        self.assertEqual(result.summary(), "2 congruences ↔ 2 tms-subsets, anti-isomorphism verified")

    def test_hand_listed_algebras(self):
        for algebra in (TmsAlgebraFactory(square=True), TmsAlgebraFactory(trivial=True)):
            result = verify_anti_isomorphism(algebra)
            self.assertTrue(result.passed, result.report.summary())

    def test_sixteen_element(self):
        result = verify_anti_isomorphism(sixteen_element(), guard=16)
        self.assertTrue(result.passed, result.report.summary())
        self.assertEqual(result.oracle.size, 2)

    def test_guard(self):
        with self.assertRaises(SizeGuard):
            verify_anti_isomorphism(sixteen_element())


class LatticeReductTests(SimpleTestCase):
    def test_small_algebras(self):
        for algebra in (TmsAlgebraFactory(), TmsAlgebraFactory(kleene=True), TmsAlgebraFactory(square=True)):
            report = verify_lattice_reduct(algebra)
            self.assertTrue(report.passed, report.summary())

    def test_sixteen_element(self):
        report = verify_lattice_reduct(sixteen_element(), guard=16)
        self.assertTrue(report.passed, report.summary())


class CorpusCongruenceTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.corpus = build_corpus(3, {1, 2})

    def test_anti_isomorphism_on_every_algebra(self):
        algebras = [(entry.name, entry.algebra) for entry in self.corpus]
        algebras.extend((name, self.corpus.hand_listed[name]) for name in ("B2", "K3", "DM4"))
        for name, algebra in algebras:
            result = verify_anti_isomorphism(algebra)
            self.assertTrue(result.passed, (name, result.report.summary()))
            self.assertTrue(result.report.check("reconstruction").passed, name)

    def test_lattice_reduct_up_to_six_elements(self):
        checked = 0
        for entry in self.corpus:
            if entry.algebra.size <= 6:
                checked += 1
                self.assertTrue(verify_lattice_reduct(entry.algebra).passed, entry.name)
        self.assertGreater(checked, 0)
