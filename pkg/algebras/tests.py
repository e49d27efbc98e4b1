from dataclasses import replace

from django.test import SimpleTestCase

from algebras.axioms import AXIOMS, classify, minimal_symmetry_degree, validate_tms_algebra
from algebras.factories import TmsAlgebraFactory
from algebras.homomorphisms import check_homomorphism, is_compatible, principal_congruence, quotient
from algebras.partitions import Congruence
from algebras.samples import HAND_LISTED, de_morgan_four, kleene_three, two_element, two_element_without_t3
from algebras.structures import TmsAlgebra
from order.lattices import lattice_from_poset
from order.posets import build_poset
from tensym.exceptions import InvalidAlgebra, NotACongruence, ShapeError


def relabel(algebra, perm):
    """Isomorphic copy where element x becomes perm[x]."""
    inverse = [0] * len(perm)
    for x, y in enumerate(perm):
        inverse[y] = x
    pairs = [(perm[a], perm[b]) for a, b in algebra.lattice.poset.covers]
    lattice = lattice_from_poset(build_poset(algebra.size, pairs))
    return TmsAlgebra(
        lattice=lattice,
        negation=tuple(perm[algebra.negation[inverse[y]]] for y in range(algebra.size)),
        future=tuple(perm[algebra.future[inverse[y]]] for y in range(algebra.size)),
        past=tuple(perm[algebra.past[inverse[y]]] for y in range(algebra.size)),
        m=algebra.m,
    )


def flag_tuple(subvarieties):
    s = subvarieties
    return s.de_morgan, s.kleene, s.boolean, s.tense_algebra


class ValidateTests(SimpleTestCase):
    def test_two_element_passes(self):
        report = validate_tms_algebra(TmsAlgebraFactory())
        self.assertTrue(report.passed)
        self.assertEqual([c.name for c in report.checks], list(AXIOMS))

    def test_t3_failure_witness(self):
        report = validate_tms_algebra(TmsAlgebraFactory(future=(1, 1)))
        self.assertEqual(TmsAlgebraFactory(future=(1, 1)), TmsAlgebraFactory(without_t3=True))
        self.assertFalse(report.passed)
        self.assertTrue(report.check("T3(G)").passed)
        self.assertEqual(report.check("T3(H)").witness, (1,))
        self.assertEqual([c.name for c in report.failures()], ["T3(H)"])

    def test_kleene_three_passes(self):
        self.assertTrue(validate_tms_algebra(TmsAlgebraFactory(kleene=True)).passed)

    def test_degenerate_algebra_passes(self):
        self.assertTrue(validate_tms_algebra(TmsAlgebraFactory(trivial=True)).passed)

    def test_negation_not_involutive_for_m1(self):
        report = validate_tms_algebra(TmsAlgebraFactory(kleene=True, negation=(2, 2, 0)))
        self.assertEqual(report.check("m-symmetry").witness, (1,))

    def test_constant_one_operators_always_valid(self):
        for build in HAND_LISTED.values():
            algebra = build()
            top = (algebra.top,) * algebra.size
            tweaked = replace(algebra, future=top, past=top)
            report = validate_tms_algebra(tweaked)
            for name in ("T1(G)", "T1(H)", "T2(G)", "T2(H)", "T3(G)", "T3(H)"):
                self.assertTrue(report.check(name).passed, (name, algebra.labels))

    def test_symmetry_multiples(self):
        algebra = TmsAlgebraFactory(kleene=True)
        for k in (1, 2, 3):
            self.assertTrue(validate_tms_algebra(replace(algebra, m=k)).passed)

    def test_shape_checked_at_construction(self):
        with self.assertRaises(ShapeError):
            TmsAlgebraFactory(negation=(1,))
        with self.assertRaises(ShapeError):
            TmsAlgebraFactory(past=(0, 5))


class SymmetryDegreeTests(SimpleTestCase):
    def test_involution(self):
        self.assertEqual(minimal_symmetry_degree(TmsAlgebraFactory()), 1)
        self.assertEqual(minimal_symmetry_degree(TmsAlgebraFactory(kleene=True)), 1)

    def test_not_bijective(self):
        self.assertIsNone(minimal_symmetry_degree(TmsAlgebraFactory(future=(1, 1), negation=(1, 1))))

    def test_four_cycle(self):
        lattice = lattice_from_poset(build_poset(4, [(0, 1), (1, 2), (2, 3)]))
        algebra = TmsAlgebra(lattice, (1, 2, 3, 0), (0, 1, 2, 3), (0, 1, 2, 3), 1)
        self.assertEqual(minimal_symmetry_degree(algebra), 2)


class ClassifyTests(SimpleTestCase):
    def test_two_element_is_everything(self):
        flags = classify(TmsAlgebraFactory())
        self.assertTrue(flags.de_morgan and flags.kleene and flags.boolean and flags.tense_algebra)

    def test_kleene_three(self):
        flags = classify(TmsAlgebraFactory(kleene=True))
        self.assertTrue(flags.de_morgan)
        self.assertTrue(flags.kleene)
        self.assertFalse(flags.boolean)
        self.assertFalse(flags.tense_algebra)
        self.assertEqual(flags.boolean_witness, (1,))

    def test_de_morgan_four_is_not_kleene(self):
        flags = classify(TmsAlgebraFactory(square=True))
        self.assertTrue(flags.de_morgan)
        self.assertFalse(flags.kleene)
        self.assertEqual(flags.kleene_witness, (1, 2))
        self.assertFalse(flags.boolean)

    def test_invalid_algebra_rejected(self):
        with self.assertRaises(InvalidAlgebra):
            classify(two_element_without_t3())

    def test_stable_under_isomorphism(self):
        square = TmsAlgebraFactory(square=True)
        swapped = relabel(square, (0, 2, 1, 3))
        self.assertEqual(flag_tuple(classify(square)), flag_tuple(classify(swapped)))
        kleene = TmsAlgebraFactory(kleene=True)
        self.assertEqual(flag_tuple(classify(kleene)), flag_tuple(classify(relabel(kleene, (2, 0, 1)))))


class HomomorphismTests(SimpleTestCase):
    def test_identity(self):
        b2 = TmsAlgebraFactory()
        self.assertTrue(check_homomorphism((0, 1), b2, b2).passed)

    def test_constant_map(self):
        b2 = TmsAlgebraFactory()
        report = check_homomorphism((1, 1), b2, b2)
        self.assertFalse(report.check("bottom").passed)
        self.assertEqual(report.check("bottom").witness, (0,))

    def test_collapsing_kleene_breaks_negation(self):
        report = check_homomorphism((0, 1, 1), TmsAlgebraFactory(kleene=True), TmsAlgebraFactory())
        self.assertTrue(report.check("meet").passed)
        self.assertTrue(report.check("join").passed)
        self.assertEqual(report.check("N").witness, (1,))

    def test_shape_error(self):
        with self.assertRaises(ShapeError):
            check_homomorphism((0,), TmsAlgebraFactory(), TmsAlgebraFactory())


class QuotientTests(SimpleTestCase):
    def test_identity_partition(self):
        b2 = TmsAlgebraFactory()
        image, q = quotient(b2, Congruence.identity(2))
        self.assertEqual(image, b2)
        self.assertEqual(q, (0, 1))

    def test_total_partition(self):
        image, q = quotient(TmsAlgebraFactory(), Congruence.total(2))
        self.assertEqual(image.size, 1)
        self.assertEqual(q, (0, 0))
        self.assertTrue(validate_tms_algebra(image).passed)

    def test_square_partition_breaks_negation(self):
        with self.assertRaises(NotACongruence) as ctx:
            quotient(TmsAlgebraFactory(square=True), Congruence((0, 0, 1, 1)))
        self.assertEqual(ctx.exception.witness, (0, 1))
        self.assertEqual(ctx.exception.operation, "N")

    def test_square_partition_is_a_lattice_congruence(self):
        square = TmsAlgebraFactory(square=True)
        self.assertTrue(is_compatible(square, Congruence((0, 0, 1, 1)), ("meet", "join")))

    def test_quotient_map_is_homomorphism(self):
        square = TmsAlgebraFactory(square=True, negation=(3, 2, 1, 0))
        theta = principal_congruence(square, 0, 1)
        image, q = quotient(square, theta)
        self.assertTrue(check_homomorphism(q, square, image).passed)

    def test_validation_survives_identity_quotient(self):
        for build in HAND_LISTED.values():
            algebra = build()
            image, _ = quotient(algebra, Congruence.identity(algebra.size))
            self.assertEqual(validate_tms_algebra(algebra).passed, validate_tms_algebra(image).passed)


class CongruenceTypeTests(SimpleTestCase):
    def test_refinement_meet_join(self):
        a = Congruence((0, 0, 1, 2))
        b = Congruence((0, 1, 1, 2))
        self.assertEqual(a.meet(b), Congruence.identity(4))
        self.assertEqual(a.join(b), Congruence((0, 0, 0, 1)))
        self.assertTrue(a.refines(a.join(b)))
        self.assertFalse(a.refines(b))
        self.assertEqual(Congruence.from_labels("xyxz"), Congruence((0, 1, 0, 2)))

    def test_principal_congruence_in_kleene_three(self):
        self.assertEqual(principal_congruence(TmsAlgebraFactory(kleene=True), 1, 2), Congruence.total(3))


class FactoryTests(SimpleTestCase):
    def test_traits_match_hand_listed_algebras(self):
        self.assertEqual(TmsAlgebraFactory(), two_element())
        self.assertEqual(TmsAlgebraFactory(kleene=True), kleene_three())
        self.assertEqual(TmsAlgebraFactory(square=True), de_morgan_four())
        self.assertEqual(TmsAlgebraFactory(without_t3=True), two_element_without_t3())

    def test_without_t3_is_rejected_at_x1(self):
        report = validate_tms_algebra(TmsAlgebraFactory(without_t3=True))
        self.assertEqual([c.name for c in report.failures()], ["T3(H)"])
        self.assertEqual(report.check("T3(H)").witness, (1,))
