import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from unittest.mock import patch

from django.test import SimpleTestCase, override_settings, tag

from algebras.axioms import classify, validate_tms_algebra
from duality.constructions import complex_algebra, dual_space, epsilon_iso, sigma_iso
from duality.factories import TmsSpaceFactory, full_relation
from duality.spaces import TmsSpace, validate_tms_space
from enumeration.canonical import PairRelabeling, automorphisms, canonical_poset, space_canonical_form
from enumeration.corpus import build_corpus
from enumeration.posets import enumerate_posets
from enumeration.spaces import (
    decoration,
    enumerate_spaces,
    monotone_relations,
    symmetric_map_classes,
    symmetric_maps,
)
from order.posets import build_poset
from tensym.exceptions import ShapeError, SizeGuard


def sizes(posets):
    counts = {}
    for poset in posets:
        counts[poset.size] = counts.get(poset.size, 0) + 1
    return counts


def plain_decorations(poset, m):
    """Canonical forms of every (g, R_G, R_H) on the poset that validate_tms_space accepts."""
    n = poset.size
    pairs = list(product(range(n), repeat=2))
    relations = [frozenset(p for i, p in enumerate(pairs) if mask >> i & 1) for mask in range(1 << len(pairs))]
    forms = set()
    for g in product(range(n), repeat=n):
        for rel_g, rel_h in product(relations, repeat=2):
            space = TmsSpace(poset=poset, g=g, rel_g=rel_g, rel_h=rel_h, m=m)
            if validate_tms_space(space).passed:
                forms.add(space_canonical_form(space))
    return forms


def round_trip_failures(spaces):
    """(check, space) for every space in the batch failing a duality check; runs in worker processes."""
    failures = []
    for space in spaces:
        algebra = complex_algebra(space)
        if not validate_tms_algebra(algebra).passed:
            failures.append(("complex-algebra", space))
            continue
        if not epsilon_iso(space)[1].passed:
            failures.append(("epsilon", space))
        if algebra.size <= 8 and not sigma_iso(algebra)[1].passed:
            failures.append(("sigma", space))
    return failures


class EnumeratePosetsTests(SimpleTestCase):
    def test_small_counts(self):
        self.assertEqual(len(enumerate_posets(1)), 1)
        self.assertEqual(len(enumerate_posets(2)), 3)
        self.assertEqual(sizes(enumerate_posets(4)), {1: 1, 2: 2, 3: 5, 4: 16})

    def test_five_element_count(self):
        self.assertEqual(sizes(enumerate_posets(5))[5], 63)

    def test_representatives_are_canonical_and_distinct(self):
        posets = enumerate_posets(4)
        for poset in posets:
            self.assertEqual(canonical_poset(poset), poset)
        self.assertEqual(len({p.above for p in posets}), len(posets))

    def test_relabeled_copies_share_a_form(self):
        v_shape = build_poset(3, [(0, 2), (1, 2)])
        relabeled = build_poset(3, [(2, 0), (1, 0)])
        self.assertEqual(canonical_poset(v_shape), canonical_poset(relabeled))
        self.assertNotEqual(canonical_poset(v_shape), canonical_poset(v_shape.dual()))

    def test_deterministic(self):
        self.assertEqual(enumerate_posets(4), enumerate_posets(4))

    def test_size_must_be_positive(self):
        with self.assertRaises(ShapeError):
            enumerate_posets(0)
        with self.assertRaises(ShapeError):
            build_corpus(0, {1})

    def test_guard(self):
        with self.assertRaises(SizeGuard):
            enumerate_posets(7)
        with override_settings(TENSYM_POSET_GUARD=3):
            with self.assertRaises(SizeGuard):
                enumerate_posets(4)


class DecorationTests(SimpleTestCase):
    def test_two_chain_maps(self):
        self.assertEqual(symmetric_maps(build_poset(2, [(0, 1)]), 1), [(1, 0)])

    def test_four_cycle_is_a_two_symmetric_map(self):
        antichain = build_poset(4, [])
        self.assertIn((1, 2, 3, 0), symmetric_maps(antichain, 2))
        self.assertNotIn((1, 2, 3, 0), symmetric_maps(antichain, 1))

    def test_monotone_relations_of_a_chain(self):
        relations = monotone_relations(build_poset(2, [(0, 1)]))
        self.assertEqual(len(relations), 6)
        self.assertIn(frozenset({(1, 0)}), relations)
        self.assertNotIn(frozenset({(0, 1)}), relations)

    def test_proper_two_symmetric_witness(self):
        space = decoration(build_poset(4, []), (1, 2, 3, 0), full_relation(4), 2)
        self.assertEqual(space.rel_h, full_relation(4))
        self.assertTrue(validate_tms_space(space).passed)
        self.assertEqual(space_canonical_form(space), space_canonical_form(TmsSpaceFactory(four_cycle=True)))


    def test_antichain_map_classes(self):
        classes = symmetric_map_classes(build_poset(4, []), 2)
        self.assertEqual(
            [(g, len(centralizer)) for g, centralizer in classes],
            [((0, 1, 2, 3), 24), ((0, 1, 3, 2), 4), ((1, 0, 3, 2), 8), ((1, 2, 3, 0), 4)],
        )

    def test_automorphisms(self):
        self.assertEqual(automorphisms(build_poset(2, [(0, 1)])), [(0, 1)])
        self.assertEqual(automorphisms(build_poset(3, [(0, 2), (1, 2)])), [(0, 1, 2), (1, 0, 2)])

    def test_pair_relabeling(self):
        self.assertEqual(PairRelabeling((1, 0), 2)(0b0010), 0b0100)
        self.assertEqual(PairRelabeling((2, 0, 1), 3)(1 << 8), 1 << 4)
        self.assertEqual(PairRelabeling((0, 1, 2), 3)(0b110101011), 0b110101011)


class EnumerateSpacesTests(SimpleTestCase):
    def test_one_point(self):
        spaces = enumerate_spaces(build_poset(1, []), 1)
        self.assertEqual([(s.rel_g, s.rel_h) for s in spaces], [
            (frozenset(), frozenset()),
            (full_relation(1), full_relation(1)),
        ])

    def test_two_antichain(self):
        antichain = build_poset(2, [])
        self.assertEqual(len(enumerate_spaces(antichain, 1)), 20)
        self.assertEqual(len(enumerate_spaces(antichain, 2)), 20)

    def test_relabeled_duplicate_is_rejected(self):
        swap_full = TmsSpaceFactory(swap=True)
        relabeled = TmsSpaceFactory(swap=True, rel_g=frozenset({(0, 0), (1, 1)}), rel_h=frozenset({(0, 0), (1, 1)}))
        self.assertNotEqual(space_canonical_form(swap_full), space_canonical_form(relabeled))
        one_way = TmsSpaceFactory(swap=True, rel_g=frozenset({(0, 1)}), rel_h=frozenset({(0, 1)}))
        other_way = TmsSpaceFactory(swap=True, rel_g=frozenset({(1, 0)}), rel_h=frozenset({(1, 0)}))
        self.assertEqual(space_canonical_form(one_way), space_canonical_form(other_way))
        forms = [space_canonical_form(s) for s in enumerate_spaces(build_poset(2, []), 1)]
        self.assertEqual(forms.count(space_canonical_form(one_way)), 1)

    def test_agrees_with_filtering_every_triple(self):
        for poset in enumerate_posets(2):
            for m in (1, 2):
                spaces = enumerate_spaces(poset, m)
                forms = {space_canonical_form(s) for s in spaces}
                self.assertEqual(len(forms), len(spaces))
                self.assertEqual(forms, plain_decorations(poset, m), (poset, m))

    def test_four_antichain_validates_one_candidate_per_orbit(self):
        started = time.monotonic()
        with patch("enumeration.spaces.validate_tms_space", wraps=validate_tms_space) as validate:
            spaces = enumerate_spaces(build_poset(4, []), 2)
        elapsed = time.monotonic() - started
        self.assertEqual(len(spaces), 28688)
        self.assertEqual(validate.call_count, 45008)
        self.assertLess(elapsed, 60)

    def test_every_space_validates(self):
        for poset in enumerate_posets(3):
            for space in enumerate_spaces(poset, 1):
                self.assertTrue(validate_tms_space(space).passed)

    def test_guard(self):
        with self.assertRaises(SizeGuard):
            enumerate_spaces(build_poset(5, []), 1)


class CorpusTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.corpus = build_corpus(2, {1, 2})

    def test_one_point_corpus(self):
        corpus = build_corpus(1, {1})
        self.assertEqual(len(corpus), 2)
        self.assertEqual([e.name for e in corpus], ["P0-D0-m1", "P0-D1-m1"])
        self.assertEqual([e.algebra.size for e in corpus], [2, 2])
        self.assertEqual(sorted(corpus.hand_listed), ["B2", "B2-no-T3", "DM4", "K3"])

    def test_hand_listed_negative_instance(self):
        self.assertFalse(validate_tms_algebra(self.corpus.hand_listed["B2-no-T3"]).passed)

    def test_every_entry_is_valid(self):
        for entry in self.corpus:
            self.assertTrue(validate_tms_space(entry.space).passed, entry.name)
            self.assertTrue(validate_tms_algebra(entry.algebra).passed, entry.name)

    def test_sigma_and_epsilon(self):
        for entry in self.corpus:
            self.assertTrue(sigma_iso(entry.algebra)[1].passed, entry.name)
            self.assertTrue(epsilon_iso(entry.space)[1].passed, entry.name)

    def test_m1_algebras_are_de_morgan(self):
        for entry in self.corpus:
            if entry.m == 1:
                self.assertTrue(classify(entry.algebra).de_morgan, entry.name)

    def test_no_isomorphic_duplicates(self):
        forms = [space_canonical_form(entry.space) for entry in self.corpus]
        self.assertEqual(len(set(forms)), len(forms))

    def test_deterministic(self):
        self.assertEqual(build_corpus(2, {2, 1}).entries, self.corpus.entries)

    def test_parallel_build_matches(self):
        self.assertEqual(build_corpus(2, {1, 2}, workers=2).entries, self.corpus.entries)

    def test_guard(self):
        with self.assertRaises(SizeGuard):
            build_corpus(5, {1})


class CorpusAcceptanceTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.corpus = build_corpus(3, {1, 2})

    def test_size(self):
        self.assertEqual(len(self.corpus), 1064)
        self.assertEqual(max(entry.algebra.size for entry in self.corpus), 8)

    def test_constructions_are_sound(self):
        for entry in self.corpus:
            self.assertTrue(validate_tms_algebra(entry.algebra).passed, entry.name)
            self.assertTrue(validate_tms_space(dual_space(entry.algebra)).passed, entry.name)

    def test_sigma_and_epsilon(self):
        self.assertEqual(round_trip_failures(entry.space for entry in self.corpus), [])

    def test_no_isomorphic_duplicates(self):
        forms = [space_canonical_form(entry.space) for entry in self.corpus]
        self.assertEqual(len(set(forms)), len(forms))


@tag("slow")
class FourPointRoundTripTests(SimpleTestCase):
    def test_every_four_point_space(self):
        spaces = [
            space
            for poset in enumerate_posets(4)
            if poset.size == 4
            for m in (1, 2)
            for space in enumerate_spaces(poset, m)
        ]
        batches = [spaces[i:i + 500] for i in range(0, len(spaces), 500)]
        with ProcessPoolExecutor() as pool:
            failures = [failure for batch in pool.map(round_trip_failures, batches) for failure in batch]
        self.assertEqual(failures, [])
