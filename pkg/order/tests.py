from itertools import combinations

from django.test import SimpleTestCase

from enumeration.posets import enumerate_posets
from order.filters import is_prime_filter, is_prime_ideal, prime_filters
from order.lattices import Lattice, lattice_from_poset
from order.posets import build_poset, count_antichains, members, subset_key, upset_family
from tensym.exceptions import CycleError, NotBounded, NotDistributive, TensymError


def chain(n):
    return build_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n):
    return build_poset(n, [])


class BuildPosetTests(SimpleTestCase):
    def test_singleton(self):
        poset = build_poset(1, [])
        self.assertEqual(poset.size, 1)
        self.assertTrue(poset.leq(0, 0))

    def test_two_chain_is_closed(self):
        poset = build_poset(2, [(0, 1)])
        self.assertTrue(poset.leq(0, 1))
        self.assertFalse(poset.leq(1, 0))

    def test_transitive_closure_is_computed(self):
        poset = build_poset(3, [(0, 1), (1, 2)])
        self.assertTrue(poset.leq(0, 2))
        self.assertEqual(poset.covers, ((0, 1), (1, 2)))

    def test_cycle_rejected(self):
        with self.assertRaises(CycleError) as ctx:
            build_poset(2, [(0, 1), (1, 0)])
        self.assertEqual(ctx.exception.witness, (0, 1))

    def test_long_cycle_rejected(self):
        with self.assertRaises(CycleError):
            build_poset(3, [(0, 1), (1, 2), (2, 0)])

    def test_out_of_range(self):
        with self.assertRaises(IndexError):
            build_poset(2, [(0, 2)])

    def test_empty_poset_rejected(self):
        with self.assertRaises(ValueError):
            build_poset(0, [])


class UpsetFamilyTests(SimpleTestCase):
    def test_singleton(self):
        self.assertEqual(upset_family(build_poset(1, [])), [0b0, 0b1])

    def test_two_chain(self):
        self.assertEqual(upset_family(chain(2)), [0b00, 0b10, 0b11])

    def test_two_antichain(self):
        self.assertEqual(upset_family(antichain(2)), [0b00, 0b01, 0b10, 0b11])

    def test_every_upset_once_and_sorted(self):
        for poset in enumerate_posets(4):
            family = upset_family(poset)
            brute = [m for m in range(1 << poset.size) if poset.is_upset(m)]
            self.assertEqual(sorted(family), sorted(brute))
            self.assertEqual(family, sorted(family, key=subset_key))
            self.assertIn(0, family)
            self.assertIn(poset.full, family)

    def test_count_matches_antichains(self):
        for poset in enumerate_posets(5):
            self.assertEqual(len(upset_family(poset)), count_antichains(poset))


class LatticeFromPosetTests(SimpleTestCase):
    def test_two_chain(self):
        lattice = lattice_from_poset(chain(2))
        self.assertEqual(lattice.bottom, 0)
        self.assertEqual(lattice.top, 1)
        self.assertEqual(lattice.meet(0, 1), 0)
        self.assertEqual(lattice.join(0, 1), 1)

    def test_diamond_is_not_distributive(self):
        m3 = build_poset(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        with self.assertRaises(NotDistributive) as ctx:
            lattice_from_poset(m3)
        self.assertEqual(ctx.exception.witness, (1, 2, 3))

    def test_square_is_boolean(self):
        square = build_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        lattice = lattice_from_poset(square)
        self.assertEqual(lattice.meet(1, 2), 0)
        self.assertEqual(lattice.join(1, 2), 3)
        self.assertEqual(lattice.meet(1, 3), 1)
        self.assertEqual(lattice.join(0, 2), 2)

    def test_antichain_is_not_bounded(self):
        with self.assertRaises(NotBounded):
            lattice_from_poset(antichain(2))

    def test_pentagon_is_not_distributive(self):
        n5 = build_poset(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
        with self.assertRaises(NotDistributive):
            lattice_from_poset(n5)

    def test_missing_infimum(self):
        # two maximal-below elements under a top and above two minima joined to a bottom
        bowtie = build_poset(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])
        with self.assertRaisesRegex(TensymError, "no (infimum|supremum)"):
            lattice_from_poset(bowtie)

    def test_of_sets_matches_lattice_from_poset(self):
        poset = build_poset(3, [(0, 2)])
        family = upset_family(poset)
        from_sets = Lattice.of_sets(family)
        self.assertEqual(from_sets, lattice_from_poset(from_sets.poset))


class PrimeFilterTests(SimpleTestCase):
    def test_two_chain(self):
        self.assertEqual(prime_filters(lattice_from_poset(chain(2))).filters, (0b10,))

    def test_three_chain(self):
        family = prime_filters(lattice_from_poset(chain(3)))
        self.assertEqual(family.filters, (0b100, 0b110))
        self.assertTrue(family.order.leq(0, 1))

    def test_square(self):
        family = prime_filters(lattice_from_poset(build_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])))
        self.assertEqual(family.filters, (0b1010, 0b1100))
        self.assertFalse(family.order.comparable(0, 1))

    def test_degenerate_lattice_has_none(self):
        family = prime_filters(lattice_from_poset(build_poset(1, [])))
        self.assertEqual(family.filters, ())
        self.assertEqual(family.order.size, 0)

    def test_matches_prime_ideal_complements(self):
        for lattice in distributive_lattices(6):
            full = lattice.poset.full
            brute = sorted(
                (mask for mask in range(1 << lattice.size) if is_prime_ideal(lattice, full & ~mask)),
                key=subset_key,
            )
            self.assertEqual(list(prime_filters(lattice).filters), brute)
            for mask in brute:
                self.assertTrue(is_prime_filter(lattice, mask))

    def test_birkhoff_representation(self):
        for lattice in distributive_lattices(6) + upset_lattices(3):
            family = prime_filters(lattice)
            upsets = upset_family(family.order)
            self.assertEqual(len(upsets), lattice.size)
            sigma = [family.containing(a) for a in lattice.elements]
            self.assertEqual(sorted(sigma), sorted(upsets))
            for a, b in combinations(lattice.elements, 2):
                self.assertEqual(lattice.leq(a, b), sigma[a] & ~sigma[b] == 0)
                self.assertEqual(sigma[lattice.meet(a, b)], sigma[a] & sigma[b])
                self.assertEqual(sigma[lattice.join(a, b)], sigma[a] | sigma[b])


def distributive_lattices(max_size):
    found = []
    for poset in enumerate_posets(max_size):
        try:
            found.append(lattice_from_poset(poset))
        except TensymError:
            continue
    return found


def upset_lattices(max_size):
    """Up-set lattices of small posets, reaching 8 elements."""
    return [Lattice.of_sets(upset_family(poset)) for poset in enumerate_posets(max_size)]


class MembersTests(SimpleTestCase):
    def test_members_and_key(self):
        self.assertEqual(list(members(0b1011)), [0, 1, 3])
        self.assertLess(subset_key(0b100), subset_key(0b011))
