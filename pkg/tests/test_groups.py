import unittest

from groups.homomorphism import is_normal_subgroup, quotient
from groups.perm_group import PermGroup, build_group, conjugate, direct_product
from groups.permutation import Permutation, compose, parse_permutation_list
from utils.errors import DegreeError, FormatError, MembershipError, NormalityError


def perm(text, degree):
    return Permutation.parse(text, degree)


class TestPermutation(unittest.TestCase):
    def test_composition_is_left_to_right(self):
        a = perm("(1 2)", 3)
        b = perm("(2 3)", 3)
        # first a, then b: 1 -> 2 -> 3
        self.assertEqual(compose(a, b)(0), 2)
        self.assertEqual(a * b, compose(a, b))

    def test_parse_and_format(self):
        p = perm("(1 3 2)(4 5)", 5)
        self.assertEqual(p.images, (2, 0, 1, 4, 3))
        self.assertEqual(p.to_cycle_string(), "(1 3 2)(4 5)")
        self.assertEqual(p.to_cycle_string(one_based=False), "(0 2 1)(3 4)")
        self.assertTrue(perm("()", 4).is_identity())

    def test_order_inverse_power(self):
        p = perm("(1 2 3)(4 5)", 5)
        self.assertEqual(p.order(), 6)
        self.assertTrue((p * p.inverse()).is_identity())
        self.assertTrue((p ** 6).is_identity())
        self.assertEqual(p ** -1, p.inverse())

    def test_conjugate_by(self):
        x = perm("(1 2)", 3)
        g = perm("(1 2 3)", 3)
        self.assertEqual(x.conjugate_by(g), compose(compose(g.inverse(), x), g))
        self.assertEqual(x.conjugate_by(g), perm("(2 3)", 3))

    def test_malformed_text(self):
        with self.assertRaises(FormatError):
            perm("(1 2", 3)
        with self.assertRaises(FormatError):
            perm("(1 4)", 3)
        with self.assertRaises(FormatError):
            perm("(1 1)", 3)
        with self.assertRaises(FormatError):
            Permutation((0, 0, 1))

    def test_degree_mismatch(self):
        with self.assertRaises(DegreeError):
            compose(perm("(1 2)", 2), perm("(1 2)", 3))

    def test_parse_list(self):
        gens = parse_permutation_list("(1 2)(3 4), (1 3)(2 4)", 4)
        self.assertEqual(len(gens), 2)
        self.assertEqual(gens[1], perm("(1 3)(2 4)", 4))


class TestPermGroup(unittest.TestCase):
    def setUp(self):
        self.S4 = PermGroup(4, [perm("(1 2 3 4)", 4), perm("(1 2)", 4)])
        self.V4 = PermGroup(4, parse_permutation_list("(1 2)(3 4), (1 3)(2 4)", 4))

    def test_orders(self):
        self.assertEqual(self.S4.order(), 24)
        self.assertEqual(self.V4.order(), 4)
        self.assertEqual(PermGroup.trivial(3).order(), 1)
        self.assertEqual(len(self.S4.elements()), 24)

    def test_membership(self):
        self.assertIn(perm("(1 3)", 4), self.S4)
        self.assertNotIn(perm("(1 2)", 4), self.V4)
        with self.assertRaises(DegreeError):
            self.V4.contains(perm("(1 2)", 5))

    def test_equality_ignores_generators(self):
        other = PermGroup(4, parse_permutation_list("(1 4)(2 3), (1 2)(3 4)", 4))
        self.assertEqual(self.V4, other)
        self.assertEqual(hash(self.V4), hash(other))

    def test_properties(self):
        self.assertTrue(self.V4.is_abelian())
        self.assertTrue(self.V4.is_nilpotent())
        self.assertTrue(self.S4.is_soluble())
        self.assertFalse(self.S4.is_nilpotent())
        self.assertEqual(self.S4.derived_subgroup().order(), 12)
        self.assertEqual(self.V4.exponent(), 2)

    def test_subgroup_requires_membership(self):
        with self.assertRaises(MembershipError):
            self.V4.subgroup([perm("(1 2)", 4)])

    def test_build_group_checks_bsgs(self):
        G = build_group(4, self.S4.generators)
        self.assertEqual(G.order(), 24)

    def test_conjugate(self):
        H = PermGroup(4, [perm("(1 2)", 4)])
        K = conjugate(H, perm("(2 3)", 4), self.S4)
        self.assertEqual(K, PermGroup(4, [perm("(1 3)", 4)]))

    def test_direct_product(self):
        Z3 = PermGroup(3, [perm("(1 2 3)", 3)])
        P = direct_product(self.V4, Z3)
        self.assertEqual(P.degree, 7)
        self.assertEqual(P.order(), 12)
        self.assertTrue(P.is_abelian())


class TestQuotient(unittest.TestCase):
    def setUp(self):
        self.S4 = PermGroup(4, [perm("(1 2 3 4)", 4), perm("(1 2)", 4)])
        self.V4 = PermGroup(4, parse_permutation_list("(1 2)(3 4), (1 3)(2 4)", 4))

    def test_quotient_by_klein(self):
        Q, hom = quotient(self.S4, self.V4)
        self.assertEqual(Q.order(), 6)
        self.assertEqual(Q.degree, 6)
        self.assertFalse(Q.is_abelian())
        self.assertEqual(hom.kernel(), self.V4)

    def test_image_and_preimage(self):
        Q, hom = quotient(self.S4, self.V4)
        H = PermGroup(4, [perm("(1 2)", 4)])
        self.assertEqual(hom.image_of(H).order(), 2)
        self.assertEqual(hom.preimage_of(hom.image_of(H)).order(), 8)
        self.assertTrue(hom.image(perm("(1 2)(3 4)", 4)).is_identity())

    def test_quotient_requires_normal(self):
        H = PermGroup(4, [perm("(1 2)", 4)])
        self.assertFalse(is_normal_subgroup(H, self.S4))
        with self.assertRaises(NormalityError):
            quotient(self.S4, H)


if __name__ == "__main__":
    unittest.main()
