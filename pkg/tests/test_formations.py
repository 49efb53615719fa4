import unittest

from corpus.recipes import build, recipe_from_name
from formations.axioms import (
    direct_product_holds,
    factor_group,
    heredity_failures,
    membership,
    quotient_closure_failures,
    residual_commutes_with_quotient,
    saturation_holds,
    subdirect_closure_failures,
)
from formations.base import FormationKind, FormationSpec
from formations.local import lf_member, lf_member_every_series, local_function_F, local_function_X
from formations.predicates import (
    in_abelian_exp_div,
    in_np_a,
    in_sylow_np_a,
    in_u_k,
    is_ore_dispersive,
    is_p_group,
    is_supersoluble,
    pt_admissible,
)
from formations.registry import create_formation, is_member, parse_formation
from formations.residual import residual
from lattice.subgroups import all_subgroups
from utils.errors import ArgumentError
from utils.numbers import max_prime_multiplicity, p_part, prime_divisors


def group(name):
    return build(recipe_from_name(name))


class TestNumbers(unittest.TestCase):
    def test_helpers(self):
        self.assertEqual(prime_divisors(60), [2, 3, 5])
        self.assertEqual(prime_divisors(1), [])
        self.assertEqual(p_part(24, 2), 8)
        self.assertEqual(p_part(24, 5), 1)
        self.assertEqual(max_prime_multiplicity(16), 4)
        self.assertEqual(max_prime_multiplicity(1), 0)

    def test_admissible_primes(self):
        self.assertTrue(pt_admissible(2, 1))
        self.assertTrue(pt_admissible(3, 1))
        self.assertFalse(pt_admissible(5, 1))
        self.assertTrue(pt_admissible(5, 2))
        self.assertTrue(pt_admissible(7, 1))
        self.assertFalse(pt_admissible(17, 3))
        self.assertTrue(pt_admissible(17, 4))
        with self.assertRaises(ArgumentError):
            pt_admissible(4, 1)
        with self.assertRaises(ArgumentError):
            pt_admissible(3, 0)


class TestPredicates(unittest.TestCase):
    def test_supersoluble(self):
        self.assertTrue(is_supersoluble(group("S3")))
        self.assertTrue(is_supersoluble(group("D4")))
        self.assertTrue(is_supersoluble(group("G39")))
        self.assertFalse(is_supersoluble(group("A4")))
        self.assertFalse(is_supersoluble(group("S4")))
        self.assertFalse(is_supersoluble(group("A5")))

    def test_ore_dispersive(self):
        self.assertTrue(is_ore_dispersive(group("S3")))
        self.assertTrue(is_ore_dispersive(group("D4")))
        self.assertFalse(is_ore_dispersive(group("A4")))
        self.assertFalse(is_ore_dispersive(group("S4")))

    def test_p_groups_and_exponents(self):
        self.assertTrue(is_p_group(group("Q8"), 2))
        self.assertFalse(is_p_group(group("S3"), 2))
        self.assertTrue(in_abelian_exp_div(group("Z2xZ2"), 2))
        self.assertFalse(in_abelian_exp_div(group("Z4"), 2))

    def test_np_a(self):
        S3 = group("S3")
        self.assertTrue(in_np_a(S3, 3))
        self.assertFalse(in_np_a(S3, 2))
        self.assertTrue(in_sylow_np_a(S3, 3))
        self.assertFalse(in_sylow_np_a(group("A5"), 3, soluble=True))

    def test_u_k(self):
        self.assertTrue(in_u_k(group("S3"), 1))
        self.assertFalse(in_u_k(group("Z4"), 1))
        self.assertTrue(in_u_k(group("Z4"), 2))
        self.assertFalse(in_u_k(group("A4"), 3))


class TestRegistry(unittest.TestCase):
    def test_parse_formation(self):
        self.assertEqual(parse_formation("UK2"), FormationSpec.u_k(2))
        self.assertEqual(parse_formation("npa3"), FormationSpec.np_a(3))
        self.assertEqual(parse_formation("N"), FormationSpec.nilpotent())
        self.assertEqual(parse_formation("H2").kind, FormationKind.H_T)
        with self.assertRaises(ArgumentError):
            parse_formation("X9")

    def test_spec_validation(self):
        with self.assertRaises(ArgumentError):
            FormationSpec(FormationKind.U_K)
        with self.assertRaises(ArgumentError):
            FormationSpec.np_a(6)
        with self.assertRaises(ArgumentError):
            FormationSpec.u_k(0)

    def test_labels(self):
        self.assertEqual(FormationSpec.u_k(3).label, "U_3")
        self.assertEqual(FormationSpec.np_a(5).label, "N_5A(4)")
        self.assertEqual(FormationSpec.u_t0(2).label, "U_2^0")

    def test_create_formation(self):
        nilpotent = create_formation(FormationSpec.nilpotent())
        self.assertTrue(nilpotent.saturated)
        self.assertTrue(nilpotent.is_member(group("Q8")))
        self.assertFalse(create_formation(FormationSpec.p_groups(3)).admits_prime(2))
        self.assertTrue(is_member(group("S3"), FormationSpec.supersoluble()))


class TestResidual(unittest.TestCase):
    def test_known_residuals(self):
        self.assertEqual(residual(group("S3"), FormationSpec.nilpotent()).order, 3)
        self.assertEqual(residual(group("S4"), FormationSpec.nilpotent()).order, 12)
        self.assertEqual(residual(group("S4"), FormationSpec.supersoluble()).order, 4)
        self.assertEqual(residual(group("A5"), FormationSpec.soluble_groups()).order, 60)
        self.assertEqual(residual(group("D4"), FormationSpec.nilpotent()).order, 1)
        self.assertEqual(residual(group("A5"), FormationSpec.u_k(2)).order, 60)
        self.assertEqual(residual(group("A4"), FormationSpec.u_k(2)).order, 4)
        self.assertEqual(residual(group("G39"), FormationSpec.u_k(1)).order, 1)

    def test_residual_is_normal(self):
        S4 = group("S4")
        lat = all_subgroups(S4)
        R = residual(S4, FormationSpec.abelian())
        self.assertTrue(lat.is_normal(R))
        self.assertEqual(R.order, 12)


class TestLocalDefinitions(unittest.TestCase):
    def test_lf_membership(self):
        self.assertTrue(lf_member(group("S3"), local_function_F(1)))
        self.assertFalse(lf_member(group("A4"), local_function_F(1)))
        self.assertTrue(lf_member(group("S3"), local_function_X(1)))
        self.assertFalse(lf_member(group("Hol5"), local_function_F(1)))
        self.assertTrue(lf_member(group("Hol5"), local_function_F(2)))
        self.assertTrue(lf_member(group("V7_S3"), local_function_F(1)))
        self.assertFalse(lf_member(group("V7_S3"), local_function_X(1)))

    def test_every_series_agrees(self):
        self.assertEqual(lf_member_every_series(group("Z6"), local_function_F(1)), {True})
        self.assertEqual(lf_member_every_series(group("S4"), local_function_F(2), limit=3), {False})

    def test_local_function_values(self):
        f = local_function_F(1)
        self.assertEqual(f(3), FormationSpec.sylow_np_a(3, soluble=True))
        self.assertEqual(f(5), FormationSpec.p_groups(5))
        self.assertEqual(local_function_X(2)(5), FormationSpec.np_a(5))


class TestAxioms(unittest.TestCase):
    def test_factor_group(self):
        S4 = group("S4")
        lat = all_subgroups(S4)
        self.assertEqual(factor_group(S4, lat.full).order(), 1)
        self.assertEqual(factor_group(S4, lat.trivial).order(), 24)

    def test_closure_of_supersoluble(self):
        member = membership(FormationSpec.supersoluble())
        for name in ("S3", "D4", "Z2xS3"):
            G = group(name)
            self.assertEqual(quotient_closure_failures(G, member), [])
            self.assertEqual(subdirect_closure_failures(G, member), [])
            self.assertEqual(heredity_failures(G, member), [])

    def test_abelian_is_not_saturated_on_q8(self):
        member = membership(FormationSpec.abelian())
        self.assertFalse(saturation_holds(group("Q8"), member))
        self.assertTrue(saturation_holds(group("Q8"), membership(FormationSpec.nilpotent())))
        self.assertIsNone(saturation_holds(group("S3"), member))

    def test_direct_products(self):
        member = membership(FormationSpec.supersoluble())
        self.assertTrue(direct_product_holds(group("S3"), group("Z3"), member))
        self.assertIsNone(direct_product_holds(group("A4"), group("Z2"), member))

    def test_residual_through_quotients(self):
        S4 = group("S4")
        for N in all_subgroups(S4).normal_subgroups():
            self.assertTrue(residual_commutes_with_quotient(S4, N, FormationSpec.nilpotent()))


if __name__ == "__main__":
    unittest.main()
