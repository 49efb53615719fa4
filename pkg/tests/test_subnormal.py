import unittest

from corpus.recipes import build, recipe_from_name
from formations.base import FormationSpec
from groups.perm_group import PermGroup
from groups.permutation import parse_permutation_list
from lattice.structure import sylow
from lattice.subgroups import all_subgroups
from subnormal.classes import in_class_Ht, in_class_Ht_all_sylows, in_class_wbarU, in_ut0, in_wF
from subnormal.models import ChainWitness, NormalStep, PolicyKind, PrimeStep, ResidualStep, StepPolicy
from subnormal.oracle import brute_force_oracle
from subnormal.policies import K_P_SUB, P_SUB, SUBNORMAL, f_sub, k_f_sub, k_p_t, parse_policy, step_allowed
from subnormal.search import compose_witnesses, is_subnormal, is_subnormal_variant, serialize, validate_witness
from utils.errors import ArgumentError, CapacityError


def group(name):
    return build(recipe_from_name(name))


def subgroup(G, text):
    return PermGroup(G.degree, parse_permutation_list(text, G.degree))


class TestPolicies(unittest.TestCase):
    def test_parse_policy(self):
        self.assertEqual(parse_policy("kpt", 3), k_p_t(3))
        self.assertEqual(parse_policy("kpt", 3).label, "kpt3")
        self.assertEqual(parse_policy("PSUB"), P_SUB)
        self.assertEqual(parse_policy("fsub:UK1"), f_sub(FormationSpec.u_k(1)))
        self.assertEqual(parse_policy("kfsub:N").kind, PolicyKind.K_F_SUB)

    def test_parse_policy_errors(self):
        for bad in ("bogus", "fsub", "psub:UK1"):
            with self.assertRaises(ArgumentError):
                parse_policy(bad)

    def test_policy_needs_parameters(self):
        with self.assertRaises(ArgumentError):
            StepPolicy(PolicyKind.K_P_T)
        with self.assertRaises(ArgumentError):
            StepPolicy(PolicyKind.F_SUB)

    def test_step_allowed(self):
        S3 = group("S3")
        lat = all_subgroups(S3)
        P2, P3 = sylow(S3, 2), sylow(S3, 3)
        self.assertTrue(step_allowed(P2, lat.full, P_SUB))
        self.assertFalse(step_allowed(P2, lat.full, SUBNORMAL))
        self.assertTrue(step_allowed(P3, lat.full, SUBNORMAL))
        self.assertTrue(step_allowed(P2, P2, SUBNORMAL))
        with self.assertRaises(ArgumentError):
            step_allowed(lat.full, P2, P_SUB)


class TestSearch(unittest.TestCase):
    def setUp(self):
        self.A5 = group("A5")
        self.V4 = subgroup(self.A5, "(1 2)(3 4), (1 3)(2 4)")

    def test_a5_klein_subgroup(self):
        ok, witness = is_subnormal_variant(self.A5, self.V4, k_p_t(2))
        self.assertTrue(ok)
        self.assertEqual(len(witness), 2)
        self.assertIsInstance(witness.steps[0], NormalStep)
        self.assertEqual(witness.nodes[1].order, 12)
        self.assertEqual(witness.steps[1], PrimeStep(5))
        self.assertTrue(validate_witness(witness, k_p_t(2)))

    def test_a5_other_variants(self):
        self.assertFalse(is_subnormal(self.A5, self.V4, k_p_t(1)))
        self.assertTrue(is_subnormal(self.A5, self.V4, K_P_SUB))
        self.assertTrue(is_subnormal(self.A5, self.V4, P_SUB))
        self.assertFalse(is_subnormal(self.A5, self.V4, SUBNORMAL))

    def test_whole_group_has_empty_chain(self):
        ok, witness = is_subnormal_variant(self.A5, self.A5, SUBNORMAL)
        self.assertTrue(ok)
        self.assertEqual(len(witness), 0)
        self.assertEqual(serialize(witness), "")

    def test_subnormal_chain_in_s4(self):
        S4 = group("S4")
        ok, witness = is_subnormal_variant(S4, subgroup(S4, "(1 2)(3 4)"), SUBNORMAL)
        self.assertTrue(ok)
        self.assertEqual([n.order for n in witness.nodes], [2, 4, 24])
        self.assertFalse(is_subnormal(S4, subgroup(S4, "(1 2)"), SUBNORMAL))
        self.assertTrue(is_subnormal(S4, subgroup(S4, "(1 2)"), P_SUB))

    def test_node_from_a_larger_group(self):
        lat = all_subgroups(group("S4"))
        A4 = lat.locate(subgroup(group("S4"), "(1 2 3), (1 2)(3 4)")).as_group()
        c2 = lat.locate(subgroup(group("S4"), "(1 2)(3 4)"))
        ok, witness = is_subnormal_variant(A4, c2, SUBNORMAL)
        self.assertTrue(ok)
        self.assertEqual([n.order for n in witness.nodes], [2, 4, 12])

    def test_serialize(self):
        S4 = group("S4")
        _, witness = is_subnormal_variant(S4, subgroup(S4, "(1 2)(3 4)"), SUBNORMAL)
        lines = serialize(witness).splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[0].startswith("order=2 gens="))
        self.assertTrue(lines[-1].startswith("order=24 "))

    def test_f_subnormality(self):
        G39 = group("G39")
        P3 = sylow(G39, 3)
        self.assertTrue(is_subnormal(G39, P3, f_sub(FormationSpec.u_k(1))))
        self.assertFalse(is_subnormal(G39, P3, k_p_t(1)))
        self.assertTrue(is_subnormal(G39, P3, k_p_t(2)))
        ok, witness = is_subnormal_variant(G39, P3, f_sub(FormationSpec.u_k(1)))
        self.assertIsInstance(witness.steps[0], ResidualStep)

    def test_validate_rejects_wrong_policy(self):
        S4 = group("S4")
        _, witness = is_subnormal_variant(S4, subgroup(S4, "(1 2)(3 4)"), SUBNORMAL)
        self.assertTrue(validate_witness(witness, SUBNORMAL))
        self.assertFalse(validate_witness(witness, P_SUB))

    def test_compose_witnesses(self):
        S4 = group("S4")
        lat = all_subgroups(S4)
        _, low = is_subnormal_variant(S4, subgroup(S4, "(1 2)(3 4)"), SUBNORMAL)
        V4 = lat.locate(subgroup(S4, "(1 2)(3 4), (1 3)(2 4)"))
        with self.assertRaises(ArgumentError):
            compose_witnesses(low, low)
        head = ChainWitness(low.nodes[:2], low.steps[:1])
        tail = ChainWitness([V4, lat.full], [NormalStep()])
        self.assertEqual(len(compose_witnesses(head, tail)), 2)

    def test_empty_witness_rejected(self):
        with self.assertRaises(ArgumentError):
            ChainWitness([])


class TestOracle(unittest.TestCase):
    def test_oracle_agrees_on_s4(self):
        S4 = group("S4")
        spec = FormationSpec.u_k(1)
        policies = [SUBNORMAL, P_SUB, K_P_SUB, k_p_t(1), f_sub(spec), k_f_sub(spec)]
        lat = all_subgroups(S4)
        for policy in policies:
            for X in lat:
                with self.subTest(policy=policy.label, node=X.node_id):
                    self.assertEqual(is_subnormal(S4, X, policy), brute_force_oracle(S4, X, policy))

    def test_oracle_residual_steps(self):
        for name in ("G39", "D5", "A4"):
            G = group(name)
            for spec in (FormationSpec.u_k(1), FormationSpec.nilpotent()):
                for policy in (f_sub(spec), k_f_sub(spec)):
                    for X in all_subgroups(G):
                        with self.subTest(group=name, policy=policy.label, node=X.node_id):
                            self.assertEqual(is_subnormal(G, X, policy), brute_force_oracle(G, X, policy))
        G39 = group("G39")
        self.assertTrue(brute_force_oracle(G39, sylow(G39, 3), f_sub(FormationSpec.u_k(1))))

    def test_oracle_cap(self):
        with self.assertRaises(CapacityError):
            brute_force_oracle(group("A5"), sylow(group("A5"), 2), P_SUB)


class TestClasses(unittest.TestCase):
    def test_h_t(self):
        self.assertTrue(in_class_Ht(group("S3"), 1))
        self.assertTrue(in_class_Ht(group("D4"), 1))
        self.assertFalse(in_class_Ht(group("A4"), 3))
        self.assertFalse(in_class_Ht(group("S4"), 3))
        self.assertFalse(in_class_Ht(group("G39"), 1))
        self.assertTrue(in_class_Ht(group("G39"), 2))

    def test_admissibility_boundaries(self):
        # 5 - 1 = 2^2: t = 1 excludes index-5 steps, t = 2 allows them
        self.assertFalse(in_class_Ht(group("Hol5"), 1))
        self.assertTrue(in_class_Ht(group("Hol5"), 2))
        self.assertFalse(in_ut0(group("D5"), 1))
        self.assertTrue(in_ut0(group("D5"), 2))

    def test_soluble_not_supersoluble(self):
        G = group("V7_S3")
        self.assertEqual(G.order(), 294)
        for t in (1, 2):
            self.assertTrue(in_class_Ht(G, t))
            self.assertFalse(in_ut0(G, t))

    def test_one_sylow_per_prime_is_enough(self):
        for name in ("S3", "A4", "S4", "G39"):
            for t in (1, 2):
                G = group(name)
                self.assertEqual(in_class_Ht(G, t), in_class_Ht_all_sylows(G, t))

    def test_other_classes(self):
        self.assertTrue(in_class_wbarU(group("S3")))
        self.assertFalse(in_class_wbarU(group("S4")))
        self.assertTrue(in_ut0(group("S3"), 1))
        self.assertFalse(in_ut0(group("A4"), 2))
        self.assertTrue(in_wF(group("S3"), FormationSpec.supersoluble()))
        self.assertFalse(in_wF(group("A5"), FormationSpec.nilpotent()))
        self.assertFalse(in_wF(group("S3"), FormationSpec.p_groups(2)))


if __name__ == "__main__":
    unittest.main()
