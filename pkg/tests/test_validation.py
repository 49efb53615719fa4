import unittest

from config.settings import PAIR_CHECK_ORDER_CAP
from corpus.corpus import Corpus
from corpus.recipes import recipe_from_name
from validation.base_suite import BaseSuite, CaseResult, Outcome, Report, SuiteId, first_failure, run_cases
from validation.registry import SUITE_REGISTRY, create_suite, parse_suite_ids, run_suite
from utils.errors import ArgumentError, CapacityError, MembershipError


def small_corpus(*names):
    corpus = Corpus()
    for name in names:
        corpus.add_recipe(recipe_from_name(name))
    return corpus


class CapacitySuite(BaseSuite):
    suite_id = SuiteId.LEMMA_1_1
    uses_t = False

    def cases(self, entry, t):
        if entry.order > 6:
            raise CapacityError("too big")
        if entry.order == 6:
            raise MembershipError("bad subgroup")
        return [self.verdict(entry, t, "trivial", True)]


class TestCaseResult(unittest.TestCase):
    def test_line_format(self):
        case = CaseResult("S3", 2, "kpt", Outcome.FAIL, "node3:order2")
        self.assertEqual(case.to_line(), "CASE S3 t=2 kpt=fail node3:order2")
        self.assertEqual(CaseResult("S3", None, "x", Outcome.PASS).to_line(), "CASE S3 t=- x=pass")

    def test_report_lines(self):
        report = Report(SuiteId.THEOREM_3_4, [
            CaseResult("Z2", 1, "b", Outcome.PASS),
            CaseResult("S3", 1, "a", Outcome.SKIP, "order>60"),
            CaseResult("S3", 1, "a", Outcome.FAIL, "x"),
        ], wall_time=3.5)
        self.assertEqual(report.lines(), [
            "SUITE THEOREM_3_4",
            "CASE S3 t=1 a=skip order>60",
            "CASE S3 t=1 a=fail x",
            "CASE Z2 t=1 b=pass",
            "TOTAL pass=1 fail=1 skip=1",
        ])
        self.assertFalse(report.ok)

    def test_first_failure(self):
        self.assertEqual(first_failure([]), "")
        self.assertEqual(first_failure([3, 5, 7]), "3 (+2 more)")
        self.assertEqual(first_failure([("a", "b")]), "a/b")


class TestHarness(unittest.TestCase):
    def test_errors_become_cases(self):
        report = run_cases(CapacitySuite(), small_corpus("Z2", "S3", "A4"), [1])
        by_group = {c.group: c for c in report.cases}
        self.assertEqual(by_group["Z2"].outcome, Outcome.PASS)
        self.assertEqual(by_group["S3"].check, "error")
        self.assertEqual(by_group["S3"].outcome, Outcome.FAIL)
        self.assertEqual(by_group["A4"].check, "capacity")
        self.assertEqual(by_group["A4"].outcome, Outcome.SKIP)
        self.assertIsNone(by_group["Z2"].t)

    def test_pair_cap_skips(self):
        report = run_suite(SuiteId.LEMMA_1_4, small_corpus("A5"), [1])
        self.assertEqual(report.passed + report.failed, 0)
        self.assertTrue(all(c.detail == f"order>{PAIR_CHECK_ORDER_CAP}" for c in report.cases))

    def test_jobs_do_not_change_report(self):
        corpus = small_corpus("S3", "D4", "A4", "Z6")
        one = run_suite(SuiteId.THEOREM_3_4, corpus, [1, 2], jobs=1)
        two = run_suite(SuiteId.THEOREM_3_4, corpus, [1, 2], jobs=2)
        self.assertEqual(one.lines(), two.lines())
        self.assertEqual(one.passed, 8)


class TestSuites(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.corpus = small_corpus("S3", "D4", "Q8", "A4", "Z6", "S4", "G39")

    def assertSuitePasses(self, suite_id, t_values=(1, 2)):
        report = run_suite(suite_id, self.corpus, t_values)
        failures = [c.to_line() for c in report.cases if c.outcome is Outcome.FAIL]
        self.assertEqual(failures, [], suite_id.value)
        self.assertGreater(report.passed, 0)
        return report

    def test_worked_examples(self):
        report = self.assertSuitePasses(SuiteId.EXAMPLES_PAPER)
        self.assertEqual(report.skipped, 0)
        self.assertEqual({c.group for c in report.cases}, {"Hol17", "A5", "SD13_3"})

    def test_automizers(self):
        self.assertSuitePasses(SuiteId.LEMMA_1_1)

    def test_conjugation_and_transitivity(self):
        self.assertSuitePasses(SuiteId.LEMMA_2_1)

    def test_oracle(self):
        self.assertSuitePasses(SuiteId.ORACLE_EQUIV, t_values=(1,))

    def test_local_definitions(self):
        self.assertSuitePasses(SuiteId.THEOREM_3_2)
        self.assertSuitePasses(SuiteId.THEOREM_3_3)

    def test_formation_axioms(self):
        self.assertSuitePasses(SuiteId.FORMATION_AXIOMS, t_values=(1,))

    def test_factorizations(self):
        report = self.assertSuitePasses(SuiteId.LEMMA_1_3_FWD)
        checks = {c.group: c.check for c in report.cases}
        self.assertEqual(checks["S3"], "factorization")
        self.assertEqual(checks["A4"], "no_factorization")

    def test_sylow_conditions(self):
        self.assertSuitePasses(SuiteId.LEMMA_1_2)
        self.assertSuitePasses(SuiteId.LEMMA_1_5)
        self.assertSuitePasses(SuiteId.LEMMA_1_6)

    def test_pair_checks_below_cap(self):
        report = self.assertSuitePasses(SuiteId.LEMMA_1_4)
        self.assertEqual(report.skipped, 0)

    def test_quotients_and_intersections(self):
        self.assertSuitePasses(SuiteId.LEMMA_2_2)
        self.assertSuitePasses(SuiteId.LEMMA_2_3)
        self.assertSuitePasses(SuiteId.LEMMA_2_4)

    def test_class_h_t(self):
        self.assertSuitePasses(SuiteId.THEOREM_3_1)
        report = self.assertSuitePasses(SuiteId.THEOREM_3_4)
        self.assertEqual(report.passed, 2 * len(self.corpus))

    def test_sylow_inheritance(self):
        self.assertSuitePasses(SuiteId.LEMMA_3_1)
        self.assertSuitePasses(SuiteId.LEMMA_3_2)

    def test_local_definitions_differ_on_affine_plane(self):
        corpus = small_corpus("V7_S3")
        for suite_id, check in ((SuiteId.THEOREM_3_2, "local_F"), (SuiteId.THEOREM_3_3, "local_X")):
            report = run_suite(suite_id, corpus, [1])
            self.assertEqual([c.to_line() for c in report.cases], [f"CASE V7_S3 t=1 {check}=pass"])


class TestRegistry(unittest.TestCase):
    def test_every_suite_registered(self):
        self.assertEqual(set(SUITE_REGISTRY), set(SuiteId))
        for suite_id in SuiteId:
            self.assertEqual(create_suite(suite_id).suite_id, suite_id)

    def test_parse_suite_ids(self):
        self.assertEqual(len(parse_suite_ids("all")), len(SuiteId))
        self.assertEqual(
            parse_suite_ids("lemma_1_1, THEOREM_3_4"),
            [SuiteId.LEMMA_1_1, SuiteId.THEOREM_3_4],
        )
        with self.assertRaises(ArgumentError):
            parse_suite_ids("LEMMA_9_9")
        with self.assertRaises(ArgumentError):
            parse_suite_ids(" , ")

    def test_run_suite_arguments(self):
        with self.assertRaises(ArgumentError):
            run_suite(SuiteId.THEOREM_3_4, Corpus(), [1])
        with self.assertRaises(ArgumentError):
            run_suite(SuiteId.THEOREM_3_4, small_corpus("S3"), [0])
        with self.assertRaises(ArgumentError):
            run_suite(SuiteId.THEOREM_3_4, small_corpus("S3"), [])


if __name__ == "__main__":
    unittest.main()
