import io
import tempfile
import unittest
from pathlib import Path

import pandas as pd
from rich.console import Console

from reporting.summary import (
    cases_to_dataframe,
    emit_report,
    outcome_counts,
    print_failures,
    print_suite_summary,
    report_text,
    save_cases_to_csv,
)
from utils.errors import ReportWriteError
from validation.base_suite import CaseResult, Outcome, Report, SuiteId


def sample_reports():
    return [
        Report(SuiteId.LEMMA_1_1, [CaseResult("S3", None, "automizer", Outcome.PASS)], wall_time=0.2),
        Report(SuiteId.THEOREM_3_4, [
            CaseResult("S3", 1, "wU_t0", Outcome.PASS),
            CaseResult("A4", 1, "wU_t0", Outcome.FAIL, "mismatch"),
            CaseResult("A5", 2, "wU_t0", Outcome.SKIP, "order>60"),
        ], wall_time=1.7),
    ]


class TestReportText(unittest.TestCase):
    def test_text_has_no_times(self):
        text = report_text(sample_reports())
        self.assertTrue(text.startswith("SUITE LEMMA_1_1\nCASE S3 t=- automizer=pass\n"))
        self.assertIn("TOTAL pass=1 fail=1 skip=1\n", text)
        self.assertNotIn("1.7", text)

    def test_emit_is_deterministic(self):
        with tempfile.TemporaryDirectory() as tmp:
            a = emit_report(sample_reports(), Path(tmp) / "a.txt")
            shuffled = sample_reports()
            shuffled[1].cases.reverse()
            b = emit_report(shuffled, Path(tmp) / "b.txt")
            self.assertEqual(a.read_bytes(), b.read_bytes())
            single = emit_report(sample_reports()[0], Path(tmp) / "c.txt")
            self.assertEqual(single.read_text(encoding="utf-8").count("SUITE"), 1)

    def test_unwritable_path(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(ReportWriteError) as ctx:
                emit_report(sample_reports(), Path(tmp) / "missing" / "r.txt")
            self.assertEqual(ctx.exception.path.name, "r.txt")


class TestDataFrames(unittest.TestCase):
    def test_cases_to_dataframe(self):
        df = cases_to_dataframe(sample_reports())
        self.assertEqual(list(df.columns), ["suite", "group", "t", "check", "outcome", "detail"])
        self.assertEqual(len(df), 4)
        self.assertTrue(pd.isna(df.loc[0, "t"]))
        self.assertEqual(str(df["t"].dtype), "Int64")

    def test_outcome_counts(self):
        counts = outcome_counts(sample_reports())
        row = counts[counts["suite"] == "THEOREM_3_4"].iloc[0]
        self.assertEqual((row["pass"], row["fail"], row["skip"]), (1, 1, 1))

    def test_csv_export(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = save_cases_to_csv(sample_reports(), Path(tmp) / "cases.csv")
            df = pd.read_csv(path)
        self.assertEqual(len(df), 4)
        self.assertEqual(set(df["outcome"]), {"pass", "fail", "skip"})


class TestConsoleOutput(unittest.TestCase):
    def test_summary_and_failures(self):
        buffer = io.StringIO()
        console = Console(file=buffer, width=120, color_system=None)
        print_suite_summary(sample_reports(), console)
        print_failures(sample_reports(), console)
        out = buffer.getvalue()
        self.assertIn("THEOREM_3_4", out)
        self.assertIn("1 failing case(s)", out)
        self.assertIn("CASE A4 t=1 wU_t0=fail mismatch", out)


if __name__ == "__main__":
    unittest.main()
