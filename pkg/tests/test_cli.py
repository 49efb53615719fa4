import io
import tempfile
import unittest
from contextlib import redirect_stderr
from pathlib import Path

from rich.console import Console

from config.settings import LatticeRunConfig, QueryConfig
from utils.errors import ArgumentError
from sublab import main, parse_t_list, run_lattice, run_query


def capture():
    buffer = io.StringIO()
    return buffer, Console(file=buffer, width=200, color_system=None)


class TestQuery(unittest.TestCase):
    def test_a5_klein_subgroup_is_kpt2(self):
        buffer, console = capture()
        cfg = QueryConfig("builtin:A5", "(1 2)(3 4), (1 3)(2 4)", "kpt", t=2, show_witness=True)
        self.assertEqual(run_query(cfg, console), 0)
        lines = buffer.getvalue().splitlines()
        self.assertEqual(lines[0], "true")
        # start + two steps
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[-1].startswith("order=60 "))

    def test_false_verdict(self):
        buffer, console = capture()
        cfg = QueryConfig("builtin:A5", "(1 2)(3 4), (1 3)(2 4)", "subnormal")
        self.assertEqual(run_query(cfg, console), 1)
        self.assertEqual(buffer.getvalue().strip(), "false")

    def test_whole_group(self):
        buffer, console = capture()
        cfg = QueryConfig("builtin:S3", "(1 2 3), (1 2)", "psub", show_witness=True)
        self.assertEqual(run_query(cfg, console), 0)
        self.assertEqual(buffer.getvalue().strip(), "true")

    def test_exit_codes(self):
        with redirect_stderr(io.StringIO()):
            self.assertEqual(main(["query", "--group", "builtin:S3", "--subgroup", "(1 2)", "--policy", "nope"]), 2)
            self.assertEqual(main(["query", "--group", "builtin:S3", "--subgroup", "(1 4)", "--policy", "psub"]), 2)
            self.assertEqual(main(["query", "--group", "builtin:Q8", "--subgroup", "(1 2)", "--policy", "psub"]), 2)
            with self.assertRaises(SystemExit) as ctx:
                main(["query", "--group", "builtin:S3"])
        self.assertEqual(ctx.exception.code, 2)

    def test_invalid_t(self):
        with redirect_stderr(io.StringIO()):
            self.assertEqual(
                main(["query", "--group", "builtin:S3", "--subgroup", "(1 2)", "--policy", "kpt", "--t", "9"]), 2
            )


class TestVerifyAndLattice(unittest.TestCase):
    def test_parse_t_list(self):
        self.assertEqual(parse_t_list("1,2, 3"), (1, 2, 3))
        with self.assertRaises(ArgumentError):
            parse_t_list("1,x")

    def test_verify_writes_report(self):
        with tempfile.TemporaryDirectory() as tmp:
            tmp = Path(tmp)
            listing = tmp / "corpus.txt"
            listing.write_text("builtin:S3\nbuiltin:D4\n", encoding="utf-8")
            report = tmp / "report.txt"
            code = main([
                "verify", "--suite", "THEOREM_3_4", "--t", "1,2",
                "--corpus", str(listing), "--report", str(report),
            ])
            text = report.read_text(encoding="utf-8")
        self.assertEqual(code, 0)
        self.assertTrue(text.startswith("SUITE THEOREM_3_4\n"))
        self.assertIn("CASE D4 t=2 wU_t0=pass", text)
        self.assertTrue(text.endswith("TOTAL pass=4 fail=0 skip=0\n"))

    def test_unknown_suite(self):
        with redirect_stderr(io.StringIO()):
            self.assertEqual(main(["verify", "--suite", "LEMMA_9_9"]), 2)

    def test_lattice_table_and_dot(self):
        buffer, console = capture()
        self.assertEqual(run_lattice(LatticeRunConfig("builtin:S3"), console), 0)
        self.assertIn("Covered by", buffer.getvalue())
        with tempfile.TemporaryDirectory() as tmp:
            dot = Path(tmp) / "s3.dot"
            self.assertEqual(run_lattice(LatticeRunConfig("builtin:S3", dot_path=dot), console), 0)
            self.assertIn("order=3 normal=1", dot.read_text(encoding="utf-8"))


if __name__ == "__main__":
    unittest.main()
