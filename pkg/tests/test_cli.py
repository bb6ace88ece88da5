"""Tests for the command-line entry point"""

import contextlib
import io
import sys
import tempfile
from pathlib import Path
import unittest
from unittest import mock

import yaml

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.graphs.factorization import FactorizationMemo, factorization_count
from src.main import EXIT_FAILED_CHECK, EXIT_OK, EXIT_USAGE, RunConfig, report, run
from src.utils.output_saver import CheckResult


class TestCommandLine(unittest.TestCase):
    """Test cases for run()"""

    def setUp(self):
        """Set up a private memo cache and output directory"""
        self.tmp = tempfile.TemporaryDirectory()
        self.memo = str(Path(self.tmp.name) / "memo.txt")

    def tearDown(self):
        """Clean up temporary files"""
        self.tmp.cleanup()

    def invoke(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            status = run(list(argv))
        return status, stdout.getvalue()

    def test_count_rectangles(self):
        """Test R_(3,6) in machine format"""
        status, out = self.invoke("count-rectangles", "--k", "3", "--n", "6", "--format", "machine", "--memo-cache", self.memo)
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.strip(), "1064")
        self.assertTrue(Path(self.memo).exists())

    def test_count_squares_any_degree(self):
        """Test that R_5 is the same via k = 2 and k = 3"""
        outputs = []
        for via_k in ("2", "3"):
            status, out = self.invoke("count-squares", "--n", "5", "--via-k", via_k, "--format", "machine", "--memo-cache", self.memo)
            self.assertEqual(status, EXIT_OK)
            outputs.append(out.strip())
        self.assertEqual(outputs, ["56", "56"])

    def test_human_output(self):
        """Test the grouped human rendering"""
        status, out = self.invoke("count-squares", "--n", "6", "--memo-cache", self.memo)
        self.assertEqual(status, EXIT_OK)
        self.assertIn("R_6 = 9408", out)

    def test_verify_published(self):
        """Test that every published check passes"""
        status, out = self.invoke("verify-published", "--format", "machine")
        self.assertEqual(status, EXIT_OK)
        self.assertIn("PASS r11-residue", out)
        self.assertNotIn("FAIL", out)

    def test_divisors(self):
        """Test the divisor lines for n = 9"""
        status, out = self.invoke("divisors", "--n", "9", "--format", "machine")
        self.assertEqual(status, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[:2], ["PREDICTED 9 24", "FACTORIAL 9 24"])
        self.assertTrue(all(line.startswith("PASS") for line in lines[2:]))

    def test_factorize(self):
        """Test factoring a value and a published R_n"""
        status, out = self.invoke("factorize", "56", "--format", "machine")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.splitlines(), ["56 2^3 * 7", "V2 3"])
        status, out = self.invoke("factorize", "--n", "8", "--format", "machine")
        self.assertEqual(status, EXIT_OK)
        self.assertIn("2^17 * 3 * 1361291", out)
        status, _ = self.invoke("factorize", "56", "--n", "8")
        self.assertEqual(status, EXIT_USAGE)

    def test_enumerate_graphs(self):
        """Test the 2-regular class count for n = 11"""
        status, out = self.invoke("enumerate-graphs", "--n", "11", "--k", "2", "--format", "machine")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.strip(), "CLASSES 11 2 14")

    def test_enumerate_graphs_show(self):
        """Test printing classes in BGF format"""
        status, out = self.invoke("enumerate-graphs", "--n", "3", "--k", "1", "--show", "--format", "machine")
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(out.startswith("BGF 3 1\n"))

    def test_permanent_count(self):
        """Test L_3 with a non-trivial polynomial"""
        status, out = self.invoke("permanent-count", "--n", "3", "--poly", "2,-1", "--format", "machine")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.splitlines()[0], "12")
        self.assertIn("PASS permanent-n3", out)

    def test_census_extremal(self):
        """Test the census lines for n = 5"""
        status, out = self.invoke("census-extremal", "--n", "5", "--format", "machine", "--memo-cache", self.memo)
        self.assertEqual(status, EXIT_OK)
        census_lines = [line for line in out.splitlines() if line.startswith("CENSUS")]
        self.assertEqual(len(census_lines), 2)
        self.assertTrue(census_lines[1].startswith("CENSUS 5 3 46 "))
        self.assertTrue(census_lines[1].endswith(" 4 1 6"))

    def test_interrupted_census_resumes(self):
        """Test that a resumed census prints exactly what an uninterrupted one prints"""
        argv = ("census-extremal", "--n", "6", "--format", "machine")
        calls = []

        def interrupted(*args, **kwargs):
            if len(calls) >= 6:
                raise KeyboardInterrupt
            calls.append(1)
            return factorization_count(*args, **kwargs)

        with mock.patch("src.census.formulas.factorization_count", side_effect=interrupted):
            with self.assertRaises(KeyboardInterrupt):
                self.invoke(*argv, "--memo-cache", self.memo)
        self.assertGreater(len(FactorizationMemo.load(self.memo)), 0)

        resumed = self.invoke(*argv, "--memo-cache", self.memo)
        fresh = self.invoke(*argv, "--memo-cache", str(Path(self.tmp.name) / "fresh.memo"))
        self.assertEqual(resumed, fresh)
        self.assertEqual(resumed[0], EXIT_OK)

    def test_symmetry_census(self):
        """Test the SYM line with spot checks"""
        status, out = self.invoke("symmetry-census", "--n", "4", "--spot-checks", "10", "--format", "machine")
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(out.startswith("SYM 4 4 4 1/1 "))
        self.assertIn("PASS symmetry-invariance-n4", out)

    def test_reproduce_tables_and_save(self):
        """Test table reproduction and saved reports with a custom config"""
        config_path = Path(self.tmp.name) / "config.yaml"
        output_dir = Path(self.tmp.name) / "outputs"
        config_path.write_text(yaml.safe_dump({
            'census': {'workers': 1, 'memo_cache': self.memo},
            'output': {'format': 'machine', 'directory': str(output_dir)},
        }), encoding='utf-8')
        status, out = self.invoke("reproduce-tables", "--max-n", "5", "--save", "--config", str(config_path))
        self.assertEqual(status, EXIT_OK)
        self.assertIn("PASS table-n5-k3 computed 46, published 46", out)
        self.assertIn("PASS extremal-n5-k3", out)
        self.assertEqual(len(list(output_dir.glob("census_tables_*.json"))), 1)
        self.assertEqual(len(list(output_dir.glob("census_report_*.md"))), 1)

    def test_budgets_from_config(self):
        """Test that budget keys in the config file limit each command"""
        config_path = Path(self.tmp.name) / "config.yaml"
        for budgets, argv in (
            ({'autoparatopism_max_n': 3}, ("symmetry-census", "--n", "4")),
            ({'enumerate_reduced_max_n': 3}, ("symmetry-census", "--n", "4")),
            ({'matchings_max_n': 4}, ("census-extremal", "--n", "5", "--memo-cache", self.memo)),
        ):
            with self.subTest(budgets=budgets):
                config_path.write_text(yaml.safe_dump({'budgets': budgets}), encoding='utf-8')
                status, _ = self.invoke(*argv, "--format", "machine", "--config", str(config_path))
                self.assertEqual(status, EXIT_USAGE)
        config_path.write_text(yaml.safe_dump({'budgets': {'autoparatopism_max_n': 4}}), encoding='utf-8')
        status, out = self.invoke("symmetry-census", "--n", "4", "--format", "machine", "--config", str(config_path))
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(out.startswith("SYM 4 4 4 1/1 "))

    def test_usage_errors(self):
        """Test unknown flags, missing commands and bad settings"""
        self.assertEqual(self.invoke("count-rectangles", "--bogus")[0], EXIT_USAGE)
        self.assertEqual(self.invoke()[0], EXIT_USAGE)
        self.assertEqual(self.invoke("count-rectangles", "--k", "2", "--n", "4", "--workers", "0")[0], EXIT_USAGE)
        self.assertEqual(self.invoke("verify-published", "--config", str(Path(self.tmp.name) / "missing.yaml"))[0], EXIT_USAGE)

    def test_domain_errors(self):
        """Test that budget and shape errors exit with status 1"""
        status, _ = self.invoke("count-rectangles", "--k", "3", "--n", "9", "--memo-cache", self.memo)
        self.assertEqual(status, EXIT_USAGE)
        status, _ = self.invoke("count-rectangles", "--k", "5", "--n", "4", "--memo-cache", self.memo)
        self.assertEqual(status, EXIT_USAGE)

    def test_help(self):
        """Test that --help exits cleanly"""
        self.assertEqual(self.invoke("--help")[0], EXIT_OK)

    def test_failed_check_status(self):
        """Test that a failing check line gives exit status 2"""
        run_config = RunConfig("verify-published", {}, output_format="machine")
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            status = report(run_config, [CheckResult("table-n6-k6", False, "computed 9407, published 9408")])
        self.assertEqual(status, EXIT_FAILED_CHECK)
        self.assertEqual(stdout.getvalue(), "FAIL table-n6-k6 computed 9407, published 9408\n")


if __name__ == '__main__':
    unittest.main()
