import json
import os
import unittest
from unittest import mock

import yaml
from click.testing import CliRunner

from mdsieve.cli import mdsieve
from mdsieve.util import hash_file

ENUMERATION_2X2 = (
    "# rows=2 cols=2 classes=7\n"
    "1\t1\t0,0\n"
    "2\t4\t0,1\n"
    "3\t2\t0,3\n"
    "4\t2\t1,1\n"
    "5\t2\t1,2\n"
    "6\t4\t1,3\n"
    "7\t1\t3,3\n"
)


class CountCommandTest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def test_2x2(self):
        result = self.runner.invoke(mdsieve, ["count", "--rows", "2", "--cols", "2"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "classes=7\n")

    def test_short_flags(self):
        result = self.runner.invoke(mdsieve, ["count", "-m", "1", "-n", "1"])
        self.assertEqual(result.output, "classes=2\n")

    def test_3x3(self):
        result = self.runner.invoke(mdsieve, ["count", "-m", "3", "-n", "3"])
        self.assertEqual(result.output, "classes=64\n")

    def test_by_weight(self):
        result = self.runner.invoke(mdsieve, ["count", "-m", "2", "-n", "2", "--by-weight"])
        self.assertEqual(
            result.output,
            "classes=7\nweight=0 classes=1\nweight=1 classes=1\nweight=2 classes=3\n"
            "weight=3 classes=1\nweight=4 classes=1\n",
        )

    def test_infeasible(self):
        result = self.runner.invoke(mdsieve, ["count", "-m", "6", "-n", "6"])
        self.assertEqual(result.exit_code, 1)
        self.assertIn("feasibility bound 30", result.output)

    def test_env_bound(self):
        result = self.runner.invoke(mdsieve, ["count", "-m", "2", "-n", "2"], env={"MDSIEVE_MAX_MN": "3"})
        self.assertEqual(result.exit_code, 1)
        self.assertIn("feasibility bound 3", result.output)

    def test_flag_beats_env(self):
        result = self.runner.invoke(
            mdsieve, ["count", "-m", "2", "-n", "2", "--max-mn", "4"], env={"MDSIEVE_MAX_MN": "3"}
        )
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "classes=7\n")

    def test_zero_rows(self):
        result = self.runner.invoke(mdsieve, ["count", "-m", "0", "-n", "2"])
        self.assertNotEqual(result.exit_code, 0)


class EnumerateCommandTest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def test_1x1(self):
        result = self.runner.invoke(mdsieve, ["enumerate", "-m", "1", "-n", "1"])
        self.assertEqual(result.output, "# rows=1 cols=1 classes=2\n1\t1\t0\n2\t1\t1\n")

    def test_2x2(self):
        result = self.runner.invoke(mdsieve, ["enumerate", "-m", "2", "-n", "2"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, ENUMERATION_2X2)

    def test_matrix_format(self):
        result = self.runner.invoke(mdsieve, ["enumerate", "-m", "2", "-n", "2", "--format", "matrix"])
        lines = result.output.split("\n")
        self.assertEqual(lines[:7], ["# rows=2 cols=2 classes=7", "1\t1\t0,0", "00", "00", "2\t4\t0,1", "00", "01"])
        self.assertEqual(len(lines), 1 + 7 * 3 + 1)

    def test_yaml_format(self):
        result = self.runner.invoke(mdsieve, ["enumerate", "-m", "2", "-n", "2", "--format", "yaml"])
        data = yaml.safe_load(result.output)
        self.assertEqual(data["class_count"], 7)
        self.assertEqual(data["records"][1]["representative"], [0, 1])

    def test_json_format(self):
        result = self.runner.invoke(mdsieve, ["enumerate", "-m", "2", "-n", "3", "--format", "json"])
        data = json.loads(result.output)
        self.assertEqual(data["class_count"], 14)
        self.assertEqual(sum(r["orbit_size"] for r in data["records"]), 64)

    def test_out_file_is_deterministic(self):
        with self.runner.isolated_filesystem():
            for name in ("a.txt", "b.txt"):
                result = self.runner.invoke(mdsieve, ["enumerate", "-m", "3", "-n", "3", "--out", name])
                self.assertEqual(result.exit_code, 0)
                self.assertEqual(result.output, "")
            self.assertEqual(hash_file("a.txt"), hash_file("b.txt"))
            with open("a.txt", "rb") as f:
                content = f.read()
            self.assertTrue(content.startswith(b"# rows=3 cols=3 classes=64\n1\t1\t0,0,0\n"))
            self.assertNotIn(b"\r", content)
            self.assertEqual(content.count(b"\n"), 65)

    def test_tuple_streams_without_report(self):
        with mock.patch("mdsieve.cli.enumerate_classes", side_effect=AssertionError):
            result = self.runner.invoke(mdsieve, ["enumerate", "-m", "2", "-n", "2"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, ENUMERATION_2X2)

    def test_infeasible_leaves_no_file(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(mdsieve, ["enumerate", "-m", "6", "-n", "6", "--out", "x.txt"])
            self.assertEqual(result.exit_code, 1)
            self.assertFalse(os.path.exists("x.txt"))

    def test_unwritable(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(mdsieve, ["enumerate", "-m", "1", "-n", "1", "--out", "missing/dir/x.txt"])
            self.assertNotEqual(result.exit_code, 0)

    def test_same_count_as_count(self):
        enumerated = self.runner.invoke(mdsieve, ["enumerate", "-m", "3", "-n", "4"])
        counted = self.runner.invoke(mdsieve, ["count", "-m", "3", "-n", "4"])
        header = enumerated.output.split("\n")[0]
        self.assertEqual(header.split()[-1], counted.output.strip())


class VerifyCommandTest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def test_2x2(self):
        result = self.runner.invoke(mdsieve, ["verify", "-m", "2", "-n", "2"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "sieve=7 burnside=7 brute=7 status=ok\n")

    def test_1x1(self):
        result = self.runner.invoke(mdsieve, ["verify", "-m", "1", "-n", "1"])
        self.assertEqual(result.output, "sieve=2 burnside=2 brute=2 status=ok\n")

    def test_4x4(self):
        result = self.runner.invoke(mdsieve, ["verify", "-m", "4", "-n", "4"])
        self.assertEqual(result.output, "sieve=4156 burnside=4156 brute=4156 status=ok\n")

    def test_brute_skipped(self):
        result = self.runner.invoke(mdsieve, ["verify", "-m", "3", "-n", "6"])
        self.assertEqual(result.exit_code, 0)
        self.assertRegex(result.output, r"^sieve=(\d+) burnside=\1 brute=skipped status=ok\n$")

    def test_generic(self):
        result = self.runner.invoke(mdsieve, ["verify", "-m", "2", "-n", "3", "--generic"])
        self.assertEqual(result.output, "sieve=14 burnside=14 brute=14 generic=14 status=ok\n")

    def test_mismatch(self):
        with mock.patch("mdsieve.cli.burnside_count") as burnside:
            burnside.return_value.total = 8
            result = self.runner.invoke(mdsieve, ["verify", "-m", "2", "-n", "2"])
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(result.output, "sieve=7 burnside=8 brute=7 status=MISMATCH\n")


class PrimesCommandTest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def test_10(self):
        result = self.runner.invoke(mdsieve, ["primes", "--limit", "10"])
        self.assertEqual(result.output, "2\n3\n5\n7\n")

    def test_2(self):
        result = self.runner.invoke(mdsieve, ["primes", "--limit", "2"])
        self.assertEqual(result.output, "2\n")

    def test_100(self):
        result = self.runner.invoke(mdsieve, ["primes", "--limit", "100"])
        self.assertEqual(len(result.output.splitlines()), 25)

    def test_too_small(self):
        result = self.runner.invoke(mdsieve, ["primes", "--limit", "1"])
        self.assertEqual(result.exit_code, 1)
        self.assertIn("at least 2", result.output)


class BurnsideCommandTest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def test_plain(self):
        result = self.runner.invoke(mdsieve, ["burnside", "-m", "2", "-n", "2"])
        self.assertEqual(
            result.output,
            "shift=0,0 fixed=16\nshift=0,1 fixed=4\nshift=1,0 fixed=4\nshift=1,1 fixed=4\nclasses=7\n",
        )

    def test_json(self):
        result = self.runner.invoke(mdsieve, ["burnside", "-m", "6", "-n", "6", "--formatter", "json"])
        self.assertEqual(result.exit_code, 0)
        data = json.loads(result.output)
        self.assertEqual(data["per_shift_fixed"]["0,0"], 2**36)

