#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Unit tests for run_suite.py."""

import io
import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from pluckerize import enumerations as enums
from pluckerize import random_number_generator as rng
from pluckerize.program_state import CheckRecord, RunReport, record_from_bool
from pluckerize.tools import run_suite

TINY = run_suite.SuiteScale(
	grassmannians=((2, 4),),
	straightening_samples=5,
	basis_max_n=2,
	basis_max_degree=1,
	relation_grassmannians=(),
	mod3_max_rank=2,
	sph_max_n=4,
	mod1_max_rank=1,
	mod2_cases=(),
	sph_cases=(),
	wseq_max_rank=2,
	orbit_max_rank=2,
)


class TestRunSuite(unittest.TestCase):
	"""Test cases for run_suite.py functions."""

	def setUp(self):
		"""Set up a temporary output directory."""
		self.temp_dir = tempfile.mkdtemp()
		self.output = os.path.join(self.temp_dir, "report.json")

	def tearDown(self):
		"""Remove the temporary files."""
		if os.path.exists(self.output):
			os.remove(self.output)
		os.rmdir(self.temp_dir)

	def test_sph_parameters(self):
		"""Test the admissible (n, p) pairs."""
		self.assertEqual(run_suite.sph_parameters(5), [(4, 2), (5, 2), (5, 3)])
		self.assertEqual(run_suite.sph_parameters(3), [])

	def test_scales(self):
		"""Test that both scales are defined."""
		self.assertEqual(sorted(run_suite.SCALES), ["full", "small"])
		self.assertLessEqual(run_suite.SCALES["small"].mod3_max_rank, run_suite.SCALES["full"].mod3_max_rank)

	def test_check_H1(self):
		"""Test the H1 job for a model and an sph case."""
		for args in ((enums.Family.C, 3), ("sph", 5, 3)):
			with self.subTest(args=args):
				record = run_suite.check_H1(*args)
				self.assertEqual(record.check, enums.CheckName.H1.value)
				self.assertTrue(record.passed, record.witness)

	def test_collect_records(self):
		"""Test a tiny sweep end to end."""
		records = run_suite.collect_records(TINY, rng.RandomNumberGenerator(0))
		self.assertEqual(len(records), 28)
		self.assertTrue(all(record.passed for record in records), [r.to_dict() for r in records if not r.passed])
		checks = {record.check for record in records}
		self.assertIn("straightening", checks)
		self.assertIn(enums.CheckName.IP6_ORBIT.value, checks)
		self.assertIn("sl3-nonstability", checks)
		self.assertIn(enums.CheckName.H1.value, checks)
		self.assertIn(enums.CheckName.GRADO_ROOTS.value, checks)

	def test_write_report(self):
		"""Test the sorted JSON file with and without timing."""
		report = RunReport("suite", {"scale": "small", "seed": 0}, [record_from_bool("mod3", True, "A", 2)], duration=2.0)
		run_suite.write_report(report, Path(self.output))
		with open(self.output, encoding="utf-8") as file:
			written = json.load(file)
		self.assertEqual(written["status"], "pass")
		self.assertNotIn("duration", written)
		run_suite.write_report(report, Path(self.output), timing=True)
		with open(self.output, encoding="utf-8") as file:
			self.assertEqual(json.load(file)["duration"], 2.0)

	def test_main(self):
		"""Test the command line entry point on the tiny scale."""
		with patch.dict(run_suite.SCALES, {"small": TINY}):
			with patch("sys.stdout", new_callable=io.StringIO) as stdout:
				code = run_suite.main(["--output", self.output])
		self.assertEqual(code, 0)
		self.assertIn("pass: 28 checks written to", stdout.getvalue())
		with open(self.output, encoding="utf-8") as file:
			written = json.load(file)
		self.assertEqual(written["command"], "suite")
		self.assertEqual(written["parameters"], {"scale": "small", "seed": 0})

	def test_main_exit_code_on_error(self):
		"""Test that an ERROR record gives the resource bound exit code."""
		error = CheckRecord(check="mod1", status=enums.Status.ERROR, message="too large")
		with patch.object(run_suite, "collect_records", return_value=[error]):
			with patch("sys.stdout", new_callable=io.StringIO):
				code = run_suite.main(["--output", self.output])
		self.assertEqual(code, enums.ExitCode.RESOURCE_BOUND)


if __name__ == "__main__":
	unittest.main()
