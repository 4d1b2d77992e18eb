#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test the ProgramState class and the report containers."""

import unittest

from pluckerize import constants
from pluckerize import enumerations as enums
from pluckerize.program_state import CheckRecord, ProgramState, RunReport, record_from_bool


class TestProgramState(unittest.TestCase):
	"""Test the ProgramState class."""

	def setUp(self):
		"""Create a program state object for testing."""
		self.state = ProgramState()

	def test_initial_values(self):
		"""Test that the initial values are set correctly."""
		# Run configuration
		self.assertIsNone(self.state.command)
		self.assertEqual(self.state.seed, constants.DEFAULT_SEED)
		self.assertEqual(self.state.max_size, constants.MAX_MODULE_DIMENSION)

		# Output configuration
		self.assertFalse(self.state.json_output)
		self.assertFalse(self.state.verbose)
		self.assertFalse(self.state.timing)

		# Command parameters
		self.assertIsNone(self.state.family)
		self.assertIsNone(self.state.rank)
		self.assertEqual(self.state.checks, [])
		self.assertEqual(self.state.parameters, {})

	def test_reseed(self):
		"""Test that reseeding restarts the shared generator."""
		self.state.seed = 11
		self.state.reseed()
		first = [self.state.random.integer() for _ in range(5)]
		self.state.reseed()
		second = [self.state.random.integer() for _ in range(5)]
		self.assertEqual(self.state.random.seed, 11)
		self.assertEqual(first, second)

	def test_independent_defaults(self):
		"""Test that mutable defaults are not shared between instances."""
		self.state.parameters["k"] = 2
		self.assertEqual(ProgramState().parameters, {})


class TestCheckRecord(unittest.TestCase):
	"""Test single check records."""

	def test_record_from_bool(self):
		"""Test the status mapping and witness capture."""
		passed = record_from_bool("mod3", True, "A", 3, failures=[])
		failed = record_from_bool("mod3", False)
		self.assertTrue(passed.passed)
		self.assertEqual(passed.witness, {"failures": []})
		self.assertEqual(failed.status, enums.Status.FAIL)

	def test_to_dict_omits_empty_fields(self):
		"""Test the JSON form."""
		record = CheckRecord(check="basis", status=enums.Status.PASS)
		self.assertEqual(record.to_dict(), {"check": "basis", "status": "pass"})
		record = record_from_bool("H1", True, "B", 2, independent_rank=2)
		self.assertEqual(
			record.to_dict(),
			{"check": "H1", "status": "pass", "family": "B", "rank": 2, "witness": {"independent_rank": 2}},
		)


class TestRunReport(unittest.TestCase):
	"""Test aggregate reports."""

	def test_status_aggregation(self):
		"""Test that ERROR beats FAIL beats PASS."""
		passed = record_from_bool("a", True)
		failed = record_from_bool("b", False)
		errored = CheckRecord(check="c", status=enums.Status.ERROR, message="too large")
		self.assertEqual(RunReport("x").status, enums.Status.PASS)
		self.assertEqual(RunReport("x", records=[passed, failed]).status, enums.Status.FAIL)
		self.assertEqual(RunReport("x", records=[failed, errored]).status, enums.Status.ERROR)

	def test_sorted_records(self):
		"""Test the record order in reports."""
		records = [
			record_from_bool("wseq", True, "B", 3),
			record_from_bool("mod3", True, "B", 2),
			record_from_bool("mod3", True, "A", 4),
		]
		ordered = RunReport("x", records=records).sorted_records()
		self.assertEqual(
			[(r.check, r.family, r.rank) for r in ordered], [("mod3", "A", 4), ("mod3", "B", 2), ("wseq", "B", 3)]
		)

	def test_duration_only_on_request(self):
		"""Test that timing is excluded by default."""
		report = RunReport("sl3", parameters={"seed": 0}, duration=1.5)
		self.assertNotIn("duration", report.to_dict())
		self.assertEqual(report.to_dict(include_duration=True)["duration"], 1.5)
		self.assertNotIn("result", report.to_dict())


if __name__ == "__main__":
	unittest.main()
