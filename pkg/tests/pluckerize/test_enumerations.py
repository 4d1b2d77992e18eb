#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test the enumerations module."""

import unittest
from enum import Enum

from pluckerize import enumerations as enums


class TestEnumerations(unittest.TestCase):
	"""Test the enumerations module."""

	def test_all_enums_are_enum_class(self):
		"""Test that all enums are proper Enum classes."""
		for enum_class in enums.get_all_enums():
			self.assertTrue(issubclass(enum_class, Enum))

	def test_get_all_enums_finds_every_class(self):
		"""Test that get_all_enums lists the module's enums."""
		found = set(enums.get_all_enums())
		for enum_class in (enums.Family, enums.FormKind, enums.Status, enums.CheckName, enums.ExitCode):
			self.assertIn(enum_class, found)

	def test_enum_values_unique(self):
		"""Test that enum values within each enum are unique."""
		for enum_class in enums.get_all_enums():
			values = [member.value for member in enum_class]
			self.assertEqual(len(values), len(set(values)), f"Duplicate values found in {enum_class.__name__}")

	def test_exit_codes(self):
		"""Test the exit code contract."""
		self.assertEqual(enums.ExitCode.PASS, 0)
		self.assertEqual(enums.ExitCode.CHECK_FAILED, 1)
		self.assertEqual(enums.ExitCode.USAGE, 2)
		self.assertEqual(enums.ExitCode.CERTIFICATION, 3)
		self.assertEqual(enums.ExitCode.RESOURCE_BOUND, 4)

	def test_check_names(self):
		"""Test check names as they appear on the command line."""
		self.assertEqual(enums.CheckName("IP6-orbit"), enums.CheckName.IP6_ORBIT)
		self.assertEqual(enums.CheckName("wseq"), enums.CheckName.WSEQ)
		self.assertEqual(enums.CheckName.GRADO_ROOTS.value, "grado-roots")

	def test_enum_member_counts(self):
		"""Test that enums have the expected number of members."""
		expected_counts = {
			enums.Family: 4,
			enums.FormKind: 2,
			enums.Status: 3,
			enums.CheckName: 13,
			enums.ExitCode: 5,
		}
		for enum_class, expected_count in expected_counts.items():
			self.assertEqual(len(list(enum_class)), expected_count, enum_class.__name__)


if __name__ == "__main__":
	unittest.main()
