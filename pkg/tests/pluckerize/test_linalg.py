#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test the exact linear algebra helpers."""

import unittest
from fractions import Fraction

from pluckerize import exceptions, linalg


class TestRank(unittest.TestCase):
	"""Test rank over QQ and over prime fields."""

	def test_rational_rank(self):
		"""Test a rank deficient matrix."""
		self.assertEqual(linalg.rank([[1, 2], [2, 4]]), 1)
		self.assertEqual(linalg.rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]), 2)

	def test_fraction_entries(self):
		"""Test that Fraction entries are accepted."""
		self.assertEqual(linalg.rank([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]), 1)

	def test_empty_matrix(self):
		"""Test that an empty matrix has rank zero."""
		self.assertEqual(linalg.rank([]), 0)

	def test_modular_rank_can_drop(self):
		"""Test that reduction modulo a prime can lose rank."""
		rows = [[2, 0], [0, 1]]
		self.assertEqual(linalg.rank(rows), 2)
		self.assertEqual(linalg.rank(rows, 2), 1)

	def test_certified_row_rank(self):
		"""Test both the certificate path and the fallback."""
		self.assertEqual(linalg.certified_row_rank([[1, 0], [0, 1]], 7), 2)
		self.assertEqual(linalg.certified_row_rank([[7, 0], [0, 1]], 7), 2)
		self.assertEqual(linalg.certified_row_rank([[1, 1], [2, 2]], 7), 1)


class TestSolve(unittest.TestCase):
	"""Test exact solving."""

	def test_unique_solution(self):
		"""Test a regular system."""
		self.assertEqual(linalg.solve([[1, 1], [1, -1]], [2, 0]), [Fraction(1), Fraction(1)])

	def test_rational_solution(self):
		"""Test that solutions stay exact."""
		self.assertEqual(linalg.solve([[3]], [1]), [Fraction(1, 3)])

	def test_inconsistent_system(self):
		"""Test that an inconsistent system returns None."""
		self.assertIsNone(linalg.solve([[1, 1], [2, 2]], [1, 3]))

	def test_free_variables_are_zero(self):
		"""Test that free variables are set to zero."""
		self.assertEqual(linalg.solve([[1, 1]], [5]), [Fraction(5), Fraction(0)])

	def test_rhs_length_mismatch(self):
		"""Test that a short right hand side raises ValueError."""
		with self.assertRaises(ValueError):
			linalg.solve([[1, 0], [0, 1]], [1])


class TestMatrixFunctions(unittest.TestCase):
	"""Test determinants, inverses and kernels."""

	def test_determinant(self):
		"""Test a small determinant."""
		self.assertEqual(linalg.determinant([[1, 2], [3, 4]]), Fraction(-2))
		self.assertEqual(linalg.determinant([]), Fraction(1))

	def test_determinant_non_square(self):
		"""Test that a non-square matrix raises ValueError."""
		with self.assertRaises(ValueError):
			linalg.determinant([[1, 2, 3], [4, 5, 6]])

	def test_integer_determinant(self):
		"""Test that integer determinants come back as int."""
		value = linalg.integer_determinant([[2, 1], [1, 1]])
		self.assertEqual(value, 1)
		self.assertIsInstance(value, int)

	def test_inverse(self):
		"""Test an exact inverse."""
		self.assertEqual(linalg.inverse([[2, 1], [1, 1]]), [[1, -1], [-1, 2]])

	def test_inverse_singular(self):
		"""Test that a singular matrix raises DomainError."""
		with self.assertRaises(exceptions.DomainError):
			linalg.inverse([[1, 2], [2, 4]])

	def test_nullspace(self):
		"""Test that kernel vectors are annihilated and independent."""
		rows = [[1, 1, 0], [0, 0, 1]]
		kernel = linalg.nullspace(rows)
		self.assertEqual(len(kernel), 1)
		for vector in kernel:
			self.assertEqual(linalg.mat_vec(rows, vector), [0, 0])
			self.assertTrue(any(vector))

	def test_mat_vec(self):
		"""Test plain matrix-vector multiplication."""
		self.assertEqual(linalg.mat_vec([[1, 2], [3, 4]], [1, -1]), [-1, -1])

	def test_to_fraction(self):
		"""Test conversion of rationals."""
		self.assertEqual(linalg.to_fraction(Fraction(3, 4)), Fraction(3, 4))
		self.assertEqual(linalg.to_fraction(5), Fraction(5))


if __name__ == "__main__":
	unittest.main()
