#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test standard monomial theory on small Grassmannians."""

import unittest
from fractions import Fraction

from pluckerize import exceptions, pluecker_smt
from pluckerize import random_number_generator as rng
from pluckerize.pluecker_smt import Column, Tableau


class TestColumnsAndTableaux(unittest.TestCase):
	"""Test the basic data types."""

	def test_column_validation(self):
		"""Test that malformed columns raise ValueError."""
		with self.assertRaises(ValueError):
			Column.of(4, 3, 2)
		with self.assertRaises(ValueError):
			Column.of(4, 0, 2)
		with self.assertRaises(ValueError):
			Column.of(4, 2, 5)

	def test_parse_tableau(self):
		"""Test parsing and canonical column order."""
		tableau = pluecker_smt.parse_tableau("2,3|1,4", 2, 4)
		self.assertEqual(tableau.columns, (Column.of(4, 1, 4), Column.of(4, 2, 3)))
		self.assertEqual(tableau.to_token(), "1,4|2,3")
		self.assertEqual(tableau.degree, 2)

	def test_parse_empty_tableau(self):
		"""Test that the empty token is the empty tableau."""
		self.assertEqual(pluecker_smt.parse_tableau("", 2, 4).degree, 0)

	def test_parse_errors(self):
		"""Test malformed tokens."""
		for token in ("1,x", "1,2,3", "3,1"):
			with self.subTest(token=token):
				with self.assertRaises(ValueError):
					pluecker_smt.parse_tableau(token, 2, 4)

	def test_is_standard(self):
		"""Test the chain condition."""
		self.assertTrue(pluecker_smt.is_standard(pluecker_smt.parse_tableau("1,2|1,3|2,4", 2, 4)))
		self.assertFalse(pluecker_smt.is_standard(pluecker_smt.parse_tableau("1,4|2,3", 2, 4)))

	def test_leq_columns_shape(self):
		"""Test that columns of different size are not comparable."""
		with self.assertRaises(ValueError):
			pluecker_smt.leq_columns(Column.of(4, 1), Column.of(4, 1, 2))


class TestStraightening(unittest.TestCase):
	"""Test Garnir relations and straightening."""

	def setUp(self):
		"""Set up a seeded oracle for Gr(2, 4)."""
		self.random = rng.RandomNumberGenerator(0)
		self.oracle = pluecker_smt.EvaluationOracle(2, 4, self.random)

	def test_three_term_relation(self):
		"""Test p14 p23 = p13 p24 - p12 p34."""
		result = pluecker_smt.straighten(pluecker_smt.parse_tableau("1,4|2,3", 2, 4), self.oracle)
		self.assertEqual(result.to_dict(), {"1,2|3,4": "-1", "1,3|2,4": "1"})

	def test_standard_tableau_is_fixed(self):
		"""Test that a standard tableau straightens to itself."""
		tableau = pluecker_smt.parse_tableau("1,2|3,4", 2, 4)
		self.assertEqual(pluecker_smt.straighten(tableau, self.oracle).combo, {tableau: Fraction(1)})

	def test_garnir_comparable_columns(self):
		"""Test that comparable columns raise DomainError."""
		with self.assertRaises(exceptions.DomainError):
			pluecker_smt.garnir_relation(Column.of(4, 1, 2), Column.of(4, 3, 4), self.oracle)

	def test_garnir_terms_decrease(self):
		"""Test that every Garnir term is smaller than the product."""
		first, second = Column.of(4, 1, 4), Column.of(4, 2, 3)
		product = Tableau.of(2, 4, (first, second))
		relation = pluecker_smt.garnir_relation(first, second, self.oracle)
		for tableau in relation.combo:
			self.assertLess(tableau.order_key(), product.order_key())

	def test_straightening_agrees_with_minors(self):
		"""Test a cubic straightening against a fixed matrix."""
		oracle = pluecker_smt.EvaluationOracle(2, 5, self.random)
		tableau = pluecker_smt.parse_tableau("2,5|3,4|1,5", 2, 5)
		result = pluecker_smt.straighten(tableau, oracle)
		matrix = [[1, 2], [0, 3], [4, -1], [2, 2], [-3, 5]]
		expansion = sum(value * pluecker_smt.evaluate(term, matrix) for term, value in result.combo.items())
		self.assertEqual(expansion, pluecker_smt.evaluate(tableau, matrix))
		self.assertTrue(all(pluecker_smt.is_standard(term) for term in result.combo))

	def test_evaluate_shape(self):
		"""Test that a matrix of the wrong shape raises ValueError."""
		with self.assertRaises(ValueError):
			pluecker_smt.evaluate(pluecker_smt.parse_tableau("1,2", 2, 4), [[1, 0], [0, 1]])

	def test_verify_straightening(self):
		"""Test exhaustive straightening in degree two."""
		record = pluecker_smt.verify_straightening(2, 4, 2, self.random)
		self.assertTrue(record.passed, record.witness)
		self.assertEqual(record.witness["checked"], 21)


class TestEnumeration(unittest.TestCase):
	"""Test counts of standard tableaux."""

	def test_expected_count(self):
		"""Test dimensions of the homogeneous coordinate ring."""
		self.assertEqual(pluecker_smt.expected_count(2, 4, 1), 6)
		self.assertEqual(pluecker_smt.expected_count(2, 4, 2), 20)
		self.assertEqual(pluecker_smt.expected_count(1, 3, 2), 6)
		self.assertEqual(pluecker_smt.expected_count(3, 3, 4), 1)
		self.assertEqual(pluecker_smt.expected_count(2, 4, 0), 1)

	def test_enumerate_standard(self):
		"""Test that enumeration matches the expected count."""
		for k, n, degree in ((2, 4, 2), (2, 5, 2), (3, 6, 2), (1, 4, 3)):
			with self.subTest(k=k, n=n, degree=degree):
				tableaux = pluecker_smt.enumerate_standard(k, n, degree)
				self.assertEqual(len(tableaux), pluecker_smt.expected_count(k, n, degree))
				self.assertTrue(all(pluecker_smt.is_standard(t) for t in tableaux))

	def test_enumerate_limit(self):
		"""Test that the tableau bound raises ResourceBoundError."""
		with self.assertRaises(exceptions.ResourceBoundError):
			pluecker_smt.enumerate_standard(2, 4, 2, limit=5)

	def test_all_monomials(self):
		"""Test the monomial count C(N + d - 1, d)."""
		self.assertEqual(len(pluecker_smt.all_monomials(2, 4, 2)), 21)

	def test_all_columns_range(self):
		"""Test that k above n raises DomainError."""
		with self.assertRaises(exceptions.DomainError):
			pluecker_smt.all_columns(5, 4)

	def test_verify_basis(self):
		"""Test the basis certificate."""
		record = pluecker_smt.verify_basis(2, 4, 2, rng.RandomNumberGenerator(0))
		self.assertTrue(record.passed, record.witness)
		self.assertEqual(record.witness["quadratic_relations"], 1)

	def test_verify_relation_generation(self):
		"""Test that the quadratic relations generate the cubic ones."""
		record = pluecker_smt.verify_relation_generation(2, 4, rng.RandomNumberGenerator(0))
		self.assertTrue(record.passed, record.witness)
		self.assertEqual(record.witness["cubic_dimension"], 50)


class TestSchubert(unittest.TestCase):
	"""Test restriction to Schubert varieties."""

	def setUp(self):
		"""Set up the column (2, 4) of Gr(2, 4)."""
		self.bound = Column.of(4, 2, 4)

	def test_schubert_restrict(self):
		"""Test the surviving columns."""
		survivors = pluecker_smt.schubert_restrict(self.bound, 2, 4)
		self.assertEqual([c.to_token() for c in survivors], ["1,2", "1,3", "1,4", "2,3", "2,4"])
		self.assertEqual(len(pluecker_smt.ridge_restrict(self.bound, 2, 4)), 4)

	def test_schubert_word(self):
		"""Test the minimal Weyl elements of two columns."""
		self.assertEqual(pluecker_smt.schubert_word(Column.of(4, 1, 2)).letters, ())
		self.assertEqual(len(pluecker_smt.schubert_word(self.bound).letters), 3)

	def test_schubert_point_support(self):
		"""Test that random points lie on the Schubert cell closure."""
		point = pluecker_smt.schubert_point(self.bound, rng.RandomNumberGenerator(0))
		self.assertTrue(all(point[row][0] == 0 for row in range(2, 4)))

	def test_verify_restriction(self):
		"""Test the restriction certificate in degree two."""
		record = pluecker_smt.verify_restriction(self.bound, 2, rng.RandomNumberGenerator(0), ridge=True)
		self.assertTrue(record.passed, record.witness)
		self.assertEqual(record.witness["surviving_standard"], 14)
		self.assertEqual(record.witness["ridge_columns"], ["1,3", "1,4", "2,3", "2,4"])


if __name__ == "__main__":
	unittest.main()
