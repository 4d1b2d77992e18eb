#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Unit tests for the RandomNumberGenerator class."""

import statistics
import unittest

from pluckerize import constants
from pluckerize.random_number_generator import RandomNumberGenerator


class TestRandomNumberGenerator(unittest.TestCase):
	"""Test suite for RandomNumberGenerator class."""

	def setUp(self):
		"""Set up test fixtures."""
		self.fixed_seed = 12345
		self.rng = RandomNumberGenerator(seed=self.fixed_seed)
		self.sample_size = 10000

	def test_default_seed(self):
		"""Test that no seed means the package default, not a random one."""
		self.assertEqual(RandomNumberGenerator().seed, constants.DEFAULT_SEED)

	def test_seed_reproducibility(self):
		"""Test that the same seed produces the same sequence."""
		rng1 = RandomNumberGenerator(seed=self.fixed_seed)
		rng2 = RandomNumberGenerator(seed=self.fixed_seed)

		seq1 = [rng1.integer() for _ in range(100)]
		seq2 = [rng2.integer() for _ in range(100)]

		self.assertEqual(seq1, seq2)

	def test_integer_range(self):
		"""Test integer draws stay in the certification range."""
		samples = [self.rng.integer() for _ in range(self.sample_size)]

		self.assertTrue(all(constants.MATRIX_ENTRY_MIN <= x <= constants.MATRIX_ENTRY_MAX for x in samples))
		self.assertEqual(min(samples), constants.MATRIX_ENTRY_MIN)
		self.assertEqual(max(samples), constants.MATRIX_ENTRY_MAX)

		# Symmetric range, so the mean should be close to 0
		self.assertAlmostEqual(statistics.mean(samples), 0, delta=0.2)

	def test_integer_custom_range(self):
		"""Test integer draws with explicit bounds."""
		samples = {self.rng.integer(2, 4) for _ in range(200)}
		self.assertEqual(samples, {2, 3, 4})

	def test_integer_matrix_shape(self):
		"""Test matrix draws have the requested shape."""
		matrix = self.rng.integer_matrix(5, 3)
		self.assertEqual(len(matrix), 5)
		self.assertTrue(all(len(row) == 3 for row in matrix))

	def test_choice_and_sample(self):
		"""Test choice and sampling without replacement."""
		items = list(range(10))
		self.assertIn(self.rng.choice(items), items)
		drawn = self.rng.sample(items, 4)
		self.assertEqual(len(set(drawn)), 4)
		self.assertTrue(set(drawn) <= set(items))

	def test_reset_seed(self):
		"""Test reset_seed functionality."""
		seq1 = [self.rng.integer() for _ in range(100)]

		self.rng.reset_seed(self.fixed_seed)
		seq2 = [self.rng.integer() for _ in range(100)]

		self.assertEqual(seq1, seq2)

	def test_different_seeds(self):
		"""Test that different seeds produce different sequences."""
		rng1 = RandomNumberGenerator(seed=self.fixed_seed)
		rng2 = RandomNumberGenerator(seed=self.fixed_seed + 1)

		seq1 = [rng1.integer() for _ in range(100)]
		seq2 = [rng2.integer() for _ in range(100)]

		self.assertNotEqual(seq1, seq2)


if __name__ == "__main__":
	unittest.main()
