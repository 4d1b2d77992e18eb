#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Test the weight-level checks of the model varieties and the sph family."""

import unittest

from pluckerize import enumerations as enums
from pluckerize import exceptions, model_checker, rep_theory
from pluckerize import root_system as rs

MODEL_FAMILIES = (enums.Family.A, enums.Family.B, enums.Family.C)


class TestSphericalData(unittest.TestCase):
	"""Test generators, freeness and grado."""

	def setUp(self):
		"""Set up the model variety of SL(4)."""
		self.data = model_checker.generators(enums.Family.A, 3)

	def test_grado_values(self):
		"""Test grado(eps_h) = h."""
		self.assertEqual(self.data.grado_values, (1, 2, 3))

	def test_sph_generators(self):
		"""Test the sph family tag and its generators."""
		data = model_checker.generators(model_checker.SPH, 5, 2)
		self.assertEqual(data.family, "sph")
		self.assertEqual(data.p, 2)
		self.assertEqual(len(data.generators), 3)

	def test_sph_needs_p(self):
		"""Test that the sph family without p raises DomainError."""
		with self.assertRaises(exceptions.DomainError):
			model_checker.generators(model_checker.SPH, 5)

	def test_check_H1(self):
		"""Test freeness of the monoid for every model family and sph case in range."""
		for family in MODEL_FAMILIES:
			for rank in range(2, 9):
				with self.subTest(family=family.value, rank=rank):
					record = model_checker.check_H1(model_checker.generators(family, rank))
					self.assertTrue(record.passed, record.witness)
					self.assertEqual(record.witness["independent_rank"], rank)
		for n in range(4, 7):
			for p in range(2, n - 1):
				with self.subTest(n=n, p=p):
					record = model_checker.check_H1(model_checker.generators(model_checker.SPH, n, p))
					self.assertTrue(record.passed, record.witness)
					self.assertEqual(record.witness["independent_rank"], 3)

	def test_grado(self):
		"""Test additivity of grado."""
		self.assertEqual(model_checker.grado(self.data, rs.Weight.of(1, 1, 0)), 3)
		self.assertEqual(model_checker.grado(self.data, rs.Weight.of(0, 0, 2)), 6)

	def test_grado_outside_monoid(self):
		"""Test that a non-dominant weight raises DomainError."""
		with self.assertRaises(exceptions.DomainError):
			model_checker.grado(self.data, rs.Weight.of(-1, 1, 0))
		self.assertFalse(self.data.in_monoid(rs.Weight.of(-1, 1, 0)))

	def test_grado_on_roots_needs_spanning(self):
		"""Test that three generators of B5 cannot extend grado."""
		with self.assertRaises(exceptions.DomainError):
			model_checker.grado_on_roots(model_checker.generators(model_checker.SPH, 5, 2))

	def test_grado_on_roots(self):
		"""Test the values on the simple roots of A3."""
		self.assertEqual(model_checker.grado_on_roots(self.data), [0, 0, 4])

	def test_verify_grado_roots(self):
		"""Test grado on roots for every family."""
		for family in MODEL_FAMILIES:
			with self.subTest(family=family.value):
				record = model_checker.verify_grado_roots(family, 3)
				self.assertTrue(record.passed, record.witness)


class TestH5(unittest.TestCase):
	"""Test the grado inequality sweep."""

	def test_small_bound(self):
		"""Test that the sweep passes for rank two."""
		for family in MODEL_FAMILIES:
			with self.subTest(family=family.value):
				record = model_checker.check_H5(model_checker.generators(family, 2), bound=1)
				self.assertTrue(record.passed, record.witness)
				self.assertEqual(record.witness["pairs"], 10)

	def test_bound_limit(self):
		"""Test that a large bound raises ResourceBoundError."""
		with self.assertRaises(exceptions.ResourceBoundError):
			model_checker.check_H5(model_checker.generators(enums.Family.A, 2), bound=5)

	def test_pair_limit(self):
		"""Test that too many generator pairs raise ResourceBoundError before the sweep."""
		for family, rank, bound in ((enums.Family.A, 5, 2), (enums.Family.C, 8, 1)):
			with self.subTest(family=family.value, rank=rank):
				with self.assertRaises(exceptions.ResourceBoundError):
					model_checker.check_H5(model_checker.generators(family, rank), bound=bound)

	def test_twice_first_generator(self):
		"""Test the weights below eps_1 + eps_1 in A2 and their grado."""
		data = model_checker.generators(enums.Family.A, 2)
		top = data.generators[0] + data.generators[0]
		below = rep_theory.dominant_weights_below(data.gcm, top)
		self.assertEqual(set(below), {rs.Weight.of(2, 0), rs.Weight.of(0, 1)})
		self.assertEqual(model_checker.grado(data, rs.Weight.of(0, 1)), 2)
		self.assertEqual(model_checker.grado(data, top), 2)

	def test_B2_bound_two(self):
		"""Test the full B2 sweep with coefficients up to two."""
		record = model_checker.check_H5(model_checker.generators(enums.Family.B, 2), bound=2)
		self.assertTrue(record.passed, record.witness)
		self.assertEqual(record.witness["pairs"], 45)


class TestWeylIdentities(unittest.TestCase):
	"""Test the identities u_i eps_i = eps_{i+1} - eps_1."""

	def test_mod3_word(self):
		"""Test the letters of u_i."""
		self.assertEqual(model_checker.mod3_word(3).letters, (0, 1, 2))
		self.assertEqual(model_checker.mod3_word(3, offset=2).letters, (2, 3, 4))
		self.assertEqual(model_checker.mod3_word(0).letters, ())

	def test_check_mod3(self):
		"""Test every family up to rank five."""
		for family in MODEL_FAMILIES:
			for rank in range(2, 6):
				with self.subTest(family=family.value, rank=rank):
					record = model_checker.check_mod3(family, rank)
					self.assertTrue(record.passed, record.witness)

	def test_sph_words(self):
		"""Test the words u_1 and u_2."""
		first, second = model_checker.sph_words(3)
		self.assertEqual(first.letters, (1, 0))
		self.assertEqual(second.letters, (0, 1, 2))

	def test_check_sph3(self):
		"""Test the sph identities."""
		for n, p in ((4, 2), (5, 2), (5, 3), (6, 4)):
			with self.subTest(n=n, p=p):
				record = model_checker.check_sph3(n, p)
				self.assertTrue(record.passed, record.witness)
				self.assertEqual(record.witness["u1_length"], p - 1)


class TestWSequence(unittest.TestCase):
	"""Test w-sequences and their ridge conditions."""

	def test_lengths_type_A3(self):
		"""Test l(w_h) = 1 + (h - 1) + l(w_{h-1})."""
		sequence = model_checker.build_w_sequence(enums.Family.A, 3)
		self.assertTrue(sequence.ok, sequence.failures)
		self.assertEqual(sequence.lengths(), [1, 3, 6])

	def test_gamma_alternates(self):
		"""Test that gamma_h alternates a0 and b0."""
		sequence = model_checker.build_w_sequence(enums.Family.B, 4)
		self.assertEqual([entry.gamma for entry in sequence.entries], [0, 1, 0, 1])

	def test_verify_w_sequence(self):
		"""Test the full record for every family."""
		for family in MODEL_FAMILIES:
			for rank in (2, 3):
				with self.subTest(family=family.value, rank=rank):
					record = model_checker.verify_w_sequence(family, rank)
					self.assertTrue(record.passed, record.witness)
					self.assertEqual(record.witness["failures"], [])

	def test_verify_w_sequence_sph(self):
		"""Test the sph sequence of length three."""
		for n, p in ((4, 2), (5, 2), (5, 3)):
			with self.subTest(n=n, p=p):
				record = model_checker.verify_w_sequence_sph(n, p)
				self.assertTrue(record.passed, record.witness)
				self.assertEqual(len(record.witness["lengths"]), 3)

	def test_bad_gamma_is_reported(self):
		"""Test that a gamma outside delta0 is recorded as a failure."""
		gcm = rs.build_finite(enums.Family.A, 2)
		sequence = model_checker.check_ridge_steps(gcm, (0,), -gcm.fundamental_weight(0), [(rs.WeylWord(), 1)])
		self.assertFalse(sequence.ok)
		self.assertEqual(sequence.failures[0]["condition"], "gamma in delta0")

	def test_extend_weight(self):
		"""Test that extension pads a0 and b0 with zeros."""
		gcm = rs.build_model_K(enums.Family.A, 2)
		self.assertEqual(model_checker.extend_weight(gcm, rs.Weight.of(1, 0)), rs.Weight.of(0, 0, 1, 0))
		self.assertEqual(model_checker.expected_zeta(gcm, rs.Weight.of(0, 0), 0), rs.Weight.of(1, 0, 0, 0))
		self.assertEqual(model_checker.expected_zeta(gcm, rs.Weight.of(0, 1), 2), rs.Weight.of(0, -1, 0, 1))


class TestLemK(unittest.TestCase):
	"""Test the weight identities around gamma_0."""

	def test_verify_lemK(self):
		"""Test every family in ranks two to four."""
		for family in MODEL_FAMILIES:
			for rank in (2, 3, 4):
				with self.subTest(family=family.value, rank=rank):
					record = model_checker.verify_lemK(family, rank)
					self.assertTrue(record.passed, record.witness)

	def test_verify_lemK_sph(self):
		"""Test the sph restrictions."""
		record = model_checker.verify_lemK_sph(5, 3)
		self.assertTrue(record.passed, record.witness)
		self.assertEqual(record.family, "sph")


class TestIP6(unittest.TestCase):
	"""Test the minuscule orbit and the root bound."""

	def test_orbit_type_A2(self):
		"""Test the orbit of varpi_a0 in the smallest case."""
		record = model_checker.verify_IP6_orbit(enums.Family.A, 2)
		self.assertTrue(record.passed, record.witness)
		self.assertEqual(record.witness["orbit_size"], 4)
		self.assertEqual(record.witness["surviving_classes"], 3)
		self.assertEqual([c["grado"] for c in record.witness["classes"]], [0, 1, 2])

	def test_orbit_all_families(self):
		"""Test orbit sizes 2^l and l + 1 classes."""
		for family in MODEL_FAMILIES:
			for rank in (3, 4):
				with self.subTest(family=family.value, rank=rank):
					record = model_checker.verify_IP6_orbit(family, rank)
					self.assertTrue(record.passed, record.witness)
					self.assertEqual(record.witness["orbit_size"], 2**rank)
					self.assertEqual(record.witness["surviving_classes"], rank + 1)

	def test_roots(self):
		"""Test the coefficient bound and uniqueness of gamma."""
		for family in MODEL_FAMILIES:
			for rank in (2, 3, 4):
				with self.subTest(family=family.value, rank=rank):
					record = model_checker.verify_IP6_roots(family, rank)
					self.assertTrue(record.passed, record.witness)
					self.assertEqual(record.witness["pairs"], [[0, 1], [1, 0], [1, 1]])

	def test_orbit_rank_bound(self):
		"""Test that a rank past the orbit bound raises ResourceBoundError."""
		with self.assertRaises(exceptions.ResourceBoundError):
			model_checker.verify_IP6_orbit(enums.Family.A, 11)


if __name__ == "__main__":
	unittest.main()
