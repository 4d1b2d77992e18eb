#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Seeded random draws for certification matrices and sampled checks."""

import random
from typing import List, Optional, Sequence, TypeVar

from pluckerize import constants

T = TypeVar("T")


class RandomNumberGenerator:
	"""
	Thin wrapper around random.Random so every draw in a run shares one seed.

	The seed is always known, which makes every report reproducible: two runs
	with the same seed draw the same matrices and produce the same output.
	"""

	__slots__ = ("seed", "rng")

	def __init__(self, seed: Optional[int] = None) -> None:
		"""
		Initialize the generator.

		Args:
		    seed: Integer seed. If None, the package default seed is used.
		"""
		self.seed: int = constants.DEFAULT_SEED if seed is None else seed
		self.rng: random.Random = random.Random(self.seed)

	def reset_seed(self, seed: Optional[int] = None) -> None:
		"""
		Reset the generator with a new seed.

		Args:
		    seed: New seed value. If None, the package default seed is used.
		"""
		self.__init__(seed)

	def integer(self, low: int = constants.MATRIX_ENTRY_MIN, high: int = constants.MATRIX_ENTRY_MAX) -> int:
		"""
		Draw an integer uniformly from the inclusive range [low, high].

		Returns:
		    int: The drawn integer.
		"""
		return self.rng.randint(low, high)

	def integer_matrix(self, rows: int, cols: int) -> List[List[int]]:
		"""
		Draw a rows x cols matrix with entries uniform in the certification range.

		Args:
		    rows: Number of rows
		    cols: Number of columns

		Returns:
		    List[List[int]]: Row-major integer matrix.
		"""
		return [[self.integer() for _ in range(cols)] for _ in range(rows)]

	def choice(self, items: Sequence[T]) -> T:
		"""Return a uniformly chosen element of a non-empty sequence."""
		return self.rng.choice(items)

	def sample(self, items: Sequence[T], count: int) -> List[T]:
		"""Return count distinct elements drawn without replacement."""
		return self.rng.sample(list(items), count)
