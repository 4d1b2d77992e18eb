#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Character arithmetic for finite-type Cartan matrices.

Weyl dimensions, Freudenthal weight multiplicities, Klimyk tensor product
multiplicities and Demazure characters, all in exact integer arithmetic.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Sequence, Tuple

from pluckerize import constants, exceptions
from pluckerize import enumerations as enums
from pluckerize import root_system as rs
from pluckerize.program_state import CheckRecord, record_from_bool

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightMultiplicityTable:
	"""Multiplicities of the dominant weights of an irreducible module."""

	gcm: rs.GeneralizedCartanMatrix
	top: rs.Weight
	entries: Dict[rs.Weight, int] = field(hash=False)

	def multiplicity(self, weight: rs.Weight) -> int:
		"""Return the multiplicity of any weight (zero if it does not occur)."""
		dominant, _ = rs.sort_to_dominant(self.gcm, weight)
		return self.entries.get(dominant, 0)

	def weights(self) -> Dict[rs.Weight, int]:
		"""Return every weight with its multiplicity, expanding Weyl orbits."""
		expanded: Dict[rs.Weight, int] = {}
		for dominant, count in self.entries.items():
			for weight in rs.orbit(self.gcm, dominant):
				expanded[weight] = count
		return expanded

	def total(self) -> int:
		"""Dimension of the module: sum of multiplicity times orbit size."""
		return sum(count * len(rs.orbit(self.gcm, dominant)) for dominant, count in self.entries.items())


def _require_dominant(weight: rs.Weight) -> None:
	if not weight.is_dominant():
		raise exceptions.DomainError(f"Weight {weight.to_dict()} is not dominant")


def _pairing(gcm: rs.GeneralizedCartanMatrix, root: Sequence, weight: rs.Weight) -> Fraction:
	"""Invariant form (root, weight) with root in simple-root coordinates."""
	d = gcm.symmetrizer
	return Fraction(sum(root[i] * d[i] * weight[i] for i in range(gcm.n)))


@lru_cache(maxsize=256)
def _positive_root_weights(gcm: rs.GeneralizedCartanMatrix) -> Tuple[Tuple[rs.RootVector, rs.Weight], ...]:
	return tuple((root, gcm.root_to_weight(root)) for root in rs.positive_roots(gcm))


def weyl_dim(gcm: rs.GeneralizedCartanMatrix, weight: rs.Weight) -> int:
	"""Return the dimension of the irreducible module of highest weight weight.

	Args:
		gcm: Finite-type Cartan matrix
		weight: Dominant highest weight

	Returns:
		The exact dimension

	Raises:
		DomainError: If weight is not dominant or gcm is not of finite type
	"""
	_require_dominant(weight)
	shifted = weight + gcm.rho()
	dimension = Fraction(1)
	for root in rs.positive_roots(gcm):
		dimension *= rs.coroot_pairing(gcm, root, shifted) / rs.coroot_pairing(gcm, root, gcm.rho())
	if dimension.denominator != 1:
		raise exceptions.CertificationError(f"Weyl dimension {dimension} is not an integer")
	return int(dimension)


@lru_cache(maxsize=1024)
def dominant_weights_below(gcm: rs.GeneralizedCartanMatrix, top: rs.Weight) -> Tuple[rs.Weight, ...]:
	"""Dominant weights mu <= top, ordered by depth below top.

	Generated by subtracting positive roots and keeping dominant results.
	"""
	_require_dominant(top)
	roots = [weight for _, weight in _positive_root_weights(gcm)]
	seen = {top}
	queue = deque([top])
	while queue:
		current = queue.popleft()
		for root in roots:
			candidate = current - root
			if candidate.is_dominant() and candidate not in seen:
				seen.add(candidate)
				queue.append(candidate)
	return tuple(sorted(seen, key=lambda mu: (depth(gcm, top, mu), mu.coords)))


def depth(gcm: rs.GeneralizedCartanMatrix, top: rs.Weight, weight: rs.Weight) -> int:
	"""Height of top - weight in simple-root coordinates."""
	return int(sum(rs.to_root_coordinates(gcm, top - weight)))


def freudenthal(
	gcm: rs.GeneralizedCartanMatrix, top: rs.Weight, max_size: int = constants.MAX_MODULE_DIMENSION
) -> WeightMultiplicityTable:
	"""Compute the dominant weight multiplicities of the module with highest weight top.

	Args:
		gcm: Finite-type Cartan matrix of rank at most MAX_FREUDENTHAL_RANK
		top: Dominant highest weight
		max_size: Largest module dimension allowed

	Returns:
		The multiplicity table; its expanded total equals weyl_dim(top)

	Raises:
		ResourceBoundError: If the rank or the dimension is too large
		CertificationError: If the recursion produces a non-integer or the wrong total
	"""
	return _freudenthal(gcm, top, max_size)


@lru_cache(maxsize=256)
def _freudenthal(gcm: rs.GeneralizedCartanMatrix, top: rs.Weight, max_size: int) -> WeightMultiplicityTable:
	if gcm.n > constants.MAX_FREUDENTHAL_RANK:
		raise exceptions.ResourceBoundError(f"Rank {gcm.n} exceeds {constants.MAX_FREUDENTHAL_RANK}")
	dimension = weyl_dim(gcm, top)
	if dimension > max_size:
		raise exceptions.ResourceBoundError(f"Module dimension {dimension} exceeds {max_size}")

	rho = gcm.rho()
	roots = _positive_root_weights(gcm)
	entries: Dict[rs.Weight, int] = {top: 1}
	conjugates: Dict[rs.Weight, rs.Weight] = {}

	def lookup(weight: rs.Weight) -> int:
		if weight not in conjugates:
			conjugates[weight] = rs.sort_to_dominant(gcm, weight)[0]
		return entries.get(conjugates[weight], 0)

	for mu in dominant_weights_below(gcm, top)[1:]:
		difference = rs.to_root_coordinates(gcm, top - mu)
		denominator = _pairing(gcm, difference, top + mu + rho * 2)
		numerator = Fraction(0)
		for root, root_weight in roots:
			shifted = mu + root_weight
			count = lookup(shifted)
			while count:
				numerator += 2 * count * _pairing(gcm, root.coords, shifted)
				shifted = shifted + root_weight
				count = lookup(shifted)
		value = numerator / denominator
		if value.denominator != 1:
			raise exceptions.CertificationError(f"Non-integral multiplicity {value} at {mu.to_dict()}")
		if value:
			entries[mu] = int(value)

	table = WeightMultiplicityTable(gcm, top, entries)
	if table.total() != dimension:
		raise exceptions.CertificationError(f"Multiplicities sum to {table.total()}, expected {dimension}")
	log.debug("Freudenthal %s: %d dominant weights, dimension %d", top.to_dict(), len(entries), dimension)
	return table


def tensor_decompose(
	gcm: rs.GeneralizedCartanMatrix,
	first: rs.Weight,
	second: rs.Weight,
	max_size: int = constants.MAX_MODULE_DIMENSION,
) -> Dict[rs.Weight, int]:
	"""Decompose V_first (x) V_second with the Klimyk alternating sum.

	The weights of the smaller factor are shifted by the other highest weight
	plus rho and reflected into the dominant chamber with sign (-1)^length.
	Shifts that land on a wall cancel.

	Returns:
		Highest weights with their nonzero multiplicities

	Raises:
		ResourceBoundError: If the smaller factor exceeds the size bound
		CertificationError: If a negative multiplicity appears
	"""
	_require_dominant(first)
	_require_dominant(second)
	return dict(_tensor_decompose(gcm, first, second, max_size))


@lru_cache(maxsize=4096)
def _tensor_decompose(
	gcm: rs.GeneralizedCartanMatrix, first: rs.Weight, second: rs.Weight, max_size: int
) -> Tuple[Tuple[rs.Weight, int], ...]:
	if weyl_dim(gcm, first) < weyl_dim(gcm, second):
		first, second = second, first
	rho = gcm.rho()
	result: Counter = Counter()
	for weight, count in freudenthal(gcm, second, max_size).weights().items():
		dominant, letters = rs.sort_to_dominant(gcm, first + weight + rho)
		if 0 in dominant.coords:
			continue
		result[dominant - rho] += -count if len(letters) % 2 else count
	negative = [(nu.to_dict(), m) for nu, m in result.items() if m < 0]
	if negative:
		raise exceptions.CertificationError(f"Negative tensor multiplicities {negative}")
	return tuple(sorted(((nu, m) for nu, m in result.items() if m), key=lambda item: item[0].coords))


def tensor_mult(
	gcm: rs.GeneralizedCartanMatrix,
	first: rs.Weight,
	second: rs.Weight,
	target: rs.Weight,
	max_size: int = constants.MAX_MODULE_DIMENSION,
) -> int:
	"""Return the multiplicity of V_target in V_first (x) V_second."""
	_require_dominant(target)
	return tensor_decompose(gcm, first, second, max_size).get(target, 0)


def tensor_power_multiplicities(
	gcm: rs.GeneralizedCartanMatrix,
	factor: rs.Weight,
	target: rs.Weight,
	power: int,
	max_size: int = constants.MAX_MODULE_DIMENSION,
) -> List[int]:
	"""Multiplicity of V_target in V_factor^(x)j for j = 1..power."""
	factor_dim = weyl_dim(gcm, factor)
	if power > constants.MAX_TENSOR_POWER or factor_dim**power > max_size:
		raise exceptions.ResourceBoundError(f"Tensor power {power} of a {factor_dim}-dimensional module is too large")
	components: Counter = Counter({factor: 1})
	multiplicities = [components[target]]
	for _ in range(power - 1):
		following: Counter = Counter()
		for highest, count in components.items():
			for nu, m in tensor_decompose(gcm, highest, factor, max_size).items():
				following[nu] += count * m
		components = following
		multiplicities.append(components[target])
	return multiplicities


def verify_mod1(
	family: enums.Family, rank: int, index: int, max_size: int = constants.MAX_MODULE_DIMENSION
) -> CheckRecord:
	"""Check that V_eps_index sits in V_eps_1^(x)index once and in no lower power.

	Args:
		family: A, B or C
		rank: Rank of G
		index: Generator index, 1-based
		max_size: Size bound for the iterated tensor product

	Returns:
		The check record with the multiplicity of every power
	"""
	if not 1 <= index <= rank:
		raise exceptions.DomainError(f"Generator index {index} outside 1..{rank}")
	gcm = rs.build_finite(family, rank)
	epsilons = rs.model_epsilons(family, rank)
	multiplicities = tensor_power_multiplicities(gcm, epsilons[0], epsilons[index - 1], index, max_size)
	ok = multiplicities[-1] == 1 and not any(multiplicities[:-1])
	log.debug("mod1 %s%d i=%d: %s", family.value, rank, index, multiplicities)
	return record_from_bool(
		enums.CheckName.MOD1.value, ok, family.value, rank, index=index, multiplicities=multiplicities
	)


def verify_sph1(n: int, p: int, max_size: int = constants.MAX_MODULE_DIMENSION) -> CheckRecord:
	"""Check both multiplicity-one inclusions of the B_n spherical family.

	V_eps2 in V_eps1 (x) V_omega_{p-1} and V_eps3 in V_eps2 (x) V_eps1, each once.

	Raises:
		ResourceBoundError: If n is larger than 5
	"""
	if n > 5:
		raise exceptions.ResourceBoundError(f"sph1 is limited to n <= 5, got {n}")
	eps1, eps2, eps3 = rs.sph_epsilons(n, p)
	gcm = rs.build_finite(enums.Family.B, n)
	omega = gcm.fundamental_weight(p - 2)
	first = tensor_mult(gcm, eps1, omega, eps2, max_size)
	second = tensor_mult(gcm, eps2, eps1, eps3, max_size)
	return record_from_bool(
		enums.CheckName.SPH1.value,
		first == 1 and second == 1,
		"sph",
		n,
		p=p,
		eps2_in_eps1_omega=first,
		eps3_in_eps2_eps1=second,
	)


def demazure_character(
	gcm: rs.GeneralizedCartanMatrix, word: rs.WeylWord, weight: rs.Weight
) -> Dict[rs.Weight, int]:
	"""Apply the Demazure operators of word to e^weight, rightmost letter first.

	Args:
		gcm: Any symmetrizable Cartan matrix
		word: A reduced word
		weight: Dominant weight

	Returns:
		The character as weight -> coefficient
	"""
	_require_dominant(weight)
	character: Counter = Counter({weight: 1})
	for letter in reversed(word.letters):
		root = gcm.simple_root(letter)
		following: Counter = Counter()
		for mu, count in character.items():
			m = mu[letter]
			if m >= 0:
				for k in range(m + 1):
					following[mu - root * k] += count
			elif m < -1:
				for k in range(1, -m):
					following[mu + root * k] -= count
		character = Counter({mu: c for mu, c in following.items() if c})
	return dict(character)


def demazure_dim(gcm: rs.GeneralizedCartanMatrix, word: rs.WeylWord, weight: rs.Weight) -> int:
	"""Total dimension of the Demazure module of word and weight."""
	return sum(demazure_character(gcm, word, weight).values())


def ridge_dimension(
	gcm: rs.GeneralizedCartanMatrix,
	levi: Sequence[int],
	zetas: Sequence[rs.Weight],
	degree: int,
	start: int = 0,
) -> int:
	"""Sum of Levi Weyl dimensions over degree-element multisets of zetas[start:].

	Args:
		gcm: Ambient Cartan matrix
		levi: Nodes of the Levi subalgebra
		zetas: zeta_0, ..., zeta_l
		degree: Multiset size
		start: First admissible index

	Returns:
		The summed dimension

	Raises:
		DomainError: If a summed weight is not dominant for the Levi
	"""
	levi_gcm = gcm.restrict(levi) if levi else None
	total = 0
	for indices in combinations_with_replacement(range(start, len(zetas)), degree):
		summed = rs.Weight.zero(gcm.n)
		for index in indices:
			summed = summed + zetas[index]
		restricted = summed.restrict(levi)
		_require_dominant(restricted)
		total += weyl_dim(levi_gcm, restricted) if levi_gcm is not None else 1
	return total


def sum_of_dimensions(gcm: rs.GeneralizedCartanMatrix, decomposition: Dict[rs.Weight, int]) -> int:
	"""Return the total dimension of a decomposition into irreducibles."""
	return sum(m * weyl_dim(gcm, nu) for nu, m in decomposition.items())


def dominant_weights(gcm: rs.GeneralizedCartanMatrix, bound: int) -> List[rs.Weight]:
	"""All dominant weights with coordinate sum at most bound."""
	found: List[rs.Weight] = []

	def extend(prefix: Tuple[int, ...], remaining: int) -> None:
		if len(prefix) == gcm.n:
			found.append(rs.Weight(prefix))
			return
		for value in range(remaining + 1):
			extend(prefix + (value,), remaining - value)

	extend((), bound)
	return found


def describe(decomposition: Dict[rs.Weight, int]) -> List[Dict[str, object]]:
	"""JSON-friendly list of (highest weight, multiplicity)."""
	ordered = sorted(decomposition.items(), key=lambda item: item[0].coords)
	return [{"weight": nu.to_dict(), "multiplicity": m} for nu, m in ordered]

