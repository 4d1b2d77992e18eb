#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Exact lattice model of simple roots, weights, reflections and Weyl words.

Conventions:
    a[i][j] = <alpha_i^vee, alpha_j>. A Weight is its vector of pairings
    against every simple coroot, so two weights compare equal exactly when
    they agree on all coroots. The simple root alpha_j, read as a Weight, is
    column j of the Cartan matrix.

Lengths and minimal coset representatives are computed by sorting an orbit
point to the dominant chamber: s_i w < w iff <alpha_i^vee, w(rho)> < 0. This
holds in every symmetrizable Kac-Moody Weyl group, so nothing here needs
inversion sets or a finite group.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from pluckerize import exceptions, linalg
from pluckerize import enumerations as enums


@dataclass(frozen=True)
class Weight:
	"""Integer pairings (<alpha_i^vee, lambda>)_i against all simple coroots."""

	coords: Tuple[int, ...]

	@classmethod
	def zero(cls, size: int) -> "Weight":
		"""Return the zero weight on size nodes."""
		return cls((0,) * size)

	@classmethod
	def fundamental(cls, size: int, node: int, multiple: int = 1) -> "Weight":
		"""Return multiple times the fundamental weight of node."""
		return cls(tuple(multiple if i == node else 0 for i in range(size)))

	@classmethod
	def of(cls, *coords: int) -> "Weight":
		"""Build a weight from its pairings."""
		return cls(tuple(coords))

	def __len__(self) -> int:
		return len(self.coords)

	def __getitem__(self, node: int) -> int:
		return self.coords[node]

	def __iter__(self):
		return iter(self.coords)

	def __add__(self, other: "Weight") -> "Weight":
		_check_sizes(self, other)
		return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

	def __sub__(self, other: "Weight") -> "Weight":
		_check_sizes(self, other)
		return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

	def __neg__(self) -> "Weight":
		return Weight(tuple(-a for a in self.coords))

	def __mul__(self, factor: int) -> "Weight":
		return Weight(tuple(factor * a for a in self.coords))

	__rmul__ = __mul__

	def is_dominant(self) -> bool:
		"""Return True if every pairing is nonnegative."""
		return all(a >= 0 for a in self.coords)

	def restrict(self, nodes: Sequence[int]) -> "Weight":
		"""Return the pairings against the given nodes only."""
		return Weight(tuple(self.coords[i] for i in nodes))

	def to_dict(self) -> List[int]:
		"""Return a JSON-friendly form."""
		return list(self.coords)


@dataclass(frozen=True)
class RootVector:
	"""An element of the root lattice in simple-root coordinates."""

	coords: Tuple[int, ...]

	@classmethod
	def simple(cls, size: int, node: int) -> "RootVector":
		"""Return the simple root of node."""
		return cls(tuple(int(i == node) for i in range(size)))

	def __len__(self) -> int:
		return len(self.coords)

	def __getitem__(self, node: int) -> int:
		return self.coords[node]

	def __add__(self, other: "RootVector") -> "RootVector":
		_check_sizes(self, other)
		return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

	def __sub__(self, other: "RootVector") -> "RootVector":
		_check_sizes(self, other)
		return RootVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

	def __neg__(self) -> "RootVector":
		return RootVector(tuple(-a for a in self.coords))

	@property
	def height(self) -> int:
		"""Sum of all coordinates."""
		return sum(self.coords)

	def ht0(self, delta0: Iterable[int]) -> int:
		"""Sum of the coordinates over the given nodes only."""
		return sum(self.coords[i] for i in delta0)

	def is_positive(self) -> bool:
		"""Return True for a nonzero vector with nonnegative coordinates."""
		return any(self.coords) and all(a >= 0 for a in self.coords)

	def is_negative(self) -> bool:
		"""Return True for a nonzero vector with nonpositive coordinates."""
		return any(self.coords) and all(a <= 0 for a in self.coords)

	def support(self) -> FrozenSet[int]:
		"""Nodes with a nonzero coordinate."""
		return frozenset(i for i, a in enumerate(self.coords) if a)


@dataclass(frozen=True)
class WeylWord:
	"""A product s_{i_1} s_{i_2} ... s_{i_m} of simple reflections.

	The rightmost letter acts first. Two words are the same group element
	exactly when reduced_word returns the same letters for both.
	"""

	letters: Tuple[int, ...] = ()

	@classmethod
	def of(cls, *letters: int) -> "WeylWord":
		"""Build a word from its letters, leftmost first."""
		return cls(tuple(letters))

	def __mul__(self, other: "WeylWord") -> "WeylWord":
		return WeylWord(self.letters + other.letters)

	def inverse(self) -> "WeylWord":
		"""Return the word of the inverse element."""
		return WeylWord(tuple(reversed(self.letters)))

	def to_dict(self) -> List[int]:
		"""Return a JSON-friendly form."""
		return list(self.letters)


def _check_sizes(first, second) -> None:
	if len(first.coords) != len(second.coords):
		raise ValueError(f"Size mismatch: {len(first.coords)} vs {len(second.coords)}")


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
	"""A symmetrizable generalized Cartan matrix with named nodes."""

	entries: Tuple[Tuple[int, ...], ...]
	labels: Tuple[str, ...]

	def __post_init__(self) -> None:
		size = len(self.entries)
		if len(self.labels) != size or len(set(self.labels)) != size:
			raise exceptions.DomainError("Cartan matrix needs one distinct label per node")
		for i, row in enumerate(self.entries):
			if len(row) != size:
				raise exceptions.DomainError("Cartan matrix must be square")
			if row[i] != 2:
				raise exceptions.DomainError(f"Diagonal entry {i} is {row[i]}, expected 2")
			for j, value in enumerate(row):
				if i == j:
					continue
				if value > 0:
					raise exceptions.DomainError(f"Off-diagonal entry ({i}, {j}) is positive")
				if (value == 0) != (self.entries[j][i] == 0):
					raise exceptions.DomainError(f"Zero pattern is not symmetric at ({i}, {j})")
		# raises when no symmetrizer exists
		_ = self.symmetrizer

	@property
	def n(self) -> int:
		"""Number of nodes."""
		return len(self.entries)

	def a(self, i: int, j: int) -> int:
		"""Return <alpha_i^vee, alpha_j>."""
		return self.entries[i][j]

	def index(self, label: str) -> int:
		"""Return the node index carrying label."""
		try:
			return self.labels.index(label)
		except ValueError:
			raise IndexError(f"No node labelled {label!r}") from None

	def neighbors(self, node: int) -> List[int]:
		"""Nodes joined to node by an edge."""
		return [j for j in range(self.n) if j != node and self.entries[node][j] != 0]

	def as_array(self) -> np.ndarray:
		"""Return the entries as an integer numpy array."""
		return np.array(self.entries, dtype=int)

	@cached_property
	def symmetrizer(self) -> Tuple[int, ...]:
		"""Positive integers d_i with d_i a[i][j] = d_j a[j][i].

		Raises:
			DomainError: If the matrix is not symmetrizable
		"""
		scale: Dict[int, Fraction] = {}
		for start in range(self.n):
			if start in scale:
				continue
			scale[start] = Fraction(1)
			queue = deque([start])
			while queue:
				i = queue.popleft()
				for j in self.neighbors(i):
					value = scale[i] * self.entries[i][j] / self.entries[j][i]
					if j not in scale:
						scale[j] = value
						queue.append(j)
					elif scale[j] != value:
						raise exceptions.DomainError("Cartan matrix is not symmetrizable")
		denominator = np.lcm.reduce([scale[i].denominator for i in range(self.n)]) if self.n else 1
		return tuple(int(scale[i] * int(denominator)) for i in range(self.n))

	@cached_property
	def is_finite(self) -> bool:
		"""True when the symmetrized matrix is positive definite."""
		symmetric = [[self.symmetrizer[i] * self.entries[i][j] for j in range(self.n)] for i in range(self.n)]
		return all(linalg.determinant([row[:size] for row in symmetric[:size]]) > 0 for size in range(1, self.n + 1))

	@cached_property
	def inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
		"""Exact inverse of a finite-type Cartan matrix."""
		self.require_finite()
		return tuple(tuple(row) for row in linalg.inverse(self.entries))

	def require_finite(self) -> None:
		"""Raise DomainError unless the matrix is of finite type."""
		if not self.is_finite:
			raise exceptions.DomainError("Operation needs a Cartan matrix of finite type")

	def simple_root(self, node: int) -> Weight:
		"""The simple root alpha_node as a Weight (column node)."""
		self._check_node(node)
		return Weight(tuple(self.entries[i][node] for i in range(self.n)))

	def fundamental_weight(self, node: int, multiple: int = 1) -> Weight:
		"""The fundamental weight of node (up to the relation on weights)."""
		self._check_node(node)
		return Weight.fundamental(self.n, node, multiple)

	def rho(self) -> Weight:
		"""The weight pairing to 1 with every simple coroot."""
		return Weight((1,) * self.n)

	def root_to_weight(self, root: RootVector) -> Weight:
		"""Read an element of the root lattice as a Weight."""
		if len(root) != self.n:
			raise ValueError("Root vector does not match the Cartan matrix size")
		return Weight(tuple(sum(self.entries[i][j] * root[j] for j in range(self.n)) for i in range(self.n)))

	def restrict(self, nodes: Sequence[int]) -> "GeneralizedCartanMatrix":
		"""Return the sub-matrix on the given nodes, in the given order."""
		for node in nodes:
			self._check_node(node)
		return GeneralizedCartanMatrix(
			tuple(tuple(self.entries[i][j] for j in nodes) for i in nodes),
			tuple(self.labels[i] for i in nodes),
		)

	def _check_node(self, node: int) -> None:
		if not 0 <= node < self.n:
			raise IndexError(f"Node {node} out of range for {self.n} nodes")


def _finite_labels(rank: int) -> Tuple[str, ...]:
	return tuple(f"a{i}" for i in range(1, rank + 1))


_MINIMUM_RANK: Dict[enums.Family, int] = {
	enums.Family.A: 1,
	enums.Family.B: 2,
	enums.Family.C: 2,
	enums.Family.D: 3,
}


@lru_cache(maxsize=64)
def build_finite(family: enums.Family, rank: int) -> GeneralizedCartanMatrix:
	"""Return the finite-type Cartan matrix of family and rank in Bourbaki numbering.

	Args:
		family: Cartan type A, B, C or D
		rank: Number of nodes

	Returns:
		The Cartan matrix with nodes labelled a1..a<rank>

	Raises:
		DomainError: If rank is out of range for the family
	"""
	if rank < _MINIMUM_RANK[family]:
		raise exceptions.DomainError(f"Type {family.value} needs rank at least {_MINIMUM_RANK[family]}, got {rank}")
	matrix = 2 * np.eye(rank, dtype=int)
	if family is enums.Family.A:
		matrix[range(rank - 1), range(1, rank)] = -1
		matrix[range(1, rank), range(rank - 1)] = -1
	else:
		matrix[range(rank - 2), range(1, rank - 1)] = -1
		matrix[range(1, rank - 1), range(rank - 2)] = -1
		if family is enums.Family.B:
			# last root short
			matrix[-2, -1] = -1
			matrix[-1, -2] = -2
		elif family is enums.Family.C:
			# last root long
			matrix[-2, -1] = -2
			matrix[-1, -2] = -1
		else:
			# fork: a_{n-2} joined to a_{n-1} and a_n
			matrix[-3, -1] = -1
			matrix[-1, -3] = -1
	return GeneralizedCartanMatrix(tuple(tuple(int(x) for x in row) for row in matrix), _finite_labels(rank))


def _extend(base: GeneralizedCartanMatrix, attachments: Dict[str, int]) -> GeneralizedCartanMatrix:
	"""Prepend new nodes to base, each joined by a simple edge to one base node."""
	extra = len(attachments)
	size = base.n + extra
	matrix = 2 * np.eye(size, dtype=int)
	matrix[extra:, extra:] = base.as_array()
	for position, target in enumerate(attachments.values()):
		matrix[position, extra + target] = -1
		matrix[extra + target, position] = -1
	return GeneralizedCartanMatrix(
		tuple(tuple(int(x) for x in row) for row in matrix), tuple(attachments.keys()) + base.labels
	)


@lru_cache(maxsize=64)
def build_model_K(family: enums.Family, rank: int) -> GeneralizedCartanMatrix:
	"""Extend the Cartan matrix of G by nodes a0 and b0, both joined to a1.

	Node order is (a0, b0, a1, ..., a<rank>). The nodes a0, b0, a1..a<rank-1>
	span a diagram of type D_{rank+1}.

	Raises:
		DomainError: If the family is not A, B or C or rank is below 2
	"""
	if family not in (enums.Family.A, enums.Family.B, enums.Family.C):
		raise exceptions.DomainError(f"No model extension for type {family.value}")
	if rank < 2:
		raise exceptions.DomainError(f"Model extension needs rank at least 2, got {rank}")
	return _extend(build_finite(family, rank), {"a0": 0, "b0": 0})


@lru_cache(maxsize=64)
def build_sph_K(n: int, p: int) -> GeneralizedCartanMatrix:
	"""Extend B_n by a0 joined to a1 and b0 joined to a_{p-1}, simple edges.

	Raises:
		DomainError: If p is outside 2..n-2
	"""
	if not 2 <= p <= n - 2:
		raise exceptions.DomainError(f"Need 2 <= p <= n-2, got n={n}, p={p}")
	return _extend(build_finite(enums.Family.B, n), {"a0": 0, "b0": p - 2})


def model_nodes(gcm: GeneralizedCartanMatrix) -> Tuple[int, int, List[int]]:
	"""Return (a0, b0, G-nodes) for an extended Cartan matrix."""
	alpha0 = gcm.index("a0")
	beta0 = gcm.index("b0")
	return alpha0, beta0, [i for i in range(gcm.n) if i not in (alpha0, beta0)]


def model_epsilons(family: enums.Family, rank: int) -> Tuple[Weight, ...]:
	"""Spherical generators of the model variety of G as weights of G.

	eps_i = omega_i, except eps_rank = 2 omega_rank in type B.

	Raises:
		DomainError: If the family has no model generators here
	"""
	if family not in (enums.Family.A, enums.Family.B, enums.Family.C):
		raise exceptions.DomainError(f"No model generators for type {family.value}")
	gcm = build_finite(family, rank)
	generators = [gcm.fundamental_weight(i) for i in range(rank)]
	if family is enums.Family.B:
		generators[-1] = gcm.fundamental_weight(rank - 1, 2)
	return tuple(generators)


def sph_epsilons(n: int, p: int) -> Tuple[Weight, ...]:
	"""Generators (omega_1, omega_p, omega_{p+1}) of the B_n spherical family."""
	if not 2 <= p <= n - 2:
		raise exceptions.DomainError(f"Need 2 <= p <= n-2, got n={n}, p={p}")
	gcm = build_finite(enums.Family.B, n)
	return (gcm.fundamental_weight(0), gcm.fundamental_weight(p - 1), gcm.fundamental_weight(p))


def reflect(gcm: GeneralizedCartanMatrix, node: int, weight: Weight) -> Weight:
	"""Return s_node(weight) = weight - <alpha_node^vee, weight> alpha_node.

	Raises:
		IndexError: If node is out of range
	"""
	gcm._check_node(node)
	if len(weight) != gcm.n:
		raise ValueError("Weight does not match the Cartan matrix size")
	pairing = weight[node]
	if pairing == 0:
		return weight
	return Weight(tuple(weight[k] - pairing * gcm.entries[k][node] for k in range(gcm.n)))


def reflect_root(gcm: GeneralizedCartanMatrix, node: int, root: RootVector) -> RootVector:
	"""Return s_node(root) in simple-root coordinates."""
	gcm._check_node(node)
	pairing = sum(gcm.entries[node][j] * root[j] for j in range(gcm.n))
	if pairing == 0:
		return root
	coords = list(root.coords)
	coords[node] -= pairing
	return RootVector(tuple(coords))


def act(gcm: GeneralizedCartanMatrix, word: WeylWord, weight: Weight) -> Weight:
	"""Apply a Weyl word to a weight, rightmost letter first."""
	for letter in reversed(word.letters):
		weight = reflect(gcm, letter, weight)
	return weight


def act_root(gcm: GeneralizedCartanMatrix, word: WeylWord, root: RootVector) -> RootVector:
	"""Apply a Weyl word to a root vector, rightmost letter first."""
	for letter in reversed(word.letters):
		root = reflect_root(gcm, letter, root)
	return root


def sort_to_dominant(gcm: GeneralizedCartanMatrix, weight: Weight) -> Tuple[Weight, Tuple[int, ...]]:
	"""Reflect weight into the dominant chamber.

	At each step the smallest node with a negative pairing is used. If the
	letters recorded are i_1, ..., i_k then weight = s_{i_1} ... s_{i_k}(result).

	Returns:
		The dominant weight and the recorded letters
	"""
	letters: List[int] = []
	while True:
		negative = next((i for i, value in enumerate(weight.coords) if value < 0), None)
		if negative is None:
			return weight, tuple(letters)
		weight = reflect(gcm, negative, weight)
		letters.append(negative)


def reduced_word(gcm: GeneralizedCartanMatrix, word: WeylWord) -> WeylWord:
	"""Return the canonical reduced word of the element word represents."""
	_, letters = sort_to_dominant(gcm, act(gcm, word, gcm.rho()))
	return WeylWord(letters)


def length(gcm: GeneralizedCartanMatrix, word: WeylWord) -> int:
	"""Return the length of the element represented by word."""
	return len(reduced_word(gcm, word).letters)


def same_element(gcm: GeneralizedCartanMatrix, first: WeylWord, second: WeylWord) -> bool:
	"""Return True if both words represent the same Weyl group element."""
	rho = gcm.rho()
	return act(gcm, first, rho) == act(gcm, second, rho)


def min_coset_rep(gcm: GeneralizedCartanMatrix, word: WeylWord, subset: Iterable[int]) -> WeylWord:
	"""Return the minimal-length element of word * W_subset.

	Args:
		gcm: Ambient Cartan matrix
		word: Any representative of the coset
		subset: Nodes generating the parabolic subgroup

	Returns:
		The reduced word of the minimal representative
	"""
	subset = frozenset(subset)
	for node in subset:
		gcm._check_node(node)
	anchor = Weight(tuple(0 if i in subset else 1 for i in range(gcm.n)))
	_, letters = sort_to_dominant(gcm, act(gcm, word, anchor))
	return WeylWord(letters)


def to_root_coordinates(gcm: GeneralizedCartanMatrix, weight: Weight) -> Tuple[Fraction, ...]:
	"""Express a weight in simple-root coordinates (finite type only)."""
	inverse = gcm.inverse
	return tuple(sum((inverse[i][j] * weight[j] for j in range(gcm.n)), Fraction(0)) for i in range(gcm.n))


def dominance_leq(gcm: GeneralizedCartanMatrix, lower: Weight, upper: Weight) -> bool:
	"""Return True iff upper - lower is a nonnegative integer sum of simple roots.

	Raises:
		DomainError: If the Cartan matrix is not of finite type
	"""
	gcm.require_finite()
	difference = to_root_coordinates(gcm, upper - lower)
	return all(c.denominator == 1 and c >= 0 for c in difference)


@lru_cache(maxsize=64)
def positive_roots(gcm: GeneralizedCartanMatrix) -> Tuple[RootVector, ...]:
	"""Enumerate the positive roots of a finite-type Cartan matrix.

	Raises:
		DomainError: If the Cartan matrix is not of finite type
	"""
	gcm.require_finite()
	matrix = gcm.as_array()
	simple = [RootVector.simple(gcm.n, i) for i in range(gcm.n)]
	found = set(simple)
	queue = deque(simple)
	while queue:
		root = queue.popleft()
		pairings = matrix @ np.array(root.coords, dtype=int)
		for node in range(gcm.n):
			if pairings[node] >= 0:
				continue
			coords = list(root.coords)
			coords[node] -= int(pairings[node])
			image = RootVector(tuple(coords))
			if image not in found:
				found.add(image)
				queue.append(image)
	return tuple(sorted(found, key=lambda r: (r.height, r.coords)))


def coroot_pairing(gcm: GeneralizedCartanMatrix, root: RootVector, weight: Weight) -> Fraction:
	"""Return <root^vee, weight> for a real root given in simple-root coordinates."""
	d = gcm.symmetrizer
	numerator = sum(root[i] * d[i] * weight[i] for i in range(gcm.n))
	norm = sum(root[i] * root[j] * d[i] * gcm.entries[i][j] for i in range(gcm.n) for j in range(gcm.n))
	return Fraction(2 * numerator, norm)


def orbit(
	gcm: GeneralizedCartanMatrix, weight: Weight, nodes: Optional[Iterable[int]] = None, limit: Optional[int] = None
) -> List[Weight]:
	"""Return the orbit of weight under the subgroup generated by nodes.

	Args:
		gcm: Ambient Cartan matrix
		weight: Starting weight
		nodes: Generating nodes, all nodes by default
		limit: Optional bound on the orbit size

	Raises:
		ResourceBoundError: If the orbit grows past limit
	"""
	nodes = list(range(gcm.n)) if nodes is None else list(nodes)
	seen = {weight}
	ordered = [weight]
	queue = deque([weight])
	while queue:
		current = queue.popleft()
		for node in nodes:
			if current[node] == 0:
				continue
			image = reflect(gcm, node, current)
			if image not in seen:
				seen.add(image)
				ordered.append(image)
				queue.append(image)
				if limit is not None and len(ordered) > limit:
					raise exceptions.ResourceBoundError(f"Weyl orbit exceeds {limit} elements")
	return ordered
