#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Exterior algebra over the rationals and the invariants of the model varieties.

Basis monomials are stored as strictly increasing tuples of 0-based indices.
Every constructed vector space is laid out as U, then U*, then W, then v, so
that all signs and projection scalars are reproducible.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pluckerize import constants, exceptions, linalg
from pluckerize import enumerations as enums
from pluckerize.program_state import CheckRecord, record_from_bool

log = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Matrix = Tuple[Tuple[Fraction, ...], ...]


def _sort_with_sign(indices: Sequence[int]) -> Tuple[int, Optional[Monomial]]:
	"""Sort indices counting swaps; a repeated index gives (0, None)."""
	if len(set(indices)) != len(indices):
		return 0, None
	swaps = sum(1 for a in range(len(indices)) for b in range(a + 1, len(indices)) if indices[a] > indices[b])
	return (-1) ** swaps, tuple(sorted(indices))


@dataclass(frozen=True)
class ExtElement:
	"""A finite rational combination of wedge monomials in a fixed dimension."""

	dim: int
	terms: Dict[Monomial, Fraction] = field(default_factory=dict, hash=False)

	def __post_init__(self) -> None:
		for key, value in self.terms.items():
			if not value:
				raise ValueError(f"Stored zero coefficient at {key}")
			if any(b <= a for a, b in zip(key, key[1:])) or any(not 0 <= i < self.dim for i in key):
				raise ValueError(f"Monomial {key} is not strictly increasing in 0..{self.dim - 1}")

	@classmethod
	def build(cls, dim: int, terms: Dict[Monomial, Fraction]) -> "ExtElement":
		"""Create an element, dropping zero coefficients."""
		return cls(dim, {key: Fraction(value) for key, value in terms.items() if value})

	@classmethod
	def basis(cls, dim: int, *indices: int) -> "ExtElement":
		"""Return e_{i_1} ^ ... ^ e_{i_k} for 0-based indices in any order."""
		sign, key = _sort_with_sign(indices)
		if key is None:
			return cls(dim)
		return cls(dim, {key: Fraction(sign)})

	@classmethod
	def scalar(cls, dim: int, value=1) -> "ExtElement":
		"""Return a degree-zero element."""
		return cls.build(dim, {(): Fraction(value)})

	def __bool__(self) -> bool:
		return bool(self.terms)

	def __add__(self, other: "ExtElement") -> "ExtElement":
		self._check_dim(other)
		terms = dict(self.terms)
		for key, value in other.terms.items():
			terms[key] = terms.get(key, Fraction(0)) + value
		return ExtElement.build(self.dim, terms)

	def __sub__(self, other: "ExtElement") -> "ExtElement":
		return self + other * -1

	def __neg__(self) -> "ExtElement":
		return self * -1

	def __mul__(self, factor) -> "ExtElement":
		factor = Fraction(factor)
		return ExtElement.build(self.dim, {key: value * factor for key, value in self.terms.items()})

	__rmul__ = __mul__

	def __xor__(self, other: "ExtElement") -> "ExtElement":
		return wedge(self, other)

	def _check_dim(self, other: "ExtElement") -> None:
		if self.dim != other.dim:
			raise ValueError(f"Dimension mismatch: {self.dim} vs {other.dim}")

	def degrees(self) -> List[int]:
		"""Sorted list of the degrees present."""
		return sorted({len(key) for key in self.terms})

	def degree(self) -> int:
		"""Degree of a nonzero homogeneous element.

		Raises:
			DomainError: If the element is zero or not homogeneous
		"""
		degrees = self.degrees()
		if len(degrees) != 1:
			raise exceptions.DomainError(f"Element is not homogeneous of one degree: {degrees}")
		return degrees[0]

	def coefficient(self, key: Monomial) -> Fraction:
		"""Coefficient of a monomial (zero if absent)."""
		return self.terms.get(tuple(key), Fraction(0))

	def vector(self, degree: int) -> List[Fraction]:
		"""Coefficients against exterior_basis(dim, degree)."""
		return [self.coefficient(key) for key in exterior_basis(self.dim, degree)]

	def ratio_to(self, other: "ExtElement") -> Optional[Fraction]:
		"""Return c with self = c * other, or None if they are not proportional."""
		if not other:
			return None
		key = min(other.terms)
		ratio = self.coefficient(key) / other.terms[key]
		return ratio if self == other * ratio else None

	def to_dict(self) -> Dict[str, str]:
		"""JSON-friendly form with 1-based comma-separated monomials."""
		return {",".join(str(i + 1) for i in key): str(value) for key, value in sorted(self.terms.items())}


@lru_cache(maxsize=256)
def exterior_basis(dim: int, degree: int) -> Tuple[Monomial, ...]:
	"""Monomials of the given degree in lexicographic order."""
	return tuple(combinations(range(dim), degree))


def wedge(first: ExtElement, second: ExtElement) -> ExtElement:
	"""Exterior product of two elements of the same dimension."""
	first._check_dim(second)
	terms: Dict[Monomial, Fraction] = {}
	for left, a in first.terms.items():
		for right, b in second.terms.items():
			if set(left) & set(right):
				continue
			swaps = sum(1 for i in left for j in right if i > j)
			key = tuple(sorted(left + right))
			terms[key] = terms.get(key, Fraction(0)) + (a * b if swaps % 2 == 0 else -a * b)
	return ExtElement.build(first.dim, terms)


def wedge_power(element: ExtElement, power: int) -> ExtElement:
	"""Return element ^ element ^ ... (power factors); power 0 gives 1."""
	result = ExtElement.scalar(element.dim)
	for _ in range(power):
		result = wedge(result, element)
	return result


@dataclass(frozen=True)
class BilinearFormSpec:
	"""A nondegenerate symmetric or symplectic form given by its Gram matrix."""

	gram: Matrix
	kind: enums.FormKind

	def __post_init__(self) -> None:
		size = len(self.gram)
		if any(len(row) != size for row in self.gram):
			raise exceptions.DomainError("Gram matrix must be square")
		sign = 1 if self.kind is enums.FormKind.SYMMETRIC else -1
		for i in range(size):
			for j in range(size):
				if self.gram[i][j] != sign * self.gram[j][i]:
					raise exceptions.DomainError(f"Gram matrix is not {self.kind.value} at ({i}, {j})")
		if linalg.determinant(self.gram) == 0:
			raise exceptions.DomainError("Bilinear form is degenerate")

	@classmethod
	def from_rows(cls, rows: Sequence[Sequence], kind: enums.FormKind) -> "BilinearFormSpec":
		"""Build a form from any rational rows."""
		return cls(tuple(tuple(Fraction(x) for x in row) for row in rows), kind)

	@property
	def dim(self) -> int:
		"""Dimension of the underlying space."""
		return len(self.gram)

	@cached_property
	def inverse(self) -> Matrix:
		"""Inverse Gram matrix."""
		return tuple(tuple(row) for row in linalg.inverse(self.gram))

	def __call__(self, i: int, j: int) -> Fraction:
		return self.gram[i][j]


def paired_blocks(dim: int, blocks: Iterable[Tuple[int, int]], kind: enums.FormKind, tail=()) -> BilinearFormSpec:
	"""Form pairing e_{o+i} with e_{o+h+i} inside each (offset o, half h) block.

	For a symplectic form the pairing is +1 then -1; for a symmetric form it is
	+1 both ways. Each index in tail is paired with itself to 1.
	"""
	gram = [[Fraction(0)] * dim for _ in range(dim)]
	for offset, half in blocks:
		for i in range(half):
			gram[offset + i][offset + half + i] = Fraction(1)
			gram[offset + half + i][offset + i] = Fraction(1 if kind is enums.FormKind.SYMMETRIC else -1)
	for index in tail:
		gram[index][index] = Fraction(1)
	return BilinearFormSpec.from_rows(gram, kind)


def dual_bivector(form: BilinearFormSpec) -> ExtElement:
	"""Bivector sum_{a<b} (G^-1)_{ba} e_a ^ e_b of a symplectic form.

	Its contraction with the form is half the dimension.
	"""
	_require_symplectic(form)
	inverse = form.inverse
	terms = {(a, b): inverse[b][a] for a in range(form.dim) for b in range(a + 1, form.dim)}
	return ExtElement.build(form.dim, terms)


def _require_symplectic(form: BilinearFormSpec) -> None:
	if form.kind is not enums.FormKind.SYMPLECTIC:
		raise exceptions.DomainError("Contraction needs a symplectic form")


def contraction(form: BilinearFormSpec, element: ExtElement) -> ExtElement:
	"""Contract an element with a symplectic form, lowering degree by two.

	iota(v_1 ^ ... ^ v_k) = sum over positions a < b of
	(-1)^(a+b+1) form(v_a, v_b) times the wedge of the remaining factors,
	with 1-based positions.

	Raises:
		DomainError: If the form is not symplectic or some degree is below 2
	"""
	_require_symplectic(form)
	if form.dim != element.dim:
		raise ValueError("Form and element dimensions differ")
	if element and min(element.degrees()) < 2:
		raise exceptions.DomainError("Contraction needs degree at least 2")
	terms: Dict[Monomial, Fraction] = {}
	for key, value in element.terms.items():
		for a in range(len(key)):
			for b in range(a + 1, len(key)):
				pairing = form(key[a], key[b])
				if not pairing:
					continue
				rest = key[:a] + key[a + 1 : b] + key[b + 1 :]
				sign = 1 if (a + b) % 2 == 1 else -1
				terms[rest] = terms.get(rest, Fraction(0)) + sign * pairing * value
	return ExtElement.build(element.dim, terms)


@lru_cache(maxsize=64)
def _projection_system(form: BilinearFormSpec, degree: int) -> Tuple[List[List[Fraction]], ExtElement]:
	"""Matrix of y -> iota(a ^ y) on the exterior power of degree - 2."""
	bivector = dual_bivector(form)
	sources = exterior_basis(form.dim, degree - 2)
	targets = exterior_basis(form.dim, degree - 2)
	columns = []
	for key in sources:
		image = contraction(form, wedge(bivector, ExtElement.basis(form.dim, *key)))
		columns.append([image.coefficient(target) for target in targets])
	rows = [[column[r] for column in columns] for r in range(len(targets))]
	return rows, bivector


def sp_projection(degree: int, element: ExtElement, form: BilinearFormSpec) -> ExtElement:
	"""Project onto the kernel of contraction along bivector ^ (degree - 2 forms).

	Solves iota(a ^ y) = iota(element) exactly and returns element - a ^ y.

	Args:
		degree: Degree of element
		element: Homogeneous element of that degree
		form: Symplectic form

	Returns:
		The component of element in the contraction kernel

	Raises:
		DomainError: If element is not homogeneous of the given degree
		CertificationError: If the linear system is inconsistent
	"""
	_require_symplectic(form)
	if element and element.degree() != degree:
		raise exceptions.DomainError(f"Element has degree {element.degree()}, expected {degree}")
	if degree < 2 or not element:
		return element
	rows, bivector = _projection_system(form, degree)
	target = contraction(form, element)
	rhs = target.vector(degree - 2)
	solution = linalg.solve(rows, rhs)
	if solution is None:
		raise exceptions.CertificationError(f"Projection system in degree {degree} has no solution")
	sources = exterior_basis(form.dim, degree - 2)
	correction = ExtElement.build(form.dim, {key: value for key, value in zip(sources, solution)})
	return element - wedge(bivector, correction)


def contraction_kernel_dimension(form: BilinearFormSpec, degree: int) -> int:
	"""Dimension of the kernel of contraction on degree-th exterior power."""
	if degree < 2:
		return len(exterior_basis(form.dim, degree))
	sources = exterior_basis(form.dim, degree)
	targets = exterior_basis(form.dim, degree - 2)
	columns = [contraction(form, ExtElement.basis(form.dim, *key)).vector(degree - 2) for key in sources]
	rows = [[column[r] for column in columns] for r in range(len(targets))]
	return len(sources) - linalg.rank(rows)


def lie_derivation(matrix: Sequence[Sequence], element: ExtElement) -> ExtElement:
	"""Apply an endomorphism X of V to the exterior algebra as a derivation.

	X e_j = sum_i X[i][j] e_i, extended by the Leibniz rule.
	"""
	if len(matrix) != element.dim:
		raise ValueError("Matrix size does not match the element dimension")
	terms: Dict[Monomial, Fraction] = {}
	for key, value in element.terms.items():
		for position, j in enumerate(key):
			for i in range(element.dim):
				entry = matrix[i][j]
				if not entry:
					continue
				sign, image = _sort_with_sign(key[:position] + (i,) + key[position + 1 :])
				if image is None:
					continue
				terms[image] = terms.get(image, Fraction(0)) + sign * Fraction(entry) * value
	return ExtElement.build(element.dim, terms)


def _unit(dim: int, pairs: Iterable[Tuple[int, int, int]]) -> Matrix:
	rows = [[Fraction(0)] * dim for _ in range(dim)]
	for i, j, value in pairs:
		rows[i][j] += value
	return tuple(tuple(row) for row in rows)


def sp_generators(dim: int, offset: int, half: int, fixed: Optional[int] = None) -> List[Matrix]:
	"""Generators of sp on the block (offset, half), optionally killing e_fixed.

	Each generator is [[A, B], [C, -A^T]] with B and C symmetric elementary.
	"""
	generators: List[Matrix] = []
	lower = offset + half
	for i in range(half):
		for j in range(half):
			generators.append(_unit(dim, [(offset + i, offset + j, 1), (lower + j, lower + i, -1)]))
			if i <= j:
				generators.append(_unit(dim, [(offset + i, lower + j, 1), (offset + j, lower + i, 1)]))
				generators.append(_unit(dim, [(lower + i, offset + j, 1), (lower + j, offset + i, 1)]))
	if fixed is None:
		return generators
	return [g for g in generators if not any(g[i][fixed] for i in range(dim))]


def gl_generators(dim: int, offset: int, half: int, traceless: bool = False) -> List[Matrix]:
	"""Generators A (+) -A^T of gl (or sl) acting on a block and its dual."""
	lower = offset + half
	generators = [
		_unit(dim, [(offset + i, offset + j, 1), (lower + j, lower + i, -1)])
		for i in range(half)
		for j in range(half)
		if not traceless or i != j
	]
	if traceless:
		for i in range(half - 1):
			generators.append(
				_unit(
					dim,
					[
						(offset + i, offset + i, 1),
						(offset + i + 1, offset + i + 1, -1),
						(lower + i, lower + i, -1),
						(lower + i + 1, lower + i + 1, 1),
					],
				)
			)
	return generators


def so_generators(dim: int, offset: int, half: int) -> List[Matrix]:
	"""Generators of so for the split symmetric form on the block (offset, half)."""
	lower = offset + half
	generators = gl_generators(dim, offset, half)
	for i in range(half):
		for j in range(i + 1, half):
			generators.append(_unit(dim, [(offset + i, lower + j, 1), (offset + j, lower + i, -1)]))
			generators.append(_unit(dim, [(lower + i, offset + j, 1), (lower + j, offset + i, -1)]))
	return generators


@dataclass(frozen=True)
class InvariantSetup:
	"""The vector space, invariants and stabilizer sample of one variety."""

	family: str
	rank: int
	dim: int
	invariants: Tuple[ExtElement, ...]
	lifts: Tuple[ExtElement, ...]
	form: Optional[BilinearFormSpec]
	sample: Tuple[Matrix, ...]

	def project(self, degree: int, element: ExtElement) -> ExtElement:
		"""Apply the projection to the top summand when a form is present."""
		if self.form is None:
			return element
		return sp_projection(degree, element, self.form)


def _check_dimension(dim: int) -> None:
	if dim > constants.MAX_EXTERIOR_DIMENSION:
		raise exceptions.ResourceBoundError(f"dim V = {dim} exceeds {constants.MAX_EXTERIOR_DIMENSION}")


def _alternating(dim: int, v: ExtElement, bivector: ExtElement, rank: int) -> List[ExtElement]:
	"""h_1 = v, h_2k = bivector^k, h_2k+1 = v ^ bivector^k up to h_rank."""
	invariants = []
	for i in range(1, rank + 1):
		power = wedge_power(bivector, i // 2)
		invariants.append(power if i % 2 == 0 else wedge(v, power))
	return invariants


def stabilizer_sample(family: enums.Family, rank: int) -> Tuple[Matrix, ...]:
	"""Matrices in the Lie algebra of the stabilizer H of the model variety."""
	return model_setup(family, rank).sample


@lru_cache(maxsize=64)
def model_setup(family: enums.Family, rank: int) -> InvariantSetup:
	"""Build V, the invariants h_1..h_rank and a stabilizer sample for G of family and rank.

	Args:
		family: A (SL(rank+1)), B (SO(2 rank+1)) or C (Sp(2 rank))
		rank: Rank of G

	Raises:
		DomainError: For an unsupported family or rank
		ResourceBoundError: If dim V exceeds the exterior bound
	"""
	if rank < 1 or family not in (enums.Family.A, enums.Family.B, enums.Family.C):
		raise exceptions.DomainError(f"No model invariants for {family.value}{rank}")
	if family is enums.Family.A and rank % 2 == 1:
		# SL(2n): V with symplectic a_V and v = e_0
		dim = rank + 1
		_check_dimension(dim)
		half = dim // 2
		form = paired_blocks(dim, [(0, half)], enums.FormKind.SYMPLECTIC)
		bivector = dual_bivector(form)
		invariants = _alternating(dim, ExtElement.basis(dim, 0), bivector, rank)
		sample = sp_generators(dim, 0, half, fixed=0)
		return InvariantSetup("A", rank, dim, tuple(invariants), tuple(invariants), None, tuple(sample))
	if family in (enums.Family.A, enums.Family.B):
		# V = W + W* + v with a_W extended by zero
		half = rank // 2 if family is enums.Family.A else rank
		dim = 2 * half + 1
		_check_dimension(dim)
		a_w = ExtElement.build(dim, {(i, half + i): Fraction(1) for i in range(half)})
		invariants = _alternating(dim, ExtElement.basis(dim, dim - 1), a_w, rank)
		if family is enums.Family.A:
			sample = sp_generators(dim, 0, half)
		else:
			sample = gl_generators(dim, 0, half)
		return InvariantSetup(family.value, rank, dim, tuple(invariants), tuple(invariants), None, tuple(sample))
	# Sp(2l): V = W1 + W2, v = e_0 in W1
	first = rank if rank % 2 == 0 else rank + 1
	dim = 2 * rank
	_check_dimension(dim)
	blocks = [(0, first // 2)]
	if dim > first:
		blocks.append((first, (dim - first) // 2))
	form = paired_blocks(dim, blocks, enums.FormKind.SYMPLECTIC)
	a_w1 = ExtElement.build(dim, {(i, first // 2 + i): Fraction(1) for i in range(first // 2)})
	lifts = _alternating(dim, ExtElement.basis(dim, 0), a_w1, rank)
	invariants = [sp_projection(i + 1, lift, form) for i, lift in enumerate(lifts)]
	sample = sp_generators(dim, 0, first // 2, fixed=0)
	if dim > first:
		sample += sp_generators(dim, first, (dim - first) // 2)
	return InvariantSetup("C", rank, dim, tuple(invariants), tuple(lifts), form, tuple(sample))


def model_invariants(family: enums.Family, rank: int) -> Tuple[ExtElement, ...]:
	"""Return h_1, ..., h_rank for the model variety of G."""
	return model_setup(family, rank).invariants


def mod2_pairs(rank: int) -> List[Tuple[int, int, int]]:
	"""(i, j, i + j) for the products h_2 h_i and h_1 h_2i that must hit h_{i+j}."""
	pairs = [(2, i, i + 2) for i in range(1, rank - 1)]
	pairs += [(1, 2 * i, 2 * i + 1) for i in range(1, (rank - 1) // 2 + 1)]
	return sorted(set(pairs))


def annihilated(sample: Iterable[Matrix], elements: Iterable[ExtElement]) -> List[Tuple[int, int]]:
	"""(generator, element) positions where the derivation does not vanish."""
	elements = list(elements)
	return [
		(g, e) for g, matrix in enumerate(sample) for e, element in enumerate(elements) if lie_derivation(matrix, element)
	]


def verify_mod2(family: enums.Family, rank: int) -> CheckRecord:
	"""Check that every mod2 product of invariants is a nonzero multiple of its target.

	Products are projected with the symplectic projection in type C. The
	scalars are reported; in type C they depend on the fixed normalization of
	the projection and are logged.
	"""
	setup = model_setup(family, rank)
	invariants = setup.invariants
	results = []
	ok = all(invariants)
	for i, j, target in mod2_pairs(rank):
		product = setup.project(target, wedge(invariants[i - 1], invariants[j - 1]))
		scalar = product.ratio_to(invariants[target - 1])
		passed = scalar is not None and scalar != 0
		ok = ok and passed
		results.append({"first": i, "second": j, "target": target, "scalar": None if scalar is None else str(scalar)})
		if setup.form is not None:
			log.info("Sp(%d) projected h_%d h_%d = %s h_%d", 2 * rank, i, j, scalar, target)
	failures = annihilated(setup.sample, invariants)
	return record_from_bool(
		enums.CheckName.MOD2.value,
		ok and not failures,
		family.value,
		rank,
		dimension=setup.dim,
		nonzero=[bool(h) for h in invariants],
		pairs=results,
		invariance_failures=[list(pair) for pair in failures],
	)


@lru_cache(maxsize=16)
def sph_setup(n: int, p: int) -> InvariantSetup:
	"""V = U + U* + W + v with h_1 = v, h_2 = top wedge of U, h_3 = h_1 ^ h_2."""
	if not 2 <= p <= n - 2:
		raise exceptions.DomainError(f"Need 2 <= p <= n-2, got n={n}, p={p}")
	dim = 2 * n + 1
	_check_dimension(dim)
	w_half = n - p
	v = ExtElement.basis(dim, dim - 1)
	h2 = ExtElement.basis(dim, *range(p))
	invariants = (v, h2, wedge(v, h2))
	sample = gl_generators(dim, 0, p, traceless=True)
	for i in range(p):
		for j in range(i + 1, p):
			sample.append(_unit(dim, [(i, p + j, 1), (j, p + i, -1)]))
	sample += so_generators(dim, 2 * p, w_half)
	return InvariantSetup("sph", n, dim, invariants, invariants, None, tuple(sample))


def sph_form(n: int, p: int) -> BilinearFormSpec:
	"""The symmetric form B: U paired with U*, split on W, and B(v, v) = 1."""
	dim = 2 * n + 1
	return paired_blocks(dim, [(0, p), (2 * p, n - p)], enums.FormKind.SYMMETRIC, tail=(dim - 1,))


def verify_sph2(n: int, p: int) -> CheckRecord:
	"""Check h_1 ^ h_2 != 0 and the invariance of h_1, h_2, h_3.

	Raises:
		ResourceBoundError: If n is larger than 5
	"""
	if n > 5:
		raise exceptions.ResourceBoundError(f"sph2 is limited to n <= 5, got {n}")
	setup = sph_setup(n, p)
	h1, h2, h3 = setup.invariants
	product = wedge(h1, h2)
	failures = annihilated(setup.sample, setup.invariants)
	return record_from_bool(
		enums.CheckName.SPH2.value,
		bool(product) and product == h3 and not failures,
		"sph",
		n,
		p=p,
		dimension=setup.dim,
		product=product.to_dict(),
		invariance_failures=[list(pair) for pair in failures],
	)
