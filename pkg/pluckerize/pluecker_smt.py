#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Standard monomial theory for the Grassmannian Gr(k, n).

Columns are Plücker indices, tableaux are monomials in them. Nonstandard
tableaux are rewritten with Garnir relations until only chains under the
componentwise order remain. Every relation is checked against exact minors of
random integer matrices before it is used.

Monomial order: total degree, then the sorted list of all entries, then the
lexicographic order of the sorted column sequence. Garnir exchanges keep the
entries, so the last comparison is the one that decreases.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from pluckerize import constants, exceptions, linalg
from pluckerize import enumerations as enums
from pluckerize import rep_theory
from pluckerize import root_system as rs
from pluckerize.program_state import CheckRecord, record_from_bool
from pluckerize.random_number_generator import RandomNumberGenerator

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Column:
	"""A Plücker index: a strictly increasing k-tuple from 1..n."""

	indices: Tuple[int, ...]
	n: int

	def __post_init__(self) -> None:
		if not self.indices:
			raise ValueError("A column needs at least one index")
		if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
			raise ValueError(f"Column {self.indices} is not strictly increasing")
		if self.indices[0] < 1 or self.indices[-1] > self.n:
			raise ValueError(f"Column {self.indices} has entries outside 1..{self.n}")

	@classmethod
	def of(cls, n: int, *indices: int) -> "Column":
		"""Build a column from its entries."""
		return cls(tuple(indices), n)

	@property
	def k(self) -> int:
		"""Number of entries."""
		return len(self.indices)

	def __getitem__(self, position: int) -> int:
		return self.indices[position]

	def to_token(self) -> str:
		"""Comma-separated entries, e.g. 1,4."""
		return ",".join(str(i) for i in self.indices)


@dataclass(frozen=True)
class Tableau:
	"""A monomial in Plücker coordinates; columns kept in lexicographic order."""

	columns: Tuple[Column, ...]
	k: int
	n: int

	def __post_init__(self) -> None:
		if list(self.columns) != sorted(self.columns):
			raise ValueError("Tableau columns must be sorted; use Tableau.of")
		for column in self.columns:
			if column.k != self.k or column.n != self.n:
				raise ValueError(f"Column {column.indices} does not belong to Gr({self.k}, {self.n})")

	@classmethod
	def of(cls, k: int, n: int, columns: Iterable[Column] = ()) -> "Tableau":
		"""Build a tableau from columns in any order."""
		return cls(tuple(sorted(columns)), k, n)

	@property
	def degree(self) -> int:
		"""Number of columns."""
		return len(self.columns)

	def order_key(self) -> Tuple:
		"""Key of the monomial order."""
		entries = tuple(sorted(i for column in self.columns for i in column.indices))
		return (self.degree, entries, tuple(column.indices for column in self.columns))

	def times(self, *columns: Column) -> "Tableau":
		"""Multiply by further columns."""
		return Tableau.of(self.k, self.n, self.columns + columns)

	def to_token(self) -> str:
		"""Serialize as columns separated by |, e.g. 1,4|2,3."""
		return "|".join(column.to_token() for column in self.columns)


@dataclass(frozen=True)
class StraighteningResult:
	"""A rational combination of tableaux."""

	combo: Dict[Tableau, Fraction] = field(default_factory=dict, hash=False)

	def to_dict(self) -> Dict[str, str]:
		"""Tokens mapped to exact coefficients, in monomial order."""
		ordered = sorted(self.combo.items(), key=lambda item: item[0].order_key())
		return {tableau.to_token(): str(value) for tableau, value in ordered}


def parse_tableau(token: str, k: int, n: int) -> Tableau:
	"""Parse a token such as 1,4|2,3; the empty string is the empty tableau.

	Raises:
		ValueError: If the token is malformed or does not fit Gr(k, n)
	"""
	token = token.strip()
	if not token:
		return Tableau.of(k, n)
	columns = []
	for part in token.split("|"):
		try:
			indices = tuple(int(entry) for entry in part.split(","))
		except ValueError:
			raise ValueError(f"Column token {part!r} is not a comma-separated list of integers") from None
		if len(indices) != k:
			raise ValueError(f"Column token {part!r} has {len(indices)} entries, expected {k}")
		columns.append(Column(indices, n))
	return Tableau.of(k, n, columns)


@lru_cache(maxsize=64)
def all_columns(k: int, n: int) -> Tuple[Column, ...]:
	"""All C(n, k) columns in lexicographic order."""
	if not 1 <= k <= n:
		raise exceptions.DomainError(f"Need 1 <= k <= n, got k={k}, n={n}")
	return tuple(Column(indices, n) for indices in combinations(range(1, n + 1), k))


def minimum_column(k: int, n: int) -> Column:
	"""The column (1, ..., k)."""
	return Column(tuple(range(1, k + 1)), n)


def leq_columns(first: Column, second: Column) -> bool:
	"""Componentwise comparison first[i] <= second[i] for all i.

	Raises:
		ValueError: If the columns have different shapes
	"""
	if first.k != second.k or first.n != second.n:
		raise ValueError("Columns of different shape are not comparable")
	return all(a <= b for a, b in zip(first.indices, second.indices))


def is_standard(tableau: Tableau) -> bool:
	"""True iff the sorted columns form a componentwise chain."""
	return all(leq_columns(a, b) for a, b in zip(tableau.columns, tableau.columns[1:]))


def _sorted_column(entries: Sequence[int], n: int) -> Tuple[int, Optional[Column]]:
	if len(set(entries)) != len(entries):
		return 0, None
	swaps = sum(1 for a in range(len(entries)) for b in range(a + 1, len(entries)) if entries[a] > entries[b])
	return (-1) ** swaps, Column(tuple(sorted(entries)), n)


@lru_cache(maxsize=None)
def _garnir_terms(first: Column, second: Column) -> Tuple[Tuple[Tableau, Fraction], ...]:
	"""Expand first * second (first < second, incomparable) by the Garnir shuffle.

	With s the first position where first[s] > second[s], the entries
	first[s:] + second[:s+1] are k + 1 row vectors in a k-dimensional space,
	so the alternating sum over their redistributions vanishes.
	"""
	k, n = first.k, first.n
	s = next(i for i in range(k) if first[i] > second[i])
	exchanged = first.indices[s:] + second.indices[: s + 1]
	size = k - s
	identity = tuple(range(size))
	terms: Dict[Tableau, Fraction] = {}
	for chosen in combinations(range(len(exchanged)), size):
		if chosen == identity:
			continue
		rest = tuple(i for i in range(len(exchanged)) if i not in chosen)
		shuffle_sign = (-1) ** sum(1 for i in chosen for j in rest if i > j)
		left_sign, left = _sorted_column(first.indices[:s] + tuple(exchanged[i] for i in chosen), n)
		right_sign, right = _sorted_column(tuple(exchanged[i] for i in rest) + second.indices[s + 1 :], n)
		if left is None or right is None:
			continue
		tableau = Tableau.of(k, n, (left, right))
		terms[tableau] = terms.get(tableau, Fraction(0)) - shuffle_sign * left_sign * right_sign
	return tuple((tableau, value) for tableau, value in sorted(terms.items(), key=lambda i: i[0].order_key()) if value)


class EvaluationOracle:
	"""Exact Plücker coordinates of a fixed set of random integer matrices."""

	__slots__ = ("k", "n", "matrices", "_tables", "certified")

	def __init__(self, k: int, n: int, random: RandomNumberGenerator, samples: int = constants.GARNIR_SAMPLES) -> None:
		"""
		Draw the sample matrices.

		Args:
			k: Columns of each matrix
			n: Rows of each matrix
			random: Shared generator of the run
			samples: Number of matrices; rank-deficient draws are redrawn
		"""
		self.k = k
		self.n = n
		self.matrices: List[List[List[int]]] = [random_full_rank(n, k, random) for _ in range(samples)]
		self._tables: List[Dict[Column, int]] = [{} for _ in self.matrices]
		self.certified: Set[Tuple[Column, Column]] = set()

	def minor(self, sample: int, column: Column) -> int:
		"""Plücker coordinate of column at one sample matrix."""
		table = self._tables[sample]
		if column not in table:
			matrix = self.matrices[sample]
			table[column] = linalg.integer_determinant([matrix[i - 1] for i in column.indices])
		return table[column]

	def values(self, tableau: Tableau) -> List[int]:
		"""Evaluate a tableau at every sample matrix."""
		result = []
		for sample in range(len(self.matrices)):
			value = 1
			for column in tableau.columns:
				value *= self.minor(sample, column)
				if not value:
					break
			result.append(value)
		return result

	def combination_values(self, combo: Dict[Tableau, Fraction]) -> List[Fraction]:
		"""Evaluate a rational combination of tableaux at every sample matrix."""
		totals = [Fraction(0)] * len(self.matrices)
		for tableau, coefficient in combo.items():
			for i, value in enumerate(self.values(tableau)):
				totals[i] += coefficient * value
		return totals

	def certify(self, lhs: Dict[Tableau, Fraction], rhs: Dict[Tableau, Fraction], label: str) -> None:
		"""Raise CertificationError unless lhs and rhs agree at every sample."""
		if self.combination_values(lhs) != self.combination_values(rhs):
			raise exceptions.CertificationError(f"Evaluation mismatch for {label}")


def random_full_rank(rows: int, cols: int, random: RandomNumberGenerator) -> List[List[int]]:
	"""Draw integer matrices until one has full column rank."""
	while True:
		matrix = random.integer_matrix(rows, cols)
		if linalg.rank(matrix) == min(rows, cols):
			return matrix


def evaluate(tableau: Tableau, matrix: Sequence[Sequence]) -> Fraction:
	"""Product over columns of the k x k minor on the column's rows.

	Raises:
		ValueError: If matrix is not n x k
	"""
	if len(matrix) != tableau.n or any(len(row) != tableau.k for row in matrix):
		raise ValueError(f"Matrix must be {tableau.n} x {tableau.k}")
	value = Fraction(1)
	for column in tableau.columns:
		value *= linalg.determinant([matrix[i - 1] for i in column.indices])
	return value


def garnir_relation(first: Column, second: Column, oracle: EvaluationOracle) -> StraighteningResult:
	"""Return P with first * second = P, every term strictly smaller.

	Args:
		first: A column
		second: A column incomparable with first
		oracle: Sample matrices used to certify the identity

	Returns:
		The combination P of degree-2 tableaux

	Raises:
		DomainError: If the columns are comparable
		CertificationError: If the identity fails at a sample matrix
	"""
	if leq_columns(first, second) or leq_columns(second, first):
		raise exceptions.DomainError(f"Columns {first.indices} and {second.indices} are comparable")
	first, second = sorted((first, second))
	relation = dict(_garnir_terms(first, second))
	if (first, second) not in oracle.certified:
		product = Tableau.of(first.k, first.n, (first, second))
		oracle.certify({product: Fraction(1)}, relation, f"Garnir {product.to_token()}")
		for tableau in relation:
			if tableau.order_key() >= product.order_key():
				raise exceptions.CertificationError(f"Garnir term {tableau.to_token()} is not smaller")
		oracle.certified.add((first, second))
	return StraighteningResult(relation)


def _first_violation(tableau: Tableau) -> Optional[int]:
	return next(
		(i for i in range(tableau.degree - 1) if not leq_columns(tableau.columns[i], tableau.columns[i + 1])), None
	)


def straighten(tableau: Tableau, oracle: EvaluationOracle) -> StraighteningResult:
	"""Rewrite a tableau as a combination of standard tableaux.

	The largest nonstandard tableau is rewritten first, at its first adjacent
	incomparable pair. Every rewrite must decrease the monomial order.

	Raises:
		CertificationError: If a rewrite fails to decrease or the result fails the oracle
	"""
	combo: Dict[Tableau, Fraction] = {tableau: Fraction(1)}
	rewrites = 0
	while True:
		pending = [t for t in combo if not is_standard(t)]
		if not pending:
			break
		current = max(pending, key=Tableau.order_key)
		coefficient = combo.pop(current)
		position = _first_violation(current)
		first, second = current.columns[position], current.columns[position + 1]
		rest = current.columns[:position] + current.columns[position + 2 :]
		for term, value in garnir_relation(first, second, oracle).combo.items():
			replacement = term.times(*rest)
			if replacement.order_key() >= current.order_key():
				raise exceptions.CertificationError(f"Rewrite of {current.to_token()} does not decrease")
			updated = combo.get(replacement, Fraction(0)) + coefficient * value
			if updated:
				combo[replacement] = updated
			else:
				combo.pop(replacement, None)
		rewrites += 1
	oracle.certify({tableau: Fraction(1)}, combo, f"straightening of {tableau.to_token()}")
	log.debug("Straightened %s with %d rewrites into %d terms", tableau.to_token(), rewrites, len(combo))
	return StraighteningResult(combo)


def expected_count(k: int, n: int, degree: int) -> int:
	"""Dimension of the degree part of the homogeneous coordinate ring of Gr(k, n)."""
	if degree == 0 or k == n:
		return 1
	gcm = rs.build_finite(enums.Family.A, n - 1)
	return rep_theory.weyl_dim(gcm, gcm.fundamental_weight(k - 1, degree))


def enumerate_standard(
	k: int, n: int, degree: int, survivors: Optional[Iterable[Column]] = None, limit: int = constants.MAX_TABLEAU_COUNT
) -> List[Tableau]:
	"""All standard tableaux of the given degree, optionally over a column subset.

	Raises:
		ResourceBoundError: If the count would exceed limit
	"""
	count = expected_count(k, n, degree)
	if count > limit:
		raise exceptions.ResourceBoundError(f"{count} standard tableaux exceed the bound {limit}")
	columns = all_columns(k, n) if survivors is None else tuple(sorted(survivors))
	above = {c: [d for d in columns if d >= c and leq_columns(c, d)] for c in columns}
	found: List[Tableau] = []

	def extend(chain: Tuple[Column, ...]) -> None:
		if len(chain) == degree:
			found.append(Tableau(chain, k, n))
			return
		for column in above[chain[-1]] if chain else columns:
			extend(chain + (column,))

	extend(())
	return found


def all_monomials(k: int, n: int, degree: int) -> List[Tableau]:
	"""Every degree-d monomial in the Plücker coordinates."""
	return [Tableau(chosen, k, n) for chosen in combinations_with_replacement(all_columns(k, n), degree)]


def schubert_restrict(bound: Column, k: int, n: int) -> Tuple[Column, ...]:
	"""Columns b with b <= bound componentwise."""
	return tuple(column for column in all_columns(k, n) if leq_columns(column, bound))


def ridge_restrict(bound: Column, k: int, n: int) -> Tuple[Column, ...]:
	"""schubert_restrict without the minimum column (1, ..., k)."""
	minimum = minimum_column(k, n)
	return tuple(column for column in schubert_restrict(bound, k, n) if column != minimum)


def schubert_point(bound: Column, random: RandomNumberGenerator) -> List[List[int]]:
	"""Random n x k matrix whose j-th column is supported on rows 1..bound[j].

	Redrawn until p_bound does not vanish there.
	"""
	k, n = bound.k, bound.n
	while True:
		matrix = [[random.integer() if row < bound[j] else 0 for j in range(k)] for row in range(n)]
		if linalg.integer_determinant([matrix[i - 1] for i in bound.indices]):
			return matrix


def schubert_word(bound: Column) -> rs.WeylWord:
	"""Word of the minimal element w with w(omega_k) = weight of the column."""
	n = bound.n
	gcm = rs.build_finite(enums.Family.A, n - 1)
	members = set(bound.indices)
	weight = rs.Weight(tuple(int(i in members) - int(i + 1 in members) for i in range(1, n)))
	_, letters = rs.sort_to_dominant(gcm, weight)
	return rs.WeylWord(letters)


def _rank_of_values(vectors: List[List[int]]) -> int:
	return linalg.certified_row_rank(vectors, constants.RANK_PRIME) if vectors else 0


def verify_basis(k: int, n: int, degree: int, random: RandomNumberGenerator) -> CheckRecord:
	"""Certify that the standard monomials form a basis in the given degree.

	(a) Their evaluation vectors at count + margin random matrices have full
	rank. (b) The quadratic relation count is C(N + 1, 2) - dim, N = C(n, k).
	"""
	tableaux = enumerate_standard(k, n, degree)
	expected = expected_count(k, n, degree)
	points = EvaluationOracle(k, n, random, len(tableaux) + constants.RANK_MARGIN)
	rank = _rank_of_values([points.values(t) for t in tableaux])

	quadratic = all_monomials(k, n, 2)
	quadratic_dim = expected_count(k, n, 2)
	quadratic_points = EvaluationOracle(k, n, random, quadratic_dim + constants.RANK_MARGIN)
	quadratic_rank = _rank_of_values([quadratic_points.values(t) for t in quadratic])
	relations = len(quadratic) - quadratic_rank
	expected_relations = comb(comb(n, k) + 1, 2) - quadratic_dim
	ok = len(tableaux) == expected and rank == expected and relations == expected_relations
	return record_from_bool(
		"basis",
		ok,
		k=k,
		n=n,
		degree=degree,
		standard=len(tableaux),
		evaluation_rank=rank,
		quadratic_monomials=len(quadratic),
		quadratic_relations=relations,
	)


def verify_restriction(
	bound: Column, degree: int, random: RandomNumberGenerator, ridge: bool = False
) -> CheckRecord:
	"""Certify the restriction of the degree-d standard monomials to a Schubert variety.

	At random points of the Schubert variety of bound, the standard monomials
	over the surviving columns are linearly independent and every standard
	monomial containing a non-survivor vanishes. The surviving count is
	compared with the Demazure module dimension of the matching Weyl element.
	With ridge set, the minimum column is also removed and only the counts are
	reported for it.
	"""
	k, n = bound.k, bound.n
	survivors = schubert_restrict(bound, k, n)
	surviving = enumerate_standard(k, n, degree, survivors)
	everything = enumerate_standard(k, n, degree)
	survivor_set = set(survivors)
	vanishing = [t for t in everything if not set(t.columns) <= survivor_set]

	samples = len(surviving) + constants.RANK_MARGIN
	points = [schubert_point(bound, random) for _ in range(samples)]
	values = [[evaluate(t, point) for point in points] for t in surviving]
	rank = linalg.rank(values) if values else 0
	nonzero = [t.to_token() for t in vanishing if any(evaluate(t, point) for point in points)]

	gcm = rs.build_finite(enums.Family.A, n - 1)
	top = gcm.fundamental_weight(k - 1, degree)
	demazure = rep_theory.demazure_dim(gcm, schubert_word(bound), top)
	witness = {
		"bound": bound.to_token(),
		"degree": degree,
		"surviving_columns": [c.to_token() for c in survivors],
		"surviving_standard": len(surviving),
		"vanishing_standard": len(vanishing),
		"evaluation_rank": rank,
		"demazure_dimension": demazure,
		"nonvanishing": nonzero,
	}
	if ridge:
		ridge_columns = ridge_restrict(bound, k, n)
		witness["ridge_columns"] = [c.to_token() for c in ridge_columns]
		witness["ridge_standard"] = len(enumerate_standard(k, n, degree, ridge_columns))
	ok = (
		rank == len(surviving)
		and not nonzero
		and demazure == len(surviving)
		and len(surviving) + len(vanishing) == len(everything)
	)
	return record_from_bool("restriction", ok, **witness)


def relation_span_rank(k: int, n: int, oracle: EvaluationOracle) -> Tuple[int, int]:
	"""Rank of the degree-3 span of column multiples of all Garnir relations.

	Returns:
		(rank of that span, number of degree-3 monomials)
	"""
	monomials = all_monomials(k, n, 3)
	position = {tableau: i for i, tableau in enumerate(monomials)}
	columns = all_columns(k, n)
	rows: List[List[Fraction]] = []
	for first, second in combinations(columns, 2):
		if leq_columns(first, second) or leq_columns(second, first):
			continue
		relation = garnir_relation(first, second, oracle).combo
		for column in columns:
			row = [Fraction(0)] * len(monomials)
			row[position[Tableau.of(k, n, (first, second, column))]] += 1
			for tableau, value in relation.items():
				row[position[tableau.times(column)]] -= value
			rows.append(row)
	return (linalg.rank(rows) if rows else 0), len(monomials)


def verify_relation_generation(k: int, n: int, random: RandomNumberGenerator) -> CheckRecord:
	"""Check that the quadratic Garnir relations generate all cubic relations.

	The rank of their degree-3 multiples must equal the number of cubic
	monomials minus the cubic dimension, which is also measured directly as
	the evaluation rank of all cubic monomials.
	"""
	oracle = EvaluationOracle(k, n, random)
	span, monomial_count = relation_span_rank(k, n, oracle)
	dimension = expected_count(k, n, 3)
	points = EvaluationOracle(k, n, random, dimension + constants.RANK_MARGIN)
	measured = _rank_of_values([points.values(t) for t in all_monomials(k, n, 3)])
	return record_from_bool(
		"relations",
		span == monomial_count - dimension and measured == dimension,
		k=k,
		n=n,
		cubic_monomials=monomial_count,
		relation_rank=span,
		cubic_dimension=dimension,
		evaluation_rank=measured,
	)


def verify_straightening(
	k: int, n: int, degree: int, random: RandomNumberGenerator, samples: Optional[int] = None
) -> CheckRecord:
	"""Straighten every degree-d monomial (or a random sample of them).

	Each result must consist of standard tableaux; evaluation equality is
	certified inside straighten.
	"""
	oracle = EvaluationOracle(k, n, random)
	monomials = all_monomials(k, n, degree)
	if samples is not None and samples < len(monomials):
		monomials = random.sample(monomials, samples)
	nonstandard = []
	for tableau in monomials:
		result = straighten(tableau, oracle)
		if not all(is_standard(t) for t in result.combo):
			nonstandard.append(tableau.to_token())
	return record_from_bool(
		"straightening", not nonstandard, k=k, n=n, degree=degree, checked=len(monomials), nonstandard=nonstandard
	)
