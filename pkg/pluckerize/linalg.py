#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Exact linear algebra over the rationals and over prime fields.

A thin layer over sympy's DomainMatrix. Callers hand in row-major lists of
ints, Fractions or sympy rationals and always get Fractions back, so no other
module has to know about sympy domain elements.
"""

from fractions import Fraction
from typing import Any, List, Optional, Sequence

from sympy import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from pluckerize import exceptions

Rows = Sequence[Sequence[Any]]


def to_fraction(value: Any) -> Fraction:
	"""Convert an int, Fraction or sympy rational to a Fraction."""
	return Fraction(int(value.numerator), int(value.denominator))


def _to_qq(value: Any) -> Any:
	return QQ(int(value.numerator), int(value.denominator))


def _shape(rows: Rows) -> tuple:
	return (len(rows), len(rows[0]) if rows else 0)


def rational_matrix(rows: Rows) -> DomainMatrix:
	"""Build a DomainMatrix over QQ from a row-major list.

	Args:
		rows: Row-major matrix entries

	Returns:
		The matrix over QQ
	"""
	nrows, ncols = _shape(rows)
	return DomainMatrix([[_to_qq(entry) for entry in row] for row in rows], (nrows, ncols), QQ)


def integer_matrix(rows: Rows) -> DomainMatrix:
	"""Build a DomainMatrix over ZZ from a row-major list of integers."""
	nrows, ncols = _shape(rows)
	return DomainMatrix([[ZZ(int(entry)) for entry in row] for row in rows], (nrows, ncols), ZZ)


def to_rows(matrix: DomainMatrix) -> List[List[Fraction]]:
	"""Convert a DomainMatrix over QQ or ZZ back into lists of Fractions."""
	return [[to_fraction(entry) for entry in row] for row in matrix.to_list()]


def rank(rows: Rows, modulus: Optional[int] = None) -> int:
	"""Return the exact rank of a matrix.

	With a modulus the rank is computed over GF(modulus) and entries must be
	integers. The modular rank never exceeds the rational rank, so a modular
	rank equal to the number of rows certifies full row rank over QQ.

	Args:
		rows: Row-major matrix entries
		modulus: Optional prime for a modular computation

	Returns:
		The rank
	"""
	nrows, ncols = _shape(rows)
	if nrows == 0 or ncols == 0:
		return 0
	if modulus is None:
		return rational_matrix(rows).rank()
	return integer_matrix(rows).convert_to(GF(modulus)).rank()


def certified_row_rank(rows: Rows, modulus: int) -> int:
	"""Return the rational rank, trying a modular full-rank certificate first.

	Args:
		rows: Row-major integer matrix
		modulus: Prime used for the fast certificate

	Returns:
		The rank over QQ
	"""
	modular = rank(rows, modulus)
	if modular == len(rows):
		return modular
	return rank(rows)


def solve(rows: Rows, rhs: Sequence[Any]) -> Optional[List[Fraction]]:
	"""Return one exact solution x of rows·x = rhs, or None if inconsistent.

	Free variables are set to zero.

	Args:
		rows: Row-major coefficient matrix
		rhs: Right hand side, one entry per row

	Returns:
		A solution vector, or None when the system has no solution
	"""
	nrows, ncols = _shape(rows)
	if len(rhs) != nrows:
		raise ValueError(f"Right hand side has {len(rhs)} entries for {nrows} rows")
	augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
	reduced, pivots = rational_matrix(augmented).rref()
	if ncols in pivots:
		return None
	entries = reduced.to_list()
	solution = [Fraction(0)] * ncols
	for row_index, column in enumerate(pivots):
		solution[column] = to_fraction(entries[row_index][ncols])
	return solution


def nullspace(rows: Rows) -> List[List[Fraction]]:
	"""Return a basis of the right kernel {x : rows·x = 0}."""
	nrows, ncols = _shape(rows)
	if nrows == 0:
		return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
	return to_rows(rational_matrix(rows).nullspace())


def determinant(rows: Rows) -> Fraction:
	"""Return the exact determinant of a square matrix."""
	nrows, ncols = _shape(rows)
	if nrows != ncols:
		raise ValueError(f"Determinant of a non-square {nrows}x{ncols} matrix")
	if nrows == 0:
		return Fraction(1)
	return to_fraction(rational_matrix(rows).det())


def integer_determinant(rows: Rows) -> int:
	"""Return the determinant of a square integer matrix as an int."""
	if not rows:
		return 1
	return int(integer_matrix(rows).det())


def inverse(rows: Rows) -> List[List[Fraction]]:
	"""Return the exact inverse of a square matrix.

	Raises:
		DomainError: If the matrix is singular
	"""
	try:
		return to_rows(rational_matrix(rows).inv())
	except DMNonInvertibleMatrixError as error:
		raise exceptions.DomainError("Matrix is singular and has no inverse") from error


def mat_vec(rows: Rows, vector: Sequence[Any]) -> List[Any]:
	"""Multiply a row-major matrix by a vector with plain Python arithmetic."""
	return [sum((entry * value for entry, value in zip(row, vector)), 0) for row in rows]
