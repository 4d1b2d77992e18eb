#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The SL(3) flag variety example where a restricted standard set is not Levi-stable.

The eight products p(R1|R2) = d(R1) d(R2) of minors in the first columns of
the coordinate matrix M span the degree (1, 1) sections. Five of them survive
on the relevant Schubert variety, and their span is not stable under the Levi
of block shape (2, 1).

Polynomials live in sympy's sparse ring over QQ in the nine entries x_ij.
sl3 acts by left translation, (xi . f)(M) = d/dt f(M - t xi M) at t = 0.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Any, Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from pluckerize import exceptions, linalg, rep_theory
from pluckerize import enumerations as enums
from pluckerize import root_system as rs
from pluckerize.model_checker import check_ridge_steps
from pluckerize.program_state import CheckRecord, record_from_bool

log = logging.getLogger(__name__)

MatrixPoly = PolyElement
XiMatrix = Sequence[Sequence[Any]]

RING, *_VARIABLES = ring(",".join(f"x{i}{j}" for i in range(1, 4) for j in range(1, 4)), QQ)

#: Tableaux (R1|R2) of the eight basis products, as printed
TABLEAUX: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = (
	((1, 2), (1,)),
	((1, 2), (2,)),
	((1, 3), (1,)),
	((1, 2), (3,)),
	((2, 3), (1,)),
	((1, 3), (3,)),
	((2, 3), (2,)),
	((2, 3), (3,)),
)

#: The five products that do not vanish on the Schubert variety
RESTRICTED: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = (
	((1, 2), (1,)),
	((1, 2), (2,)),
	((1, 3), (1,)),
	((2, 3), (1,)),
	((2, 3), (2,)),
)

CLAIM = "remark-nonstability"


def variable(i: int, j: int) -> MatrixPoly:
	"""The coordinate x_ij, 1-based."""
	return _VARIABLES[3 * (i - 1) + (j - 1)]


def tableau_label(tableau: Tuple[Tuple[int, ...], Tuple[int, ...]]) -> str:
	"""Render (R1|R2) as "p(12|1)"."""
	first, second = tableau
	return f"p({''.join(map(str, first))}|{''.join(map(str, second))})"


def _qq(value: Any) -> Any:
	fraction = Fraction(value)
	return QQ(fraction.numerator, fraction.denominator)


def minor_d(rows: Sequence[int]) -> MatrixPoly:
	"""Determinant of the submatrix of M on the given rows and columns 1..r.

	Raises:
		ValueError: If rows is not an increasing subsequence of 1..3
	"""
	rows = tuple(rows)
	if not 1 <= len(rows) <= 3 or any(r not in (1, 2, 3) for r in rows) or list(rows) != sorted(set(rows)):
		raise ValueError(f"Bad row set {rows}")
	total = RING.zero
	for columns in permutations(range(1, len(rows) + 1)):
		inversions = sum(1 for a, b in combinations(columns, 2) if a > b)
		term = RING.one * (-1) ** inversions
		for row, column in zip(rows, columns):
			term *= variable(row, column)
		total += term
	return total


def p_of(tableau: Tuple[Tuple[int, ...], Tuple[int, ...]]) -> MatrixPoly:
	"""p(R1|R2) = d(R1) d(R2)."""
	first, second = tableau
	return minor_d(first) * minor_d(second)


@lru_cache(maxsize=1)
def build_p_basis() -> Tuple[MatrixPoly, ...]:
	"""The eight products p(T) in the order of TABLEAUX."""
	return tuple(p_of(tableau) for tableau in TABLEAUX)


def trace_reduce(f: MatrixPoly) -> MatrixPoly:
	"""Substitute x33 = -x11 - x22."""
	return f.compose(variable(3, 3), -variable(1, 1) - variable(2, 2))


def coefficient_rows(polys: Sequence[MatrixPoly]) -> List[List[Fraction]]:
	"""Coefficient vectors of the trace-reduced polynomials over a shared monomial list."""
	reduced = [trace_reduce(f) for f in polys]
	monomials = sorted({monomial for f in reduced for monomial in f.keys()})
	return [[linalg.to_fraction(f.get(monomial, QQ.zero)) for monomial in monomials] for f in reduced]


def span_rank(polys: Sequence[MatrixPoly]) -> int:
	"""Exact rank of the span of polys after trace reduction."""
	if not any(polys):
		return 0
	return linalg.rank(coefficient_rows(polys))


def _require_traceless(xi: XiMatrix) -> None:
	if len(xi) != 3 or any(len(row) != 3 for row in xi):
		raise ValueError("xi must be a 3x3 matrix")
	if sum(Fraction(xi[i][i]) for i in range(3)) != 0:
		raise exceptions.DomainError("xi must be traceless")


def lie_action(xi: XiMatrix, f: MatrixPoly) -> MatrixPoly:
	"""Derivative of f along the left-translation field M -> -xi M.

	Args:
		xi: Traceless 3x3 rational matrix
		f: Polynomial in the entries of M

	Raises:
		DomainError: If xi is not traceless
	"""
	_require_traceless(xi)
	result = RING.zero
	for i in range(1, 4):
		for j in range(1, 4):
			derivative = f.diff(variable(i, j))
			if not derivative:
				continue
			field = RING.zero
			for k in range(1, 4):
				if xi[i - 1][k - 1]:
					field -= _qq(xi[i - 1][k - 1]) * variable(k, j)
			result += field * derivative
	return result


def unit_matrix(i: int, j: int) -> List[List[int]]:
	"""E_ij, 1-based."""
	return [[int((r, c) == (i, j)) for c in range(1, 4)] for r in range(1, 4)]


def bracket(xi: XiMatrix, eta: XiMatrix) -> List[List[Fraction]]:
	"""The commutator xi eta - eta xi."""
	return [
		[
			sum(Fraction(xi[r][k]) * Fraction(eta[k][c]) - Fraction(eta[r][k]) * Fraction(xi[k][c]) for k in range(3))
			for c in range(3)
		]
		for r in range(3)
	]


def sl3_generators() -> Dict[str, List[List[int]]]:
	"""Chevalley-style basis of sl3."""
	generators = {f"E{i}{j}": unit_matrix(i, j) for i in range(1, 4) for j in range(1, 4) if i != j}
	generators["H12"] = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
	generators["H23"] = [[0, 0, 0], [0, 1, 0], [0, 0, -1]]
	return generators


def levi_generators() -> Dict[str, List[List[int]]]:
	"""Generators of the traceless block-diagonal (2, 1) matrices."""
	return {
		"E12": unit_matrix(1, 2),
		"E21": unit_matrix(2, 1),
		"diag(1,-1,0)": [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
		"diag(1,1,-2)": [[1, 0, 0], [0, 1, 0], [0, 0, -2]],
	}


def in_span(polys: Sequence[MatrixPoly], target: MatrixPoly) -> bool:
	"""True if target is a rational combination of polys."""
	if not target:
		return True
	rows = coefficient_rows(list(polys) + [target])
	columns = [[row[c] for row in rows[:-1]] for c in range(len(rows[-1]))]
	return linalg.solve(columns, rows[-1]) is not None


def is_sl3_stable(polys: Sequence[MatrixPoly]) -> Tuple[bool, int]:
	"""Check that adjoining every sl3 image keeps the rank; return (stable, rank)."""
	base = span_rank(polys)
	images = [lie_action(xi, f) for xi in sl3_generators().values() for f in polys]
	return span_rank(list(polys) + images) == base, base


def check_nonstability() -> Dict[str, Any]:
	"""Find Levi generators that move a restricted product out of the restricted span.

	Returns:
		A report with the claim, the span dimension and the witnesses found.
		It passes iff at least one witness exists.
	"""
	restricted = [p_of(tableau) for tableau in RESTRICTED]
	span_dim = span_rank(restricted)
	witnesses = []
	for name, xi in levi_generators().items():
		for tableau, f in zip(RESTRICTED, restricted):
			image = lie_action(xi, f)
			if in_span(restricted, image):
				continue
			residual = span_rank(restricted + [image]) - span_dim
			witnesses.append({"xi": name, "f": tableau_label(tableau), "residualRank": residual})
			log.debug("%s moves %s out of the restricted span", name, tableau_label(tableau))
	return {
		"claim": CLAIM,
		"restrictedCount": len(restricted),
		"spanDim": span_dim,
		"status": enums.Status.PASS.value if witnesses else enums.Status.FAIL.value,
		"witnesses": witnesses,
	}


def ridge_data(max_degree: int = 2) -> Dict[str, Any]:
	"""One-step ridge data of the example and its Demazure dimension identity.

	A2 with delta0 = {a2}, Levi {a1}, zeta = -rho and w_1 = s_2. The Demazure
	dimension of V_{n rho} on tau = min_coset_rep(w_L w_1) is compared with the
	ridge decomposition from index 0.
	"""
	gcm = rs.build_finite(enums.Family.A, 2)
	zeta = -gcm.rho()
	sequence = check_ridge_steps(gcm, (1,), zeta, [(rs.WeylWord(), 1)])
	zetas = [-zeta] + [entry.zeta for entry in sequence.entries]
	levi_longest = rs.WeylWord.of(0)
	tau = rs.min_coset_rep(gcm, levi_longest * sequence.entries[-1].word, ())
	degrees = []
	for degree in range(1, max_degree + 1):
		demazure = rep_theory.demazure_dim(gcm, tau, gcm.rho() * degree)
		ridge = rep_theory.ridge_dimension(gcm, [0], zetas, degree, start=0)
		degrees.append({"degree": degree, "demazure": demazure, "ridge": ridge})
	return {
		"tau": tau.to_dict(),
		"zetas": [z.to_dict() for z in zetas],
		"bullets": sequence.ok,
		"degrees": degrees,
	}


def run_all() -> Tuple[List[CheckRecord], Dict[str, Any]]:
	"""Run the whole example; return the check records and the claim report."""
	basis = build_p_basis()
	basis_rank = span_rank(basis)
	stable, _ = is_sl3_stable(basis)
	report = check_nonstability()
	ridge = ridge_data()
	records = [
		record_from_bool("sl3-basis", basis_rank == len(TABLEAUX), basis_rank=basis_rank),
		record_from_bool("sl3-stable", stable),
		record_from_bool(
			"sl3-nonstability",
			report["status"] == enums.Status.PASS.value and report["spanDim"] == len(RESTRICTED),
			span_dim=report["spanDim"],
			witnesses=len(report["witnesses"]),
		),
		record_from_bool(
			"sl3-ridge",
			ridge["bullets"]
			and all(d["demazure"] == d["ridge"] for d in ridge["degrees"])
			and ridge["degrees"][0]["ridge"] == len(RESTRICTED),
			**ridge,
		),
	]
	return records, report