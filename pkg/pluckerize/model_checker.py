#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Weight-level checks for the model varieties and the B_n spherical family.

Every check returns a CheckRecord. A FAIL record carries the data that
falsified the claim; size bounds raise ResourceBoundError before any work.

Node layout of the extended Cartan matrices is (a0, b0, a1, ..., a_l), so G
node i (1-based) sits at index i + 1.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pluckerize import constants, exceptions, linalg, rep_theory
from pluckerize import enumerations as enums
from pluckerize import root_system as rs
from pluckerize.program_state import CheckRecord, record_from_bool

log = logging.getLogger(__name__)

SPH = "sph"
FamilyTag = Union[enums.Family, str]


@dataclass(frozen=True)
class SphericalData:
	"""Generators eps_1..eps_m of the weight monoid, with grado(eps_h) = h."""

	family: str
	rank: int
	gcm: rs.GeneralizedCartanMatrix
	generators: Tuple[rs.Weight, ...]
	p: Optional[int] = None

	@property
	def grado_values(self) -> Tuple[int, ...]:
		"""grado of each generator."""
		return tuple(range(1, len(self.generators) + 1))

	def coefficients(self, weight: rs.Weight) -> Optional[List[Fraction]]:
		"""Rational coefficients of weight in the generators, or None."""
		columns = [[generator[i] for generator in self.generators] for i in range(self.gcm.n)]
		return linalg.solve(columns, list(weight.coords))

	def in_monoid(self, weight: rs.Weight) -> bool:
		"""True if weight is a nonnegative integer combination of the generators."""
		coefficients = self.coefficients(weight)
		return coefficients is not None and all(c.denominator == 1 and c >= 0 for c in coefficients)


def generators(family: FamilyTag, rank: int, p: Optional[int] = None) -> SphericalData:
	"""Return the spherical data of the model variety of G, or of the sph family.

	Args:
		family: A, B or C for the model variety; "sph" for the B_rank family
		rank: Rank of G (n for the sph family)
		p: Dimension of U for the sph family

	Raises:
		DomainError: If the parameters are not admissible
	"""
	if family == SPH:
		if p is None:
			raise exceptions.DomainError("The sph family needs p")
		return SphericalData(SPH, rank, rs.build_finite(enums.Family.B, rank), rs.sph_epsilons(rank, p), p)
	family = enums.Family(family)
	return SphericalData(family.value, rank, rs.build_finite(family, rank), rs.model_epsilons(family, rank))


def check_H1(data: SphericalData) -> CheckRecord:
	"""The generators are linearly independent, so the monoid is free."""
	rank = linalg.rank([list(g.coords) for g in data.generators])
	return record_from_bool(
		enums.CheckName.H1.value,
		rank == len(data.generators),
		data.family,
		data.rank,
		generators=[g.to_dict() for g in data.generators],
		independent_rank=rank,
	)


def grado(data: SphericalData, weight: rs.Weight) -> int:
	"""Additive extension of grado(eps_h) = h.

	Raises:
		DomainError: If weight is outside the monoid
	"""
	coefficients = data.coefficients(weight)
	if coefficients is None or any(c.denominator != 1 or c < 0 for c in coefficients):
		raise exceptions.DomainError(f"Weight {weight.to_dict()} is not in the spherical monoid")
	return int(sum(c * h for c, h in zip(coefficients, data.grado_values)))


def grado_on_roots(data: SphericalData) -> List[Fraction]:
	"""Linear extension of grado to the simple roots of G.

	Raises:
		DomainError: If the generators do not span the weight space
	"""
	if len(data.generators) < data.gcm.n:
		raise exceptions.DomainError("generators not spanning: grado has no extension to the roots")
	values = []
	for node in range(data.gcm.n):
		coefficients = data.coefficients(data.gcm.simple_root(node))
		if coefficients is None:
			raise exceptions.DomainError("generators not spanning: grado has no extension to the roots")
		values.append(sum((c * h for c, h in zip(coefficients, data.grado_values)), Fraction(0)))
	return values


def verify_grado_roots(family: enums.Family, rank: int) -> CheckRecord:
	"""grado(a_i) = 0 for i < l and grado(a_l) > 0."""
	data = generators(family, rank)
	values = grado_on_roots(data)
	ok = all(v == 0 for v in values[:-1]) and values[-1] > 0
	return record_from_bool(
		enums.CheckName.GRADO_ROOTS.value, ok, family.value, rank, values=[str(v) for v in values]
	)


def check_H5(data: SphericalData, bound: int = 2) -> CheckRecord:
	"""grado(nu) <= grado(lambda) + grado(mu) whenever nu <= lambda + mu.

	lambda and mu run over monoid elements with generator coefficients at most
	bound; nu over dominant monoid weights below lambda + mu. Since grado is
	additive, each sum is checked once.

	Raises:
		ResourceBoundError: If bound exceeds MAX_H5_BOUND or the pair count exceeds MAX_H5_PAIRS
	"""
	if bound > constants.MAX_H5_BOUND:
		raise exceptions.ResourceBoundError(f"H5 bound {bound} exceeds {constants.MAX_H5_BOUND}")
	count = (bound + 1) ** len(data.generators)
	if count * (count + 1) // 2 > constants.MAX_H5_PAIRS:
		raise exceptions.ResourceBoundError(
			f"H5 sweep over {count} elements needs {count * (count + 1) // 2} pairs, more than {constants.MAX_H5_PAIRS}"
		)
	gcm = data.gcm
	elements = []
	for coefficients in product(range(bound + 1), repeat=len(data.generators)):
		weight = rs.Weight.zero(gcm.n)
		for c, generator in zip(coefficients, data.generators):
			weight = weight + generator * c
		elements.append(weight)
	tops: Dict[rs.Weight, int] = {}
	pairs = 0
	for first, second in combinations_with_replacement(elements, 2):
		pairs += 1
		tops.setdefault(first + second, grado(data, first) + grado(data, second))
	skipped = 0
	checked = 0
	for top, limit in sorted(tops.items(), key=lambda item: item[0].coords):
		for nu in rep_theory.dominant_weights_below(gcm, top):
			if not data.in_monoid(nu):
				skipped += 1
				continue
			checked += 1
			if grado(data, nu) > limit:
				return record_from_bool(
					enums.CheckName.H5.value,
					False,
					data.family,
					data.rank,
					bound=bound,
					counterexample={"sum": top.to_dict(), "nu": nu.to_dict(), "limit": limit},
				)
	log.debug("H5 %s%d: %d pairs, %d sums, %d weights checked", data.family, data.rank, pairs, len(tops), checked)
	return record_from_bool(
		enums.CheckName.H5.value,
		True,
		data.family,
		data.rank,
		bound=bound,
		pairs=pairs,
		sums=len(tops),
		weights_checked=checked,
		outside_monoid=skipped,
	)


def mod3_word(index: int, offset: int = 0) -> rs.WeylWord:
	"""u_index = s_1 s_2 ... s_index, with G node 1 at position offset."""
	return rs.WeylWord(tuple(offset + j for j in range(index)))


def check_mod3(family: enums.Family, rank: int) -> CheckRecord:
	"""u_i eps_i = eps_{i+1} - eps_1 for 1 <= i < rank."""
	gcm = rs.build_finite(family, rank)
	eps = rs.model_epsilons(family, rank)
	failures = [i for i in range(1, rank) if rs.act(gcm, mod3_word(i), eps[i - 1]) != eps[i] - eps[0]]
	return record_from_bool(enums.CheckName.MOD3.value, not failures, family.value, rank, failures=failures)


def sph_words(p: int, offset: int = 0) -> Tuple[rs.WeylWord, rs.WeylWord]:
	"""u_1 = s_{p-1} ... s_1 and u_2 = s_1 ... s_p."""
	first = rs.WeylWord(tuple(offset + j for j in range(p - 2, -1, -1)))
	second = rs.WeylWord(tuple(offset + j for j in range(p)))
	return first, second


def check_sph3(n: int, p: int) -> CheckRecord:
	"""u_1 eps_1 = eps_2 - omega_{p-1} and u_2 eps_2 = eps_3 - eps_1."""
	gcm = rs.build_finite(enums.Family.B, n)
	eps1, eps2, eps3 = rs.sph_epsilons(n, p)
	u1, u2 = sph_words(p)
	first = rs.act(gcm, u1, eps1) == eps2 - gcm.fundamental_weight(p - 2)
	second = rs.act(gcm, u2, eps2) == eps3 - eps1
	u1_length = rs.length(gcm, u1)
	return record_from_bool(
		enums.CheckName.SPH3.value,
		first and second and u1_length == p - 1,
		SPH,
		n,
		p=p,
		first_identity=first,
		second_identity=second,
		u1_length=u1_length,
	)


@dataclass(frozen=True)
class WEntry:
	"""One step h of a w-sequence: w_h = s_gamma U_h w_{h-1}."""

	word: rs.WeylWord
	zeta: rs.Weight
	gamma: int
	step: rs.WeylWord


@dataclass(frozen=True)
class WSequence:
	"""A w-sequence with the bullet failures found while building it."""

	gcm: rs.GeneralizedCartanMatrix
	entries: Tuple[WEntry, ...]
	failures: Tuple[Dict, ...] = field(default=(), hash=False)

	@property
	def ok(self) -> bool:
		"""True if every bullet held at every step."""
		return not self.failures

	def lengths(self) -> List[int]:
		"""Lengths of w_1, w_2, ..."""
		return [rs.length(self.gcm, entry.word) for entry in self.entries]


def check_ridge_steps(
	gcm: rs.GeneralizedCartanMatrix,
	delta0: Sequence[int],
	zeta: rs.Weight,
	steps: Sequence[Tuple[rs.WeylWord, int]],
	parabolic_node: Optional[int] = None,
) -> WSequence:
	"""Build w_h = s_{gamma_h} U_h w_{h-1} and check the four ridge conditions.

	(1) gamma_h lies in delta0. (2) l(w_h) = 1 + l(U_h) + l(w_{h-1}).
	(3) <gamma_h^vee, zeta_h> = -1 and zeta_h pairs to 0 with the other
	delta0 nodes, where zeta_h = -w_h(zeta). (4) U_k(zeta_h) = zeta_h for
	k <= h. With parabolic_node, each w_h must also be minimal modulo the
	parabolic subgroup of all other nodes.

	Args:
		gcm: Ambient Cartan matrix
		delta0: Nodes of delta0
		zeta: Lowest weight
		steps: (U_h, gamma_h) for h = 1, 2, ...
		parabolic_node: Optional node defining the maximal parabolic

	Returns:
		The sequence with every failing condition recorded
	"""
	entries: List[WEntry] = []
	failures: List[Dict] = []
	previous = rs.WeylWord()
	previous_length = 0
	for h, (step, gamma) in enumerate(steps, start=1):
		word = rs.WeylWord.of(gamma) * step * previous
		zeta_h = -rs.act(gcm, word, zeta)
		entries.append(WEntry(word, zeta_h, gamma, step))
		if gamma not in delta0:
			failures.append({"h": h, "condition": "gamma in delta0"})
		word_length = rs.length(gcm, word)
		if word_length != 1 + rs.length(gcm, step) + previous_length:
			failures.append({"h": h, "condition": "length", "length": word_length})
		if zeta_h[gamma] != -1 or any(zeta_h[node] for node in delta0 if node != gamma):
			failures.append({"h": h, "condition": "pairing", "zeta": zeta_h.to_dict()})
		for k, entry in enumerate(entries, start=1):
			if rs.act(gcm, entry.step, zeta_h) != zeta_h:
				failures.append({"h": h, "condition": "stabilized", "k": k})
		if parabolic_node is not None:
			others = [i for i in range(gcm.n) if i != parabolic_node]
			if rs.length(gcm, rs.min_coset_rep(gcm, word, others)) != word_length:
				failures.append({"h": h, "condition": "minimal representative"})
		previous, previous_length = word, word_length
	return WSequence(gcm, tuple(entries), tuple(failures))


def _model_steps(rank: int, alpha0: int, beta0: int) -> List[Tuple[rs.WeylWord, int]]:
	steps = []
	for h in range(1, rank + 1):
		step = mod3_word(h - 1, offset=2)
		steps.append((step, alpha0 if h % 2 else beta0))
	return steps


@lru_cache(maxsize=64)
def build_w_sequence(family: enums.Family, rank: int) -> WSequence:
	"""w_0 = id, w_1 = s_a0 and w_h = s_{gamma_h} u_{h-1} w_{h-1} on the model extension.

	gamma_h alternates a0, b0, a0, ... and zeta = -varpi_a0.
	"""
	gcm = rs.build_model_K(family, rank)
	alpha0, beta0, _ = rs.model_nodes(gcm)
	zeta = -gcm.fundamental_weight(alpha0)
	return check_ridge_steps(gcm, (alpha0, beta0), zeta, _model_steps(rank, alpha0, beta0), parabolic_node=alpha0)


@lru_cache(maxsize=64)
def build_w_sequence_sph(n: int, p: int) -> WSequence:
	"""w_1 = s_a0, w_2 = s_b0 u_1 w_1, w_3 = s_a0 u_2 w_2 on the sph extension."""
	gcm = rs.build_sph_K(n, p)
	alpha0, beta0, _ = rs.model_nodes(gcm)
	u1, u2 = sph_words(p, offset=2)
	steps = [(rs.WeylWord(), alpha0), (u1, beta0), (u2, alpha0)]
	zeta = -gcm.fundamental_weight(alpha0)
	return check_ridge_steps(gcm, (alpha0, beta0), zeta, steps, parabolic_node=alpha0)


def extend_weight(gcm: rs.GeneralizedCartanMatrix, epsilon: rs.Weight) -> rs.Weight:
	"""eps~: the weight of the extension pairing like epsilon on G and to 0 with a0 and b0."""
	_, _, g_nodes = rs.model_nodes(gcm)
	coords = [0] * gcm.n
	for position, node in enumerate(g_nodes):
		coords[node] = epsilon[position]
	return rs.Weight(tuple(coords))


def expected_zeta(gcm: rs.GeneralizedCartanMatrix, epsilon: rs.Weight, h: int) -> rs.Weight:
	"""eps~_h - varpi_a0 for odd h, eps~_h - varpi_b0 for even h; varpi_a0 for h = 0."""
	alpha0, beta0, _ = rs.model_nodes(gcm)
	if h == 0:
		return gcm.fundamental_weight(alpha0)
	return extend_weight(gcm, epsilon) - gcm.fundamental_weight(alpha0 if h % 2 else beta0)


def _sequence_record(
	sequence: WSequence, epsilons: Sequence[rs.Weight], family: str, rank: int, **extra
) -> CheckRecord:
	_, _, g_nodes = rs.model_nodes(sequence.gcm)
	restriction_failures = []
	for h, (entry, epsilon) in enumerate(zip(sequence.entries, epsilons), start=1):
		if entry.zeta.restrict(g_nodes) != epsilon or entry.zeta != expected_zeta(sequence.gcm, epsilon, h):
			restriction_failures.append({"h": h, "zeta": entry.zeta.to_dict()})
	return record_from_bool(
		enums.CheckName.WSEQ.value,
		sequence.ok and not restriction_failures,
		family,
		rank,
		lengths=sequence.lengths(),
		words=[entry.word.to_dict() for entry in sequence.entries],
		failures=list(sequence.failures) + restriction_failures,
		**extra,
	)


def verify_w_sequence(family: enums.Family, rank: int) -> CheckRecord:
	"""All ridge conditions and zeta_h restricting to eps_h on the model extension."""
	return _sequence_record(build_w_sequence(family, rank), rs.model_epsilons(family, rank), family.value, rank)


def verify_w_sequence_sph(n: int, p: int) -> CheckRecord:
	"""All ridge conditions and zeta_h restricting to eps_h on the sph extension."""
	return _sequence_record(build_w_sequence_sph(n, p), rs.sph_epsilons(n, p), SPH, n, p=p)


def _levi_nodes(gcm: rs.GeneralizedCartanMatrix) -> List[int]:
	"""(a0, b0, a1, ..., a_{l-1}): the type D_{l+1} Levi of the model extension."""
	alpha0, beta0, g_nodes = rs.model_nodes(gcm)
	return [alpha0, beta0] + g_nodes[:-1]


def verify_lemK(family: enums.Family, rank: int) -> CheckRecord:
	"""Weight identities for gamma_0 = a0 + b0 + a1 on the model extension.

	gamma_0 = varpi_a0 + varpi_b0 - eps~_2 as weights, gamma_0 is a root of
	the D_{l+1} Levi, and -a0, -b0, -gamma_0 restrict to eps_1, eps_1, eps_2 on G.
	"""
	gcm = rs.build_model_K(family, rank)
	alpha0, beta0, g_nodes = rs.model_nodes(gcm)
	eps = rs.model_epsilons(family, rank)
	gamma0 = gcm.simple_root(alpha0) + gcm.simple_root(beta0) + gcm.simple_root(g_nodes[0])
	expected = gcm.fundamental_weight(alpha0) + gcm.fundamental_weight(beta0) - extend_weight(gcm, eps[1])
	identity = gamma0 == expected

	levi = _levi_nodes(gcm)
	levi_root = tuple(1 if node in (alpha0, beta0, g_nodes[0]) else 0 for node in levi)
	is_root = rs.RootVector(levi_root) in rs.positive_roots(gcm.restrict(levi))

	alpha_restricts = (-gcm.simple_root(alpha0)).restrict(g_nodes) == eps[0]
	beta_restricts = (-gcm.simple_root(beta0)).restrict(g_nodes) == eps[0]
	gamma_restricts = (-gamma0).restrict(g_nodes) == eps[1]
	highest = rs.reflect(gcm, alpha0, gcm.fundamental_weight(alpha0)).restrict(g_nodes) == eps[0]
	return record_from_bool(
		enums.CheckName.LEMK.value,
		identity and is_root and alpha_restricts and beta_restricts and gamma_restricts and highest,
		family.value,
		rank,
		gamma0=gamma0.to_dict(),
		identity=identity,
		levi_root=is_root,
		minus_alpha0_is_eps1=alpha_restricts,
		minus_beta0_is_eps1=beta_restricts,
		minus_gamma0_is_eps2=gamma_restricts,
		reflected_highest_weight_is_eps1=highest,
	)


def verify_lemK_sph(n: int, p: int) -> CheckRecord:
	"""-a0 restricts to omega_1 and -b0 to omega_{p-1} on the sph extension."""
	gcm = rs.build_sph_K(n, p)
	alpha0, beta0, g_nodes = rs.model_nodes(gcm)
	g = rs.build_finite(enums.Family.B, n)
	alpha_ok = (-gcm.simple_root(alpha0)).restrict(g_nodes) == g.fundamental_weight(0)
	beta_ok = (-gcm.simple_root(beta0)).restrict(g_nodes) == g.fundamental_weight(p - 2)
	return record_from_bool(
		enums.CheckName.LEMK.value,
		alpha_ok and beta_ok,
		SPH,
		n,
		p=p,
		minus_alpha0_is_omega1=alpha_ok,
		minus_beta0_is_omega_p_minus_1=beta_ok,
	)


def _check_orbit_rank(rank: int) -> None:
	if rank > constants.MAX_ORBIT_RANK:
		raise exceptions.ResourceBoundError(f"Rank {rank} exceeds the orbit bound {constants.MAX_ORBIT_RANK}")


def verify_IP6_orbit(family: enums.Family, rank: int) -> CheckRecord:
	"""Orbit of varpi_a0 under the D_{l+1} Levi, filtered to nonnegative pairings on a1..a_{l-1}.

	The survivors must be exactly varpi_a0 and eps~_n - varpi_{a0 or b0} for
	n = 1..l, each with G-restriction eps_n and grado n.
	"""
	_check_orbit_rank(rank)
	gcm = rs.build_model_K(family, rank)
	levi = _levi_nodes(gcm)
	alpha0, _, g_nodes = rs.model_nodes(gcm)
	orbit = rs.orbit(gcm, gcm.fundamental_weight(alpha0), levi, limit=2**rank)
	survivors = [mu for mu in orbit if all(mu[node] >= 0 for node in g_nodes[:-1])]
	eps = rs.model_epsilons(family, rank)
	data = generators(family, rank)
	expected = {expected_zeta(gcm, eps[n - 1] if n else rs.Weight.zero(rank), n): n for n in range(rank + 1)}
	classes = []
	for mu in sorted(survivors, key=lambda w: expected.get(w, -1)):
		restriction = mu.restrict(g_nodes)
		n = expected.get(mu)
		classes.append(
			{
				"weight": mu.to_dict(),
				"n": n,
				"restriction": restriction.to_dict(),
				"grado": grado(data, restriction) if data.in_monoid(restriction) else None,
			}
		)
	unexpected = [c["weight"] for c in classes if c["n"] is None]
	degrees_ok = all(c["grado"] == c["n"] for c in classes if c["n"] is not None)
	ok = len(orbit) == 2**rank and set(survivors) == set(expected) and not unexpected and degrees_ok
	return record_from_bool(
		enums.CheckName.IP6_ORBIT.value,
		ok,
		family.value,
		rank,
		orbit_size=len(orbit),
		surviving_classes=len(survivors),
		classes=classes,
		unexpected=unexpected,
	)


def verify_IP6_roots(family: enums.Family, rank: int) -> CheckRecord:
	"""Positive roots a a0 + b b0 + gamma of the D_{l+1} Levi have a, b <= 1.

	For each (a, b) the admissible gamma are those with (a + b) eps_1 - gamma
	dominant for G: gamma = a1 with lambda = eps_2 when a = b = 1, gamma = 0
	with lambda = eps_1 otherwise. The count of gamma with nonpositive
	pairings against a2..a_{l-1} is also reported.
	"""
	_check_orbit_rank(rank)
	gcm = rs.build_model_K(family, rank)
	g = rs.build_finite(family, rank)
	eps = rs.model_epsilons(family, rank)
	levi = gcm.restrict(_levi_nodes(gcm))
	pairs = set()
	admissible: Dict[str, List[Dict]] = {}
	nonpositive = 0
	bounded = True
	for root in rs.positive_roots(levi):
		a, b = root[0], root[1]
		if (a, b) == (0, 0):
			continue
		bounded = bounded and a <= 1 and b <= 1
		pairs.add((a, b))
		gamma = rs.RootVector(tuple(root.coords[2:]) + (0,))
		gamma_weight = g.root_to_weight(gamma)
		if (a, b) == (1, 1) and all(gamma_weight[i] <= 0 for i in range(1, rank - 1)):
			nonpositive += 1
		highest = eps[0] * (a + b) - gamma_weight
		if highest.is_dominant():
			admissible.setdefault(f"{a},{b}", []).append({"gamma": list(gamma.coords), "lambda": highest.to_dict()})
	alpha1 = [1] + [0] * (rank - 1)
	zero = [0] * rank
	unique = (
		admissible.get("1,1") == [{"gamma": alpha1, "lambda": eps[1].to_dict()}]
		and admissible.get("1,0") == [{"gamma": zero, "lambda": eps[0].to_dict()}]
		and admissible.get("0,1") == [{"gamma": zero, "lambda": eps[0].to_dict()}]
	)
	return record_from_bool(
		enums.CheckName.IP6_ROOTS.value,
		bounded and pairs == {(0, 1), (1, 0), (1, 1)} and unique,
		family.value,
		rank,
		pairs=sorted(list(pair) for pair in pairs),
		admissible=admissible,
		nonpositive_candidates=nonpositive,
	)
