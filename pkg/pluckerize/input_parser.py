#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Validate command line values and populate a ProgramState object.

argparse only splits the command line; every value arrives here as a string
and is converted and checked against InputRules. Anything that does not fit
raises InputError, which the front end maps to the usage exit code.
"""

import argparse
from copy import deepcopy
from typing import Dict, List, Optional, Tuple

from pluckerize import constants, exceptions, pluecker_smt
from pluckerize import enumerations as enums
from pluckerize.program_state import ProgramState


class InputRules:
	"""Define rules and defaults for argument parsing."""

	COMMANDS: Dict[str, str] = {
		"straighten": "Straighten a Plücker monomial into standard monomials",
		"enumerate": "Enumerate standard tableaux of Gr(k, n) and certify the basis",
		"verify-model": "Run model variety checks for one family and rank",
		"verify-sph": "Run checks for the B_n spherical family",
		"ridge": "Schubert and ridge restriction of standard monomials",
		"sl3": "The SL(3) Levi non-stability example",
		"invariants": "Print the invariants h_i of a model or sph variety",
	}

	ALLOWED_CHECKS: Dict[str, List[enums.CheckName]] = {
		"verify-model": [
			enums.CheckName.GRADO_ROOTS,
			enums.CheckName.H1,
			enums.CheckName.H5,
			enums.CheckName.IP6_ORBIT,
			enums.CheckName.IP6_ROOTS,
			enums.CheckName.LEMK,
			enums.CheckName.MOD1,
			enums.CheckName.MOD2,
			enums.CheckName.MOD3,
			enums.CheckName.WSEQ,
		],
		"verify-sph": [
			enums.CheckName.H1,
			enums.CheckName.H5,
			enums.CheckName.LEMK,
			enums.CheckName.SPH1,
			enums.CheckName.SPH2,
			enums.CheckName.SPH3,
			enums.CheckName.WSEQ,
		],
	}

	MODEL_FAMILIES: List[enums.Family] = [enums.Family.A, enums.Family.B, enums.Family.C]

	MINIMUM_MODEL_RANK: int = 2

	# Parameters with default values (for display purposes)
	PARAMETER_DEFAULTS: Dict[str, str] = {
		"seed": str(constants.DEFAULT_SEED),
		"max_size": str(constants.MAX_MODULE_DIMENSION),
		"checks": "all",
		"degree": "2",
		"bound": "2",
	}

	# Defaults that apply to each command besides seed and max_size
	COMMAND_DEFAULTS: Dict[str, Tuple[str, ...]] = {
		"enumerate": ("degree",),
		"verify-model": ("checks", "bound"),
		"verify-sph": ("checks", "bound"),
		"ridge": ("degree",),
	}


def _integer(name: str, value: str, minimum: int = 0) -> int:
	try:
		number = int(value)
	except (TypeError, ValueError):
		raise exceptions.InputError(f"Could not interpret '--{name.replace('_', '-')} {value}'. Expected an integer.")
	if number < minimum:
		raise exceptions.InputError(f"--{name.replace('_', '-')} must be at least {minimum}, got {number}.")
	return number


def parse_family(token: str, allow_sph: bool = False) -> Optional[enums.Family]:
	"""Match a family letter case-insensitively.

	Returns:
		The family, or None for "sph" when allow_sph is set

	Raises:
		InputError: If the token names no admissible family
	"""
	folded = token.strip().casefold()
	if allow_sph and folded == "sph":
		return None
	for family in InputRules.MODEL_FAMILIES:
		if family.value.casefold() == folded:
			return family
	allowed = ", ".join(f.value for f in InputRules.MODEL_FAMILIES)
	raise exceptions.InputError(f"Unknown family '{token}'. Expected one of {allowed}.")


def parse_checks(token: str, command: str) -> List[enums.CheckName]:
	"""Parse a comma-separated check list; "all" selects every allowed check.

	Raises:
		InputError: If a name is not allowed for the command
	"""
	allowed = InputRules.ALLOWED_CHECKS[command]
	if token.strip().casefold() == "all":
		return list(allowed)
	checks = []
	for name in (part.strip() for part in token.split(",")):
		if not name:
			continue
		match = next((check for check in allowed if check.value.casefold() == name.casefold()), None)
		if match is None:
			raise exceptions.InputError(f"Unknown check '{name}' for {command}.")
		if match not in checks:
			checks.append(match)
	return checks


def validate_grassmannian(k: int, n: int) -> None:
	"""Require 1 <= k <= n."""
	if not 1 <= k <= n:
		raise exceptions.InputError(f"Need 1 <= k <= n, got k={k}, n={n}.")


def validate_model(rank: int) -> None:
	"""Model extensions need rank at least 2."""
	if rank < InputRules.MINIMUM_MODEL_RANK:
		raise exceptions.InputError(f"Model checks need rank >= {InputRules.MINIMUM_MODEL_RANK}, got {rank}.")


def validate_sph(n: int, p: int) -> None:
	"""The sph family needs 2 <= p <= n - 2."""
	if not 2 <= p <= n - 2:
		raise exceptions.InputError(f"The sph family needs 2 <= p <= n-2, got n={n}, p={p}.")


def parse_arguments(args: argparse.Namespace, program_state: ProgramState) -> Dict[str, str]:
	"""Populate program_state from parsed command line arguments.

	Args:
		args: Namespace produced by the front end's argparse parser
		program_state: ProgramState object to populate

	Returns:
		The defaults that were not overridden, for display

	Raises:
		InputError: If a value is invalid
	"""
	defaults = deepcopy(InputRules.PARAMETER_DEFAULTS)
	command = args.command
	if command not in InputRules.COMMANDS:
		raise exceptions.InputError(f"Unknown command '{command}'.")
	program_state.command = command
	program_state.json_output = bool(getattr(args, "json", False))
	program_state.verbose = bool(getattr(args, "verbose", False))
	program_state.timing = bool(getattr(args, "timing", False))

	for parameter, value in sorted(vars(args).items()):
		if value is None or parameter in ("command", "json", "verbose", "timing"):
			continue
		try:
			handler = getattr(ParameterSection, parameter)
		except AttributeError:
			raise exceptions.InputError(f"Invalid parameter '--{parameter.replace('_', '-')}'.")
		handler(value, program_state)
		defaults.pop(parameter, None)

	if command in InputRules.ALLOWED_CHECKS and "checks" in defaults:
		program_state.checks = list(InputRules.ALLOWED_CHECKS[command])
	ParameterSection.validate(program_state)
	program_state.reseed()

	relevant = InputRules.COMMAND_DEFAULTS.get(command, ())
	return {name: value for name, value in defaults.items() if name in relevant or name in ("seed", "max_size")}


class ParameterSection:
	"""Handle parsing and validation of individual parameters."""

	@staticmethod
	def seed(options, program_state):
		"""Populate program_state.seed from options."""
		program_state.seed = _integer("seed", options)

	@staticmethod
	def max_size(options, program_state):
		"""Populate program_state.max_size from options."""
		program_state.max_size = _integer("max_size", options, minimum=1)

	@staticmethod
	def k(options, program_state):
		"""Populate parameters['k'] from options."""
		program_state.parameters["k"] = _integer("k", options, minimum=1)

	@staticmethod
	def n(options, program_state):
		"""Populate parameters['n'] from options."""
		program_state.parameters["n"] = _integer("n", options, minimum=1)

	@staticmethod
	def p(options, program_state):
		"""Populate parameters['p'] from options."""
		program_state.parameters["p"] = _integer("p", options, minimum=1)

	@staticmethod
	def degree(options, program_state):
		"""Populate parameters['degree'] from options."""
		program_state.parameters["degree"] = _integer("degree", options)

	@staticmethod
	def bound(options, program_state):
		"""Populate parameters['bound'] from options."""
		program_state.parameters["bound"] = _integer("bound", options)

	@staticmethod
	def rank(options, program_state):
		"""Populate program_state.rank from options."""
		program_state.rank = _integer("rank", options, minimum=1)
		program_state.parameters["rank"] = program_state.rank

	@staticmethod
	def family(options, program_state):
		"""Populate program_state.family from options; "sph" leaves it unset."""
		program_state.family = parse_family(options, allow_sph=program_state.command == "invariants")
		program_state.parameters["family"] = "sph" if program_state.family is None else program_state.family.value

	@staticmethod
	def checks(options, program_state):
		"""Populate program_state.checks from options."""
		if program_state.command not in InputRules.ALLOWED_CHECKS:
			raise exceptions.InputError(f"--checks is not accepted by {program_state.command}.")
		program_state.checks = parse_checks(options, program_state.command)

	@staticmethod
	def monomial(options, program_state):
		"""Store the raw tableau token; it is parsed once k and n are known."""
		program_state.parameters["monomial"] = options

	@staticmethod
	def schubert(options, program_state):
		"""Store the raw column token; it is parsed once k and n are known."""
		program_state.parameters["schubert"] = options

	@staticmethod
	def list_tableaux(options, program_state):
		"""Request the full tableau listing."""
		program_state.parameters["list_tableaux"] = bool(options)

	@staticmethod
	def validate(program_state):
		"""Cross-parameter checks once every value is in place.

		Raises:
			InputError: If a required value is missing or values do not fit together
		"""
		command = program_state.command
		parameters = program_state.parameters
		if command in ("enumerate", "ridge"):
			parameters.setdefault("degree", int(InputRules.PARAMETER_DEFAULTS["degree"]))
		if command in ("verify-model", "verify-sph"):
			parameters.setdefault("bound", int(InputRules.PARAMETER_DEFAULTS["bound"]))
			if parameters["bound"] > constants.MAX_H5_BOUND:
				raise exceptions.InputError(f"--bound must be at most {constants.MAX_H5_BOUND}.")

		if command in ("straighten", "enumerate", "ridge"):
			_require(parameters, "k", "n")
			validate_grassmannian(parameters["k"], parameters["n"])
		if command == "straighten":
			_require(parameters, "monomial")
			parameters["tableau"] = _parse_tableau(parameters["monomial"], parameters["k"], parameters["n"])
		if command == "ridge":
			_require(parameters, "schubert")
			if parameters["n"] < 2:
				raise exceptions.InputError(f"ridge needs n >= 2, got n={parameters['n']}.")
			tableau = _parse_tableau(parameters["schubert"], parameters["k"], parameters["n"])
			if tableau.degree != 1:
				raise exceptions.InputError("--schubert must be a single column such as 2,4.")
			parameters["column"] = tableau.columns[0]
		if command == "verify-model":
			_require_attribute(program_state, "family", "rank")
			validate_model(program_state.rank)
		if command == "verify-sph":
			_require(parameters, "n", "p")
			validate_sph(parameters["n"], parameters["p"])
		if command == "invariants":
			_require(parameters, "family", "rank")
			if program_state.family is None:
				_require(parameters, "p")
				validate_sph(program_state.rank, parameters["p"])
			else:
				validate_model(program_state.rank)


def _require(parameters: Dict, *names: str) -> None:
	for name in names:
		if name not in parameters:
			raise exceptions.InputError(f"Missing required parameter --{name}.")


def _require_attribute(program_state: ProgramState, *names: str) -> None:
	for name in names:
		if getattr(program_state, name) is None:
			raise exceptions.InputError(f"Missing required parameter --{name}.")


def _parse_tableau(token: str, k: int, n: int) -> pluecker_smt.Tableau:
	try:
		return pluecker_smt.parse_tableau(token, k, n)
	except (IndexError, ValueError) as error:
		raise exceptions.InputError(f"Could not interpret tableau '{token}': {error}")
