#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Define all enumerations used throughout the program.

Using enums instead of bare strings keeps family tags, check names and report
statuses consistent between the library modules and the command line.

Example:
    from pluckerize import enumerations as enums
    family = enums.Family.B
"""

from enum import Enum, IntEnum
from typing import List, Type


class Family(Enum):
	"""Finite Cartan types in Bourbaki numbering."""

	A = "A"
	B = "B"
	C = "C"
	D = "D"


class FormKind(Enum):
	"""Symmetry type of a nondegenerate bilinear form."""

	SYMMETRIC = "symmetric"
	SYMPLECTIC = "symplectic"


class Status(Enum):
	"""Outcome of a single check or of a whole run."""

	PASS = "pass"
	FAIL = "fail"
	ERROR = "error"


class CheckName(Enum):
	"""Checks that verify-model and verify-sph can run."""

	GRADO_ROOTS = "grado-roots"
	H1 = "H1"
	H5 = "H5"
	IP6_ORBIT = "IP6-orbit"
	IP6_ROOTS = "IP6-roots"
	LEMK = "lemK"
	MOD1 = "mod1"
	MOD2 = "mod2"
	MOD3 = "mod3"
	SPH1 = "sph1"
	SPH2 = "sph2"
	SPH3 = "sph3"
	WSEQ = "wseq"


class ExitCode(IntEnum):
	"""Process exit codes of the command line front end."""

	PASS = 0
	CHECK_FAILED = 1
	USAGE = 2
	CERTIFICATION = 3
	RESOURCE_BOUND = 4


def get_all_enums() -> List[Type[Enum]]:
	"""Return a list of all enumeration classes in this module.

	Returns:
		List[Type[Enum]]: List of all Enum classes defined in this module
	"""
	return [
		cls
		for name, cls in globals().items()
		if isinstance(cls, type) and issubclass(cls, Enum) and cls.__module__ == __name__
	]
