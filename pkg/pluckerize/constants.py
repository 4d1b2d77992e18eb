#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Numeric defaults and size bounds used throughout pluckerize.

Every bound here is enforced with a ResourceBoundError before any work
starts; nothing is silently truncated.
"""

from typing import Final

# Randomness
# ----------
#: Seed used when none is given on the command line
DEFAULT_SEED: Final[int] = 0

#: Inclusive range for entries of random test matrices
MATRIX_ENTRY_MIN: Final[int] = -9
MATRIX_ENTRY_MAX: Final[int] = 9


# Certification
# -------------
#: Random matrices a Garnir relation is checked on before it is returned
GARNIR_SAMPLES: Final[int] = 20

#: Extra sample points on top of the expected rank for rank certificates
RANK_MARGIN: Final[int] = 5

#: Prime used for modular full-rank certificates
RANK_PRIME: Final[int] = 2_147_483_647


# Size bounds
# -----------
#: Largest module dimension handled by weight-multiplicity computations
MAX_MODULE_DIMENSION: Final[int] = 10**5

#: Largest number of tableaux enumerate_standard may produce
MAX_TABLEAU_COUNT: Final[int] = 10**6

#: Largest rank handled by the Freudenthal recursion
MAX_FREUDENTHAL_RANK: Final[int] = 6

#: Largest ambient dimension of the exterior algebra constructions
MAX_EXTERIOR_DIMENSION: Final[int] = 12

#: Largest rank accepted by the minuscule orbit and root sweeps
MAX_ORBIT_RANK: Final[int] = 10

#: Largest generator coefficient accepted by the H5 sweep
MAX_H5_BOUND: Final[int] = 4

#: Largest number of generator-sum pairs the H5 sweep may visit
MAX_H5_PAIRS: Final[int] = 5000

#: Largest tensor power accepted by the mod1 check
MAX_TENSOR_POWER: Final[int] = 6
