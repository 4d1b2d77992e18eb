#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Define pluckerize specific exceptions.

Every error the package raises on purpose derives from PluckerizeError, so the
command line front end can map it onto a stable exit code.
"""


class PluckerizeError(Exception):
	"""Base class for all pluckerize-specific exceptions."""

	__slots__ = ("message",)

	def __init__(self, message: str) -> None:
		"""Create an exception with given message.

		Args:
			message: The error message to display
		"""
		super().__init__(message)
		self.message = message


class InputError(PluckerizeError):
	"""Raised when command line values or tokens are not valid.

	Covers malformed tableau tokens, unknown check names and parameters that
	are out of range for the requested family.
	"""

	__slots__ = ()


class DomainError(PluckerizeError):
	"""Raised when a mathematical precondition does not hold.

	Examples are a non-dominant weight passed to the Weyl dimension formula, a
	Cartan matrix that is not of finite type, or comparable columns handed to
	the Garnir relation.
	"""

	__slots__ = ()


class CertificationError(PluckerizeError):
	"""Raised when an exact certificate fails.

	An evaluation-oracle mismatch or a rank deficiency that cannot happen for a
	correct implementation. Never returned as data.
	"""

	__slots__ = ()


class ResourceBoundError(PluckerizeError):
	"""Raised when a computation would exceed an explicit size bound."""

	__slots__ = ()
