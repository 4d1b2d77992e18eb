#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Store the configuration of a run and the reports it produces."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from pluckerize import constants
from pluckerize import enumerations as enums
from pluckerize import random_number_generator as rng


@dataclass
class CheckRecord:
	"""Outcome of one verification check.

	The witness holds whatever data the check computed: counterexamples on
	failure, the computed values on success.
	"""

	check: str
	status: enums.Status
	family: Optional[str] = None
	rank: Optional[int] = None
	witness: Dict[str, Any] = field(default_factory=dict)
	message: Optional[str] = None

	@property
	def passed(self) -> bool:
		"""True if the check passed."""
		return self.status is enums.Status.PASS

	def to_dict(self) -> Dict[str, Any]:
		"""Return a JSON-friendly form, omitting empty optional fields."""
		record: Dict[str, Any] = {"check": self.check, "status": self.status.value}
		if self.family is not None:
			record["family"] = self.family
		if self.rank is not None:
			record["rank"] = self.rank
		if self.witness:
			record["witness"] = self.witness
		if self.message is not None:
			record["message"] = self.message
		return record


def record_from_bool(
	check: str, ok: bool, family: Optional[str] = None, rank: Optional[int] = None, **witness: Any
) -> CheckRecord:
	"""Build a CheckRecord whose status is PASS when ok is True."""
	return CheckRecord(
		check=check,
		status=enums.Status.PASS if ok else enums.Status.FAIL,
		family=family,
		rank=rank,
		witness=dict(witness),
	)


@dataclass
class RunReport:
	"""Everything one command produced.

	The status is PASS iff every record passed; an ERROR record makes the
	whole run ERROR.
	"""

	command: str
	parameters: Dict[str, Any] = field(default_factory=dict)
	records: List[CheckRecord] = field(default_factory=list)
	result: Optional[Dict[str, Any]] = None
	duration: Optional[float] = None

	@property
	def status(self) -> enums.Status:
		"""Aggregate status over all records."""
		statuses = {record.status for record in self.records}
		if enums.Status.ERROR in statuses:
			return enums.Status.ERROR
		if enums.Status.FAIL in statuses:
			return enums.Status.FAIL
		return enums.Status.PASS

	def sorted_records(self) -> List[CheckRecord]:
		"""Records ordered by check name, then family and rank."""
		return sorted(self.records, key=lambda r: (r.check, r.family or "", r.rank or 0))

	def to_dict(self, include_duration: bool = False) -> Dict[str, Any]:
		"""Return a JSON-friendly form. The duration is only included on request."""
		report: Dict[str, Any] = {
			"command": self.command,
			"parameters": self.parameters,
			"status": self.status.value,
			"records": [record.to_dict() for record in self.sorted_records()],
		}
		if self.result is not None:
			report["result"] = self.result
		if include_duration and self.duration is not None:
			report["duration"] = round(self.duration, 6)
		return report


@dataclass
class ProgramState:
	"""Contain the configuration shared by every check of a run."""

	command: Optional[str] = None
	seed: int = constants.DEFAULT_SEED
	max_size: int = constants.MAX_MODULE_DIMENSION

	# Output configuration
	json_output: bool = False
	verbose: bool = False
	timing: bool = False

	# Command parameters after validation
	family: Optional[enums.Family] = None
	rank: Optional[int] = None
	checks: List[enums.CheckName] = field(default_factory=list)
	parameters: Dict[str, Any] = field(default_factory=dict)

	# Random number generation
	random: rng.RandomNumberGenerator = field(default_factory=rng.RandomNumberGenerator)

	def reseed(self) -> None:
		"""Reset the shared generator to the configured seed."""
		self.random.reset_seed(self.seed)
