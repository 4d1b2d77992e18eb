#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Run the full verification sweeps and write one JSON report.

The "small" scale is meant for quick local runs and tests; "full" covers the
ranges the library is documented to handle. Two runs with the same seed and
scale write byte-identical files unless --timing is given.
"""

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from pluckerize import constants, exterior, model_checker, pluecker_smt, rep_theory, sl3_case
from pluckerize import enumerations as enums
from pluckerize import random_number_generator as rng
from pluckerize.main import exit_code, run_check
from pluckerize.program_state import CheckRecord, RunReport

log = logging.getLogger(__name__)

MODEL_FAMILIES = (enums.Family.A, enums.Family.B, enums.Family.C)


@dataclass(frozen=True)
class SuiteScale:
	"""Ranges swept at one scale."""

	grassmannians: Tuple[Tuple[int, int], ...]
	straightening_samples: int
	basis_max_n: int
	basis_max_degree: int
	relation_grassmannians: Tuple[Tuple[int, int], ...]
	mod3_max_rank: int
	sph_max_n: int
	mod1_max_rank: int
	mod2_cases: Tuple[Tuple[enums.Family, int], ...]
	sph_cases: Tuple[Tuple[int, int], ...]
	wseq_max_rank: int
	orbit_max_rank: int


SCALES = {
	"small": SuiteScale(
		grassmannians=((2, 4),),
		straightening_samples=20,
		basis_max_n=4,
		basis_max_degree=2,
		relation_grassmannians=((2, 4),),
		mod3_max_rank=4,
		sph_max_n=5,
		mod1_max_rank=2,
		mod2_cases=((enums.Family.A, 3), (enums.Family.B, 3), (enums.Family.C, 3)),
		sph_cases=((4, 2),),
		wseq_max_rank=3,
		orbit_max_rank=3,
	),
	"full": SuiteScale(
		grassmannians=((2, 4), (2, 5), (3, 6)),
		straightening_samples=500,
		basis_max_n=6,
		basis_max_degree=3,
		relation_grassmannians=((2, 4), (2, 5)),
		mod3_max_rank=8,
		sph_max_n=6,
		mod1_max_rank=4,
		mod2_cases=(
			(enums.Family.A, 3),
			(enums.Family.A, 4),
			(enums.Family.B, 3),
			(enums.Family.B, 4),
			(enums.Family.C, 3),
			(enums.Family.C, 4),
		),
		sph_cases=((4, 2), (5, 3)),
		wseq_max_rank=6,
		orbit_max_rank=8,
	),
}


def sph_parameters(max_n: int) -> List[Tuple[int, int]]:
	"""All (n, p) with 2 <= p <= n - 2 and n <= max_n."""
	return [(n, p) for n in range(4, max_n + 1) for p in range(2, n - 1)]


def check_H1(family: model_checker.FamilyTag, rank: int, p: Optional[int] = None) -> CheckRecord:
	"""Freeness of the spherical monoid of one model or sph case."""
	return model_checker.check_H1(model_checker.generators(family, rank, p))


def collect_records(scale: SuiteScale, random: rng.RandomNumberGenerator) -> List[CheckRecord]:
	"""Run every sweep of the scale in a fixed order."""
	jobs: List[Tuple[str, Callable[..., CheckRecord], tuple]] = []

	for k, n in scale.grassmannians:
		exhaustive = (k, n) == (2, 4)
		for degree in range(2, 4):
			samples = None if exhaustive else scale.straightening_samples
			jobs.append(("straightening", pluecker_smt.verify_straightening, (k, n, degree, random, samples)))
	for n in range(2, scale.basis_max_n + 1):
		for k in range(1, n):
			for degree in range(1, scale.basis_max_degree + 1):
				jobs.append(("basis", pluecker_smt.verify_basis, (k, n, degree, random)))
	for k, n in scale.relation_grassmannians:
		jobs.append(("relations", pluecker_smt.verify_relation_generation, (k, n, random)))

	for family in MODEL_FAMILIES:
		for rank in range(2, scale.mod3_max_rank + 1):
			jobs.append((enums.CheckName.MOD3.value, model_checker.check_mod3, (family, rank)))
			jobs.append((enums.CheckName.H1.value, check_H1, (family, rank)))
			jobs.append((enums.CheckName.GRADO_ROOTS.value, model_checker.verify_grado_roots, (family, rank)))
		for rank in range(2, scale.mod1_max_rank + 1):
			for index in range(1, rank + 1):
				jobs.append((enums.CheckName.MOD1.value, rep_theory.verify_mod1, (family, rank, index)))
		for rank in range(2, scale.wseq_max_rank + 1):
			jobs.append((enums.CheckName.WSEQ.value, model_checker.verify_w_sequence, (family, rank)))
		for rank in range(2, scale.orbit_max_rank + 1):
			jobs.append((enums.CheckName.IP6_ORBIT.value, model_checker.verify_IP6_orbit, (family, rank)))
			jobs.append((enums.CheckName.IP6_ROOTS.value, model_checker.verify_IP6_roots, (family, rank)))
	for family, rank in scale.mod2_cases:
		jobs.append((enums.CheckName.MOD2.value, exterior.verify_mod2, (family, rank)))

	for n, p in sph_parameters(scale.sph_max_n):
		jobs.append((enums.CheckName.H1.value, check_H1, (model_checker.SPH, n, p)))
		jobs.append((enums.CheckName.SPH3.value, model_checker.check_sph3, (n, p)))
	for n, p in sph_parameters(min(scale.sph_max_n, 5)):
		jobs.append((enums.CheckName.WSEQ.value, model_checker.verify_w_sequence_sph, (n, p)))
	for n, p in scale.sph_cases:
		jobs.append((enums.CheckName.SPH1.value, rep_theory.verify_sph1, (n, p)))
		jobs.append((enums.CheckName.SPH2.value, exterior.verify_sph2, (n, p)))

	records = []
	for name, function, args in jobs:
		log.info("Running %s", name)
		records.append(run_check(name, function, *args))
	sl3_records, _ = sl3_case.run_all()
	records.extend(sl3_records)
	return records


def run_suite(scale_name: str, seed: int = constants.DEFAULT_SEED) -> RunReport:
	"""Run the suite at one scale and return its report."""
	start = time.perf_counter()
	random = rng.RandomNumberGenerator(seed)
	records = collect_records(SCALES[scale_name], random)
	return RunReport(
		command="suite",
		parameters={"scale": scale_name, "seed": seed},
		records=records,
		duration=time.perf_counter() - start,
	)


def write_report(report: RunReport, path: Path, timing: bool = False) -> None:
	"""Write the report as sorted, indented JSON."""
	with open(path, "w", encoding="utf-8") as file:
		json.dump(report.to_dict(include_duration=timing), file, indent=2, sort_keys=True)
		file.write("\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
	"""Parse arguments, run the suite and write the report."""
	parser = argparse.ArgumentParser(description="Run the pluckerize verification suite.")
	parser.add_argument("--scale", choices=sorted(SCALES), default="small", help="Sweep ranges (default small)")
	parser.add_argument("--seed", type=int, default=constants.DEFAULT_SEED, help="Random seed (default 0)")
	parser.add_argument("--output", default="suite_report.json", help="Report file (default suite_report.json)")
	parser.add_argument("--timing", action="store_true", help="Include the wall-clock duration")
	parser.add_argument("--verbose", action="store_true", help="Log progress to standard error")
	args = parser.parse_args(argv)

	logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING)
	report = run_suite(args.scale, args.seed)
	write_report(report, Path(args.output), args.timing)
	print(f"{report.status.value}: {len(report.records)} checks written to {args.output}")
	return exit_code(report)


if __name__ == "__main__":
	sys.exit(main())
