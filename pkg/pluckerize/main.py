#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Serves as the main."""

import argparse
import json
import logging
import sys
import time
import traceback
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence

from pluckerize import __version__, exceptions, exterior, input_parser, model_checker, pluecker_smt, rep_theory
from pluckerize import sl3_case
from pluckerize import enumerations as enums
from pluckerize import program_state as ps

log = logging.getLogger(__name__)

# Cache frequently used string operations
RECORD_FORMAT = "    {:<12} {:<6} {:<5} {}"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


@lru_cache(maxsize=1)
def get_header() -> str:
	"""Return cached header string."""
	return f"""Thank you for using

    pluckerize {__version__}

Exact checks for standard monomial theory on Grassmannians, Weyl group
bookkeeping on Kac-Moody extensions of model varieties, and exterior
algebra invariants. All arithmetic is over the rationals; every relation
that is returned has been certified by evaluation.
"""


@lru_cache(maxsize=1)
def get_footer() -> str:
	"""Return cached footer string."""
	return "\n\nNormal termination.\nThank you for using pluckerize!"


def section(title: str) -> str:
	"""Return a section banner."""
	return f"### {title} ".ljust(66, "-")


def build_parser() -> argparse.ArgumentParser:
	"""Build the argparse parser with one subparser per command.

	Every value is kept as a string; input_parser converts and validates.
	"""
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("--seed", help="Seed of the shared random number generator (default 0)")
	common.add_argument("--json", action="store_true", help="Print one JSON document instead of text")
	common.add_argument("--max-size", dest="max_size", help="Largest module dimension to compute")
	common.add_argument("--verbose", action="store_true", help="Log progress to standard error")
	common.add_argument("--timing", action="store_true", help="Include the wall-clock duration in the report")

	parser = argparse.ArgumentParser(
		prog="pluckerize", description="Exact checks for standard monomial theory and model varieties."
	)
	parser.add_argument("--version", action="version", version=f"pluckerize {__version__}")
	subparsers = parser.add_subparsers(dest="command", required=True)
	commands = {
		name: subparsers.add_parser(name, parents=[common], help=text)
		for name, text in input_parser.InputRules.COMMANDS.items()
	}

	for name in ("straighten", "enumerate", "ridge"):
		commands[name].add_argument("--k", required=True, help="Rank of the subspaces")
		commands[name].add_argument("--n", required=True, help="Dimension of the ambient space")
	commands["straighten"].add_argument("--monomial", required=True, help="Tableau token such as 1,4|2,3")
	commands["enumerate"].add_argument("--degree", help="Degree of the standard monomials (default 2)")
	commands["enumerate"].add_argument("--list", dest="list_tableaux", action="store_true", help="List every tableau")
	commands["ridge"].add_argument("--schubert", required=True, help="Column bounding the Schubert variety, e.g. 2,4")
	commands["ridge"].add_argument("--degree", help="Largest degree reported (default 2)")

	for name in ("verify-model", "verify-sph"):
		commands[name].add_argument("--checks", help="Comma-separated check names, or all (default)")
		commands[name].add_argument("--bound", help="Generator coefficient bound of the H5 sweep (default 2)")
	commands["verify-model"].add_argument("--family", required=True, help="A, B or C")
	commands["verify-model"].add_argument("--rank", required=True, help="Rank of G")
	commands["verify-sph"].add_argument("--n", required=True, help="Rank of G = Spin(2n+1)")
	commands["verify-sph"].add_argument("--p", required=True, help="Dimension of U, 2 <= p <= n-2")

	commands["invariants"].add_argument("--family", required=True, help="A, B, C or sph")
	commands["invariants"].add_argument("--rank", required=True, help="Rank of G (n for sph)")
	commands["invariants"].add_argument("--p", help="Dimension of U for sph")
	return parser


def run_check(name: str, function: Callable[..., ps.CheckRecord], *args: Any) -> ps.CheckRecord:
	"""Run one check, turning a size bound into an ERROR record."""
	try:
		return function(*args)
	except exceptions.ResourceBoundError as error:
		log.warning("%s skipped: %s", name, error.message)
		return ps.CheckRecord(check=name, status=enums.Status.ERROR, message=error.message)


def cmd_straighten(program_state: ps.ProgramState) -> ps.RunReport:
	"""Straighten one monomial and report its standard expansion."""
	parameters = program_state.parameters
	tableau = parameters["tableau"]
	oracle = pluecker_smt.EvaluationOracle(parameters["k"], parameters["n"], program_state.random)
	result = pluecker_smt.straighten(tableau, oracle)
	ok = all(pluecker_smt.is_standard(t) for t in result.combo)
	record = ps.record_from_bool("straightening", ok, k=parameters["k"], n=parameters["n"], terms=len(result.combo))
	return ps.RunReport(
		command="straighten",
		records=[record],
		result={
			"input": tableau.to_token(),
			"standard": pluecker_smt.is_standard(tableau),
			"expansion": result.to_dict(),
		},
	)


def cmd_enumerate(program_state: ps.ProgramState) -> ps.RunReport:
	"""Count the standard tableaux of one degree and certify that they form a basis."""
	parameters = program_state.parameters
	k, n, degree = parameters["k"], parameters["n"], parameters["degree"]
	tableaux = pluecker_smt.enumerate_standard(k, n, degree)
	result: Dict[str, Any] = {"count": len(tableaux), "expected": pluecker_smt.expected_count(k, n, degree)}
	if parameters.get("list_tableaux"):
		result["tableaux"] = [t.to_token() for t in tableaux]
	record = run_check("basis", pluecker_smt.verify_basis, k, n, degree, program_state.random)
	return ps.RunReport(command="enumerate", records=[record], result=result)


def _model_check_table(program_state: ps.ProgramState) -> Dict[enums.CheckName, Callable[[], List[ps.CheckRecord]]]:
	family, rank = program_state.family, program_state.rank
	bound = program_state.parameters["bound"]
	max_size = program_state.max_size
	name = enums.CheckName
	return {
		name.GRADO_ROOTS: lambda: [model_checker.verify_grado_roots(family, rank)],
		name.H1: lambda: [model_checker.check_H1(model_checker.generators(family, rank))],
		name.H5: lambda: [model_checker.check_H5(model_checker.generators(family, rank), bound)],
		name.IP6_ORBIT: lambda: [model_checker.verify_IP6_orbit(family, rank)],
		name.IP6_ROOTS: lambda: [model_checker.verify_IP6_roots(family, rank)],
		name.LEMK: lambda: [model_checker.verify_lemK(family, rank)],
		name.MOD1: lambda: [
			run_check(name.MOD1.value, rep_theory.verify_mod1, family, rank, i, max_size) for i in range(1, rank + 1)
		],
		name.MOD2: lambda: [exterior.verify_mod2(family, rank)],
		name.MOD3: lambda: [model_checker.check_mod3(family, rank)],
		name.WSEQ: lambda: [model_checker.verify_w_sequence(family, rank)],
	}


def _sph_check_table(program_state: ps.ProgramState) -> Dict[enums.CheckName, Callable[[], List[ps.CheckRecord]]]:
	n, p = program_state.parameters["n"], program_state.parameters["p"]
	bound = program_state.parameters["bound"]
	max_size = program_state.max_size
	name = enums.CheckName
	return {
		name.H1: lambda: [model_checker.check_H1(model_checker.generators(model_checker.SPH, n, p))],
		name.H5: lambda: [model_checker.check_H5(model_checker.generators(model_checker.SPH, n, p), bound)],
		name.LEMK: lambda: [model_checker.verify_lemK_sph(n, p)],
		name.SPH1: lambda: [rep_theory.verify_sph1(n, p, max_size)],
		name.SPH2: lambda: [exterior.verify_sph2(n, p)],
		name.SPH3: lambda: [model_checker.check_sph3(n, p)],
		name.WSEQ: lambda: [model_checker.verify_w_sequence_sph(n, p)],
	}


def _run_checks(
	program_state: ps.ProgramState, table: Dict[enums.CheckName, Callable[[], List[ps.CheckRecord]]]
) -> List[ps.CheckRecord]:
	records: List[ps.CheckRecord] = []
	for check in program_state.checks:
		log.info("Running %s", check.value)
		try:
			records.extend(table[check]())
		except exceptions.ResourceBoundError as error:
			log.warning("%s skipped: %s", check.value, error.message)
			records.append(ps.CheckRecord(check=check.value, status=enums.Status.ERROR, message=error.message))
	return records


def cmd_verify_model(program_state: ps.ProgramState) -> ps.RunReport:
	"""Run the selected model variety checks."""
	records = _run_checks(program_state, _model_check_table(program_state))
	return ps.RunReport(command="verify-model", records=records)


def cmd_verify_sph(program_state: ps.ProgramState) -> ps.RunReport:
	"""Run the selected checks of the B_n spherical family."""
	records = _run_checks(program_state, _sph_check_table(program_state))
	return ps.RunReport(command="verify-sph", records=records)


def cmd_ridge(program_state: ps.ProgramState) -> ps.RunReport:
	"""Report Schubert and ridge survivors and their standard monomial counts."""
	parameters = program_state.parameters
	k, n, degree = parameters["k"], parameters["n"], parameters["degree"]
	column = parameters["column"]
	survivors = pluecker_smt.schubert_restrict(column, k, n)
	ridge_survivors = pluecker_smt.ridge_restrict(column, k, n)
	counts = [
		{
			"degree": d,
			"schubert": len(pluecker_smt.enumerate_standard(k, n, d, survivors)),
			"ridge": len(pluecker_smt.enumerate_standard(k, n, d, ridge_survivors)),
		}
		for d in range(degree + 1)
	]
	record = run_check("restriction", pluecker_smt.verify_restriction, column, degree, program_state.random, True)
	return ps.RunReport(
		command="ridge",
		records=[record],
		result={
			"bound": column.to_token(),
			"survivors": [c.to_token() for c in survivors],
			"ridge_survivors": [c.to_token() for c in ridge_survivors],
			"word": pluecker_smt.schubert_word(column).to_dict(),
			"counts": counts,
		},
	)


def cmd_sl3(program_state: ps.ProgramState) -> ps.RunReport:
	"""Run the SL(3) non-stability example."""
	records, report = sl3_case.run_all()
	return ps.RunReport(command="sl3", records=records, result=report)


def cmd_invariants(program_state: ps.ProgramState) -> ps.RunReport:
	"""Print the invariants h_i with their degrees, and check their products."""
	rank = program_state.rank
	if program_state.family is None:
		p = program_state.parameters["p"]
		setup = exterior.sph_setup(rank, p)
		record = run_check(enums.CheckName.SPH2.value, exterior.verify_sph2, rank, p)
	else:
		setup = exterior.model_setup(program_state.family, rank)
		record = run_check(enums.CheckName.MOD2.value, exterior.verify_mod2, program_state.family, rank)
	invariants = [
		{"index": i, "degree": h.degree(), "terms": h.to_dict()} for i, h in enumerate(setup.invariants, start=1)
	]
	return ps.RunReport(
		command="invariants",
		records=[record],
		result={"dimension": setup.dim, "invariants": invariants, "sample_size": len(setup.sample)},
	)


COMMANDS: Dict[str, Callable[[ps.ProgramState], ps.RunReport]] = {
	"straighten": cmd_straighten,
	"enumerate": cmd_enumerate,
	"verify-model": cmd_verify_model,
	"verify-sph": cmd_verify_sph,
	"ridge": cmd_ridge,
	"sl3": cmd_sl3,
	"invariants": cmd_invariants,
}


def exit_code(report: ps.RunReport) -> int:
	"""Map the aggregate status of a report to the process exit code."""
	if report.status is enums.Status.ERROR:
		return int(enums.ExitCode.RESOURCE_BOUND)
	if report.status is enums.Status.FAIL:
		return int(enums.ExitCode.CHECK_FAILED)
	return int(enums.ExitCode.PASS)


def json_parameters(parameters: Dict[str, Any]) -> Dict[str, Any]:
	"""Keep the plain values of the parameters; parsed objects are dropped."""
	return {key: value for key, value in parameters.items() if isinstance(value, (bool, int, str))}


def render_json(report: ps.RunReport, program_state: ps.ProgramState) -> str:
	"""Serialize a report deterministically."""
	return json.dumps(report.to_dict(include_duration=program_state.timing), indent=2, sort_keys=True)


def print_report(report: ps.RunReport, program_state: ps.ProgramState, defaults: Dict[str, str]) -> None:
	"""Print the human-readable rendering of a report."""
	print(get_header())
	print(section("Command"))
	print(f"  {report.command}")
	for key, value in sorted(report.parameters.items()):
		print(f"  {key}: {value}")
	print()
	print(section("Default Parameters Being Used"))
	for parameter, value in defaults.items():
		print(f"  {parameter}: {value}")
	if not defaults:
		print("  (No defaults used.)")
	print()
	print(section("Random Seed"))
	print(f"  {program_state.seed}")
	print()
	print(section("Checks"))
	for record in report.sorted_records():
		label = "" if record.family is None else f"{record.family}{record.rank if record.rank is not None else ''}"
		print(RECORD_FORMAT.format(record.check, label, record.status.value, record.message or "").rstrip())
		if record.status is not enums.Status.PASS and record.witness:
			print(f"      {json.dumps(record.witness, sort_keys=True)}")
	if not report.records:
		print("  (No checks run.)")
	print()
	if report.result is not None:
		print(section("Result"))
		for key, value in sorted(report.result.items()):
			print(f"  {key}: {json.dumps(value, sort_keys=True)}")
		print()
	if program_state.timing and report.duration is not None:
		print(section("Timing"))
		print(f"  {report.duration:.3f} s")
		print()
	print(section("Status"))
	print(f"  {report.status.value}")
	print(get_footer())


def configure_logging(verbose: bool) -> None:
	"""Send library logging to standard error."""
	logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if verbose else logging.WARNING, format=LOG_FORMAT)


def main(argv: Optional[Sequence[str]] = None) -> int:
	"""Run pluckerize and return the exit code."""
	try:
		args = build_parser().parse_args(argv)
		configure_logging(bool(getattr(args, "verbose", False)))
		program_state = ps.ProgramState()
		try:
			defaults = input_parser.parse_arguments(args, program_state)
		except exceptions.InputError as error:
			print(f"pluckerize: error: {error.message}", file=sys.stderr)
			return int(enums.ExitCode.USAGE)

		start = time.perf_counter()
		try:
			report = COMMANDS[program_state.command](program_state)
		except exceptions.CertificationError as error:
			print(f"pluckerize: certification failed: {error.message}", file=sys.stderr)
			return int(enums.ExitCode.CERTIFICATION)
		except exceptions.ResourceBoundError as error:
			print(f"pluckerize: size bound exceeded: {error.message}", file=sys.stderr)
			return int(enums.ExitCode.RESOURCE_BOUND)
		report.duration = time.perf_counter() - start
		report.parameters = json_parameters(program_state.parameters)
		report.parameters["seed"] = program_state.seed

		if program_state.json_output:
			print(render_json(report, program_state))
		else:
			print_report(report, program_state, defaults)
		return exit_code(report)

	except Exception as e:
		print("\n\nOh no! It looks like there was an error! Error message:")
		print(e)
		print("\n\nPython error details:")
		print(traceback.format_exc())
		raise


if __name__ == "__main__":
	sys.exit(main())
