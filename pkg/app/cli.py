"""
Command-line front end

    info            --group <spec>
    sr2             --group <spec> [--involutions all|default|<names>]
    solve           --group <spec> --target <spec> --eq J1|J2|J12 [--enumerate]
    hom             --group <spec> --target <spec>
    verify          --suite [--config <path>] | --group <spec> --target <spec>
    counterexample  --k <int> --target <spec> --u <residues> --c <residues>

Every verb takes --json and --out <path>. Exit codes: 0 success, 1 a check
failed, 2 usage or input error.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from app.config import Settings, settings as default_settings
from app.schemas import SuiteConfig
from app.services import report_service
from app.services.suite_service import run_paper_suite
from core.errors import CapExceededError, ConsistencyError, InvalidInputError, UsageError
from core.jensen_solver import EquationKind, hom_space, solve
from core.sr2 import check_sr2
from core.verify import CheckStatus, construct_counterexample, run_instance_checks
from utils.spec_parser import parse_group_spec, parse_involutions, parse_residues, parse_target_spec

logger = logging.getLogger(__name__)

VERBS = ("info", "sr2", "solve", "hom", "verify", "counterexample")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class Command:
    verb: str
    group_spec: Optional[str] = None
    target_spec: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of printing and exiting"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status: int = 0, message: Optional[str] = None):
        if status:
            raise UsageError(message or f"{self.prog}: exit {status}")
        raise SystemExit(status)


def create_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jensen", description="Exact solver and verifier for the Jensen equations on finite groups")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    def add(verb: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("--json", action="store_true", help="Machine-readable output")
        p.add_argument("--out", default=None, help="Write output to this file instead of stdout")
        return p

    p = add("info", "Structure of a group")
    p.add_argument("--group", required=True)

    p = add("sr2", "Decide the square-root criterion")
    p.add_argument("--group", required=True)
    p.add_argument("--involutions", default="default", help="all, default, or comma-separated element names")

    p = add("solve", "Solve J1, J2 or both")
    p.add_argument("--group", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--eq", required=True, choices=[k.value for k in EquationKind])
    p.add_argument("--enumerate", action="store_true", help="List every solution (up to the report limit)")

    p = add("hom", "Enumerate homomorphisms")
    p.add_argument("--group", required=True)
    p.add_argument("--target", required=True)

    p = add("verify", "Run the verification suite or one instance")
    p.add_argument("--suite", action="store_true")
    p.add_argument("--config", default=None, help="SuiteConfig JSON file")
    p.add_argument("--group", default=None)
    p.add_argument("--target", default=None)
    p.add_argument("--involutions", default="default")

    p = add("counterexample", "Build the non-additive J1 solution on D_2k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--c", required=True)
    return parser


def parse_args(argv: Sequence[str]) -> Command:
    args = create_parser().parse_args(list(argv))
    if args.verb is None:
        raise UsageError(f"missing verb, expected one of: {', '.join(VERBS)}")
    options = {
        key: value for key, value in vars(args).items()
        if key not in ("verb", "group", "target")
    }
    command = Command(args.verb, getattr(args, "group", None), getattr(args, "target", None), options)

    if command.verb == "verify":
        if options.get("config") and not options["suite"]:
            raise UsageError("verify: --config needs --suite")
        if options["suite"] and (command.group_spec or command.target_spec):
            raise UsageError("verify: --suite cannot be combined with --group/--target")
        if not options["suite"]:
            if command.group_spec is None:
                raise UsageError("verify: give --suite or --group and --target")
            if command.target_spec is None:
                raise UsageError("verify: --group needs --target")
    return command


# ==================== EXECUTION ====================

def _dump(model, as_json: bool, render) -> str:
    return model.model_dump_json(indent=2) + "\n" if as_json else render(model)


def _execute(cmd: Command, config: Settings) -> Tuple[int, str]:
    opts = cmd.options
    as_json = opts.get("json", False)
    max_enum = config.JENSEN_MAX_ENUM
    max_order = config.JENSEN_MAX_GROUP_ORDER

    if cmd.verb == "counterexample":
        target = parse_target_spec(cmd.target_spec)
        u = parse_residues(opts["u"], target)
        c = parse_residues(opts["c"], target)
        f = construct_counterexample(opts["k"], target, u, c)
        report = report_service.counterexample_report(opts["k"], f, u, c)
        code = EXIT_OK if report.solves_j1 else EXIT_CHECK_FAILED
        return code, _dump(report, as_json, report_service.render_counterexample)

    if cmd.verb == "verify" and opts["suite"]:
        suite_config = SuiteConfig.from_file(opts["config"]) if opts.get("config") else SuiteConfig()
        results = run_paper_suite(suite_config, max_enum, max_order)
        return _suite_output(results, as_json)

    group = parse_group_spec(cmd.group_spec, max_order)
    if cmd.verb == "info":
        return EXIT_OK, _dump(report_service.group_info(group), as_json, report_service.render_group_info)

    if cmd.verb == "sr2":
        report = check_sr2(group, parse_involutions(group, opts["involutions"]))
        return EXIT_OK, _dump(report_service.sr2_report(report), as_json, report_service.render_sr2)

    target = parse_target_spec(cmd.target_spec)
    if cmd.verb == "solve":
        space = solve(group, target, EquationKind(opts["eq"]))
        report = report_service.solution_space_report(space, opts["enumerate"], max_enum)
        return EXIT_OK, _dump(report, as_json, report_service.render_solution_space)

    if cmd.verb == "hom":
        homs = hom_space(group, target, max_enum)
        return EXIT_OK, _dump(report_service.hom_report(group, target, homs), as_json, report_service.render_homs)

    involution_set = parse_involutions(group, opts["involutions"])
    return _suite_output(run_instance_checks(group, target, involution_set, max_enum), as_json)


def _suite_output(results, as_json: bool) -> Tuple[int, str]:
    code = EXIT_CHECK_FAILED if any(r.status == CheckStatus.FAIL for r in results) else EXIT_OK
    if as_json:
        return code, report_service.suite_results(results).model_dump_json(indent=2) + "\n"
    return code, report_service.render_suite(report_service.suite_report(results))


def execute(cmd: Command, config: Optional[Settings] = None) -> Tuple[int, str]:
    """Run a parsed command; returns the exit code and the rendered output (or error message)"""
    try:
        return _execute(cmd, config or default_settings)
    except (UsageError, InvalidInputError, CapExceededError) as exc:
        logger.debug("%s rejected: %s", cmd.verb, exc)
        return EXIT_USAGE, f"error: {exc}\n"
    except ConsistencyError as exc:
        logger.error("Consistency check failed: %s", exc)
        return EXIT_CHECK_FAILED, f"consistency failure: {exc}\n"
    except (OSError, ValidationError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"


def write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(Path(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    code, output = execute(cmd)
    if code == EXIT_USAGE or output.startswith("consistency failure"):
        sys.stderr.write(output)
        return code
    try:
        write_output(output, cmd.options.get("out"))
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    return code
