"""
Report Service - domain results to pydantic reports and text
"""

import logging
from typing import List

from app.schemas import (
    CheckResultSchema,
    CounterexampleReport,
    ElementInfo,
    GroupInfoReport,
    HomReport,
    InstanceSchema,
    KernelFactor,
    SolutionSpaceReport,
    Sr2Pair,
    Sr2ReportSchema,
    SuiteReport,
    SuiteResults,
    SuiteSummary,
)
from config.constants import DEFAULT_MAX_ENUM, REPORT_TABLE_LIMIT
from core.abelian import AbelianTarget, hom_count_from_factors
from core.groups import (
    FiniteGroup,
    abelianization,
    commutator_subgroup,
    involutions,
    squares,
    standard_generators,
)
from core.jensen_solver import GroupMap, SolutionSpace, is_homomorphism, is_solution, EquationKind
from core.sr2 import Sr2Report, default_involutions
from core.verify import CheckResult, CheckStatus, map_table
from utils.formatting import format_factors, format_residues, render_maps, render_table

logger = logging.getLogger(__name__)


# ==================== BUILDERS ====================

def group_info(group: FiniteGroup) -> GroupInfoReport:
    ab = abelianization(group)
    elements = None
    if group.size <= REPORT_TABLE_LIMIT:
        elements = [ElementInfo(index=g, name=group.name(g), order=group.element_order(g)) for g in range(group.size)]
    return GroupInfoReport(
        group=group.spec,
        family=group.family,
        order=group.size,
        abelianization=list(ab.factors),
        derived_order=len(commutator_subgroup(group)),
        generators=[group.name(g) for g in standard_generators(group)],
        involution_count=len(involutions(group)),
        default_involutions=[group.name(g) for g in default_involutions(group)],
        squares=len(squares(group)),
        elements=elements,
    )


def sr2_report(report: Sr2Report) -> Sr2ReportSchema:
    G = report.group
    return Sr2ReportSchema(
        group=G.spec,
        involutions=[G.name(g) for g in report.involutions],
        generates=report.generates,
        verdict=report.verdict,
        pairs=[
            Sr2Pair(
                a=G.name(p.a),
                b=G.name(p.b),
                product=G.name(p.product),
                witness=G.name(p.witness) if p.witness is not None else None,
            )
            for p in report.pair_results
        ],
    )


def solution_space_report(space: SolutionSpace, enumerate_members: bool = False,
                          max_enum: int = DEFAULT_MAX_ENUM) -> SolutionSpaceReport:
    generators = space.generators()
    per_factor = []
    offset = 0
    for kernel in space.per_factor:
        count = len(kernel.basis)
        per_factor.append(KernelFactor(
            modulus=kernel.modulus,
            orders=list(kernel.orders),
            cardinality=kernel.cardinality,
            generators=[map_table(f) for f in generators[offset:offset + count]],
        ))
        offset += count

    solutions = None
    if enumerate_members and space.cardinality <= min(REPORT_TABLE_LIMIT, max_enum):
        solutions = [map_table(f) for f in space.members(max_enum)]
    return SolutionSpaceReport(
        group=space.group.spec,
        target=space.target.spec,
        equation=space.kind.value,
        cardinality=space.cardinality,
        unnormalized_cardinality=space.unnormalized_cardinality,
        per_factor=per_factor,
        solutions=solutions,
    )


def hom_report(group: FiniteGroup, target: AbelianTarget, homs: List[GroupMap]) -> HomReport:
    ab = abelianization(group)
    return HomReport(
        group=group.spec,
        target=target.spec,
        abelianization=list(ab.factors),
        count=len(homs),
        expected_count=hom_count_from_factors(ab.factors, target),
        maps=[map_table(f) for f in homs] if len(homs) <= REPORT_TABLE_LIMIT else None,
    )


def counterexample_report(k: int, f: GroupMap, u, c) -> CounterexampleReport:
    return CounterexampleReport(
        group=f.group.spec,
        target=f.target.spec,
        k=k,
        u=list(u),
        c=list(c),
        solves_j1=is_solution(f, EquationKind.J1),
        is_homomorphism=is_homomorphism(f),
        map=map_table(f),
    )


def check_result_schema(result: CheckResult) -> CheckResultSchema:
    return CheckResultSchema(
        check_id=result.check_id,
        instance=InstanceSchema(**result.instance),
        status=result.status.value,
        counterexample=result.counterexample,
        details=result.details,
    )


def suite_report(results: List[CheckResult]) -> SuiteReport:
    statuses = [r.status for r in results]
    return SuiteReport(
        summary=SuiteSummary(
            total=len(results),
            passed=statuses.count(CheckStatus.PASS),
            failed=statuses.count(CheckStatus.FAIL),
            skipped=statuses.count(CheckStatus.SKIP),
        ),
        results=[check_result_schema(r) for r in results],
    )


def suite_results(results: List[CheckResult]) -> SuiteResults:
    return SuiteResults([check_result_schema(r) for r in results])


# ==================== TEXT ====================

def render_group_info(info: GroupInfoReport) -> str:
    lines = [
        f"group: {info.group} ({info.family}, order {info.order})",
        f"abelianization: {format_factors(info.abelianization)}",
        f"commutator subgroup order: {info.derived_order}",
        f"generators: {', '.join(info.generators) or '-'}",
        f"involutions: {info.involution_count}",
        f"default involution set: {', '.join(info.default_involutions) or '-'}",
        f"squares: {info.squares}",
    ]
    if info.elements is not None:
        lines.append("")
        lines.extend(render_table(["index", "name", "order"], [(e.index, e.name, e.order) for e in info.elements]))
    return "\n".join(lines) + "\n"


def render_sr2(report: Sr2ReportSchema) -> str:
    lines = [
        f"group: {report.group}",
        f"involutions: {len(report.involutions)}",
        f"generates: {'yes' if report.generates else 'no'}",
        f"verdict: {'SR2 holds' if report.verdict else 'SR2 fails'}",
        "",
    ]
    rows = [(p.a, p.b, p.product, p.witness if p.witness is not None else "none") for p in report.pairs]
    lines.extend(render_table(["a", "b", "ab", "root"], rows))
    return "\n".join(lines) + "\n"


def render_solution_space(report: SolutionSpaceReport) -> str:
    lines = [
        f"group: {report.group}",
        f"target: {report.target}",
        f"equation: {report.equation}",
        f"cardinality: {report.cardinality}",
        f"unnormalized cardinality: {report.unnormalized_cardinality}",
    ]
    for factor in report.per_factor:
        orders = ", ".join(str(o) for o in factor.orders) or "-"
        lines.append(f"  Z/{factor.modulus}: {factor.cardinality} (generator orders {orders})")
    if report.solutions is not None:
        lines.append("")
        lines.extend(render_maps(report.solutions))
    return "\n".join(lines) + "\n"


def render_homs(report: HomReport) -> str:
    lines = [
        f"group: {report.group}",
        f"target: {report.target}",
        f"abelianization: {format_factors(report.abelianization)}",
        f"homomorphisms: {report.count} (expected {report.expected_count})",
    ]
    if report.maps:
        lines.append("")
        lines.extend(render_maps(report.maps))
    return "\n".join(lines) + "\n"


def render_counterexample(report: CounterexampleReport) -> str:
    lines = [
        f"group: {report.group}",
        f"target: {report.target}",
        f"u = {format_residues(report.u)}, c = {format_residues(report.c)}",
        f"solves J1: {'yes' if report.solves_j1 else 'no'}",
        f"homomorphism: {'yes' if report.is_homomorphism else 'no'}",
        "",
    ]
    lines.extend(render_maps([report.map]))
    return "\n".join(lines) + "\n"


def render_suite(report: SuiteReport) -> str:
    s = report.summary
    rows = []
    for r in report.results:
        target = r.instance.target or "-"
        params = ",".join(f"{k}={v}" for k, v in r.instance.params.items())
        rows.append((r.status, r.check_id, r.instance.group, target, params))
    lines = render_table(["status", "check", "group", "target", "params"], rows)
    for r in report.results:
        if r.status == "fail":
            lines.append(f"FAIL {r.check_id} on {r.instance.group} -> {r.instance.target}: {r.counterexample}")
    lines.append(f"{s.total} checks: {s.passed} passed, {s.failed} failed, {s.skipped} skipped")
    return "\n".join(lines) + "\n"
