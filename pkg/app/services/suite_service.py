"""
Suite Service - runs every check over the configured instance grid
"""

import logging
from typing import Iterator, List, Tuple

from app.schemas import SuiteConfig
from config.constants import DEFAULT_MAX_ENUM, MAX_GROUP_ORDER
from core.abelian import AbelianTarget
from core.groups import FiniteGroup, build_dihedral, build_symmetric
from core.verify import CheckResult, check_dihedral_dichotomy, run_instance_checks
from utils.spec_parser import parse_group_spec, parse_target_spec

logger = logging.getLogger(__name__)


def instance_grid(config: SuiteConfig, max_order: int = MAX_GROUP_ORDER) -> Iterator[Tuple[FiniteGroup, List[AbelianTarget]]]:
    """Groups in grid order (symmetric, dihedral, extra instances), each built once"""
    targets = [parse_target_spec(t) for t in config.targets]
    if targets:
        for n in config.symmetric_degrees:
            yield build_symmetric(n, max_order), targets
        for m in config.dihedral_orders:
            yield build_dihedral(m), targets
    for extra in config.extra_instances:
        yield parse_group_spec(extra.group, max_order), [parse_target_spec(t) for t in extra.targets]


def run_paper_suite(config: SuiteConfig, max_enum: int = DEFAULT_MAX_ENUM,
                    max_order: int = MAX_GROUP_ORDER) -> List[CheckResult]:
    """
    All instance checks, then the dihedral dichotomy per target. Results come
    back in grid order; an empty grid gives an empty list.
    """
    results: List[CheckResult] = []
    for group, targets in instance_grid(config, max_order):
        for target in targets:
            results.extend(run_instance_checks(group, target, max_enum=max_enum))

    if config.dichotomy and config.dihedral_orders:
        for spec in config.targets:
            results.extend(check_dihedral_dichotomy(config.dihedral_orders, parse_target_spec(spec), max_enum))

    failed = sum(1 for r in results if r.status.value == "fail")
    logger.info("Suite finished: %d checks, %d failed", len(results), failed)
    return results
