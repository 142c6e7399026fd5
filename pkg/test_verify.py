"""
Tests for the identity checks, the dihedral counterexample and the suite runner
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from app.schemas import ProductInstance, SuiteConfig
from app.services.suite_service import instance_grid, run_paper_suite
from core.abelian import AbelianTarget
from core.errors import InvalidInputError
from core.groups import (
    InvolutionSet,
    build_cyclic,
    build_dihedral,
    build_symmetric,
    direct_product,
    involutions,
)
from core.jensen_solver import EquationKind, GroupMap, hom_space, is_homomorphism, is_solution, solve
from core.sr2 import check_sr2, default_involutions
from core.verify import (
    CheckStatus,
    check_absorption,
    check_basic_identities,
    check_closed_form_witnesses,
    check_dihedral_dichotomy,
    check_factorisation,
    check_increment_constancy,
    check_main_theorem,
    check_parity_form,
    check_reordering,
    check_switching,
    check_two_involution_torsion,
    check_witnesses,
    check_word_torsion,
    construct_counterexample,
    find_walk_violation,
    parity_maps,
    run_instance_checks,
)

Z2 = AbelianTarget((2,))
Z3 = AbelianTarget((3,))
Z4 = AbelianTarget((4,))
Z2x2 = AbelianTarget((2, 2))


@pytest.fixture(scope="module")
def s3_checks():
    s3 = build_symmetric(3)
    return run_instance_checks(s3, Z2)


def _by_id(results):
    return {r.check_id: r for r in results}


def _non_solution():
    c3 = build_cyclic(3)
    return GroupMap.from_function(c3, Z3, lambda g: (1 if g else 0,))


def test_basic_identities_hold_for_solutions():
    d4 = build_dihedral(4)
    for f in solve(d4, Z4, EquationKind.J1).members():
        assert check_basic_identities(f).passed


def test_basic_identities_counterexample():
    result = check_basic_identities(_non_solution())
    assert result.status == CheckStatus.FAIL
    assert result.counterexample["identity"] == "f(x^-1) = -f(x)"
    assert result.counterexample["x"] == 1
    assert result.counterexample["x_name"] == "1"


def test_switching_identities():
    d4 = build_dihedral(4)
    for f in solve(d4, Z2x2, EquationKind.J1).members():
        assert check_switching(f).passed
    failed = check_switching(_non_solution())
    assert failed.status == CheckStatus.FAIL
    assert {"x", "y", "z", "map"} <= set(failed.counterexample)


def test_reordering_is_skipped_without_involution_generation():
    c3 = build_cyclic(3)
    result = check_reordering(GroupMap.zero(c3, Z3))
    assert result.status == CheckStatus.SKIP
    assert "reason" in result.details


def test_involution_identities_hold_for_solutions():
    d4 = build_dihedral(4)
    reflections = default_involutions(d4)
    for f in solve(d4, Z4, EquationKind.J1).members():
        assert check_two_involution_torsion(f, reflections).passed
        assert check_word_torsion(f, reflections).details["span"] == 8
        assert check_absorption(f).passed


def test_involution_identities_counterexamples():
    d4 = build_dihedral(4)
    reflections = default_involutions(d4)
    s = d4.index_of("s")
    f = GroupMap.from_function(d4, Z4, lambda g: (1 if g == s else 0,))
    torsion = check_two_involution_torsion(f, reflections)
    assert torsion.status == CheckStatus.FAIL
    assert torsion.counterexample["identity"] == "2f(a) = 0"
    assert torsion.counterexample["a_name"] == "s"
    word = check_word_torsion(f, reflections)
    assert word.status == CheckStatus.FAIL
    assert word.counterexample["g"] == s


def test_absorption_counterexample():
    d4 = build_dihedral(4)
    r = d4.index_of("r")
    f = GroupMap.from_function(d4, Z3, lambda g: (1 if g == r else 0,))
    result = check_absorption(f)
    assert result.status == CheckStatus.FAIL
    assert (result.counterexample["Z"], result.counterexample["t"]) == (r, 0)
    assert result.counterexample["Z_name"] == "r"
    assert check_absorption(GroupMap.zero(build_cyclic(3), Z3)).status == CheckStatus.SKIP


def test_increment_constancy():
    s3 = build_symmetric(3)
    assert check_increment_constancy(s3, Z2, default_involutions(s3)).passed
    d4 = build_dihedral(4)
    assert check_increment_constancy(d4, Z2, default_involutions(d4)).status == CheckStatus.SKIP


def test_factorisation_through_abelianization():
    s4 = build_symmetric(4)
    result = check_factorisation(s4, Z4, default_involutions(s4))
    assert result.passed
    assert result.details["derived_order"] == 12
    d4 = build_dihedral(4)
    assert check_factorisation(d4, Z2, default_involutions(d4)).status == CheckStatus.SKIP


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_counterexample_solves_j1_but_is_not_additive(k):
    f = construct_counterexample(k, Z2, (1,), (0,))
    assert f.group.size == 4 * k
    assert is_solution(f, EquationKind.J1)
    assert not is_homomorphism(f)


@pytest.mark.parametrize("target, u, c", [
    (Z4, (2,), (2,)),
    (Z2x2, (1, 0), (0, 1)),
    (Z2x2, (1, 1), (1, 1)),
])
def test_counterexample_other_targets(target, u, c):
    f = construct_counterexample(2, target, u, c)
    assert is_solution(f, EquationKind.J1)
    assert not is_homomorphism(f)


def test_counterexample_with_zero_u_is_a_homomorphism():
    f = construct_counterexample(3, Z2, (0,), (1,))
    assert is_solution(f, EquationKind.J1)
    assert is_homomorphism(f)


def test_counterexample_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        construct_counterexample(0, Z2, (1,), (0,))
    with pytest.raises(InvalidInputError):
        construct_counterexample(2, Z4, (1,), (0,))
    with pytest.raises(InvalidInputError):
        construct_counterexample(2, Z2, (2,), (0,))


@pytest.mark.parametrize("target", [Z2, Z3, Z4, Z2x2])
def test_dihedral_dichotomy(target):
    results = check_dihedral_dichotomy(range(1, 9), target)
    assert len(results) == 8
    assert all(r.passed for r in results), [r.counterexample for r in results if not r.passed]
    assert [r.details["verdict"] for r in results] == [m % 2 == 1 for m in range(1, 9)]


def test_dichotomy_names_the_failing_pair():
    (result,) = check_dihedral_dichotomy([4], Z2)
    pair = result.details["failing_pair"]
    assert (pair["a_name"], pair["b_name"], pair["product_name"]) == ("s", "s·r", "r")
    assert result.details["cardinalities"] == [8, 4]
    assert "certificate" in result.details
    (odd_target,) = check_dihedral_dichotomy([4], Z3)
    assert odd_target.details["cardinalities"] == [1, 1]


def test_dichotomy_rejects_large_orders():
    with pytest.raises(InvalidInputError):
        check_dihedral_dichotomy([33], Z2)


def test_main_theorem():
    d3 = build_dihedral(3)
    result = check_main_theorem(d3, Z2, default_involutions(d3))
    assert result.passed
    assert result.details["cardinality"] == 2
    d4 = build_dihedral(4)
    assert check_main_theorem(d4, Z2, default_involutions(d4)).status == CheckStatus.SKIP


def test_parity_maps():
    s3 = build_symmetric(3)
    maps = parity_maps(s3, Z2, default_involutions(s3))
    assert len(maps) == 2
    assert {f.key for f in maps} == {f.key for f in hom_space(s3, Z2)}
    g = direct_product(build_dihedral(3), build_dihedral(3))
    assert parity_maps(g, Z2, involutions(g)) is None


def test_parity_form_under_sr2():
    s4 = build_symmetric(4)
    assert check_parity_form(s4, Z4, default_involutions(s4)).passed
    d5 = build_dihedral(5)
    result = check_parity_form(d5, Z2x2, default_involutions(d5))
    assert result.passed
    assert result.details["bipartite"] is True
    assert result.details["cardinality"] == 4


def test_walk_violation():
    d4 = build_dihedral(4)
    reflections = default_involutions(d4).members
    for f in hom_space(d4, Z2x2):
        assert find_walk_violation(f, reflections) is None
    s = d4.index_of("s")
    f = GroupMap.from_function(d4, Z4, lambda g: (1 if g == s else 0,))
    assert find_walk_violation(f, reflections) == (d4.index_of("r"), s)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("target", [Z2, Z4, Z2x2, Z3], ids=["Z2", "Z4", "Z2x2", "Z3"])
def test_symmetric_groups_main_theorem(n, target):
    g = build_symmetric(n)
    reflections = default_involutions(g)
    s1 = solve(g, target, EquationKind.J1)
    assert s1.cardinality == len(target.two_torsion())
    theorem = check_main_theorem(g, target, reflections)
    assert theorem.passed
    assert theorem.details["cardinality"] == s1.cardinality
    assert check_parity_form(g, target, reflections).passed
    for f in s1.members():
        assert check_basic_identities(f).passed
        assert check_switching(f).passed
        assert check_two_involution_torsion(f, reflections).passed
        assert check_word_torsion(f, reflections).passed
        assert check_reordering(f).passed
        assert check_absorption(f).passed


@pytest.mark.parametrize("m, target, count", [
    (7, AbelianTarget((2, 4)), 4),
    (3, AbelianTarget((6,)), 2),
])
def test_main_theorem_on_odd_dihedral(m, target, count):
    g = build_dihedral(m)
    result = check_main_theorem(g, target, default_involutions(g))
    assert result.passed
    assert result.details["cardinality"] == count


def test_word_torsion_values_in_z6():
    d3 = build_dihedral(3)
    z6 = AbelianTarget((6,))
    reflections = default_involutions(d3)
    values = set()
    for f in solve(d3, z6, EquationKind.J1).members():
        assert check_word_torsion(f, reflections).passed
        values.update(f.value(g) for g in range(d3.size))
    assert values == {(0,), (3,)}


def test_witness_checks():
    d4 = build_dihedral(4)
    report = check_sr2(d4, default_involutions(d4))
    result = check_witnesses(report)
    assert result.passed
    assert result.details["verdict"] is False
    assert result.details["failures"] == len(report.failures)
    s4 = build_symmetric(4)
    assert check_closed_form_witnesses(s4, check_sr2(s4, default_involutions(s4))).passed
    d5 = build_dihedral(5)
    assert check_closed_form_witnesses(d5, check_sr2(d5, default_involutions(d5))).passed
    assert check_closed_form_witnesses(d4, report) is None


def test_instance_checks_on_s3(s3_checks):
    assert len(s3_checks) >= 7
    assert not [r.check_id for r in s3_checks if r.status == CheckStatus.FAIL]
    by_id = _by_id(s3_checks)
    assert by_id["main.theorem"].passed
    assert by_id["main.hom_count"].passed
    assert by_id["solver.oracle.J1"].passed
    assert by_id["sr2.closed_form"].passed
    assert by_id["hom.methods"].details["cardinality"] == 2


def test_instance_checks_are_deterministic(s3_checks):
    again = run_instance_checks(build_symmetric(3), Z2)
    assert [(r.check_id, r.status) for r in again] == [(r.check_id, r.status) for r in s3_checks]


def test_instance_checks_on_d4_skip_sr2_consequences():
    results = run_instance_checks(build_dihedral(4), Z2)
    by_id = _by_id(results)
    assert not [r.check_id for r in results if r.status == CheckStatus.FAIL]
    assert by_id["main.theorem"].status == CheckStatus.SKIP
    assert by_id["main.parity_form"].status == CheckStatus.SKIP
    assert by_id["identities.reordering"].passed


def test_oracle_skipped_above_enumeration_limit():
    results = run_instance_checks(build_symmetric(3), Z2, max_enum=16)
    assert _by_id(results)["solver.oracle.J1"].status == CheckStatus.SKIP


def test_custom_involution_set():
    d4 = build_dihedral(4)
    only_s = InvolutionSet((d4.index_of("s"),))
    results = run_instance_checks(d4, Z2, only_s)
    assert _by_id(results)["sr2.witnesses"].details["generates"] is False


def test_empty_suite():
    assert run_paper_suite(SuiteConfig.empty()) == []


def test_restricted_suite():
    config = SuiteConfig(
        symmetric_degrees=[3],
        dihedral_orders=[3, 4],
        targets=["Z:2"],
        extra_instances=[ProductInstance(group="C:4", targets=["Z:2x2"])],
        dichotomy=True,
    )
    results = run_paper_suite(config)
    assert not [r.check_id for r in results if r.status == CheckStatus.FAIL]
    groups = [r.instance["group"] for r in results]
    assert groups[0] == "S:3"
    assert "C:4" in groups
    dichotomy = [r for r in results if r.check_id == "dihedral.dichotomy"]
    assert [r.instance["params"]["m"] for r in dichotomy] == [3, 4]


def test_default_grid_layout():
    grid = list(instance_grid(SuiteConfig()))
    specs = [group.spec for group, _ in grid]
    assert specs[:4] == ["S:2", "S:3", "S:4", "S:5"]
    assert specs[4:16] == [f"D:{m}" for m in range(1, 13)]
    assert specs[-1] == "prod(D:3,D:3)"
    assert [t.spec for t in grid[0][1]] == ["Z:2", "Z:4", "Z:2x2", "Z:3"]


@pytest.mark.slow
def test_default_suite_passes():
    results = run_paper_suite(SuiteConfig())
    assert results
    assert not [(r.check_id, r.instance["group"]) for r in results if r.status == CheckStatus.FAIL]
    checked = {r.instance["group"] for r in results}
    assert {"S:5", "D:12", "prod(D:3,D:3)"} <= checked
