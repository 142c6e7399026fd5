"""
Tests for the exact J1/J2 solver, the brute-force oracle and Hom enumeration
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.abelian import AbelianTarget
from core.errors import CapExceededError, InvalidInputError
from core.groups import build_cyclic, build_dihedral, build_symmetric, direct_product
from core.jensen_solver import (
    EquationKind,
    GroupMap,
    brute_force_solutions,
    build_system,
    find_violation,
    hom_space,
    is_homomorphism,
    is_solution,
    solve,
    spaces_equal,
)

Z2 = AbelianTarget((2,))
Z3 = AbelianTarget((3,))
Z4 = AbelianTarget((4,))
Z2x2 = AbelianTarget((2, 2))


def _keys(maps):
    return {f.key for f in maps}


def test_build_system_on_c2():
    c2 = build_cyclic(2)
    assert build_system(c2, EquationKind.J1).tolist() == [[2], [-2]]
    assert build_system(c2, EquationKind.J12).tolist() == [[2], [-2]]


def test_build_system_on_trivial_group():
    system = build_system(build_symmetric(1), EquationKind.J1)
    assert (system.rows, system.cols) == (0, 0)


def test_build_system_rows_are_distinct_and_nonzero():
    system = np.array(build_system(build_dihedral(4), EquationKind.J2).tolist())
    assert system.shape[1] == 7
    assert system.any(axis=1).all()
    assert len({tuple(r) for r in system}) == len(system)


def test_build_system_cap():
    with pytest.raises(CapExceededError):
        build_system(build_symmetric(4), EquationKind.J1, max_entries=1000)


@pytest.mark.parametrize("group, target, kind, cardinality", [
    (build_symmetric(3), Z2, EquationKind.J1, 2),
    (build_symmetric(4), Z4, EquationKind.J1, 2),
    (build_dihedral(4), Z2, EquationKind.J1, 8),
    (build_dihedral(4), Z3, EquationKind.J1, 1),
    (build_cyclic(3), Z3, EquationKind.J1, 3),
    (build_cyclic(2), Z4, EquationKind.J1, 2),
    (build_symmetric(1), Z2, EquationKind.J1, 1),
])
def test_known_cardinalities(group, target, kind, cardinality):
    assert solve(group, target, kind).cardinality == cardinality


def test_unnormalized_cardinality():
    space = solve(build_dihedral(4), Z2, EquationKind.J1)
    assert space.unnormalized_cardinality == 2 * 8


def test_members_are_distinct_solutions():
    space = solve(build_dihedral(4), Z2x2, EquationKind.J1)
    members = list(space.members())
    assert len(members) == space.cardinality
    assert len(_keys(members)) == len(members)
    assert all(space.contains(f) for f in members)
    assert all(is_solution(g, EquationKind.J1) for g in space.generators())


def test_members_cap():
    space = solve(build_dihedral(4), Z2, EquationKind.J1)
    with pytest.raises(CapExceededError):
        list(space.members(max_enum=7))


ORACLE_GRID = [
    (build_symmetric(2), Z2),
    (build_symmetric(2), Z4),
    (build_symmetric(3), Z2),
    (build_symmetric(3), Z3),
    (build_symmetric(3), Z4),
    (build_dihedral(1), Z4),
    (build_dihedral(2), Z2x2),
    (build_dihedral(3), Z2),
    (build_dihedral(3), Z3),
    (build_dihedral(4), Z2),
    (build_dihedral(4), Z4),
    (build_dihedral(4), Z2x2),
    (build_cyclic(2), Z2),
    (build_cyclic(3), Z3),
    (build_cyclic(4), Z4),
    (build_cyclic(4), Z2x2),
]


@pytest.mark.parametrize("group, target", ORACLE_GRID)
@pytest.mark.parametrize("kind", list(EquationKind))
def test_solver_matches_brute_force(group, target, kind):
    space = solve(group, target, kind)
    oracle = brute_force_solutions(group, target, kind)
    assert space.cardinality == len(oracle)
    assert _keys(space.members()) == _keys(oracle)


def test_brute_force_order_and_cap():
    found = brute_force_solutions(build_dihedral(4), Z2, EquationKind.J1)
    keys = [f.key for f in found]
    assert keys == sorted(keys)
    with pytest.raises(CapExceededError):
        brute_force_solutions(build_dihedral(4), Z4, EquationKind.J1, max_enum=1000)


def test_brute_force_on_trivial_group():
    found = brute_force_solutions(build_symmetric(1), Z3, EquationKind.J2)
    assert [f.key for f in found] == [(0,)]


@pytest.mark.parametrize("group, target, count", [
    (build_symmetric(3), Z2, 2),
    (build_symmetric(4), Z2, 2),
    (build_symmetric(4), Z4, 2),
    (build_dihedral(4), Z2, 4),
    (build_dihedral(4), Z2x2, 16),
    (build_dihedral(3), Z3, 1),
    (build_cyclic(6), Z4, 2),
    (build_cyclic(4), Z2x2, 4),
    (direct_product(build_dihedral(3), build_dihedral(3)), Z2, 4),
])
def test_hom_counts(group, target, count):
    homs = hom_space(group, target)
    assert len(homs) == count
    assert all(is_homomorphism(f) for f in homs)
    assert [f.key for f in homs] == sorted(f.key for f in homs)


def test_homs_solve_both_equations():
    for group, target in ORACLE_GRID:
        for f in hom_space(group, target):
            assert is_solution(f, EquationKind.J1)
            assert is_solution(f, EquationKind.J2)


def test_j12_is_the_intersection():
    group = build_dihedral(4)
    both = _keys(solve(group, Z2x2, EquationKind.J12).members())
    j1 = _keys(solve(group, Z2x2, EquationKind.J1).members())
    j2 = _keys(solve(group, Z2x2, EquationKind.J2).members())
    assert both == j1 & j2


def test_spaces_equal_when_sr2_holds():
    s3 = build_symmetric(3)
    result = spaces_equal(solve(s3, Z2, EquationKind.J1), hom_space(s3, Z2))
    assert result.equal
    assert result.certificate is None
    assert (result.left_cardinality, result.right_cardinality) == (2, 2)


def test_spaces_equal_certificate_on_d4():
    d4 = build_dihedral(4)
    result = spaces_equal(solve(d4, Z2, EquationKind.J1), hom_space(d4, Z2))
    assert not result
    assert (result.left_cardinality, result.right_cardinality) == (8, 4)
    assert result.certificate_side == "left"
    assert is_solution(result.certificate, EquationKind.J1)
    assert not is_homomorphism(result.certificate)


def test_spaces_equal_same_size_different_members():
    c3 = build_cyclic(3)
    homs = hom_space(c3, Z3)
    others = [
        GroupMap.zero(c3, Z3),
        GroupMap.from_function(c3, Z3, lambda g: (g,)),
        GroupMap.from_function(c3, Z3, lambda g: (1 if g else 0,)),
    ]
    result = spaces_equal(homs, others)
    assert not result.equal
    assert result.certificate.key == (0, 2, 1)
    assert result.certificate_side == "left"


def test_spaces_equal_cap():
    d4 = build_dihedral(4)
    with pytest.raises(CapExceededError):
        spaces_equal(solve(d4, Z2, EquationKind.J1), hom_space(d4, Z2), max_enum=1)


def test_constant_shift_of_a_solution():
    d4 = build_dihedral(4)
    for f in solve(d4, Z4, EquationKind.J1).members():
        shifted = (f.values + 1) % 4
        assert find_violation(d4, Z4, shifted, EquationKind.J1) is None


def test_map_validation():
    c2 = build_cyclic(2)
    with pytest.raises(InvalidInputError):
        GroupMap(c2, Z4, [[1], [0]])
    with pytest.raises(InvalidInputError):
        GroupMap(c2, Z4, [[0], [4]])
    f = GroupMap(c2, Z4, [[0], [1]])
    assert f.as_table() == {"0": (0,), "1": (1,)}
    assert f.value(1) == (1,)


def test_find_violation_first_pair():
    c2 = build_cyclic(2)
    assert find_violation(c2, Z4, [[0], [1]], EquationKind.J1) == (0, 1)
    assert find_violation(c2, Z4, [[0], [2]], EquationKind.J1) is None
    assert not is_solution(GroupMap(c2, Z4, [[0], [1]]), EquationKind.J1)


def test_contains_rejects_other_group():
    space = solve(build_dihedral(4), Z2, EquationKind.J1)
    assert not space.contains(GroupMap.zero(build_dihedral(3), Z2))
    assert not space.contains(GroupMap.zero(build_dihedral(4), Z4))
    assert space.contains(GroupMap.zero(build_dihedral(4), Z2))
