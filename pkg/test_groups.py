"""
Tests for Cayley-table groups: constructors, naming, structure
"""

import os
import random
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.errors import CapExceededError, InvalidInputError
from core.groups import (
    FiniteGroup,
    abelianization,
    build_cyclic,
    build_dihedral,
    build_symmetric,
    commutator_subgroup,
    cycle_notation,
    direct_product,
    involutions,
    is_normal,
    make_involution_set,
    permutation_index,
    quotient,
    same_group,
    squares,
    standard_generators,
    subgroup_closure,
    word_lengths,
)


@pytest.fixture(scope="module")
def s3():
    return build_symmetric(3)


@pytest.fixture(scope="module")
def d4():
    return build_dihedral(4)


def test_symmetric_composition_is_right_to_left(s3):
    product = s3.multiply(s3.index_of("(1 2)"), s3.index_of("(2 3)"))
    assert s3.name(product) == "(1 2 3)"


def test_symmetric_names_and_order(s3):
    assert s3.size == 6
    assert s3.name(0) == "e"
    assert sorted(s3.names) == sorted(["e", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"])


def test_dihedral_layout(d4):
    assert list(d4.names) == ["e", "r", "r^2", "r^3", "s", "s·r", "s·r^2", "s·r^3"]
    r, s = d4.index_of("r"), d4.index_of("s")
    # r s = s r^-1
    assert d4.multiply(r, s) == d4.index_of("s·r^3")
    assert d4.multiply(s, r) == d4.index_of("s·r")
    assert list(d4.orders) == [1, 4, 2, 4, 2, 2, 2, 2]


def test_name_lookup_is_lenient(d4):
    assert d4.index_of("s*r") == 5
    assert d4.index_of(" s · r^2 ") == 6
    with pytest.raises(InvalidInputError):
        d4.index_of("t")


def test_cyclic_group():
    c5 = build_cyclic(5)
    assert c5.multiply(3, 4) == 2
    assert c5.inverse(2) == 3
    assert c5.power(2, -1) == 3


def test_inverses_and_squares(d4):
    for g in range(d4.size):
        assert d4.multiply(g, d4.inverse(g)) == 0
        assert d4.square_map[g] == d4.multiply(g, g)
    assert squares(d4) == frozenset({0, 2})


@pytest.mark.parametrize("n, order", [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)])
def test_symmetric_orders(n, order):
    assert build_symmetric(n).size == order


def test_caps():
    with pytest.raises(CapExceededError):
        build_symmetric(7)
    with pytest.raises(InvalidInputError):
        build_symmetric(9)
    with pytest.raises(InvalidInputError):
        build_dihedral(0)
    with pytest.raises(InvalidInputError):
        build_cyclic(129)
    with pytest.raises(CapExceededError):
        direct_product(build_symmetric(5), build_symmetric(5), max_order=1000)


def test_rejects_bad_tables():
    with pytest.raises(InvalidInputError):
        FiniteGroup(np.array([[0, 1], [1, 1]]), ["e", "a"], "bad")
    with pytest.raises(InvalidInputError):
        FiniteGroup(np.array([[1, 0], [0, 1]]), ["e", "a"], "bad")
    with pytest.raises(InvalidInputError):
        FiniteGroup(np.array([[0, 1], [1, 0]]), ["e", "e"], "bad")


def test_rejects_non_associative_loop():
    # Latin square with identity 0 and two-sided inverses, but (1*1)*2 != 1*(1*2)
    table = np.array([
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ])
    with pytest.raises(InvalidInputError):
        FiniteGroup(table, [str(i) for i in range(5)], "loop")


def test_direct_product_indexing():
    d3 = build_dihedral(3)
    g = direct_product(d3, d3)
    assert g.size == 36
    assert g.name(0) == "(e,e)"
    assert g.index_of("(s,r)") == 3 * 6 + 1
    a, b = g.index_of("(r,s)"), g.index_of("(s,r)")
    assert g.name(g.multiply(a, b)) == "(s·r^2,s·r)"


def test_table_is_read_only(d4):
    with pytest.raises(ValueError):
        d4.table[0, 0] = 1


@pytest.mark.parametrize("group, factors", [
    (build_symmetric(1), ()),
    (build_symmetric(3), (2,)),
    (build_symmetric(4), (2,)),
    (build_dihedral(3), (2,)),
    (build_dihedral(4), (2, 2)),
    (build_dihedral(6), (2, 2)),
    (build_cyclic(6), (6,)),
    (direct_product(build_cyclic(2), build_cyclic(4)), (2, 4)),
    (direct_product(build_cyclic(2), build_cyclic(3)), (6,)),
    (direct_product(build_dihedral(3), build_dihedral(3)), (2, 2)),
])
def test_abelianization_factors(group, factors):
    ab = abelianization(group)
    assert ab.factors == factors
    moduli = np.array(factors, dtype=np.int64)
    t = group.table
    # the projection is a homomorphism onto the invariant factors
    assert ((ab.projection[t] - ab.projection[:, None, :] - ab.projection[None, :, :]) % moduli == 0).all()
    assert len({ab.project(g) for g in range(group.size)}) == int(np.prod(moduli))


def test_commutator_subgroups():
    assert len(commutator_subgroup(build_symmetric(3))) == 3
    assert len(commutator_subgroup(build_symmetric(4))) == 12
    d4 = build_dihedral(4)
    derived = commutator_subgroup(d4)
    assert derived == frozenset({0, 2})
    assert is_normal(d4, derived)


def test_quotient(d4):
    q, projection = quotient(d4, frozenset({0, 2}))
    assert q.size == 4
    assert projection[0] == 0
    for a in range(d4.size):
        for b in range(d4.size):
            assert projection[d4.multiply(a, b)] == q.multiply(projection[a], projection[b])


def test_quotient_needs_normal_subgroup(s3):
    with pytest.raises(InvalidInputError):
        quotient(s3, frozenset({0, s3.index_of("(1 2)")}))
    with pytest.raises(InvalidInputError):
        quotient(s3, frozenset({0, s3.index_of("(1 2 3)")}))


def test_involutions_and_validation():
    s4 = build_symmetric(4)
    assert len(involutions(s4)) == 9
    d4 = build_dihedral(4)
    with pytest.raises(InvalidInputError):
        make_involution_set(d4, [d4.index_of("r")])
    assert make_involution_set(d4, [7, 4, 4]).members == (4, 7)


def test_subgroup_closure(d4):
    assert subgroup_closure(d4, []) == frozenset({0})
    assert subgroup_closure(d4, [1]) == frozenset({0, 1, 2, 3})
    assert len(subgroup_closure(d4, [4, 5])) == 8


def test_standard_generators():
    s4 = build_symmetric(4)
    assert [s4.name(g) for g in standard_generators(s4)] == ["(1 2)", "(2 3)", "(3 4)"]
    assert standard_generators(build_dihedral(4)) == (1, 4)
    assert standard_generators(build_dihedral(1)) == (1,)
    assert standard_generators(build_cyclic(1)) == ()
    g = direct_product(build_dihedral(3), build_cyclic(2))
    assert len(subgroup_closure(g, standard_generators(g))) == g.size


def test_word_lengths_rebuild_elements(s3):
    transpositions = [s3.index_of(n) for n in ("(1 2)", "(1 3)", "(2 3)")]
    tree = word_lengths(s3, transpositions)
    assert tree.lengths[0] == 0
    assert tree.lengths[s3.index_of("(1 2)")] == 1
    assert tree.lengths[s3.index_of("(1 2 3)")] == 2
    for g in range(s3.size):
        product = 0
        for letter in tree.word(g):
            product = s3.multiply(product, letter)
        assert product == g


def test_word_lengths_outside_span(d4):
    tree = word_lengths(d4, [1])
    assert tree.word(4) is None
    assert tree.lengths[4] == -1


def test_permutation_helpers():
    assert cycle_notation([1, 0, 2]) == "(1 2)"
    assert cycle_notation([0, 1, 2]) == "e"
    assert cycle_notation([1, 0, 3, 2]) == "(1 2)(3 4)"
    assert permutation_index(3, [0, 1, 2]) == 0
    with pytest.raises(InvalidInputError):
        permutation_index(3, [0, 0, 1])


def test_same_group_compares_tables():
    assert same_group(build_dihedral(4), build_dihedral(4))
    assert not same_group(build_dihedral(4), build_symmetric(3))


def test_random_products_associate():
    rng = random.Random(7)
    g = direct_product(build_symmetric(3), build_dihedral(4))
    for _ in range(200):
        a, b, c = (rng.randrange(g.size) for _ in range(3))
        assert g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c))
