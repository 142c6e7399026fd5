import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.errors import CapExceededError, InvalidInputError, SpecParseError
from core.groups import build_dihedral
from utils.spec_parser import (
    parse_group_spec,
    parse_involutions,
    parse_residues,
    parse_target_spec,
    split_element_list,
)
from core.abelian import AbelianTarget


@pytest.mark.parametrize("text, spec, size", [
    ("S:4", "S:4", 24),
    (" D : 6 ", "D:6", 12),
    ("C:5", "C:5", 5),
    ("prod(D:3, C:2)", "prod(D:3,C:2)", 12),
    ("prod(prod(C:2,C:2),S:3)", "prod(prod(C:2,C:2),S:3)", 24),
])
def test_group_specs(text, spec, size):
    group = parse_group_spec(text)
    assert group.spec == spec
    assert group.size == size


@pytest.mark.parametrize("text", ["X:3", "S:", "S3", "S:3 junk", "prod(S:3", "prod(S:3 C:2)", "", "S:0", "D:65"])
def test_bad_group_specs(text):
    with pytest.raises(SpecParseError):
        parse_group_spec(text)


def test_parse_error_position():
    with pytest.raises(SpecParseError) as info:
        parse_group_spec("S:3 x")
    assert info.value.position == 4
    assert info.value.token == "x"
    assert isinstance(info.value, InvalidInputError)


@pytest.mark.parametrize("text", ["S:7", "S:8", "prod(S:5,S:5)"])
def test_group_caps(text):
    with pytest.raises(CapExceededError):
        parse_group_spec(text)


def test_group_cap_is_configurable():
    with pytest.raises(CapExceededError):
        parse_group_spec("D:40", max_order=64)
    assert parse_group_spec("D:32", max_order=64).size == 64


@pytest.mark.parametrize("text, factors", [
    ("Z:2", (2,)),
    ("Z:2x4", (2, 4)),
    ("Z: 2 x 2", (2, 2)),
    ("Z:1", ()),
    ("Z:6", (6,)),
])
def test_target_specs(text, factors):
    assert parse_target_spec(text).factors == factors


@pytest.mark.parametrize("text", ["Z:0", "Z:2x1", "Q:2", "Z:", "Z:2x", "Z:-3", "Z:2y3"])
def test_bad_target_specs(text):
    with pytest.raises(SpecParseError):
        parse_target_spec(text)


@pytest.mark.parametrize("text, target, residues", [
    ("1", (2,), (1,)),
    ("1,0", (2, 2), (1, 0)),
    ("(1, 0)", (2, 2), (1, 0)),
    ("(3)", (4,), (3,)),
    ("()", (), ()),
])
def test_residues(text, target, residues):
    assert parse_residues(text, AbelianTarget(target)) == residues


def test_bad_residues():
    with pytest.raises(InvalidInputError):
        parse_residues("2", AbelianTarget((2,)))
    with pytest.raises(InvalidInputError):
        parse_residues("1", AbelianTarget((2, 2)))
    with pytest.raises(SpecParseError):
        parse_residues("(1,0", AbelianTarget((2, 2)))
    with pytest.raises(SpecParseError):
        parse_residues("1;0", AbelianTarget((2, 2)))


def test_split_element_list():
    assert split_element_list("(1 2),(2 3)") == ["(1 2)", "(2 3)"]
    assert split_element_list("(s,r), (e,s)") == ["(s,r)", "(e,s)"]
    assert split_element_list("s") == ["s"]
    for bad in ("a,,b", "(1 2", "(1 2))", ""):
        with pytest.raises(SpecParseError):
            split_element_list(bad)


def test_parse_involutions():
    d4 = build_dihedral(4)
    assert parse_involutions(d4, "default").members == (4, 5, 6, 7)
    assert parse_involutions(d4, None).members == (4, 5, 6, 7)
    assert parse_involutions(d4, "all").members == (2, 4, 5, 6, 7)
    assert parse_involutions(d4, "s, s·r").members == (4, 5)
    with pytest.raises(InvalidInputError):
        parse_involutions(d4, "r")
    with pytest.raises(InvalidInputError):
        parse_involutions(d4, "t")
