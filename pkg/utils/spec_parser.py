"""
Parsers for the command-line vocabulary

    group     S:n | D:m | C:n | prod(<group>,<group>)
    target    Z:d1xd2x... | Z:1
    residues  1 | 1,0 | (1,0)
    elements  comma-separated display names, e.g. (1 2),(2 3) or s,s·r
"""

from typing import List, Optional

from config.constants import MAX_GROUP_ORDER
from core.abelian import AbElement, AbelianTarget
from core.errors import CapExceededError, SpecParseError
from core.groups import (
    FiniteGroup,
    InvolutionSet,
    build_cyclic,
    build_dihedral,
    build_symmetric,
    direct_product,
    involutions,
    make_involution_set,
)
from core.sr2 import default_involutions


class _Cursor:
    """Whitespace-skipping reader over a spec string, tracking positions for errors"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos:self.pos + 1]

    def error(self, message: str, token: Optional[str] = None) -> SpecParseError:
        return SpecParseError(message, self.text, self.pos, token)

    def expect(self, literal: str) -> None:
        self.skip()
        if not self.text.startswith(literal, self.pos):
            raise self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if digits in ("", "-"):
            self.pos = start
            raise self.error("expected an integer")
        return int(digits)

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def finish(self) -> None:
        if not self.at_end():
            raise self.error("unexpected trailing input")


def _group(cursor: _Cursor, max_order: int) -> FiniteGroup:
    cursor.skip()
    if cursor.text.startswith("prod", cursor.pos):
        cursor.pos += 4
        cursor.expect("(")
        left = _group(cursor, max_order)
        cursor.expect(",")
        right = _group(cursor, max_order)
        cursor.expect(")")
        return direct_product(left, right, max_order)

    family = cursor.peek()
    if family not in ("S", "D", "C"):
        raise cursor.error("expected a group (S:n, D:m, C:n or prod(A,B))")
    cursor.pos += 1
    cursor.expect(":")
    number_at = cursor.pos
    n = cursor.integer()
    try:
        if family == "S":
            return build_symmetric(n, max_order)
        group = build_dihedral(n) if family == "D" else build_cyclic(n)
    except SpecParseError:
        raise
    except ValueError as exc:
        raise SpecParseError(str(exc), cursor.text, number_at, str(n)) from exc
    if group.size > max_order:
        raise CapExceededError(f"order of {family}:{n}", group.size, max_order)
    return group


def parse_group_spec(text: str, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Build the group named by a spec such as 'S:4', 'D:6' or 'prod(D:3, C:2)'"""
    cursor = _Cursor(text)
    group = _group(cursor, max_order)
    cursor.finish()
    return group


def parse_target_spec(text: str) -> AbelianTarget:
    """'Z:2x4' is Z/2 + Z/4; 'Z:1' is the trivial group"""
    cursor = _Cursor(text)
    cursor.expect("Z")
    cursor.expect(":")
    factors = []
    while True:
        at = cursor.pos
        d = cursor.integer()
        if d < 1:
            cursor.pos = at
            raise cursor.error("cyclic factors must be positive", str(d))
        factors.append(d)
        if cursor.at_end():
            break
        cursor.expect("x")
    if factors == [1]:
        return AbelianTarget(())
    if 1 in factors:
        raise SpecParseError("Z:1 cannot be combined with other factors", text, len(text) - 1)
    return AbelianTarget(tuple(factors))


def parse_residues(text: str, target: AbelianTarget) -> AbElement:
    """Residue vector such as '1', '1,0' or '(1, 0)', validated against the target"""
    cursor = _Cursor(text)
    parenthesized = cursor.peek() == "("
    if parenthesized:
        cursor.expect("(")
    residues: List[int] = []
    if not (parenthesized and cursor.peek() == ")") and not cursor.at_end():
        residues.append(cursor.integer())
        while cursor.peek() == ",":
            cursor.expect(",")
            residues.append(cursor.integer())
    if parenthesized:
        cursor.expect(")")
    cursor.finish()
    return target.element(residues)


def split_element_list(text: str) -> List[str]:
    """Split on commas outside parentheses, so '(1 2),(a,b)' gives two names"""
    names, depth, current = [], 0, []
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecParseError("unbalanced ')'", text, pos)
        if ch == "," and depth == 0:
            names.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise SpecParseError("unbalanced '('", text, len(text))
    names.append("".join(current).strip())
    if any(not name for name in names):
        raise SpecParseError("empty element name", text, 0)
    return names


def parse_involutions(group: FiniteGroup, text: Optional[str]) -> InvolutionSet:
    """'default' (or nothing), 'all', or a list of element names"""
    choice = (text or "default").strip()
    if choice == "default":
        return default_involutions(group)
    if choice == "all":
        return involutions(group)
    return make_involution_set(group, [group.index_of(name) for name in split_element_list(choice)])
