"""
The square-root criterion SR2 for a group G and a set I of involutions:
I generates G, and every product ab with a, b in I is a square in G.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from core.errors import InvalidInputError
from core.groups import (
    Element,
    FiniteGroup,
    InvolutionSet,
    involutions,
    is_transposition,
    make_involution_set,
    permutation_index,
    subgroup_closure,
    symmetric_permutations,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairResult:
    a: Element
    b: Element
    product: Element
    witness: Optional[Element]  # lowest-index t with t*t = ab, None if ab is not a square

    @property
    def ok(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True, eq=False)
class Sr2Report:
    group: FiniteGroup
    involutions: InvolutionSet
    generates: bool
    pair_results: Tuple[PairResult, ...]

    @property
    def failures(self) -> List[PairResult]:
        return [p for p in self.pair_results if not p.ok]

    @property
    def verdict(self) -> bool:
        return self.generates and not self.failures

    @property
    def first_failure(self) -> Optional[PairResult]:
        failures = self.failures
        return failures[0] if failures else None


def find_square_root(group: FiniteGroup, g: Element) -> Optional[Element]:
    """First t in index order with t*t = g"""
    roots = np.flatnonzero(group.square_map == g)
    return int(roots[0]) if len(roots) else None


def _pairs(members: Tuple[Element, ...]) -> Iterator[Tuple[Element, Element]]:
    for i, a in enumerate(members):
        for b in members[i:]:
            yield a, b


def check_sr2(group: FiniteGroup, involution_set: InvolutionSet) -> Sr2Report:
    """
    Decide SR2 for (G, I). Every unordered pair a <= b of I (by index, a = b
    included) is checked; witnesses are the lowest-index square roots.
    """
    members = make_involution_set(group, involution_set).members
    if not members:
        raise InvalidInputError(f"the involution set for {group.spec} is empty")

    generates = len(subgroup_closure(group, members)) == group.size
    first_root = {}
    for t in range(group.size - 1, -1, -1):
        first_root[int(group.square_map[t])] = t

    results = []
    for a, b in _pairs(members):
        product = group.multiply(a, b)
        results.append(PairResult(a, b, product, first_root.get(product)))
    report = Sr2Report(group, InvolutionSet(members), generates, tuple(results))
    logger.debug(
        "SR2 on %s with %d involutions: generates=%s, %d of %d pairs without a square root",
        group.spec, len(members), generates, len(report.failures), len(results),
    )
    return report


def default_involutions(group: FiniteGroup) -> InvolutionSet:
    """Transpositions for S_n, reflections for D_m, every involution otherwise"""
    if group.family == "symmetric":
        return InvolutionSet(tuple(g for g in range(group.size) if is_transposition(group, g)))
    if group.family == "dihedral":
        m = group.params[0]
        return InvolutionSet(tuple(range(m, 2 * m)))
    return involutions(group)


# ==================== CLOSED-FORM WITNESSES ====================

def _transposition_points(n: int, tau: Element) -> Tuple[int, int]:
    perms = symmetric_permutations(n)
    if not 0 <= tau < len(perms):
        raise InvalidInputError(f"element index {tau} out of range for S_{n}")
    moved = np.flatnonzero(perms[tau] != np.arange(n))
    if len(moved) != 2:
        raise InvalidInputError(f"element {tau} of S_{n} is not a transposition")
    return int(moved[0]), int(moved[1])


def _cycle_permutation(n: int, cycle: List[int]) -> List[int]:
    perm = list(range(n))
    for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
        perm[src] = dst
    return perm


def sn_witness(n: int, tau1: Element, tau2: Element) -> Element:
    """
    Square root of tau1 * tau2 in S_n (indices as in build_symmetric(n)).

    Equal transpositions give e. (a b)(b c) = (a b c) has root (a c b), and
    (a b)(c d) has root (a c b d).
    """
    a, b = _transposition_points(n, tau1)
    c, d = _transposition_points(n, tau2)
    if (a, b) == (c, d):
        return 0
    shared = {a, b} & {c, d}
    if shared:
        (mid,) = shared
        first = a if b == mid else b
        last = c if d == mid else d
        cycle = [first, last, mid]
    else:
        cycle = [a, c, b, d]
    return permutation_index(n, _cycle_permutation(n, cycle))


def dihedral_odd_witness(m: int, k: int) -> Element:
    """t = r^(k u) with 2u = 1 mod m, so that t^2 = r^k"""
    if m < 1 or m % 2 == 0:
        raise InvalidInputError(f"the rotation witness needs odd m, got {m}")
    u = (m + 1) // 2
    return (k * u) % m
