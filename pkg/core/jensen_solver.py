"""
Jensen equations on a finite group, solved exactly

    J1:  f(xy) + f(xy^-1) = 2 f(x)
    J2:  f(xy) + f(x^-1 y) = 2 f(y)

Solutions are normalized (f(e) = 0). The linear system has one column per
non-identity element and one row per ordered pair; it is solved per cyclic
factor of H through a Smith normal form over Z.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import prod
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.constants import BRUTE_FORCE_CHUNK, DEFAULT_MAX_ENUM, MAX_SNF_ENTRIES
from core.abelian import AbElement, AbelianTarget
from core.errors import CapExceededError, ConsistencyError, InvalidInputError
from core.groups import Element, FiniteGroup, abelianization, same_group, standard_generators, word_lengths
from utils.int_linalg import (
    IntMatrix,
    ModKernel,
    SnfDecomposition,
    kernel_from_snf,
    row_lattice_basis,
    smith_normal_form,
)

logger = logging.getLogger(__name__)


class EquationKind(str, Enum):
    J1 = "J1"
    J2 = "J2"
    J12 = "J12"  # both J1 and J2


# ==================== MAPS ====================

@dataclass(frozen=True, eq=False)
class GroupMap:
    """A normalized map f: G -> H, values[g] is the residue vector of f(g)"""
    group: FiniteGroup
    target: AbelianTarget
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.int64).reshape(self.group.size, self.target.rank)
        if values.size and ((values < 0).any() or (values >= self.target.moduli).any()):
            raise InvalidInputError("map values must be reduced residues")
        if values.size and values[0].any():
            raise InvalidInputError("maps are normalized: f(e) must be 0")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zero(cls, group: FiniteGroup, target: AbelianTarget) -> "GroupMap":
        return cls(group, target, np.zeros((group.size, target.rank), dtype=np.int64))

    @classmethod
    def from_function(cls, group: FiniteGroup, target: AbelianTarget,
                      fn: Callable[[Element], Sequence[int]]) -> "GroupMap":
        return cls(group, target, [target.element(fn(g)) for g in range(group.size)])

    def value(self, g: Element) -> AbElement:
        return tuple(int(v) for v in self.values[g])

    @property
    def key(self) -> Tuple[int, ...]:
        """Hashable, order-canonical identity of the map"""
        return tuple(self.values.ravel().tolist())

    def as_table(self) -> Dict[str, AbElement]:
        return {self.group.name(g): self.value(g) for g in range(self.group.size)}

    def __repr__(self) -> str:
        return f"GroupMap({self.group.spec} -> {self.target.spec}, {self.key})"


# ==================== EQUATIONS ====================

def _violations(group: FiniteGroup, moduli: np.ndarray, values: np.ndarray, kind: EquationKind) -> np.ndarray:
    """
    Boolean array of shape (..., |G|, |G|): True where the pair (x, y) breaks the
    equation. values has shape (..., |G|, rank); no normalization is assumed.
    """
    t, inv = group.table, group.inverses
    f_xy = values[..., t, :]
    bad = np.zeros(values.shape[:-2] + t.shape, dtype=bool)
    if kind in (EquationKind.J1, EquationKind.J12):
        residual = f_xy + values[..., t[:, inv], :] - 2 * values[..., :, None, :]
        bad |= (residual % moduli != 0).any(axis=-1)
    if kind in (EquationKind.J2, EquationKind.J12):
        residual = f_xy + values[..., t[inv, :], :] - 2 * values[..., None, :, :]
        bad |= (residual % moduli != 0).any(axis=-1)
    return bad


def find_violation(group: FiniteGroup, target: AbelianTarget, values: np.ndarray,
                   kind: EquationKind) -> Optional[Tuple[Element, Element]]:
    """First pair (x, y) in lexicographic order that breaks the equation, or None"""
    values = np.asarray(values, dtype=np.int64).reshape(group.size, target.rank)
    bad = np.argwhere(_violations(group, target.moduli, values, EquationKind(kind)))
    if len(bad) == 0:
        return None
    return int(bad[0][0]), int(bad[0][1])


def is_solution(f: GroupMap, kind: EquationKind) -> bool:
    return find_violation(f.group, f.target, f.values, kind) is None


def find_additivity_failure(f: GroupMap) -> Optional[Tuple[Element, Element]]:
    t = f.group.table
    lhs = f.values[t]
    rhs = (f.values[:, None, :] + f.values[None, :, :]) % f.target.moduli
    bad = np.argwhere((lhs != rhs).any(axis=-1))
    if len(bad) == 0:
        return None
    return int(bad[0][0]), int(bad[0][1])


def is_homomorphism(f: GroupMap) -> bool:
    return find_additivity_failure(f) is None


# ==================== LINEAR SYSTEM ====================

def _system_array(group: FiniteGroup, kind: EquationKind,
                  max_entries: int = MAX_SNF_ENTRIES) -> np.ndarray:
    n = group.size
    kinds = [EquationKind.J1, EquationKind.J2] if kind == EquationKind.J12 else [EquationKind(kind)]
    requested = len(kinds) * n * n * max(n - 1, 0)
    if requested > max_entries:
        raise CapExceededError(f"{kind.value} system for {group.spec}", requested, max_entries)
    if n == 1:
        return np.zeros((0, 0), dtype=np.int64)

    t, inv = group.table, group.inverses
    x, y = (a.ravel() for a in np.meshgrid(np.arange(n), np.arange(n), indexing="ij"))
    row = np.arange(n * n)
    blocks = []
    for k in kinds:
        coeffs = np.zeros((n * n, n), dtype=np.int64)
        np.add.at(coeffs, (row, t[x, y]), 1)
        if k == EquationKind.J1:
            np.add.at(coeffs, (row, t[x, inv[y]]), 1)
            np.add.at(coeffs, (row, x), -2)
        else:
            np.add.at(coeffs, (row, t[inv[x], y]), 1)
            np.add.at(coeffs, (row, y), -2)
        blocks.append(coeffs[:, 1:])  # f(e) = 0 eliminates the identity column
    system = np.vstack(blocks)
    system = system[system.any(axis=1)]
    if len(system) == 0:
        return system
    _, first = np.unique(system, axis=0, return_index=True)
    return system[np.sort(first)]


def build_system(group: FiniteGroup, kind: EquationKind,
                 max_entries: int = MAX_SNF_ENTRIES) -> IntMatrix:
    """
    Integer matrix of the equation(s): one column per non-identity element,
    one row per ordered pair (x, y) in lexicographic order. Coefficients of
    coinciding arguments add up; zero and duplicate rows are dropped, first
    occurrence kept.
    """
    return IntMatrix.from_numpy(_system_array(group, EquationKind(kind), max_entries))


@lru_cache(maxsize=64)
def _system_snf(group: FiniteGroup, kind: EquationKind) -> SnfDecomposition:
    system = _system_array(group, kind)
    if len(system):
        # rows equal up to sign span the same lattice
        lead = system[np.arange(len(system)), np.argmax(system != 0, axis=1)]
        system = system * np.where(lead < 0, -1, 1)[:, None]
        _, first = np.unique(system, axis=0, return_index=True)
        system = system[np.sort(first)]
    snf = smith_normal_form(row_lattice_basis(system))
    logger.debug(
        "%s on %s: %d equations, lattice rank %d", kind.value, group.spec, system.shape[0], snf.rank
    )
    return snf


# ==================== SOLUTION SPACES ====================

@dataclass(frozen=True, eq=False)
class SolutionSpace:
    """All normalized solutions, as a direct sum of per-factor kernels"""
    group: FiniteGroup
    target: AbelianTarget
    kind: EquationKind
    per_factor: Tuple[ModKernel, ...]

    @property
    def cardinality(self) -> int:
        return prod(k.cardinality for k in self.per_factor)

    @property
    def unnormalized_cardinality(self) -> int:
        """Solutions without f(e) = 0: every one is f_0 + c for a constant c"""
        return self.target.cardinality * self.cardinality

    def _map_from_columns(self, columns: Sequence[Sequence[int]]) -> GroupMap:
        values = np.zeros((self.group.size, self.target.rank), dtype=np.int64)
        for j, column in enumerate(columns):
            values[1:, j] = column
        return GroupMap(self.group, self.target, values)

    def generators(self) -> List[GroupMap]:
        """Per-factor kernel generators, each living in a single factor"""
        maps = []
        width = self.group.size - 1
        for j, kernel in enumerate(self.per_factor):
            for vector in kernel.basis:
                columns = [[0] * width for _ in self.per_factor]
                columns[j] = list(vector)
                maps.append(self._map_from_columns(columns))
        return maps

    def members(self, max_enum: int = DEFAULT_MAX_ENUM) -> Iterator[GroupMap]:
        """Every solution, lexicographic over per-factor kernel coordinates"""
        if self.cardinality > max_enum:
            raise CapExceededError(f"enumeration of S({self.kind.value})", self.cardinality, max_enum)
        per_factor = [list(k.elements(max_enum)) for k in self.per_factor]
        for columns in itertools.product(*per_factor):
            yield self._map_from_columns(columns)

    def contains(self, f: GroupMap) -> bool:
        if not same_group(f.group, self.group) or f.target != self.target:
            return False
        return is_solution(f, self.kind)


def solve(group: FiniteGroup, target: AbelianTarget, kind: EquationKind) -> SolutionSpace:
    kind = EquationKind(kind)
    snf = _system_snf(group, kind)
    per_factor = tuple(kernel_from_snf(snf, d) for d in target.factors)
    return SolutionSpace(group, target, kind, per_factor)


def brute_force_solutions(group: FiniteGroup, target: AbelianTarget, kind: EquationKind,
                          max_enum: int = DEFAULT_MAX_ENUM) -> List[GroupMap]:
    """
    Try every normalized map and keep those satisfying the equation at every
    pair. Independent of the linear system; candidates are evaluated in numpy
    batches, in lexicographic order of (f(g_1), f(g_2), ...).
    """
    kind = EquationKind(kind)
    n, h = group.size, target.cardinality
    space = h ** (n - 1)
    if space > max_enum:
        raise CapExceededError(f"brute-force search on {group.spec} -> {target.spec}", space, max_enum)
    elements = target.elements_array(max_enum)
    place = h ** np.arange(n - 2, -1, -1, dtype=np.int64) if n > 1 else np.zeros(0, dtype=np.int64)

    found = []
    for start in range(0, space, BRUTE_FORCE_CHUNK):
        idx = np.arange(start, min(start + BRUTE_FORCE_CHUNK, space), dtype=np.int64)
        digits = (idx[:, None] // place[None, :]) % h
        values = np.zeros((len(idx), n, target.rank), dtype=np.int64)
        values[:, 1:, :] = elements[digits]
        ok = ~_violations(group, target.moduli, values, kind).any(axis=(-2, -1))
        found.extend(GroupMap(group, target, values[i]) for i in np.flatnonzero(ok))
    logger.debug("brute force %s on %s -> %s: %d of %d", kind.value, group.spec, target.spec, len(found), space)
    return found


# ==================== HOMOMORPHISMS ====================

def _homs_by_generators(group: FiniteGroup, target: AbelianTarget, max_enum: int) -> List[GroupMap]:
    """Assign values to a generating set, propagate along the Cayley graph, reject conflicts"""
    generators = standard_generators(group)
    if target.cardinality ** len(generators) > max_enum:
        raise CapExceededError(
            f"generator assignments for {group.spec} -> {target.spec}",
            target.cardinality ** len(generators), max_enum,
        )
    tree = word_lengths(group, generators)
    order = np.argsort(tree.lengths, kind="stable")[1:]
    position = {g: i for i, g in enumerate(generators)}
    elements = target.elements_array(max_enum)
    moduli = target.moduli
    gens = np.array(generators, dtype=np.int64)

    homs = []
    for choice in itertools.product(range(target.cardinality), repeat=len(generators)):
        gen_values = elements[list(choice)].reshape(len(generators), target.rank)
        values = np.zeros((group.size, target.rank), dtype=np.int64)
        for g in order:
            values[g] = (values[tree.parent[g]] + gen_values[position[int(tree.via[g])]]) % moduli
        edges = values[group.table[:, gens]]
        expected = (values[:, None, :] + gen_values[None, :, :]) % moduli
        if (edges == expected).all():
            homs.append(GroupMap(group, target, values))
    return homs


def _homs_by_abelianization(group: FiniteGroup, target: AbelianTarget, max_enum: int) -> List[GroupMap]:
    """Pull back Hom(G_ab, H): a generator of Z/m may go to any h with m*h = 0"""
    ab = abelianization(group)
    elements = target.elements_array(max_enum)
    moduli = target.moduli
    choices = [
        [i for i, h in enumerate(elements) if not ((m * h) % moduli).any()]
        for m in ab.factors
    ]
    count = prod(len(c) for c in choices)
    if count > max_enum:
        raise CapExceededError(f"Hom(G_ab, {target.spec})", count, max_enum)
    homs = []
    for choice in itertools.product(*choices):
        images = elements[list(choice)].reshape(len(ab.factors), target.rank)
        values = (ab.projection @ images) % moduli
        homs.append(GroupMap(group, target, values))
    return homs


def hom_space(group: FiniteGroup, target: AbelianTarget,
              max_enum: int = DEFAULT_MAX_ENUM) -> List[GroupMap]:
    """
    Hom(G, H), computed twice (generator propagation and pull-back from the
    abelianization); the two must agree. Sorted by map key.
    """
    by_generators = _homs_by_generators(group, target, max_enum)
    by_abelianization = _homs_by_abelianization(group, target, max_enum)
    left = {f.key: f for f in by_generators}
    right = {f.key for f in by_abelianization}
    if left.keys() != right or len(by_generators) != len(by_abelianization):
        raise ConsistencyError(
            f"Hom({group.spec}, {target.spec}): {len(left)} maps by generators, "
            f"{len(right)} via the abelianization"
        )
    return [left[k] for k in sorted(left)]


# ==================== COMPARISON ====================

MapFamily = Union[SolutionSpace, Sequence[GroupMap]]


@dataclass(frozen=True)
class SpaceComparison:
    """Outcome of spaces_equal; certificate is a map in one side but not the other"""
    equal: bool
    left_cardinality: int
    right_cardinality: int
    certificate: Optional[GroupMap] = None
    certificate_side: Optional[str] = None

    def __bool__(self) -> bool:
        return self.equal


def _cardinality(family: MapFamily) -> int:
    return family.cardinality if isinstance(family, SolutionSpace) else len(family)


def _condition(family: MapFamily) -> Callable[[GroupMap], bool]:
    if isinstance(family, SolutionSpace):
        return family.contains
    keys = {f.key for f in family}
    return lambda f: f.key in keys


def _sample_members(family: MapFamily, max_enum: int, exhaustive: bool) -> Optional[Iterator[GroupMap]]:
    """Members to test against the other side; generators suffice for a subgroup test"""
    if not isinstance(family, SolutionSpace):
        return iter(family)
    if family.cardinality <= max_enum:
        return family.members(max_enum)
    return None if exhaustive else iter(family.generators())


def spaces_equal(left: MapFamily, right: MapFamily, max_enum: int = DEFAULT_MAX_ENUM) -> SpaceComparison:
    """
    Equal iff the cardinalities agree and every member (or generator) of the
    left side satisfies the right side's defining condition. On failure the
    certificate is a member of one side outside the other.
    """
    n_left, n_right = _cardinality(left), _cardinality(right)
    if min(n_left, n_right) > max_enum:
        raise CapExceededError("space comparison", min(n_left, n_right), max_enum)

    if n_left == n_right:
        accepts = _condition(right)
        for f in _sample_members(left, max_enum, exhaustive=False):
            if not accepts(f):
                return SpaceComparison(False, n_left, n_right, f, "left")
        return SpaceComparison(True, n_left, n_right)

    bigger, smaller, side = (left, right, "left") if n_left > n_right else (right, left, "right")
    sample = _sample_members(bigger, max_enum, exhaustive=True)
    if sample is not None:
        accepts = _condition(smaller)
        for f in sample:
            if not accepts(f):
                return SpaceComparison(False, n_left, n_right, f, side)
    return SpaceComparison(False, n_left, n_right)
