"""
Finite groups as validated Cayley tables

Element indices are plain ints, the identity is always index 0.
Permutations compose right-to-left: (s * t)(x) = s(t(x)), so that
(1 2)(2 3) = (1 2 3).
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config.constants import (
    ASSOCIATIVITY_SEED,
    ASSOCIATIVITY_SPOT_FACTOR,
    EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
    MAX_CYCLIC_ORDER,
    MAX_DIHEDRAL_ORDER,
    MAX_GROUP_ORDER,
    MAX_SYMMETRIC_DEGREE,
)
from core.errors import CapExceededError, ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)

Element = int


def normalize_name(name: str) -> str:
    """Canonical lookup key for an element name: no whitespace, '*' read as '·'"""
    return "".join(name.split()).replace("*", "·")


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    A finite group given by its Cayley table.

    table[i, j] is the index of g_i * g_j. The table is validated on
    construction (Latin square, identity at index 0, inverses, associativity)
    and frozen afterwards.
    """
    table: np.ndarray
    names: Tuple[str, ...]
    spec: str
    family: str = "table"
    params: Tuple[int, ...] = ()
    _lookup: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int32, copy=True)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", tuple(self.names))
        validate_table(table)
        if len(self.names) != table.shape[0]:
            raise InvalidInputError(
                f"{len(self.names)} names for a group of size {table.shape[0]}"
            )
        lookup = {}
        for index, name in enumerate(self.names):
            key = normalize_name(name)
            if key in lookup:
                raise InvalidInputError(f"duplicate element name {name!r}")
            lookup[key] = index
        object.__setattr__(self, "_lookup", lookup)

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> Element:
        return 0

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmax(self.table == 0, axis=1).astype(np.int32)
        inv.setflags(write=False)
        return inv

    @cached_property
    def square_map(self) -> np.ndarray:
        """square_map[g] = g * g"""
        idx = np.arange(self.size)
        sq = self.table[idx, idx]
        sq.setflags(write=False)
        return sq

    @cached_property
    def orders(self) -> np.ndarray:
        idx = np.arange(self.size)
        orders = np.zeros(self.size, dtype=np.int64)
        power = idx.copy()
        for k in range(1, self.size + 1):
            orders[(power == 0) & (orders == 0)] = k
            if orders.all():
                break
            power = self.table[power, idx]
        orders.setflags(write=False)
        return orders

    def multiply(self, a: Element, b: Element) -> Element:
        return int(self.table[a, b])

    def inverse(self, a: Element) -> Element:
        return int(self.inverses[a])

    def element_order(self, a: Element) -> int:
        return int(self.orders[a])

    def power(self, a: Element, k: int) -> Element:
        """a^k for any integer k"""
        k %= self.element_order(a)
        result = 0
        for _ in range(k):
            result = int(self.table[result, a])
        return result

    def name(self, a: Element) -> str:
        return self.names[a]

    def index_of(self, name: str) -> Element:
        """Resolve a display name back to its element index"""
        key = normalize_name(name)
        if key not in self._lookup:
            raise InvalidInputError(f"unknown element {name!r} in {self.spec}")
        return self._lookup[key]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.spec}, size={self.size})"


@dataclass(frozen=True)
class InvolutionSet:
    """A set of involutions, kept sorted by element index"""
    members: Tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(int(m) for m in self.members))))

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return item in self.members


@dataclass(frozen=True, eq=False)
class Abelianization:
    """G -> G/[G,G] -> Z/d_1 + ... + Z/d_k with d_1 | d_2 | ..."""
    factors: Tuple[int, ...]
    projection: np.ndarray  # shape (|G|, k), row g holds the residues of g

    def project(self, g: Element) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.projection[g])


@dataclass(frozen=True, eq=False)
class WordLengths:
    """Shortest words in a generating set, from a breadth-first search"""
    lengths: np.ndarray  # -1 outside the generated subgroup
    parent: np.ndarray
    via: np.ndarray

    def word(self, g: Element) -> Optional[List[Element]]:
        if self.lengths[g] < 0:
            return None
        letters = []
        while g != 0:
            letters.append(int(self.via[g]))
            g = int(self.parent[g])
        return letters[::-1]


def same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    """Same Cayley table (element for element), not just isomorphic"""
    return a is b or (a.size == b.size and bool(np.array_equal(a.table, b.table)))


# ==================== VALIDATION ====================

def validate_table(table: np.ndarray) -> None:
    """
    Check the group axioms on a Cayley table.

    Associativity is exhaustive up to EXHAUSTIVE_ASSOCIATIVITY_LIMIT elements,
    sampled above that.
    """
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise InvalidInputError(f"Cayley table must be a non-empty square matrix, got {table.shape}")
    n = table.shape[0]
    if n > MAX_GROUP_ORDER:
        raise CapExceededError("group order", n, MAX_GROUP_ORDER)
    idx = np.arange(n)
    if table.min() < 0 or table.max() >= n:
        raise InvalidInputError("Cayley table entries out of range")
    if not (np.sort(table, axis=1) == idx).all() or not (np.sort(table, axis=0) == idx[:, None]).all():
        raise InvalidInputError("Cayley table is not a Latin square")
    if not (table[0] == idx).all() or not (table[:, 0] == idx).all():
        raise InvalidInputError("element 0 is not the identity")
    inv = np.argmax(table == 0, axis=1)
    if not (table[inv, idx] == 0).all():
        raise InvalidInputError("some element has no two-sided inverse")

    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        left = table[table[:, :, None], idx[None, None, :]]
        right = table[idx[:, None, None], table[None, :, :]]
        bad = np.argwhere(left != right)
    else:
        rng = np.random.default_rng(ASSOCIATIVITY_SEED)
        a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SPOT_FACTOR * n))
        mismatch = table[table[a, b], c] != table[a, table[b, c]]
        bad = np.stack([a, b, c], axis=1)[mismatch]
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise InvalidInputError(f"associativity fails for ({a}, {b}, {c})")


# ==================== CONSTRUCTORS ====================

@lru_cache(maxsize=None)
def symmetric_permutations(n: int) -> np.ndarray:
    """All permutations of range(n) in lexicographic one-line order"""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    perms.setflags(write=False)
    return perms


def _permutation_keys(perms: np.ndarray, n: int) -> np.ndarray:
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return perms @ weights


def permutation_index(n: int, perm: Sequence[int]) -> Element:
    """Index of a 0-based one-line permutation in build_symmetric(n)"""
    perms = symmetric_permutations(n)
    keys = _permutation_keys(perms, n)
    key = int(_permutation_keys(np.asarray(perm, dtype=np.int64)[None, :], n)[0])
    pos = int(np.searchsorted(keys, key))
    if pos >= len(keys) or keys[pos] != key:
        raise InvalidInputError(f"{list(perm)} is not a permutation of {n} points")
    return pos


def cycle_notation(perm: Sequence[int]) -> str:
    """1-based cycle notation, each cycle starting at its smallest point; 'e' for the identity"""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + " ".join(str(p + 1) for p in cycle) + ")")
    return "".join(cycles) if cycles else "e"


def build_symmetric(n: int, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """
    Symmetric group S_n.

    Elements are ordered by lexicographic one-line notation, so the identity
    comes first; names are cycle notation.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise InvalidInputError(f"S_n needs 1 <= n <= {MAX_SYMMETRIC_DEGREE}, got {n}")
    order = 1
    for k in range(2, n + 1):
        order *= k
    if order > min(max_order, MAX_GROUP_ORDER):
        raise CapExceededError(f"order of S_{n}", order, min(max_order, MAX_GROUP_ORDER))

    perms = symmetric_permutations(n)
    size = perms.shape[0]
    # composed[i, j, x] = perms[i][perms[j][x]]
    composed = perms[np.arange(size)[:, None, None], perms[None, :, :]]
    keys = _permutation_keys(perms, n)
    table = np.searchsorted(keys, _permutation_keys(composed.reshape(-1, n), n)).reshape(size, size)
    names = [cycle_notation(p) for p in perms.tolist()]
    logger.debug("built S_%d with %d elements", n, size)
    return FiniteGroup(table, names, spec=f"S:{n}", family="symmetric", params=(n,))


def dihedral_name(m: int, index: int) -> str:
    exponent = index % m
    rotation = "" if exponent == 0 else ("r" if exponent == 1 else f"r^{exponent}")
    if index < m:
        return rotation or "e"
    return "s" + (f"·{rotation}" if rotation else "")


def build_dihedral(m: int) -> FiniteGroup:
    """
    Dihedral group D_m = <r, s | r^m = s^2 = e, srs = r^-1> of order 2m.

    Index k < m is r^k, index m + k is s·r^k.
    """
    if not isinstance(m, int) or not 1 <= m <= MAX_DIHEDRAL_ORDER:
        raise InvalidInputError(f"D_m needs 1 <= m <= {MAX_DIHEDRAL_ORDER}, got {m}")
    idx = np.arange(2 * m)
    reflection = idx >= m
    exponent = idx % m
    # r^a s = s r^-a, so the right factor decides the sign of the left exponent
    signed = np.where(reflection[None, :], -exponent[:, None], exponent[:, None])
    new_exponent = (exponent[None, :] + signed) % m
    new_reflection = reflection[:, None] ^ reflection[None, :]
    table = new_reflection * m + new_exponent
    names = [dihedral_name(m, i) for i in range(2 * m)]
    return FiniteGroup(table, names, spec=f"D:{m}", family="dihedral", params=(m,))


def build_cyclic(n: int) -> FiniteGroup:
    """Cyclic group Z/n written as residues 0..n-1"""
    if not isinstance(n, int) or not 1 <= n <= MAX_CYCLIC_ORDER:
        raise InvalidInputError(f"C_n needs 1 <= n <= {MAX_CYCLIC_ORDER}, got {n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, [str(i) for i in range(n)], spec=f"C:{n}", family="cyclic", params=(n,))


def direct_product(g1: FiniteGroup, g2: FiniteGroup, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Componentwise product; (a, b) has index a * |G2| + b"""
    n1, n2 = g1.size, g2.size
    limit = min(max_order, MAX_GROUP_ORDER)
    if n1 * n2 > limit:
        raise CapExceededError("order of direct product", n1 * n2, limit)
    t1 = g1.table.astype(np.int64)
    t2 = g2.table.astype(np.int64)
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    names = [f"({a},{b})" for a in g1.names for b in g2.names]
    return FiniteGroup(table, names, spec=f"prod({g1.spec},{g2.spec})", family="product")


# ==================== STRUCTURE ====================

def involutions(group: FiniteGroup) -> InvolutionSet:
    """All elements of order exactly 2"""
    return InvolutionSet(tuple(int(g) for g in np.flatnonzero(group.orders == 2)))


def make_involution_set(group: FiniteGroup, members: Iterable[Element]) -> InvolutionSet:
    """Validated InvolutionSet; rejects anything that is not an involution of the group"""
    members = tuple(members)
    for g in members:
        if not 0 <= g < group.size:
            raise InvalidInputError(f"element index {g} out of range for {group.spec}")
        if group.element_order(g) != 2:
            raise InvalidInputError(f"{group.name(g)} is not an involution of {group.spec}")
    return InvolutionSet(members)


def squares(group: FiniteGroup) -> FrozenSet[Element]:
    return frozenset(int(g) for g in np.unique(group.square_map))


def subgroup_closure(group: FiniteGroup, seed: Iterable[Element]) -> FrozenSet[Element]:
    """Smallest subgroup containing the seed (breadth-first over right multiplication)"""
    generators = sorted(set(int(s) for s in seed))
    reached = {0}
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = int(group.table[g, s])
            if h not in reached:
                reached.add(h)
                queue.append(h)
    return frozenset(reached)


def commutator_subgroup(group: FiniteGroup) -> FrozenSet[Element]:
    """[G, G], generated by all x^-1 y^-1 x y"""
    t, inv = group.table, group.inverses
    commutators = t[t[inv[:, None], inv[None, :]], t]
    return subgroup_closure(group, np.unique(commutators).tolist())


def is_normal(group: FiniteGroup, subgroup: FrozenSet[Element]) -> bool:
    members = np.array(sorted(subgroup), dtype=np.int64)
    t, inv = group.table, group.inverses
    conjugates = t[t[np.arange(group.size)[:, None], members[None, :]], inv[:, None]]
    return bool(np.isin(conjugates, members).all())


def quotient(group: FiniteGroup, normal: FrozenSet[Element]) -> Tuple[FiniteGroup, np.ndarray]:
    """
    Cayley table of G/N.

    Cosets are labelled by their smallest member, in increasing order, so the
    identity coset is 0. Returns the quotient group and the projection array
    projection[g] = coset index of g.
    """
    if 0 not in normal or subgroup_closure(group, normal) != frozenset(normal):
        raise InvalidInputError("quotient needs a subgroup")
    if not is_normal(group, normal):
        raise InvalidInputError("quotient needs a normal subgroup")
    members = np.array(sorted(normal), dtype=np.int64)
    coset_min = group.table[:, members].min(axis=1)
    reps = np.unique(coset_min)
    projection = np.searchsorted(reps, coset_min)
    table = projection[group.table[reps[:, None], reps[None, :]]]
    names = [f"[{group.name(int(r))}]" for r in reps]
    return FiniteGroup(table, names, spec=f"{group.spec}/N", family="quotient"), projection


def _peel_abelian(group: FiniteGroup) -> Tuple[List[int], List[Element]]:
    """
    Split a finite abelian group as <a> + complement, a of maximal order.

    Returns cyclic orders (non-increasing) and generators, one per factor.
    """
    if group.size == 1:
        return [], []
    a = int(np.argmax(group.orders))
    m = group.element_order(a)
    powers = [0]
    for _ in range(m - 1):
        powers.append(group.multiply(powers[-1], a))
    log = {g: k for k, g in enumerate(powers)}

    rest, projection = quotient(group, frozenset(powers))
    rest_orders, rest_gens = _peel_abelian(rest)

    generators = [a]
    for coset, k in zip(rest_gens, rest_orders):
        lift = int(np.flatnonzero(projection == coset)[0])
        j = log[group.power(lift, k)]
        if j % k:
            raise ConsistencyError(f"lift of order {k} lands on a^{j}, not divisible")
        generators.append(group.multiply(lift, group.power(a, -(j // k))))
    return [m] + rest_orders, generators


def abelian_coordinates(group: FiniteGroup) -> Tuple[Tuple[int, ...], np.ndarray]:
    """
    Invariant factors d_1 | d_2 | ... of an abelian group and the coordinates
    of every element in Z/d_1 + ... + Z/d_k.
    """
    t = group.table
    if not (t == t.T).all():
        raise InvalidInputError(f"{group.spec} is not abelian")
    orders, generators = _peel_abelian(group)
    orders, generators = orders[::-1], generators[::-1]

    coordinates = np.full((group.size, len(orders)), -1, dtype=np.int64)
    gen_powers = [[group.power(g, c) for c in range(d)] for g, d in zip(generators, orders)]
    for coeffs in itertools.product(*(range(d) for d in orders)):
        element = 0
        for powers, c in zip(gen_powers, coeffs):
            element = group.multiply(element, powers[c])
        coordinates[element] = coeffs
    if (coordinates < 0).any():
        raise ConsistencyError(f"peeled generators do not span {group.spec}")
    return tuple(orders), coordinates


def abelianization(group: FiniteGroup) -> Abelianization:
    """G_ab as invariant factors plus the composite projection G -> G/[G,G] -> sum Z/d_i"""
    derived = commutator_subgroup(group)
    quotient_group, coset_of = quotient(group, derived)
    factors, coordinates = abelian_coordinates(quotient_group)
    projection = coordinates[coset_of]
    projection.setflags(write=False)
    logger.debug("abelianization of %s: factors %s", group.spec, factors)
    return Abelianization(factors, projection)


# ==================== GENERATORS & WORDS ====================

def greedy_generators(group: FiniteGroup) -> Tuple[Element, ...]:
    """Add the element that grows the generated subgroup most until it is all of G"""
    generators: List[Element] = []
    reached = frozenset({0})
    while len(reached) < group.size:
        best, best_reach = None, reached
        for g in range(1, group.size):
            if g in reached:
                continue
            candidate = subgroup_closure(group, generators + [g])
            if len(candidate) > len(best_reach):
                best, best_reach = g, candidate
        generators.append(best)
        reached = best_reach
    return tuple(generators)


def standard_generators(group: FiniteGroup) -> Tuple[Element, ...]:
    """Adjacent transpositions for S_n, {r, s} for D_m, {1} for C_n, greedy otherwise"""
    if group.family == "symmetric":
        n = group.params[0]
        return tuple(
            group.index_of(f"({i} {i + 1})") for i in range(1, n)
        )
    if group.family == "dihedral":
        m = group.params[0]
        return (m,) if m == 1 else (1, m)
    if group.family == "cyclic":
        return () if group.size == 1 else (1,)
    return greedy_generators(group)


def word_lengths(group: FiniteGroup, letters: Iterable[Element]) -> WordLengths:
    """Shortest-word lengths over right multiplication by the letters"""
    letters = sorted(set(int(x) for x in letters))
    lengths = np.full(group.size, -1, dtype=np.int64)
    parent = np.full(group.size, -1, dtype=np.int64)
    via = np.full(group.size, -1, dtype=np.int64)
    lengths[0] = 0
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for letter in letters:
            h = int(group.table[g, letter])
            if lengths[h] < 0:
                lengths[h] = lengths[g] + 1
                parent[h] = g
                via[h] = letter
                queue.append(h)
    return WordLengths(lengths, parent, via)


def is_transposition(group: FiniteGroup, g: Element) -> bool:
    if group.family != "symmetric":
        return False
    perm = symmetric_permutations(group.params[0])[g]
    return int((perm != np.arange(len(perm))).sum()) == 2
