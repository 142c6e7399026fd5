"""
Finite abelian codomains H = Z/d_1 + ... + Z/d_k
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterator, Sequence, Tuple

import numpy as np

from config.constants import DEFAULT_MAX_ENUM
from core.errors import CapExceededError, InvalidInputError

AbElement = Tuple[int, ...]


@dataclass(frozen=True)
class AbelianTarget:
    """
    Direct sum of cyclic groups, in the order given.

    Factors need not form a divisibility chain; Z/2 + Z/3 is as valid as Z/6.
    The empty sum is the trivial group.
    """
    factors: Tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.factors)
        for d in factors:
            if d < 2:
                raise InvalidInputError(f"cyclic factors must be >= 2, got {d}")
        object.__setattr__(self, "factors", factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def cardinality(self) -> int:
        return prod(self.factors)

    @cached_property
    def moduli(self) -> np.ndarray:
        moduli = np.array(self.factors, dtype=np.int64)
        moduli.setflags(write=False)
        return moduli

    @property
    def spec(self) -> str:
        return "Z:" + ("x".join(str(d) for d in self.factors) if self.factors else "1")

    def element(self, residues: Sequence[int]) -> AbElement:
        """Validate a residue vector and return it as an AbElement"""
        residues = tuple(int(r) for r in residues)
        if len(residues) != self.rank:
            raise InvalidInputError(
                f"{self.spec} needs {self.rank} residues, got {len(residues)}"
            )
        for r, d in zip(residues, self.factors):
            if not 0 <= r < d:
                raise InvalidInputError(f"residue {r} out of range for Z/{d}")
        return residues

    def zero(self) -> AbElement:
        return (0,) * self.rank

    def add(self, a: AbElement, b: AbElement) -> AbElement:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def neg(self, a: AbElement) -> AbElement:
        return tuple((-x) % d for x, d in zip(a, self.factors))

    def scale(self, k: int, a: AbElement) -> AbElement:
        return tuple((k * x) % d for x, d in zip(a, self.factors))

    def is_two_torsion(self, a: AbElement) -> bool:
        return self.scale(2, a) == self.zero()

    def two_torsion(self) -> list[AbElement]:
        """H[2] = {h : 2h = 0} in lexicographic residue order"""
        choices = [(0, d // 2) if d % 2 == 0 else (0,) for d in self.factors]
        return [tuple(c) for c in itertools.product(*choices)]

    def enumerate(self, max_enum: int = DEFAULT_MAX_ENUM) -> Iterator[AbElement]:
        """All elements in lexicographic residue order"""
        if self.cardinality > max_enum:
            raise CapExceededError(f"enumeration of {self.spec}", self.cardinality, max_enum)
        return itertools.product(*(range(d) for d in self.factors))

    def elements_array(self, max_enum: int = DEFAULT_MAX_ENUM) -> np.ndarray:
        """enumerate() as an array of shape (|H|, rank)"""
        return np.array(list(self.enumerate(max_enum)), dtype=np.int64).reshape(self.cardinality, self.rank)

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.factors)


def hom_count_from_factors(a_factors: Sequence[int], target: AbelianTarget) -> int:
    """|Hom(Z/m_1 + ... + Z/m_r, H)| = prod over i, j of gcd(m_i, d_j)"""
    return prod(gcd(m, d) for m in a_factors for d in target.factors)
