"""
Exact integer linear algebra: Smith normal form and kernels modulo d

All matrices hold Python ints (numpy object arrays), so entries never
overflow during elimination.
"""

import itertools
import logging
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from config.constants import DEFAULT_MAX_ENUM, DETERMINANT_CHECK_LIMIT, MAX_SNF_ENTRIES
from core.errors import CapExceededError, ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)


def _object_array(data) -> np.ndarray:
    arr = np.asarray(data)
    if arr.dtype != object:
        # astype(object) turns numpy scalars into Python ints
        arr = arr.astype(object)
    if arr.ndim != 2:
        raise InvalidInputError(f"expected a 2-d matrix, got shape {arr.shape}")
    return arr


def _identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


@dataclass(frozen=True, eq=False)
class IntMatrix:
    """Dense integer matrix with arbitrary-precision entries"""
    entries: np.ndarray

    def __post_init__(self):
        entries = self.entries
        if not (isinstance(entries, np.ndarray) and entries.dtype == object and entries.ndim == 2):
            entries = _object_array(entries)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int) -> "IntMatrix":
        if not rows:
            return cls(np.zeros((0, cols), dtype=object))
        return cls(_object_array(rows))

    @classmethod
    def from_numpy(cls, arr: np.ndarray) -> "IntMatrix":
        return cls(np.asarray(arr).astype(object))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    def tolist(self) -> list:
        return self.entries.tolist()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InvalidInputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return IntMatrix(np.zeros((self.rows, other.cols), dtype=object))
        return IntMatrix(np.dot(self.entries, other.entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool((self.entries == other.entries).all())

    __hash__ = None


@dataclass(frozen=True, eq=False)
class SnfDecomposition:
    """U * A * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ..."""
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        n = min(self.S.rows, self.S.cols)
        return tuple(int(self.S.entries[i, i]) for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for s in self.diagonal if s != 0)


@dataclass(frozen=True)
class ModKernel:
    """
    Kernel of an integer matrix modulo d.

    Every kernel vector is sum c_i * basis[i] (mod d) for exactly one choice of
    0 <= c_i < orders[i].
    """
    modulus: int
    basis: Tuple[Tuple[int, ...], ...]
    orders: Tuple[int, ...]
    cardinality: int
    cols: int

    def elements(self, max_enum: int = DEFAULT_MAX_ENUM) -> Iterator[Tuple[int, ...]]:
        """Kernel vectors in lexicographic order of their coordinates"""
        if self.cardinality > max_enum:
            raise CapExceededError("kernel enumeration", self.cardinality, max_enum)
        basis = np.array(self.basis, dtype=np.int64).reshape(len(self.basis), self.cols)
        for coeffs in itertools.product(*(range(o) for o in self.orders)):
            vec = (np.array(coeffs, dtype=np.int64) @ basis) % self.modulus if self.basis else np.zeros(self.cols, dtype=np.int64)
            yield tuple(int(v) for v in vec)


# ==================== SMITH NORMAL FORM ====================

def _min_abs_pivot(S: np.ndarray, s: int) -> Optional[Tuple[int, int]]:
    """Smallest nonzero |entry| of S[s:, s:]; ties go to the lowest row, then column"""
    sub = S[s:, s:]
    if sub.size == 0:
        return None
    nonzero = sub != 0
    if not nonzero.any():
        return None
    magnitudes = np.abs(sub)
    smallest = magnitudes[nonzero].min()
    i, j = np.argwhere(nonzero & (magnitudes == smallest))[0]
    return s + int(i), s + int(j)


def smith_normal_form(matrix: IntMatrix, max_entries: int = MAX_SNF_ENTRIES) -> SnfDecomposition:
    """
    Smith normal form by elementary row and column operations.

    Pivots are chosen by minimal absolute value; remainders smaller than the
    pivot trigger a fresh pivot search until the pivot row and column clear.
    """
    rows, cols = matrix.rows, matrix.cols
    if rows * cols > max_entries:
        raise CapExceededError("Smith normal form entries", rows * cols, max_entries)

    S = matrix.entries.copy()
    U = _identity(rows)
    V = _identity(cols)
    s = 0
    while s < min(rows, cols):
        pivot = _min_abs_pivot(S, s)
        if pivot is None:
            break
        i, j = pivot
        if i != s:
            S[[s, i]] = S[[i, s]]
            U[[s, i]] = U[[i, s]]
        if j != s:
            S[:, [s, j]] = S[:, [j, s]]
            V[:, [s, j]] = V[:, [j, s]]

        p = S[s, s]
        q = S[s + 1:, s] // p
        if q.size:
            S[s + 1:] -= q[:, None] * S[s][None, :]
            U[s + 1:] -= q[:, None] * U[s][None, :]
        q = S[s, s + 1:] // p
        if q.size:
            S[:, s + 1:] -= S[:, s][:, None] * q[None, :]
            V[:, s + 1:] -= V[:, s][:, None] * q[None, :]

        if (S[s + 1:, s] != 0).any() or (S[s, s + 1:] != 0).any():
            continue  # a remainder is now the smallest entry

        rest = S[s + 1:, s + 1:]
        if rest.size:
            stuck = np.argwhere(rest % p != 0)
            if len(stuck):
                k = s + 1 + int(stuck[0][0])
                S[s] += S[k]
                U[s] += U[k]
                continue
        if p < 0:
            S[s] = -S[s]
            U[s] = -U[s]
        s += 1

    logger.debug("SNF of %dx%d matrix, rank %d", rows, cols, s)
    return SnfDecomposition(IntMatrix(U), IntMatrix(S), IntMatrix(V))


def integer_determinant(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination"""
    n = matrix.rows
    if n != matrix.cols:
        raise InvalidInputError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [[int(x) for x in row] for row in matrix.entries.tolist()]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // previous
        previous = M[k][k]
    return sign * M[n - 1][n - 1]


def check_snf(matrix: IntMatrix, snf: SnfDecomposition) -> None:
    """
    Raise ConsistencyError unless U * A * V = S, S is a diagonal divisibility
    chain with non-negative entries, and |det U| = |det V| = 1 (the determinant
    is only computed up to DETERMINANT_CHECK_LIMIT).
    """
    if snf.U @ matrix @ snf.V != snf.S:
        raise ConsistencyError("U * A * V != S")
    S = snf.S.entries
    off = S.copy()
    for i in range(min(S.shape)):
        off[i, i] = 0
    if off.size and (off != 0).any():
        raise ConsistencyError("S is not diagonal")
    diagonal = snf.diagonal
    if any(d < 0 for d in diagonal):
        raise ConsistencyError("negative entry on the SNF diagonal")
    for a, b in zip(diagonal, diagonal[1:]):
        if (a == 0 and b != 0) or (a != 0 and b % a != 0):
            raise ConsistencyError(f"divisibility chain broken at {a}, {b}")
    for name, unimodular in (("U", snf.U), ("V", snf.V)):
        if unimodular.rows <= DETERMINANT_CHECK_LIMIT and abs(integer_determinant(unimodular)) != 1:
            raise ConsistencyError(f"{name} is not unimodular")


# ==================== KERNELS ====================

def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b) >= 0"""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _combine(a: dict, ka: int, b: dict, kb: int) -> dict:
    """ka * a + kb * b on sparse rows"""
    out = {}
    for col in a.keys() | b.keys():
        v = ka * a.get(col, 0) + kb * b.get(col, 0)
        if v:
            out[col] = v
    return out


def row_lattice_basis(matrix: Union[IntMatrix, np.ndarray]) -> IntMatrix:
    """
    Echelon basis of the Z-span of the rows, at most `cols` rows.

    Only unimodular row operations are used, so the basis has the same kernel
    as the input modulo every d.
    """
    entries = matrix.entries if isinstance(matrix, IntMatrix) else np.asarray(matrix)
    cols = int(entries.shape[1])
    pivots: dict = {}
    for raw in entries:
        row = {int(c): int(raw[c]) for c in np.flatnonzero(raw)}
        while row:
            lead = min(row)
            if lead not in pivots:
                pivots[lead] = row if row[lead] > 0 else {c: -v for c, v in row.items()}
                break
            piv = pivots[lead]
            a, b = piv[lead], row[lead]
            if b % a == 0:
                row = _combine(row, 1, piv, -(b // a))
                continue
            g, x, y = _ext_gcd(a, b)
            pivots[lead] = _combine(piv, x, row, y)
            row = _combine(row, a // g, piv, -(b // g))
    basis = []
    for lead in sorted(pivots):
        dense = [0] * cols
        for c, v in pivots[lead].items():
            dense[c] = v
        basis.append(dense)
    logger.debug("row lattice: %d rows -> %d", entries.shape[0], len(basis))
    return IntMatrix.from_rows(basis, cols)


def kernel_from_snf(snf: SnfDecomposition, modulus: int) -> ModKernel:
    """
    Kernel mod d from U * A * V = S: w = V^-1 v must satisfy s_i * w_i = 0 (mod d),
    so w_i runs over multiples of d / gcd(s_i, d); coordinates past the rank are free.
    """
    if modulus < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {modulus}")
    cols = snf.V.rows
    diagonal = snf.diagonal
    basis = []
    orders = []
    for i in range(cols):
        s_i = diagonal[i] if i < len(diagonal) else 0
        order = gcd(s_i, modulus)
        if order == 1:
            continue
        step = modulus // order
        column = snf.V.entries[:, i]
        basis.append(tuple(int(v * step) % modulus for v in column))
        orders.append(order)
    return ModKernel(
        modulus=modulus,
        basis=tuple(basis),
        orders=tuple(orders),
        cardinality=prod(orders),
        cols=cols,
    )


def kernel_mod(matrix: IntMatrix, modulus: int) -> ModKernel:
    """{v in (Z/d)^cols : A v = 0 mod d}"""
    if modulus < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {modulus}")
    return kernel_from_snf(smith_normal_form(row_lattice_basis(matrix)), modulus)


def in_kernel(matrix: IntMatrix, vector: Sequence[int], modulus: int) -> bool:
    """Membership by re-multiplying and reducing"""
    if matrix.rows == 0:
        return True
    product = np.dot(matrix.entries, np.array(list(vector), dtype=object).reshape(-1)) if matrix.cols else np.zeros(matrix.rows, dtype=object)
    return all(int(v) % modulus == 0 for v in product)
