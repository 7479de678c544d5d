"""(1,-1) M-matrices obtained from base matrices by a parity sign map."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange
from .modmat import BaseMatrix, Matrix, MatrixType


class SignConvention(enum.Enum):
    Standard = "standard"
    Flipped = "flipped"

    @classmethod
    def parse(cls, text: str | SignConvention) -> SignConvention:
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower()
        for member in cls:
            if key == member.value:
                return member
        raise ValueError(f"unknown sign convention {text!r}")


def sign_of(value: int, mtype: MatrixType, convention: SignConvention) -> int:
    """Map one base entry to +1/-1.

    Standard Type I keeps 1 as +1, evens to +1, other odds to -1.
    Standard Type II sends evens to +1 and every odd (1 included) to -1.
    Flipped swaps the roles of odd and even; under Type I the value 1 is odd
    and so stays +1, under Type II it becomes +1 as well.
    """
    odd = value % 2 == 1
    if convention is SignConvention.Standard:
        if mtype is MatrixType.TypeI and value == 1:
            return 1
        return -1 if odd else 1
    return 1 if odd else -1


@dataclass(frozen=True)
class SignMatrix:
    n: int
    mtype: MatrixType
    convention: SignConvention
    entries: Matrix

    def row(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"row {i} outside 1..{self.n}")
        return self.entries[i - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


def sign_matrix(
    base: BaseMatrix, convention: SignConvention | str = SignConvention.Standard
) -> SignMatrix:
    convention = SignConvention.parse(convention)
    entries = tuple(
        tuple(sign_of(a, base.mtype, convention) for a in row) for row in base.entries
    )
    return SignMatrix(base.n, base.mtype, convention, entries)


def base_parity(m: SignMatrix) -> tuple[tuple[int, ...], ...]:
    """Recover ``a_ij mod 2`` of the base matrix from the signs alone.

    Under Type I the entries equal to 1 sit exactly in the first row and
    column, which is what makes the inversion possible there.
    """
    odd_sign = -1 if m.convention is SignConvention.Standard else 1
    out = []
    for i, row in enumerate(m.entries):
        parities = []
        for j, s in enumerate(row):
            if m.mtype is MatrixType.TypeI and (i == 0 or j == 0):
                parities.append(1)
            else:
                parities.append(1 if s == odd_sign else 0)
        out.append(tuple(parities))
    return tuple(out)


def row_sign_counts(m: SignMatrix, row: int) -> tuple[int, int]:
    r = m.row(row)
    plus = sum(1 for s in r if s == 1)
    return plus, len(r) - plus


def determinant(m: SignMatrix | Matrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    rows = m.entries if isinstance(m, SignMatrix) else m
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def kronecker(a: SignMatrix | np.ndarray, b: SignMatrix | np.ndarray) -> np.ndarray:
    """Plain Kronecker product, returned as an untyped +/-1 array.

    The result has composite order, so it is deliberately not a SignMatrix.
    """
    left = a.as_array() if isinstance(a, SignMatrix) else np.asarray(a)
    right = b.as_array() if isinstance(b, SignMatrix) else np.asarray(b)
    return np.kron(left, right)
