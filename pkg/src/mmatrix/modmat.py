"""Integer base matrices built from the two modular multiplication tables.

Type I (``n`` prime) uses ``a_ij = 1 + (i-1)(j-1) mod n`` and Type II
(``n + 1`` prime) uses ``a_ij = i*j mod (n+1)``.  Indices are 1-based in
every public function; entries always lie in ``1..n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .errors import InadmissibleOrder, IndexOutOfRange

Matrix = tuple[tuple[int, ...], ...]


class MatrixType(enum.Enum):
    TypeI = "I"
    TypeII = "II"

    @classmethod
    def parse(cls, text: str | MatrixType) -> MatrixType:
        if isinstance(text, cls):
            return text
        key = str(text).strip().upper()
        for member in cls:
            if key in (member.value, member.name.upper()):
                return member
        raise ValueError(f"unknown matrix type {text!r}; expected I or II")


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def is_admissible_order(n: int, mtype: MatrixType) -> bool:
    if n < 2:
        return False
    if mtype is MatrixType.TypeI:
        return is_prime(n)
    return is_prime(n + 1)


def admissibility_message(n: int, mtype: MatrixType) -> str:
    if mtype is MatrixType.TypeI:
        return f"{n} is not prime (Type I needs a prime order)"
    return f"{n + 1} is not prime (Type II needs n+1 prime, got n={n})"


def require_admissible(n: int, mtype: MatrixType) -> None:
    if not is_admissible_order(n, mtype):
        raise InadmissibleOrder(admissibility_message(n, mtype))


@dataclass(frozen=True)
class BaseMatrix:
    n: int
    mtype: MatrixType
    entries: Matrix

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexOutOfRange(f"({i}, {j}) outside 1..{self.n}")
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"row {i} outside 1..{self.n}")
        return self.entries[i - 1]


def _type1_entry(i: int, j: int, n: int) -> int:
    # +1 shift maps residues 0..n-1 onto 1..n
    return (i - 1) * (j - 1) % n + 1


def _type2_entry(i: int, j: int, n: int) -> int:
    return i * j % (n + 1)


def base_matrix(n: int, mtype: MatrixType | str) -> BaseMatrix:
    """Build the ``n x n`` integer table for the given type.

    Raises :class:`InadmissibleOrder` when the order fails the primality gate.
    """
    mtype = MatrixType.parse(mtype)
    require_admissible(n, mtype)
    f = _type1_entry if mtype is MatrixType.TypeI else _type2_entry
    entries = tuple(
        tuple(f(i, j, n) for j in range(1, n + 1)) for i in range(1, n + 1)
    )
    return BaseMatrix(n, mtype, entries)


def diagonal(base: BaseMatrix) -> tuple[int, ...]:
    return tuple(base.entries[x][x] for x in range(base.n))


def diagonal_closed_form(n: int, mtype: MatrixType) -> tuple[int, ...]:
    """Principal diagonal from its polynomial, without building the matrix.

    Type I: ``x^2 - 2x + 2 mod n`` with residue 0 written as ``n``.
    Type II: ``x^2 mod (n+1)``.
    """
    if mtype is MatrixType.TypeI:
        return tuple((x * x - 2 * x + 1) % n + 1 for x in range(1, n + 1))
    return tuple(x * x % (n + 1) for x in range(1, n + 1))


def diagonal_is_palindromic(diag: tuple[int, ...], mtype: MatrixType) -> bool:
    """Type I: everything after the first entry reads the same reversed.
    Type II: the whole diagonal does."""
    tail = diag[1:] if mtype is MatrixType.TypeI else diag
    return tail == tail[::-1]


def is_symmetric(entries: Matrix) -> bool:
    n = len(entries)
    return all(entries[i][j] == entries[j][i] for i in range(n) for j in range(i))


def is_permutation_of_1_to_n(seq) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))
