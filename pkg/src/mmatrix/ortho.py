"""Orthogonal numbers: row inner products of an M-matrix and their spectra.

A Type I matrix has orthogonal numbers ``4k + 2 - n`` for
``0 <= k <= (n-1)/2`` and a Type II matrix ``4k - n`` for ``0 <= k <= n/2``.
Only some of these are realized by an actual matrix; the rest are reported
as missing.  The self product ``n`` and, for Type I, the first-row product
``1`` are trivial and kept out of the realized map.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IndexOutOfRange, InadmissibleOrder, WrongType
from .modmat import Matrix, MatrixType, require_admissible
from .signmat import SignMatrix

Pair = tuple[int, int]


def _require_analysable(n: int, mtype: MatrixType) -> None:
    require_admissible(n, mtype)
    if mtype is MatrixType.TypeI and n % 2 == 0:
        raise InadmissibleOrder("Type I spectrum analysis needs an odd prime order")


def gram(m: SignMatrix) -> Matrix:
    a = m.as_array()
    g = a @ a.T
    return tuple(tuple(int(x) for x in row) for row in g)


def inner_product(m: SignMatrix, i: int, j: int) -> int:
    for idx in (i, j):
        if not 1 <= idx <= m.n:
            raise IndexOutOfRange(f"row {idx} outside 1..{m.n}")
    return sum(x * y for x, y in zip(m.entries[i - 1], m.entries[j - 1]))


def gram_by_inner_products(m: SignMatrix) -> Matrix:
    n = m.n
    return tuple(
        tuple(inner_product(m, i, j) for j in range(1, n + 1)) for i in range(1, n + 1)
    )


def _k_max(n: int, mtype: MatrixType) -> int:
    return (n - 1) // 2 if mtype is MatrixType.TypeI else n // 2


def orthogonal_number(k: int, n: int, mtype: MatrixType) -> int:
    return 4 * k + 2 - n if mtype is MatrixType.TypeI else 4 * k - n


def theoretical_spectrum(n: int, mtype: MatrixType | str) -> tuple[int, ...]:
    mtype = MatrixType.parse(mtype)
    _require_analysable(n, mtype)
    return tuple(orthogonal_number(k, n, mtype) for k in range(_k_max(n, mtype) + 1))


def congruence_class(n: int, mtype: MatrixType) -> int:
    """Residue mod 4 shared by every orthogonal number of this order."""
    return (2 - n) % 4 if mtype is MatrixType.TypeI else (-n) % 4


def _first_nontrivial_row(mtype: MatrixType) -> int:
    # Type I row 1 is all ones; its products are the trivial value 1
    return 2 if mtype is MatrixType.TypeI else 1


def realized_spectrum(m: SignMatrix, g: Matrix | None = None) -> dict[int, list[Pair]]:
    """Map each realized orthogonal number to the row pairs ``(i, j)``, i < j,
    that achieve it.  Keys are sorted ascending."""
    g = gram(m) if g is None else g
    start = _first_nontrivial_row(m.mtype)
    found: dict[int, list[Pair]] = {}
    for i in range(start, m.n + 1):
        for j in range(i + 1, m.n + 1):
            found.setdefault(g[i - 1][j - 1], []).append((i, j))
    return dict(sorted(found.items()))


@dataclass(frozen=True)
class TrivialNumbers:
    self_product: int
    first_row_product: int | None


def trivial_numbers(m: SignMatrix) -> TrivialNumbers:
    first = 1 if m.mtype is MatrixType.TypeI else None
    return TrivialNumbers(self_product=m.n, first_row_product=first)


def opposite_row_products(m: SignMatrix) -> list[tuple[Pair, int]]:
    """Inner products of rows ``2+i`` and ``n-i``; each should be ``2 - n``."""
    if m.mtype is not MatrixType.TypeI:
        raise WrongType("opposite row products are defined for Type I only")
    out = []
    for i in range((m.n - 3) // 2 + 1):
        a, b = 2 + i, m.n - i
        out.append(((a, b), inner_product(m, a, b)))
    return out


def orthogonal_pairs(n: int, mtype: MatrixType | str) -> list[Pair]:
    """Pairs ``(g(t1), g(t2))`` with ``t1 + t2`` equal to the largest k.

    A self-paired middle value is emitted as ``(g, g)``.  Ordered by ``t1``.
    """
    mtype = MatrixType.parse(mtype)
    _require_analysable(n, mtype)
    top = _k_max(n, mtype)
    return [
        (orthogonal_number(t, n, mtype), orthogonal_number(top - t, n, mtype))
        for t in range(top // 2 + 1)
    ]


def spectrum_sum(n: int, mtype: MatrixType | str) -> int:
    return sum(theoretical_spectrum(n, mtype))


@dataclass(frozen=True)
class PairOccurrence:
    pair: Pair
    first_realized: bool
    second_realized: bool

    @property
    def together(self) -> bool:
        return self.first_realized == self.second_realized


@dataclass(frozen=True)
class OrthoReport:
    n: int
    mtype: MatrixType
    gram: Matrix
    theoretical: tuple[int, ...]
    realized: dict[int, list[Pair]]
    missing: tuple[int, ...]
    pairs: list[Pair]
    trivial: TrivialNumbers
    cooccurrence: list[PairOccurrence] = field(default_factory=list)

    @property
    def pair_sum(self) -> int:
        return 2 if self.mtype is MatrixType.TypeI else 0


def ortho_report(m: SignMatrix) -> OrthoReport:
    theo = theoretical_spectrum(m.n, m.mtype)
    g = gram(m)
    realized = realized_spectrum(m, g)
    # n is only reachable by identical rows, which never occur
    missing = tuple(x for x in theo if x not in realized and x != m.n)
    pairs = orthogonal_pairs(m.n, m.mtype)
    occurrence = [
        PairOccurrence((a, b), a in realized, b in realized) for a, b in pairs
    ]
    return OrthoReport(
        n=m.n,
        mtype=m.mtype,
        gram=g,
        theoretical=theo,
        realized=realized,
        missing=missing,
        pairs=pairs,
        trivial=trivial_numbers(m),
        cooccurrence=occurrence,
    )
