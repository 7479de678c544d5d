"""Brute-force reference computations.

Nothing here calls into the arithmetic of the main modules; only the data
types are shared.  These are slow on purpose and meant for small orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .design import AssociationScheme, IncidenceMatrix
from .errors import OrderTooLarge
from .signmat import SignMatrix

MAX_COFACTOR_ORDER = 10


@dataclass(frozen=True)
class OracleVerdict:
    subject: str
    main_value: object
    oracle_value: object

    @property
    def agree(self) -> bool:
        return self.main_value == self.oracle_value


def _rows(m):
    return m.entries if isinstance(m, SignMatrix) else m


def oracle_gram(m) -> tuple[tuple[int, ...], ...]:
    rows = _rows(m)
    n = len(rows)
    out = []
    for i in range(n):
        line = []
        for j in range(n):
            total = 0
            for t in range(len(rows[i])):
                total += rows[i][t] * rows[j][t]
            line.append(total)
        out.append(tuple(line))
    return tuple(out)


def oracle_determinant(m) -> int:
    """Laplace expansion along successive rows, memoised on the set of
    columns still available."""
    rows = _rows(m)
    n = len(rows)
    if n > MAX_COFACTOR_ORDER:
        raise OrderTooLarge(f"cofactor expansion limited to order {MAX_COFACTOR_ORDER}, got {n}")

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> int:
        if row == n:
            return 1
        total = 0
        for pos, c in enumerate(sorted(cols)):
            a = rows[row][c]
            if a:
                sign = -1 if pos % 2 else 1
                total += sign * a * minor(row + 1, cols - {c})
        return total

    return minor(0, frozenset(range(n)))


def oracle_scheme(inc: IncidenceMatrix) -> AssociationScheme:
    cells = inc.cells
    v = len(cells)
    lam = {}
    for a in range(v):
        for b in range(v):
            if a != b:
                lam[a, b] = sum(1 for c in range(len(cells[a])) if cells[a][c] and cells[b][c])
    values = sorted(set(lam.values()))
    m = len(values)
    cls = {pair: values.index(x) + 1 for pair, x in lam.items()}

    # counts[i][a] = number of i-th associates of symbol a
    counts = [[sum(1 for b in range(v) if b != a and cls[a, b] == i) for a in range(v)]
              for i in range(1, m + 1)]
    # table[(a, b)][j][l] over every ordered triple a, b, g
    table = {}
    for a in range(v):
        for b in range(a + 1, v):
            t = [[0] * m for _ in range(m)]
            for g in range(v):
                if g != a and g != b:
                    t[cls[a, g] - 1][cls[b, g] - 1] += 1
            table[a, b] = tuple(tuple(r) for r in t)

    witness = None
    for i in range(m):
        if len(set(counts[i])) > 1:
            witness = witness or f"class {i + 1}: associate counts vary {sorted(set(counts[i]))}"
    P = []
    for i in range(1, m + 1):
        pairs = [p for p in sorted(table) if cls[p] == i]
        P.append(table[pairs[0]])
        if len({table[p] for p in pairs}) > 1:
            witness = witness or f"class {i}: P differs between pairs"

    class_of = {(a + 1, b + 1): cls[a, b] for a in range(v) for b in range(a + 1, v)}
    n = tuple(counts[i][0] for i in range(m)) if v else ()
    return AssociationScheme(v, m, tuple(values), class_of, n, tuple(P),
                             witness is None, witness)
