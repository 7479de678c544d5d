"""Symmetric PBIB designs extracted from M-matrices.

The incidence matrix is read off the M-matrix (Type I after dropping the
all-ones first row and column) with +1 -> 1 and -1 -> 0.  Rows are
treatments, columns are blocks.  Pairs of treatments are grouped into
associate classes by their concurrence, classes numbered by ascending
lambda, and every scheme parameter is obtained by counting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDesign, WrongConvention
from .modmat import Matrix, MatrixType
from .signmat import SignConvention, SignMatrix

Pair = tuple[int, int]


@dataclass(frozen=True)
class IncidenceMatrix:
    v: int
    b: int
    cells: Matrix
    provenance: tuple[MatrixType, int, SignConvention] | None = None

    @classmethod
    def from_rows(cls, rows) -> IncidenceMatrix:
        cells = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(len(cells), len(cells[0]) if cells else 0, cells)

    def row_weights(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.cells)

    def column_weights(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.cells))


def incidence(m: SignMatrix) -> IncidenceMatrix:
    if m.convention is not SignConvention.Standard:
        raise WrongConvention("designs are extracted from standard-convention matrices only")
    rows = m.entries
    if m.mtype is MatrixType.TypeI:
        rows = tuple(row[1:] for row in rows[1:])
    cells = tuple(tuple(1 if s == 1 else 0 for s in row) for row in rows)
    return IncidenceMatrix(len(cells), len(cells[0]) if cells else 0, cells,
                           (m.mtype, m.n, m.convention))


def concurrence_matrix(inc: IncidenceMatrix) -> Matrix:
    rows = inc.cells
    return tuple(
        tuple(sum(x * y for x, y in zip(ra, rb)) for rb in rows) for ra in rows
    )


@dataclass(frozen=True)
class AssociationScheme:
    """Associate classes inferred from a concurrence matrix.

    ``n`` and ``P`` hold the values seen at the first symbol and at the first
    pair (lexicographically) of each class.  When ``valid`` is false they are
    representatives only and ``failure_witness`` says what varied.
    """

    v: int
    m: int
    lambdas: tuple[int, ...]
    class_of: dict[Pair, int]
    n: tuple[int, ...]
    P: tuple[Matrix, ...]
    valid: bool
    failure_witness: str | None = None

    def lambda_of(self, i: int) -> int:
        return self.lambdas[i - 1]

    def p(self, i: int, j: int, l: int) -> int:
        return self.P[i - 1][j - 1][l - 1]

    def signature(self) -> tuple:
        return (self.v, self.lambdas, self.n, self.P, self.valid)


def infer_scheme(conc: Matrix) -> AssociationScheme:
    c = np.asarray(conc, dtype=np.int64)
    v = c.shape[0]
    off = ~np.eye(v, dtype=bool)
    lambdas = tuple(int(x) for x in np.unique(c[off])) if v > 1 else ()
    m = len(lambdas)
    labels = np.zeros((v, v), dtype=np.int64)
    for idx, lam in enumerate(lambdas, start=1):
        labels[(c == lam) & off] = idx
    adj = [(labels == i).astype(np.int64) for i in range(1, m + 1)]

    class_of = {
        (a + 1, b + 1): int(labels[a, b]) for a in range(v) for b in range(a + 1, v)
    }
    witness = None

    counts = np.stack([A.sum(axis=1) for A in adj]) if m else np.zeros((0, v))
    n = tuple(int(counts[i, 0]) for i in range(m)) if v else ()
    for i in range(m):
        bad = np.nonzero(counts[i] != counts[i, 0])[0]
        if bad.size and witness is None:
            s = int(bad[0])
            witness = (f"n_{i + 1} not constant: symbol 1 has {n[i]} "
                       f"associates of class {i + 1}, symbol {s + 1} has {int(counts[i, s])}")

    # (A_j A_l)[a, b] counts symbols that are j-th associates of a and l-th of b
    prods = [[adj[j] @ adj[l] for l in range(m)] for j in range(m)]
    upper = np.triu(np.ones((v, v), dtype=bool), 1)
    P = []
    for i in range(1, m + 1):
        where = np.argwhere((labels == i) & upper)
        a0, b0 = (int(x) for x in where[0])
        Pi = tuple(tuple(int(prods[j][l][a0, b0]) for l in range(m)) for j in range(m))
        P.append(Pi)
        if witness is not None:
            continue
        for j in range(m):
            for l in range(m):
                vals = prods[j][l][where[:, 0], where[:, 1]]
                bad = np.nonzero(vals != Pi[j][l])[0]
                if bad.size and witness is None:
                    a, b = (int(x) for x in where[bad[0]])
                    witness = (
                        f"p^{i}_{j + 1}{l + 1} depends on the pair: "
                        f"{Pi[j][l]} for ({a0 + 1},{b0 + 1}) but "
                        f"{int(vals[bad[0]])} for ({a + 1},{b + 1})"
                    )
    return AssociationScheme(v, m, lambdas, class_of, n, tuple(P), witness is None, witness)


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: object
    rhs: object
    relation: str = "="

    @property
    def passed(self) -> bool:
        if self.relation == "<":
            return self.lhs < self.rhs
        if self.relation == "in":
            lo, hi = self.rhs
            return all(lo <= x <= hi for x in self.lhs)
        return self.lhs == self.rhs


def lambda_bounds(mtype: MatrixType, n: int) -> tuple[int, int]:
    top = (n - 3) // 2 if mtype is MatrixType.TypeI else (n - 2) // 2
    return 0, top


def check_identities(v, b, r, k, lambdas, n, P, cells=None, bounds=None) -> list[Identity]:
    """Every counting identity of an m-class PBIB design, evaluated on the
    given parameters.  Works on plain values so that serialized reports can
    be re-checked."""
    m = len(lambdas)
    out = [
        Identity("vr = bk", v * r, b * k),
        Identity("k < v", k, v, "<"),
        Identity("sum n_i = v - 1", sum(n), v - 1),
        Identity("sum n_i lambda_i = r(k - 1)",
                 sum(ni * li for ni, li in zip(n, lambdas)), r * (k - 1)),
    ]
    for i in range(m):
        for j in range(m):
            out.append(Identity(
                f"sum_l p^{i + 1}_{j + 1}l = n_{j + 1} - delta_{i + 1}{j + 1}",
                sum(P[i][j]), n[j] - (1 if i == j else 0)))
    if cells is not None:
        out.append(Identity("entries binary",
                            all(x in (0, 1) for row in cells for x in row), True))
        out.append(Identity("row weights = r", sorted(set(sum(row) for row in cells)), [r]))
        out.append(Identity("column weights = k",
                            sorted(set(sum(col) for col in zip(*cells))), [k]))
    if bounds is not None:
        out.append(Identity("lambda range", tuple(lambdas), tuple(bounds), "in"))
    return out


@dataclass(frozen=True)
class PBIBDesign:
    incidence: IncidenceMatrix
    r: int
    k: int
    scheme: AssociationScheme
    lambda_range_ok: bool | None
    identities: tuple[Identity, ...]

    @property
    def v(self) -> int:
        return self.incidence.v

    @property
    def b(self) -> int:
        return self.incidence.b

    @property
    def symmetric(self) -> bool:
        return self.incidence.v == self.incidence.b


@dataclass(frozen=True)
class ValidationReport:
    identities: tuple[Identity, ...]
    scheme_valid: bool
    failure_witness: str | None

    @property
    def passed(self) -> bool:
        return self.scheme_valid and all(x.passed for x in self.identities)

    def failures(self) -> list[Identity]:
        return [x for x in self.identities if not x.passed]


def design_from_incidence(inc: IncidenceMatrix) -> PBIBDesign:
    rows, cols = inc.row_weights(), inc.column_weights()
    r = rows[0] if rows else 0
    k = cols[0] if cols else 0
    scheme = infer_scheme(concurrence_matrix(inc))
    bounds = None
    if inc.provenance is not None:
        mtype, n, _ = inc.provenance
        bounds = lambda_bounds(mtype, n)
    identities = check_identities(inc.v, inc.b, r, k, scheme.lambdas, scheme.n,
                                  scheme.P, inc.cells, bounds)
    range_ok = None
    if bounds is not None:
        range_ok = next(x.passed for x in identities if x.name == "lambda range")
    return PBIBDesign(inc, r, k, scheme, range_ok, tuple(identities))


def build_design(m: SignMatrix) -> PBIBDesign:
    smallest = 5 if m.mtype is MatrixType.TypeI else 4
    if m.n < smallest:
        raise DegenerateDesign(
            f"order {m.n} leaves blocks of size 1; designs need n >= {smallest}")
    return design_from_incidence(incidence(m))


def validate_pbib(d: PBIBDesign) -> ValidationReport:
    return ValidationReport(d.identities, d.scheme.valid, d.scheme.failure_witness)
