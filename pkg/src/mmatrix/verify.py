"""Per-order invariant checks.

Each order yields a list of asserted checks (every one must hold) and a list
of findings, which are reported but never fail a run: missing orthogonal
numbers, orthogonal pairs that are only half realized, orders where the
concurrence classes do not form an association scheme, and the Type II
determinant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import design as dz
from . import graph as gr
from . import modmat as mm
from . import ortho as ot
from . import signmat as sm
from .modmat import MatrixType


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class OrderResult:
    n: int
    mtype: MatrixType
    checks: list[Check] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))


def verifiable_orders(mtype: MatrixType, lo: int, hi: int) -> list[int]:
    """Admissible orders in ``[lo, hi]``; Type I skips 2, since every parity
    count needs an odd order."""
    out = []
    for n in range(max(lo, 2), hi + 1):
        if not mm.is_admissible_order(n, mtype):
            continue
        if mtype is MatrixType.TypeI and n == 2:
            continue
        out.append(n)
    return out


def _base_checks(res: OrderResult, base: mm.BaseMatrix) -> None:
    n, e = base.n, base.entries
    res.add("base symmetric", mm.is_symmetric(e))
    if base.mtype is MatrixType.TypeI:
        res.add("base first row and column all 1",
                all(x == 1 for x in e[0]) and all(row[0] == 1 for row in e))
        res.add("base rows 2..n permute 1..n",
                all(mm.is_permutation_of_1_to_n(row) for row in e[1:]))
    else:
        cols = list(zip(*e))
        res.add("base rows and columns permute 1..n",
                all(mm.is_permutation_of_1_to_n(x) for x in list(e) + cols))
    diag = mm.diagonal(base)
    res.add("diagonal matches closed form", diag == mm.diagonal_closed_form(n, base.mtype))
    res.add("diagonal palindrome", mm.diagonal_is_palindromic(diag, base.mtype))


def _sign_checks(res: OrderResult, m: sm.SignMatrix, base: mm.BaseMatrix) -> None:
    n = m.n
    counts = [sm.row_sign_counts(m, i) for i in range(1, n + 1)]
    sums = [sum(row) for row in m.entries]
    col_sums = [sum(col) for col in zip(*m.entries)]
    if m.mtype is MatrixType.TypeI:
        res.add("rows 2..n have (n+1)/2 plus, (n-1)/2 minus",
                all(c == ((n + 1) // 2, (n - 1) // 2) for c in counts[1:]))
        res.add("row and column sums n, 1, ..., 1",
                sums == [n] + [1] * (n - 1) and col_sums == sums)
        det = sm.determinant(m)
        want = -4 if n == 3 else 0
        res.add("determinant", det == want, f"{det} (expected {want})")
    else:
        res.add("rows have n/2 plus, n/2 minus", all(c == (n // 2, n // 2) for c in counts))
        res.add("row and column sums 0", set(sums) == {0} and set(col_sums) == {0})
        res.findings.append(f"determinant = {sm.determinant(m)}")
    parity = tuple(tuple(a % 2 for a in row) for row in base.entries)
    res.add("sign map recovers base parity", sm.base_parity(m) == parity)


def _ortho_checks(res: OrderResult, m: sm.SignMatrix) -> None:
    n, mtype = m.n, m.mtype
    rep = ot.ortho_report(m)
    g = rep.gram
    res.add("gram diagonal = n", all(g[i][i] == n for i in range(n)))
    start = 1 if mtype is MatrixType.TypeI else 0
    if mtype is MatrixType.TypeI:
        res.add("gram first row = 1", all(g[0][j] == 1 for j in range(1, n)))
        res.add("opposite rows give 2 - n",
                all(x == 2 - n for _, x in ot.opposite_row_products(m)))
    off = [g[i][j] for i in range(start, n) for j in range(i + 1, n)]
    theo = set(rep.theoretical)
    res.add("off-diagonal gram in spectrum", all(x in theo for x in off))
    residue = ot.congruence_class(n, mtype)
    res.add("off-diagonal gram mod 4", all(x % 4 == residue for x in off))
    want = (n + 1) // 2 if mtype is MatrixType.TypeI else 0
    total = ot.spectrum_sum(n, mtype)
    res.add("spectrum sum", total == want, f"{total} (expected {want})")
    res.add("orthogonal pair sums",
            all(a + b == rep.pair_sum for a, b in rep.pairs))
    if rep.missing:
        res.findings.append(f"missing orthogonal numbers {list(rep.missing)}")
    split = [o.pair for o in rep.cooccurrence if not o.together]
    if split:
        res.findings.append(f"orthogonal pairs realized on one side only {split}")


def _design_checks(res: OrderResult, m: sm.SignMatrix) -> None:
    n = m.n
    d = dz.build_design(m)
    expect_v = n - 1 if m.mtype is MatrixType.TypeI else n
    expect_r = expect_v // 2
    res.add("design v = b", d.v == d.b == expect_v, f"v={d.v} b={d.b}")
    res.add("design r = k", d.r == d.k == expect_r, f"r={d.r} k={d.k}")
    for ident in d.identities:
        res.add(f"design {ident.name}", ident.passed, f"{ident.lhs} vs {ident.rhs}")
    if not d.scheme.valid:
        res.findings.append(
            f"concurrence classes {list(d.scheme.lambdas)} are not an association "
            f"scheme: {d.scheme.failure_witness}")

    g = gr.bipartite_graph(d.incidence)
    reg = gr.check_regular(g)
    res.add("graph regular", reg.is_regular and reg.degree == expect_r,
            f"degree {reg.degree}")
    res.add("graph size", (reg.left_size, reg.right_size, reg.edge_count)
            == (expect_v, expect_v, expect_v * expect_r))
    res.add("graph round trip", gr.to_incidence(g).cells == d.incidence.cells)


def verify_order(n: int, mtype: MatrixType) -> OrderResult:
    res = OrderResult(n, mtype)
    base = mm.base_matrix(n, mtype)
    m = sm.sign_matrix(base)
    _base_checks(res, base)
    _sign_checks(res, m, base)
    _ortho_checks(res, m)
    smallest = 5 if mtype is MatrixType.TypeI else 4
    if n >= smallest:
        _design_checks(res, m)
    return res


def verify_range(mtype: MatrixType, lo: int, hi: int) -> list[OrderResult]:
    return [verify_order(n, mtype) for n in verifiable_orders(mtype, lo, hi)]
