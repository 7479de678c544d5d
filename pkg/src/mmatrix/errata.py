"""Known discrepancies between stated reference values and computed ones.

Each entry carries the stated value next to what the library computes, so a
report can flag it without failing.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import design as dz
from . import graph as gr
from . import modmat as mm
from . import ortho as ot
from . import signmat as sm
from .modmat import MatrixType


@dataclass(frozen=True)
class Erratum:
    key: str
    summary: str
    stated: dict
    computed: dict

    @property
    def confirmed(self) -> bool:
        """True when the computation really disagrees with the statement."""
        return self.stated != self.computed


def _design(n: int, mtype: MatrixType) -> dz.PBIBDesign:
    return dz.build_design(sm.sign_matrix(mm.base_matrix(n, mtype)))


def _classes(d: dz.PBIBDesign) -> dict:
    s = d.scheme
    return {
        "lambda": list(s.lambdas),
        "n": list(s.n),
        "P": [[list(r) for r in Pi] for Pi in s.P],
    }


def type2_spectrum_sum(n: int = 6) -> Erratum:
    return Erratum(
        "type2-spectrum-sum",
        "Type II orthogonal numbers 4k - n, k = 0..n/2, were stated to sum to "
        "(n+1)/2; the arithmetic progression is symmetric about 0.",
        {"n": n, "sum": (n + 1) / 2},
        {"n": n, "sum": ot.spectrum_sum(n, MatrixType.TypeII)},
    )


def type1_graph_size(n: int = 5) -> Erratum:
    g = gr.bipartite_graph(_design(n, MatrixType.TypeI).incidence)
    reg = gr.check_regular(g)
    return Erratum(
        "type1-graph-size",
        "Type I bipartite graph was stated to have 2n vertices and 2n edges with "
        "valence (n-1)/2; parts of size n at that valence would need n(n-1)/2 "
        "edges.  The graph built from the reduced incidence has parts of size "
        "n-1 and (n-1)^2/2 edges.",
        {"n": n, "vertices": 2 * n, "left": n, "right": n, "edges": 2 * n,
         "valence": (n - 1) // 2},
        {"n": n, "vertices": reg.left_size + reg.right_size, "left": reg.left_size,
         "right": reg.right_size, "edges": reg.edge_count, "valence": reg.degree},
    )


def type2_graph_size(n: int = 6) -> Erratum:
    g = gr.bipartite_graph(_design(n, MatrixType.TypeII).incidence)
    reg = gr.check_regular(g)
    return Erratum(
        "type2-graph-size",
        "Type II bipartite graph was stated to have n vertices split n/2 + n/2; "
        "an n x n incidence gives n + n.",
        {"n": n, "vertices": n, "left": n // 2, "right": n // 2, "valence": n // 2},
        {"n": n, "vertices": reg.left_size + reg.right_size, "left": reg.left_size,
         "right": reg.right_size, "valence": reg.degree},
    )


def n5_class_sizes() -> Erratum:
    d = _design(5, MatrixType.TypeI)
    return Erratum(
        "type1-n5-class-sizes",
        "Type I n=5: stated lambda_1 = 1, lambda_2 = 0 with n_1 = 1, n_2 = 2.  "
        "Each treatment has one partner it never meets and two it meets once, "
        "so the stated class sizes are transposed against the lambdas.",
        {"lambda": [1, 0], "n": [1, 2]},
        # computed sizes listed in the stated lambda order
        {"lambda": [1, 0], "n": [d.scheme.n[d.scheme.lambdas.index(lam)] for lam in (1, 0)]},
    )


def n4_class_sizes() -> Erratum:
    d = _design(4, MatrixType.TypeII)
    s = d.scheme
    # stated class order is lambda = (0, 1); report computed data in that order
    return Erratum(
        "type2-n4-class-sizes",
        "Type II n=4: stated lambda = (0, 1) with n = (2, 1) and P_1 = [[0,1],[1,0]], "
        "P_2 = [[2,0],[0,0]].  The stated n and P belong to lambda = (1, 0): each "
        "treatment meets one partner never and two partners once.",
        {"lambda": [0, 1], "n": [2, 1], "P": [[[0, 1], [1, 0]], [[2, 0], [0, 0]]]},
        _classes(d) if s.lambdas == (0, 1) else {},
    )


def n11_missing_pair() -> Erratum:
    rep = ot.ortho_report(sm.sign_matrix(mm.base_matrix(11, MatrixType.TypeI)))
    return Erratum(
        "type1-n11-missing-pair",
        "Type I n=11: the unrealized orthogonal pair was written as (-5, 17); "
        "17 is outside the spectrum and the pair partner of -5 is 7.",
        {"missing": [-5, 17]},
        {"missing": list(rep.missing)},
    )


def all_errata() -> list[Erratum]:
    return [
        type2_spectrum_sum(),
        type1_graph_size(),
        type2_graph_size(),
        n5_class_sizes(),
        n4_class_sizes(),
        n11_missing_pair(),
    ]
