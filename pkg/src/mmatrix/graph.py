"""Bipartite graphs read off an incidence matrix.

Left vertices are treatments ``1..v``; right vertices are blocks, labelled
``v+1..v+b`` so the two parts never share a label.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .design import IncidenceMatrix


@dataclass(frozen=True)
class BipartiteGraph:
    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def offset(self) -> int:
        return len(self.left)

    def block_index(self, label: int) -> int:
        return label - self.offset

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.left + self.right, 0)
        for a, c in self.edges:
            deg[a] += 1
            deg[c] += 1
        return deg

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def left_degree(self) -> int | None:
        return _common(self.degrees()[x] for x in self.left)

    @property
    def right_degree(self) -> int | None:
        return _common(self.degrees()[x] for x in self.right)


def _common(values) -> int | None:
    seen = set(values)
    return seen.pop() if len(seen) == 1 else None


def bipartite_graph(inc: IncidenceMatrix) -> BipartiteGraph:
    v, b = inc.v, inc.b
    edges = frozenset(
        (alpha + 1, v + c + 1)
        for alpha, row in enumerate(inc.cells)
        for c, x in enumerate(row)
        if x == 1
    )
    return BipartiteGraph(tuple(range(1, v + 1)), tuple(range(v + 1, v + b + 1)), edges)


def to_incidence(g: BipartiteGraph) -> IncidenceMatrix:
    v, b = len(g.left), len(g.right)
    cells = [[0] * b for _ in range(v)]
    for a, c in g.edges:
        cells[a - 1][c - v - 1] = 1
    return IncidenceMatrix.from_rows(cells)


@dataclass(frozen=True)
class RegularityReport:
    is_regular: bool
    degree: int | None
    left_size: int
    right_size: int
    edge_count: int


def check_regular(g: BipartiteGraph) -> RegularityReport:
    degree = _common(g.degrees().values())
    return RegularityReport(
        is_regular=degree is not None,
        degree=degree,
        left_size=len(g.left),
        right_size=len(g.right),
        edge_count=len(g.edges),
    )


def connected_components(g: BipartiteGraph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest label."""
    nbrs: dict[int, list[int]] = {x: [] for x in g.left + g.right}
    for a, c in g.edges:
        nbrs[a].append(c)
        nbrs[c].append(a)
    seen: set[int] = set()
    comps = []
    for start in sorted(nbrs):
        if start in seen:
            continue
        seen.add(start)
        queue, comp = deque([start]), []
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps
