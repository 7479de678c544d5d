import pytest

from mmatrix.design import IncidenceMatrix, incidence
from mmatrix.graph import bipartite_graph, check_regular, connected_components, to_incidence
from mmatrix.modmat import MatrixType, base_matrix, is_admissible_order
from mmatrix.signmat import sign_matrix

T1, T2 = MatrixType.TypeI, MatrixType.TypeII


def graph_of(n, mtype):
    return bipartite_graph(incidence(sign_matrix(base_matrix(n, mtype))))


@pytest.mark.parametrize("n,mtype,size,degree,edges", [
    (5, T1, 4, 2, 8),
    (7, T1, 6, 3, 18),
    (11, T1, 10, 5, 50),
    (4, T2, 4, 2, 8),
    (6, T2, 6, 3, 18),
])
def test_graph_parameters(n, mtype, size, degree, edges):
    rep = check_regular(graph_of(n, mtype))
    assert (rep.is_regular, rep.degree, rep.left_size, rep.right_size, rep.edge_count) == (
        True, degree, size, size, edges)


def test_labels_do_not_collide():
    g = graph_of(5, T1)
    assert g.left == (1, 2, 3, 4)
    assert g.right == (5, 6, 7, 8)
    assert (1, 5) in g.edges and (1, 6) not in g.edges
    assert g.block_index(7) == 3


def test_single_edge_is_not_regular():
    g = bipartite_graph(IncidenceMatrix.from_rows([[1, 0], [0, 0]]))
    rep = check_regular(g)
    assert not rep.is_regular
    assert rep.degree is None
    assert rep.edge_count == 1


def test_components():
    assert len(connected_components(graph_of(5, T1))) == 1
    assert len(connected_components(graph_of(6, T2))) == 1
    empty = bipartite_graph(IncidenceMatrix.from_rows([[0, 0], [0, 0]]))
    assert connected_components(empty) == [[1], [2], [3], [4]]
    two = bipartite_graph(IncidenceMatrix.from_rows([[1, 0], [0, 1]]))
    assert connected_components(two) == [[1, 3], [2, 4]]


@pytest.mark.parametrize("n,mtype", [(n, T1) for n in range(5, 62) if is_admissible_order(n, T1)]
                         + [(n, T2) for n in range(4, 61) if is_admissible_order(n, T2)])
def test_regular_and_bipartite_over_range(n, mtype):
    g = graph_of(n, mtype)
    rep = check_regular(g)
    size = n - 1 if mtype is T1 else n
    assert rep.is_regular and rep.degree == size // 2
    assert rep.edge_count == size * (size // 2)
    left = set(g.left)
    assert all((a in left) != (c in left) for a, c in g.edges)
    assert to_incidence(g).cells == incidence(sign_matrix(base_matrix(n, mtype))).cells
