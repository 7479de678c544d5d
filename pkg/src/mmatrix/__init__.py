"""(1,-1) M-matrices from modular multiplication tables.

Build the Type I and Type II matrices, study their orthogonal numbers, and
read off symmetric PBIB designs and regular bipartite graphs.
"""

from .design import (
    AssociationScheme,
    IncidenceMatrix,
    PBIBDesign,
    build_design,
    concurrence_matrix,
    incidence,
    infer_scheme,
    validate_pbib,
)
from .errors import (
    DegenerateDesign,
    InadmissibleOrder,
    IndexOutOfRange,
    MMatrixError,
    OrderTooLarge,
    WrongConvention,
    WrongType,
)
from .graph import BipartiteGraph, bipartite_graph, check_regular, connected_components
from .modmat import BaseMatrix, MatrixType, base_matrix, diagonal, is_admissible_order
from .ortho import (
    OrthoReport,
    gram,
    inner_product,
    opposite_row_products,
    ortho_report,
    orthogonal_pairs,
    realized_spectrum,
    spectrum_sum,
    theoretical_spectrum,
    trivial_numbers,
)
from .signmat import (
    SignConvention,
    SignMatrix,
    determinant,
    kronecker,
    row_sign_counts,
    sign_matrix,
)

__version__ = "0.1.0"
