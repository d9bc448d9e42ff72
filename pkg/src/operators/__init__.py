from operators.matrices import (
    IncidenceMatrix,
    Operator,
    SymmetricMatrix,
    adjacency_matrix,
    build_operator,
    degree_matrix,
    exact_trace,
    hyperedge_kirchhoff_laplacian,
    hyperedge_normalized_laplacian,
    incidence_matrix,
    kirchhoff_laplacian,
    normalized_laplacian,
)
from operators.export import matrix_to_csv, matrix_to_matrix_market
