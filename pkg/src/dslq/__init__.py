"""Distance signless Laplacian spectra, fractional matchings and graph factors."""

from ._kernels import BACKEND
from .errors import (
    DistanceUndefinedError,
    DslqError,
    InvalidMatrixError,
    InvalidParameterError,
    InvalidPartitionError,
    ParseError,
    SizeLimitError,
    UnsupportedOrderError,
)
from .graph import (
    Graph,
    complement,
    delete_vertices,
    disjoint_union,
    is_connected,
    isolated_count,
    join,
    make_named,
)
from .io import from_edgelist, from_graph6, parse_graph, to_edgelist, to_graph6
from .matching import (
    DeficiencyWitness,
    FractionalMatching,
    bipartite_double_cover,
    find_factor_backtracking,
    fractional_matching_number_brute,
    fractional_matching_number_fast,
    has_k2ck_factor,
    max_deficiency_brute,
    optimal_fractional_matching,
)
from .quotient import (
    Partition,
    QuotientMatrix,
    char_poly_coeffs,
    is_equitable,
    quotient_largest_eigenvalue,
    quotient_matrix,
)
from .spectra import (
    Spectrum,
    distance_matrix,
    dsl_matrix,
    eta,
    full_spectrum,
    spectral_radius,
    transmissions,
)

__version__ = "0.1.0"
