"""Exact graded Betti numbers of edge ideals of graphs."""

from .betti import (
    BettiTable,
    beta2_count,
    betti_table,
    eagon_reiner,
    forest_betti,
    forest_pd,
    forest_top_betti,
    graded_euler_polynomial,
    hilbert_numerator_from_fvector,
    hochster,
    join_convolution,
    pd_from_table,
)
from .complex import (
    EMPTY,
    VOID,
    SimplicialComplex,
    alexander_dual_faces,
    dual_link_epsilon,
    epsilon_complex,
    f_vector,
    independence_complex,
    induced_subcomplex,
    link,
)
from .graph import (
    Graph,
    Pivot,
    canonical_code,
    connected_components,
    count_induced,
    delete_vertices,
    find_pivot,
    is_forest,
    parse_graph,
    spanning_trees,
)
from .homology import GF2, GF3, QQ, FieldSpec, HomologyProfile, boundary_matrix, rank, reduced_homology_dims
from .invariants import (
    CheckReport,
    cross_validate,
    field_independence_check,
    pg_polynomial,
    pivot_independence_check,
)
from .polynomial import IntPolynomial

__version__ = "0.1.0"
