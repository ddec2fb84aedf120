"""Exact computations in the combinatorial Hopf algebras of hypergraphs,
clutters and simplicial complexes."""

from .setfam import (
    EMPTY,
    BoundError,
    Clutter,
    Graph,
    Hypergraph,
    ValidationError,
    canonical_code,
    connected_components,
    contract,
    delete,
    discrete,
    disjoint_sum,
    from_code,
    is_building_set,
    is_discrete,
    minimal_edges,
    restrict,
)
from .hopf import (
    COUNIT,
    ZETA,
    ZETA_BAR,
    ZETA_INVERSE,
    Character,
    LinearCombo,
    antipode_recursive,
    antipode_takeuchi,
    coproduct,
    euler_character,
    iterated_coproduct,
    zeta_alpha,
    zeta_inverse,
)
from .symfun import (
    IntPolynomial,
    QSymElement,
    SymElement,
    chromatic_polynomial,
    d_lambda_psi,
    eval_chromatic,
    is_odd_sym,
    powersum_to_monomial,
    principal_specialization,
    psi,
    psi_powersum,
    qsym_multiply,
    transition_matrix,
)
from .complexes import (
    SimplicialComplex,
    boundary_simplex,
    euler_char_complex,
    independence_complex,
    intersection_graph,
    is_chordal,
    is_eulerian_complex,
    is_flag,
    join,
    minimal_nonfaces,
    nerve,
    partition_polynomial,
    simplex,
    zeta_K_alpha,
)
from .euler import (
    ClassificationReport,
    check_relation5,
    classify,
    in_odd_subalgebra,
    is_eulerian,
    is_eulerian_hypergraph_via_clutter,
    is_odd_clutter,
    odd_partition_property,
    satisfies_star,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY", "BoundError", "Clutter", "Graph", "Hypergraph", "ValidationError",
    "canonical_code", "connected_components", "contract", "delete", "discrete", "disjoint_sum",
    "from_code", "is_building_set", "is_discrete", "minimal_edges", "restrict", "COUNIT",
    "ZETA", "ZETA_BAR", "ZETA_INVERSE", "Character", "LinearCombo", "antipode_recursive",
    "antipode_takeuchi", "coproduct", "euler_character", "iterated_coproduct", "zeta_alpha",
    "zeta_inverse", "IntPolynomial", "QSymElement", "SymElement", "chromatic_polynomial",
    "d_lambda_psi", "eval_chromatic", "is_odd_sym", "powersum_to_monomial",
    "principal_specialization", "psi", "psi_powersum", "qsym_multiply", "transition_matrix",
    "SimplicialComplex", "boundary_simplex", "euler_char_complex", "independence_complex",
    "intersection_graph", "is_chordal", "is_eulerian_complex", "is_flag", "join",
    "minimal_nonfaces", "nerve", "partition_polynomial", "simplex", "zeta_K_alpha",
    "ClassificationReport", "check_relation5", "classify", "in_odd_subalgebra", "is_eulerian",
    "is_eulerian_hypergraph_via_clutter", "is_odd_clutter", "odd_partition_property",
    "satisfies_star", "__version__",
]
