"""Perfect colorings of graphs, multigraphs, and hypergraphs.

A perfect coloring (equitable partition) assigns one of m colors to each
vertex so that the number of edges from a vertex of color i into color
class j, counted with multiplicity, depends only on the pair (i, j).
This package verifies such colorings exactly, builds the classical graph
and hypergraph families where they arise, and checks the translations
between perfect colorings and combinatorial designs, difference sets,
strongly regular graphs, Hadamard matrices, and bent functions.

All arithmetic on adjacency data is integer; spectral bounds use exact
rationals whenever the extreme eigenvalue snaps to an integer.
"""

from .multigraph import (
    DirectedMultigraph,
    Multigraph,
    Coloring,
    QuotientMatrix,
    NotEquitable,
    quotient_matrix,
    is_perfect,
    verify_quotient,
    merge_colors,
    lift_quotient_eigenvector,
    two_coloring_eigenfunction,
)
from .spectral import (
    Spectrum,
    spectrum,
    min_eigenvalue,
    dh_bound,
    DHReport,
    check_dh_extremal,
    delsarte_clique_bound,
)
from .hypergraphs import (
    Hypergraph,
    BipartiteGraph,
    incidence_bipartite,
    m12,
    line_multigraph,
    PerfectHypergraphReport,
    NotPerfect,
    hypergraph_is_perfect,
    induce_edge_coloring,
    restrict_bipartite_coloring,
    verify_transversal,
    transversal_quotient,
)
from .families import (
    ksubsets,
    complete_graph,
    cycle_graph,
    path_graph,
    johnson,
    petersen,
    design_hypergraph,
    johnson_design_multigraph,
    gaussian_binomial,
    rref_gf,
    Subspace,
    enumerate_subspaces,
    grassmann,
    subspace_design_hypergraph,
    triangle_hypergraph,
    int_to_vec,
    vec_to_int,
    delta_hypergraph,
    delta_edge_to_subspace,
    AbelianGroup,
    cayley,
)
from .designs import (
    BlockDesign,
    SubspaceDesign,
    design_violation,
    verify_design,
    subspace_design_violation,
    verify_subspace_design,
    design_quotient_actual,
    design_quotient_reference,
    subspace_design_quotient_actual,
    subspace_design_quotient_reference,
    QuotientComparison,
    design_quotient_report,
    subspace_design_quotient_report,
    design_to_coloring,
    subspace_design_to_coloring,
    steiner_independence_check,
    HadamardMatrix,
    verify_hadamard,
    sylvester,
    paley_hadamard,
    hadamard_to_design,
    fano,
)
from .difference_sets import (
    GroupFunction,
    convolve,
    PDSParams,
    NotPDS,
    pds_params_from_set,
    verify_pds,
    SRGParams,
    NotSRG,
    verify_srg,
    srg_gamma_coloring,
    pds_delta_coloring,
    difference_set_to_symmetric_design,
    CayleySRGReport,
    cayley_srg_bridge,
)
from .bent import (
    BooleanFunction,
    walsh_transform,
    sign_autoconvolution,
    is_bent,
    bent_to_difference_set,
    PairSpectrum,
    pair_spectrum,
    theorem_avg_matrix,
    merged_two_coloring_matrix,
    bent_to_grassmann_coloring,
    grassmann_coloring_to_bent,
    infer_ones_count_labeling,
    bent_delta_coloring,
)
from .serialize import load, save, to_json, from_json

__version__ = "0.1.0"

__all__ = [
    "DirectedMultigraph",
    "Multigraph",
    "Coloring",
    "QuotientMatrix",
    "NotEquitable",
    "quotient_matrix",
    "is_perfect",
    "verify_quotient",
    "merge_colors",
    "lift_quotient_eigenvector",
    "two_coloring_eigenfunction",
    "Spectrum",
    "spectrum",
    "min_eigenvalue",
    "dh_bound",
    "DHReport",
    "check_dh_extremal",
    "delsarte_clique_bound",
    "Hypergraph",
    "BipartiteGraph",
    "incidence_bipartite",
    "m12",
    "line_multigraph",
    "PerfectHypergraphReport",
    "NotPerfect",
    "hypergraph_is_perfect",
    "induce_edge_coloring",
    "restrict_bipartite_coloring",
    "verify_transversal",
    "transversal_quotient",
    "ksubsets",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "johnson",
    "petersen",
    "design_hypergraph",
    "johnson_design_multigraph",
    "gaussian_binomial",
    "rref_gf",
    "Subspace",
    "enumerate_subspaces",
    "grassmann",
    "subspace_design_hypergraph",
    "triangle_hypergraph",
    "int_to_vec",
    "vec_to_int",
    "delta_hypergraph",
    "delta_edge_to_subspace",
    "AbelianGroup",
    "cayley",
    "BlockDesign",
    "SubspaceDesign",
    "design_violation",
    "verify_design",
    "subspace_design_violation",
    "verify_subspace_design",
    "design_quotient_actual",
    "design_quotient_reference",
    "subspace_design_quotient_actual",
    "subspace_design_quotient_reference",
    "QuotientComparison",
    "design_quotient_report",
    "subspace_design_quotient_report",
    "design_to_coloring",
    "subspace_design_to_coloring",
    "steiner_independence_check",
    "HadamardMatrix",
    "verify_hadamard",
    "sylvester",
    "paley_hadamard",
    "hadamard_to_design",
    "fano",
    "GroupFunction",
    "convolve",
    "PDSParams",
    "NotPDS",
    "pds_params_from_set",
    "verify_pds",
    "SRGParams",
    "NotSRG",
    "verify_srg",
    "srg_gamma_coloring",
    "pds_delta_coloring",
    "difference_set_to_symmetric_design",
    "CayleySRGReport",
    "cayley_srg_bridge",
    "BooleanFunction",
    "walsh_transform",
    "sign_autoconvolution",
    "is_bent",
    "bent_to_difference_set",
    "PairSpectrum",
    "pair_spectrum",
    "theorem_avg_matrix",
    "merged_two_coloring_matrix",
    "bent_to_grassmann_coloring",
    "grassmann_coloring_to_bent",
    "infer_ones_count_labeling",
    "bent_delta_coloring",
    "load",
    "save",
    "to_json",
    "from_json",
]
