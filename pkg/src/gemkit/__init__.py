"""Edge-coloured graph encodings of coloured triangulations.

A (d+1)-colourful graph is a bipartite (d+1)-regular multigraph whose
edges are properly coloured by [1..d+1]; it encodes a coloured
d-dimensional triangulation whose cells are the graph's residues.  This
package validates such graphs, computes component-count tables, genus and
rational homology of the encoded complexes, performs dipole reductions,
answers three-valued sphere and manifold questions with certificates,
builds explicit manifold families, samples uniformly, and runs exhaustive
small-n censuses against independent oracles.
"""

from .census import (
    CLASSES,
    CensusReport,
    ExtensionBoundReport,
    LabelledCensus,
    LemmaBoundsReport,
    StatsReport,
    VnRow,
    all_perfect_matchings,
    classify,
    compose_inverse,
    enumerate_census,
    enumerate_labelled,
    harmonic_number,
    mean_cycles_uniform,
    tuple_count,
    verify_extension_bound,
    verify_lemma_bounds,
    vn_experiment,
)
from .constructions import (
    ConstructionParams,
    PartialGraph,
    build_G0,
    build_manifold,
    build_planar_family,
    family_size_lower_bound,
    random_construction_params,
    random_graph,
)
from .dipoles import (
    DipoleMove,
    ReductionTrace,
    find_dipoles,
    melonic_reduce,
    remove_dipole,
    replay,
)
from .errors import (
    BadParams,
    BudgetExceeded,
    Disconnected,
    FormatError,
    GemkitError,
    InvalidColourSet,
    InvalidMove,
    LengthMismatch,
    NotABijection,
    NotAComponent,
    NotAConstructionGraph,
    NotBipartite,
    OddDimension,
    OddN,
    PreconditionFailed,
    RangeError,
)
from .formats import PALETTE, parse_cgf, to_dot, write_cgf
from .graph import (
    ColourfulGraph,
    ColourSet,
    EmbeddedResidue,
    KappaTable,
    ResiduePartition,
    colour_deleted_components,
    complex_vertex_count,
    count_cycles,
    f_vector,
    from_coloured_edges,
    from_matchings,
    genus_of_residue,
    has_property_P,
    is_connected,
    kappa_r,
    kappa_table,
    residue_subgraph,
    residues,
)
from .homology import BettiVector, OrderComplex, betti_numbers, order_complex, sphere_vector
from .verdicts import (
    LemmaWitness,
    Status,
    TopologyVerdict,
    euler_poincare_check,
    is_manifold,
    is_rational_homology_sphere,
    is_sphere,
    lemma1_witness,
    lemma2_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BadParams",
    "BettiVector",
    "BudgetExceeded",
    "CLASSES",
    "CensusReport",
    "ColourSet",
    "ColourfulGraph",
    "ConstructionParams",
    "DipoleMove",
    "Disconnected",
    "EmbeddedResidue",
    "ExtensionBoundReport",
    "FormatError",
    "GemkitError",
    "InvalidColourSet",
    "InvalidMove",
    "KappaTable",
    "LabelledCensus",
    "LemmaBoundsReport",
    "LemmaWitness",
    "LengthMismatch",
    "NotABijection",
    "NotAComponent",
    "NotAConstructionGraph",
    "NotBipartite",
    "OddDimension",
    "OddN",
    "OrderComplex",
    "PALETTE",
    "PartialGraph",
    "PreconditionFailed",
    "RangeError",
    "ReductionTrace",
    "ResiduePartition",
    "StatsReport",
    "Status",
    "TopologyVerdict",
    "VnRow",
    "all_perfect_matchings",
    "betti_numbers",
    "build_G0",
    "build_manifold",
    "build_planar_family",
    "classify",
    "colour_deleted_components",
    "complex_vertex_count",
    "compose_inverse",
    "count_cycles",
    "enumerate_census",
    "enumerate_labelled",
    "euler_poincare_check",
    "f_vector",
    "family_size_lower_bound",
    "find_dipoles",
    "from_coloured_edges",
    "from_matchings",
    "genus_of_residue",
    "harmonic_number",
    "has_property_P",
    "is_connected",
    "is_manifold",
    "is_rational_homology_sphere",
    "is_sphere",
    "kappa_r",
    "kappa_table",
    "lemma1_witness",
    "lemma2_witness",
    "mean_cycles_uniform",
    "melonic_reduce",
    "order_complex",
    "parse_cgf",
    "random_construction_params",
    "random_graph",
    "remove_dipole",
    "replay",
    "residue_subgraph",
    "residues",
    "sphere_vector",
    "to_dot",
    "tuple_count",
    "verify_extension_bound",
    "verify_lemma_bounds",
    "vn_experiment",
    "write_cgf",
]
