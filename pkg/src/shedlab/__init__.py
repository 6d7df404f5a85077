"""shedlab: vertex decomposability, shedding sets and exhaustive graph censuses."""
from .canon import canonical_form, canonical_key
from .census import (
    CensusReport,
    ClassificationRecord,
    census_report,
    classify,
    enumerate_connected,
    find_q12_failures,
)
from .constructions import (
    CliquePartition,
    FamilySpec,
    InvalidPartition,
    circulant,
    clique_append,
    clique_whisker,
    duplicate_vertex,
    expand,
    gen_Dn,
    gen_Ln,
    gen_Pm,
    whisker,
)
from .decomposability import (
    NotVertexDecomposable,
    VDCache,
    Witness,
    decomposition_witness,
    is_vertex_decomposable,
    shed_is_dominating,
    shedding_set,
    verify_witness,
)
from .graph import (
    BadParameter,
    Graph,
    GraphError,
    InvalidEdge,
    OutOfRange,
    connected_components,
    delete_closed_neighborhood,
    delete_vertex,
    from_edges,
    girth,
    induced_subgraph,
)
from .graph6 import BadGraph6, ingest_graph6, parse_graph6, to_graph6
from .independence import (
    HVector,
    TooLarge,
    h_vector,
    independent_set_counts,
    is_dominating_set,
    is_very_well_covered,
    is_well_covered,
    maximal_independent_sets,
)
from .structure import (
    NotVeryWellCovered,
    check_vwc_labeling,
    is_chordal,
    pc_membership,
    simplex_partition,
    simplicial_vertices,
    vwc_labeling,
)

__version__ = "0.1.0"
