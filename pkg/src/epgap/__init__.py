"""Exact minor packing/covering oracles, treewidth machinery, and win/win
packing-or-cover certificates at desk scale."""

from .bounds import BoundParams, ThOneBound, bound_th1, bound_th2, kostochka_threshold
from .epd import (
    Certificate,
    Separation,
    balanced_separation,
    cover_exact,
    epgap_winwin,
    hitting_set_recursive,
    pack_exact,
    verify_separation,
)
from .errors import (
    FormatError,
    ParameterError,
    PreconditionError,
    SizeLimitError,
    WitnessError,
)
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graphs import (
    Graph,
    MultiGraph,
    complete,
    complete_bipartite,
    contraction_degeneracy,
    cycle,
    degeneracy,
    disjoint_copies,
    generate,
    graph_hash,
    path,
    random_gnp,
    star,
    xi,
)
from .harness import LEMMA_IDS, VerificationReport, run_verification_suite
from .linkage import (
    LinkageWitness,
    PairedLinkage,
    linkage_to_pairs,
    mesh_to_linkage,
    pairs_to_k2r_models,
    pairs_to_xi_models,
    verify_linkage,
    verify_paired_linkage,
)
from .mesh import MeshWitness, find_mesh, verify_mesh
from .minors import (
    MinorModel,
    enumerate_minimal_models,
    find_minor_model,
    verify_model,
)
from .structure import (
    disjoint_multiedges,
    erdos_szekeres,
    low_degree_vertices,
    stiebitz_partition,
    tree_cut,
)
from .width import (
    NiceTreeDecomposition,
    TreeDecomposition,
    make_nice,
    pathwidth_exact,
    treewidth_exact,
    verify_decomposition,
    verify_nice,
)

__version__ = "0.1.0"

__all__ = [
    "BoundParams",
    "Certificate",
    "FormatError",
    "Graph",
    "LEMMA_IDS",
    "LinkageWitness",
    "MeshWitness",
    "MinorModel",
    "MultiGraph",
    "NiceTreeDecomposition",
    "PairedLinkage",
    "ParameterError",
    "PreconditionError",
    "Separation",
    "SizeLimitError",
    "ThOneBound",
    "TreeDecomposition",
    "VerificationReport",
    "WitnessError",
    "balanced_separation",
    "bound_th1",
    "bound_th2",
    "complete",
    "complete_bipartite",
    "contraction_degeneracy",
    "cover_exact",
    "cycle",
    "degeneracy",
    "disjoint_copies",
    "disjoint_multiedges",
    "enumerate_minimal_models",
    "epgap_winwin",
    "erdos_szekeres",
    "find_mesh",
    "find_minor_model",
    "generate",
    "graph_hash",
    "hitting_set_recursive",
    "kostochka_threshold",
    "linkage_to_pairs",
    "low_degree_vertices",
    "make_nice",
    "mesh_to_linkage",
    "pack_exact",
    "pairs_to_k2r_models",
    "pairs_to_xi_models",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "pathwidth_exact",
    "random_gnp",
    "run_verification_suite",
    "star",
    "stiebitz_partition",
    "tree_cut",
    "treewidth_exact",
    "verify_decomposition",
    "verify_linkage",
    "verify_mesh",
    "verify_model",
    "verify_nice",
    "verify_paired_linkage",
    "verify_separation",
    "write_edge_list",
    "write_graph6",
    "xi",
]
