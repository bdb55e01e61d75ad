"""Non-cut subcontinua of finite graphs: classification, brute-force hyperspace
oracle, constructive paths and non-compactness certificates."""
from .atlas import AtlasEntry, atlas_run, canonical_form, connected_multigraphs
from .classify import (
    FTClassification,
    Form,
    Lemma5Witness,
    NotFTReason,
    classify,
    lemma5_witness,
    ncstar_compact,
    ncstar_connected,
    ncstar_equals_C,
    validate_witness,
)
from .cuts import BlockCutTree, CutPointSummary, block_cut_tree, is_tangle, topological_cut_points
from .errors import *  # noqa: F401,F403
from .graph import AtVertex, EdgeMap, GraphPoint, OnEdge, TopoGraph, build_graph, point_distance, smooth, subdivide
from .hyperspace import (
    EDGE_BUDGET,
    HyperspaceGraph,
    NoncompactnessCertificate,
    certificate_family,
    discretize,
    enumerate_connected,
    enumerate_ncstar,
    hyperspace_components,
    noncompactness_certificate,
    oracle_verdict,
    star_move_adjacent,
)
from .paths import FrontierAnalysis, NCPath, VerificationReport, frontier_analysis, ft_path, tangle_path, verify_path
from .region import (
    ComplementReport,
    Region,
    complement_components,
    distance_to_region,
    hausdorff_distance,
    is_noncut,
    region_connected,
    region_from_subgraph,
    subgraph_from_region,
)
from .report import export, region_from_json, region_to_json
from .subgraph import Subgraph

__version__ = "0.1.0"
