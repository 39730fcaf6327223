"""Immersion testing, structure classification, and exhaustive verification
for small loopless multigraphs."""

from .catalog import Catalog, CatalogEntry, catalog_from_json, default_catalog
from .connectivity import (
    is_internally_k_edge_connected,
    is_k_edge_connected,
    lambda_profile,
    mader_split_pair,
)
from .errors import GraphFormatError, HypothesisViolation, UnclassifiedGraph
from .immersion import (
    Witness,
    complete4,
    decide_immersion,
    diamond,
    doubled_cycle,
    immerses,
    pattern_from_name,
    verify_witness,
    wheel4,
)
from .multigraph import Multigraph
from .reduction import full_reduction, sausage_reduce
from .structure import (
    classify_dm,
    classify_k4,
    classify_rooted_w4,
    classify_w4,
)
from .treewidth import treewidth_exact
from .verifier import (
    ObstructionCatalog,
    VerificationReport,
    enumerate_rooted,
    generate_catalog,
    generate_simple_graphs,
    load_simple_graphs,
    minimal_assignments,
    obstruction,
    packaged_simple_graphs,
    repair,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "CatalogEntry",
    "GraphFormatError",
    "HypothesisViolation",
    "Multigraph",
    "ObstructionCatalog",
    "UnclassifiedGraph",
    "VerificationReport",
    "Witness",
    "catalog_from_json",
    "classify_dm",
    "classify_k4",
    "classify_rooted_w4",
    "classify_w4",
    "complete4",
    "decide_immersion",
    "default_catalog",
    "diamond",
    "doubled_cycle",
    "enumerate_rooted",
    "full_reduction",
    "generate_catalog",
    "generate_simple_graphs",
    "immerses",
    "is_internally_k_edge_connected",
    "is_k_edge_connected",
    "lambda_profile",
    "load_simple_graphs",
    "mader_split_pair",
    "minimal_assignments",
    "obstruction",
    "packaged_simple_graphs",
    "pattern_from_name",
    "repair",
    "sausage_reduce",
    "treewidth_exact",
    "verify_theorem",
    "verify_witness",
    "wheel4",
    "__version__",
]
