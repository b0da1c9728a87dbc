"""Well-covered direct products of graphs."""

from ._wcprod import (
    CapacityError,
    Error,
    Graph,
    GraphError,
    ParseError,
    __version__,
    alpha,
    claim_ids,
    direct_product,
    family,
    family_tags,
    i_number,
    is_very_well_covered,
    is_well_covered,
    isolatable_vertices,
    kn_alpha_i,
    maximal_independent_sets,
    run_suite,
    verify_claim,
    well_covered_report,
)

__all__ = [
    "CapacityError",
    "Error",
    "Graph",
    "GraphError",
    "ParseError",
    "__version__",
    "alpha",
    "claim_ids",
    "direct_product",
    "family",
    "family_tags",
    "i_number",
    "is_very_well_covered",
    "is_well_covered",
    "isolatable_vertices",
    "kn_alpha_i",
    "maximal_independent_sets",
    "run_suite",
    "verify_claim",
    "well_covered_report",
]
