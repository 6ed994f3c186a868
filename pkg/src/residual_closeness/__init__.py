"""Closeness and link residual closeness of graphs, with Harary-graph closed forms."""

from .closed_forms import (
    DeltaResult,
    UncoveredRegimeError,
    closeness_cycle,
    closeness_path,
    delta_link,
    family_of,
    geometric_identity,
    residual_closed_form_h2,
)
from .closeness import (
    ResidualReport,
    closeness,
    closeness_after_link_removal,
    edge_deletion_closeness,
    link_residual_closeness,
    normalized_residual,
)
from .dyadic import DyadicValue
from .graph import (
    DistanceRow,
    Edge,
    Graph,
    add_edge,
    all_pairs_distances,
    bfs_distances,
    new_graph,
    remove_edge,
)
from .harary import HararyParams, ParityCase, harary, validate

__version__ = "0.1.0"
