"""
Static indicators, community detection and their time series.
"""
from .community import (
    Partition,
    community_sizes,
    largest_community,
    local_moving_gains,
    louvain,
    modularity,
    partition_from_groups,
)
from .metrics import (
    MetricRow,
    StructuralIndices,
    average_degree,
    clustering,
    connected_components,
    degree_histogram,
    density,
    edge_node_ratio,
    path_metrics,
    power_law_slope,
    structural_indices,
    structural_indices_from_counts,
)
from .series import evaluate_snapshot, map_windows, metric_series
from .tracking import (
    CommunityTrackRow,
    measure_community,
    successor_community,
    track_largest_community,
)

__all__ = [
    # Metrics
    "MetricRow",
    "StructuralIndices",
    "average_degree",
    "clustering",
    "connected_components",
    "degree_histogram",
    "density",
    "edge_node_ratio",
    "path_metrics",
    "power_law_slope",
    "structural_indices",
    "structural_indices_from_counts",

    # Communities
    "Partition",
    "community_sizes",
    "largest_community",
    "local_moving_gains",
    "louvain",
    "modularity",
    "partition_from_groups",
    "CommunityTrackRow",
    "measure_community",
    "successor_community",
    "track_largest_community",

    # Series
    "evaluate_snapshot",
    "map_windows",
    "metric_series",
]
