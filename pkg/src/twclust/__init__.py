"""twclust: how many communities does a blockmodel graph contain?

The test statistic is the largest eigenvalue of the centered, scaled
adjacency matrix, whose null distribution (flat random graph) converges to
the Tracy-Widom law with index one.  A bootstrap moment correction makes
the test usable at small sizes, and recursive bipartitioning turns it into
a hierarchical clustering that stops splitting exactly when no subgraph
rejects the flat null.
"""

from .errors import (
    DegenerateBootstrapError,
    DegenerateDensityError,
    DegenerateGraphError,
    EigensolverError,
    GraphInputError,
    IsolatedNodeError,
    TwclustError,
)
from .graphs import (
    Graph,
    NodeSubset,
    build_graph,
    estimate_edge_density,
    induced_subgraph,
    read_edge_list,
    remove_isolated_nodes,
    write_edge_list,
)
from .htest import (
    SweepSpec,
    TestConfig,
    TestReport,
    pvalue_sweep,
    run_test,
    test_graph,
)
from .metrics import (
    adjusted_rand_index,
    cluster_f_measure,
    hierarchical_f_measure,
    read_flat_labels,
    read_truth_sets,
)
from .models import ErParams, GoeSample, SbmParams, sample_er, sample_goe, sample_sbm
from .partition import (
    ClusterTree,
    PartitionConfig,
    density_ordering,
    flatten_leaves,
    leaf_labels,
    recursive_bipartition,
    spectral_bipartition,
    tree_to_dict,
    tree_to_json,
    validate_tree,
)
from .spectral import (
    TestStatistic,
    Variant,
    adjacency_statistic,
    bulk_spectrum,
    centered_matvec,
    laplacian_statistic,
    largest_eigenvalue_centered,
    semicircle_density,
)
from .tracy_widom import (
    TW1_MEAN,
    TW1_STD,
    Tw1Distribution,
    tw1_cdf,
    tw1_distribution,
    tw1_moments,
    tw1_quantile,
    tw1_survival,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "TwclustError", "GraphInputError", "DegenerateGraphError",
    "DegenerateDensityError", "IsolatedNodeError", "DegenerateBootstrapError",
    "EigensolverError",
    # graphs
    "Graph", "NodeSubset", "build_graph", "estimate_edge_density",
    "induced_subgraph", "remove_isolated_nodes", "read_edge_list",
    "write_edge_list",
    # models
    "ErParams", "SbmParams", "GoeSample", "sample_er", "sample_sbm",
    "sample_goe",
    # spectral
    "TestStatistic", "Variant", "centered_matvec",
    "largest_eigenvalue_centered", "adjacency_statistic",
    "laplacian_statistic", "semicircle_density", "bulk_spectrum",
    # tracy-widom
    "Tw1Distribution", "tw1_distribution", "tw1_cdf", "tw1_survival",
    "tw1_quantile", "tw1_moments", "TW1_MEAN", "TW1_STD",
    # hypothesis test
    "TestConfig", "TestReport", "run_test", "test_graph", "SweepSpec",
    "pvalue_sweep",
    # partition
    "ClusterTree", "PartitionConfig", "spectral_bipartition",
    "recursive_bipartition", "flatten_leaves", "leaf_labels",
    "density_ordering", "validate_tree", "tree_to_dict", "tree_to_json",
    # metrics
    "adjusted_rand_index", "cluster_f_measure", "hierarchical_f_measure",
    "read_truth_sets", "read_flat_labels",
]
