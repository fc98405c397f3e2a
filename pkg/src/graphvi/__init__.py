"""Graph-aware comparison of clusterings.

Three indices are provided: the variation of information (:func:`vi`),
the random walk index (:func:`rwi`) and the variation of information
with neighbors (:func:`vin`).
"""

from .clustering import Clustering, set_partitions, single_cluster, singletons
from .graphs import (
    chain_adjacency,
    chain_graph,
    gaussian_similarity,
    grid_similarity,
    sample_gaussian,
    threshold_adjacency,
)
from .metrics import (
    ConfusionMatrix,
    SplitSpec,
    apply_split,
    conditional_entropy,
    confusion_matrix,
    entropy,
    mutual_information,
    split_entropy,
    vi,
    vi_from_mutual_information,
    weighted_vi,
)
from .random_walk import (
    SimilarityGraph,
    TransitionModel,
    TripleDistribution,
    cluster_transitions,
    rwi,
    transition_model,
    triple_joint,
)
from .vin import AdjacencyGraph, NeighborhoodSignature, Refinement, refine, signatures, vin

__version__ = "0.1.0"
