"""Distinctiveness, Beta and Gamma centrality on sparse undirected graphs."""

from .centrality import (ConvergenceError, Metric, MetricSpec, ScoreVector,
                         beta_centrality, compute, d1, d2, d3, d4, d5,
                         dominant_eigenvalue, gamma_centrality, harmonize)
from .generators import (Family, GeneratorConfig, WeightConfig,
                         assign_weights, derive_seeds, gen_erdos_renyi,
                         gen_scale_free, gen_small_world, generate)
from .graph import (EdgeListError, Graph, NodeLabelMap, read_edge_list,
                    write_edge_list)
from .stats import Histogram, histogram, normalize_minmax, ruzicka, spearman

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError", "EdgeListError", "Family", "GeneratorConfig", "Graph",
    "Histogram", "Metric", "MetricSpec", "NodeLabelMap", "ScoreVector",
    "WeightConfig", "assign_weights", "beta_centrality", "compute", "d1",
    "d2", "d3", "d4", "d5", "derive_seeds", "dominant_eigenvalue",
    "gamma_centrality", "gen_erdos_renyi", "gen_scale_free",
    "gen_small_world", "generate", "harmonize", "histogram",
    "normalize_minmax", "read_edge_list", "ruzicka", "spearman",
    "write_edge_list",
]
