"""resistweave: resistance sparsifiers of dense regular expanders.

Sparsify by sampling perfect matchings of the double cover, certify expansion
with a bisection game over lazy-walk potentials, and verify resistance
accuracy against exact Laplacian and hitting-time oracles.
"""

__version__ = "0.1.0"

from .cutweave import (Embedding, ExpansionCertificate, GameState,
                       LevelPartition, build_kstar, build_level_covers,
                       cut_player_bisection, embedded_weave, game_elements,
                       embedding_expansion_transfer, game_step,
                       lazy_walk_apply, level_partition, new_game, play_game,
                       potential, potential_threshold)
from .decompose import (CoverSamplingError, CycleDecomposition, HallViolation,
                        MatchingDecomposition, cover_side, dense_set_cover,
                        matching_decomposition, perfect_matching,
                        walecki_decomposition)
from .estimators import (ExpansionCertifier, IndependentEdgeBaseline,
                         ResistanceOracle, ResistanceSparsifier)
from .generators import (circulant_graph, circulant_of_degree, complete_graph,
                         cycle_graph, generate, hypercube_graph,
                         petersen_graph, random_connected_weighted,
                         random_regular_bipartite, random_regular_graph)
from .graphs import (Bisection, WeightedMultigraph, cut_weight, double_cover,
                     from_edge_text, graph_sum, is_weave, read_graph,
                     scale_weights, to_edge_text, unfold_double_cover, union,
                     write_graph)
from .sparsify import (ErrorReport, IntervalCertificate, SparsifierResult,
                       independent_sample_baseline, regular_expander_subgraph,
                       resistance_certificate, resistance_sparsifier,
                       sample_pairs, verify_sparsifier)
from .spectral import (HittingTimes, ResistanceTable, all_resistances,
                       bipartite_square, cheeger_bruteforce,
                       effective_resistance, hitting_times, is_bipartite,
                       lambda2, laplacian, laplacian_pinv,
                       normalized_laplacian, regular_resistance_interval,
                       resistance_interval, walk_matrix)
from .validation import as_graph, check_graph

__all__ = [name for name in dir() if not name.startswith("_")]
