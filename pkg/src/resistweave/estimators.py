"""sklearn-style estimator wrappers over the functional pipelines.

The fit-shaped entry points (sparsify a graph, certify its expansion) are
exposed as BaseEstimator subclasses so they pick up get_params/set_params,
clone, and pipeline compatibility.  Inputs go through `check_graph`, so dense
or scipy-sparse adjacencies work as well as WeightedMultigraph instances.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator

from .cutweave import game_elements, play_game
from .decompose import matching_decomposition
from .graphs import double_cover
from .sparsify import (independent_sample_baseline, resistance_certificate,
                       resistance_sparsifier, verify_sparsifier)
from .spectral import all_resistances, lambda2
from .validation import check_graph


class ResistanceSparsifier(BaseEstimator):
    """Build a resistance-preserving regular subgraph of a regular expander.

    Parameters
    ----------
    epsilon : target relative resistance error in (0, 1).
    degree_constant : c0 in d_target = ceil(c0/epsilon).
    pair_budget : resistance pairs checked by `score_errors` on large graphs.
    max_resample : retries for disconnected draws.
    random_state : seed for matching selection.
    """

    def __init__(self, epsilon: float = 0.1, degree_constant: float = 3.0,
                 pair_budget: int = 2000, max_resample: int = 10,
                 random_state=None):
        self.epsilon = epsilon
        self.degree_constant = degree_constant
        self.pair_budget = pair_budget
        self.max_resample = max_resample
        self.random_state = random_state

    def fit(self, X, y=None):
        g = check_graph(X, require_simple=True, require_connected=True,
                        require_regular=True, min_vertices=2)
        rng = np.random.default_rng(self.random_state)
        res = resistance_sparsifier(g, self.epsilon, rng,
                                    c0=self.degree_constant,
                                    max_resample=self.max_resample)
        self.graph_ = g
        self.result_ = res
        self.subgraph_ = res.subgraph
        self.scale_ = res.scale
        self.lambda2_ = res.lambda2_value
        self.certificate_ = resistance_certificate(res.subgraph,
                                                   lambda2_value=res.lambda2_value)
        return self

    def transform(self, X=None) -> np.ndarray:
        """Dense adjacency of the fitted sparsifier."""
        self._check_fitted()
        return self.subgraph_.adjacency_matrix()

    def score_errors(self, rng=None):
        """ErrorReport of the fitted sparsifier against the fitted host."""
        self._check_fitted()
        rng = np.random.default_rng(self.random_state if rng is None else rng)
        report = verify_sparsifier(self.graph_, self.subgraph_,
                                   pair_budget=self.pair_budget, rng=rng)
        self.error_report_ = report
        return report

    def _check_fitted(self):
        if not hasattr(self, "subgraph_"):
            raise RuntimeError("call fit first")


class IndependentEdgeBaseline(BaseEstimator):
    """Independent edge sampling at a fixed budget; the comparison baseline."""

    def __init__(self, edge_budget: int = 1000, random_state=None):
        self.edge_budget = edge_budget
        self.random_state = random_state

    def fit(self, X, y=None):
        g = check_graph(X, require_connected=True, min_vertices=2)
        rng = np.random.default_rng(self.random_state)
        res = independent_sample_baseline(g, self.edge_budget, rng)
        self.graph_ = g
        self.result_ = res
        self.subgraph_ = res.subgraph
        return self

    def transform(self, X=None) -> np.ndarray:
        if not hasattr(self, "subgraph_"):
            raise RuntimeError("call fit first")
        return self.subgraph_.adjacency_matrix()


class ExpansionCertifier(BaseEstimator):
    """Certify expansion of sampled matching unions with the bisection game.

    Fitting lifts the graph to its double cover, decomposes it into perfect
    matchings, and plays rounds (weave answers sampled to cover both sides of
    each queried bisection) until the walk potential certifies expansion.
    """

    def __init__(self, r: int | None = None, round_constant: float = 10.0,
                 mu: float = 0.5, random_state=None):
        self.r = r
        self.round_constant = round_constant
        self.mu = mu
        self.random_state = random_state

    def fit(self, X, y=None):
        g = check_graph(X, require_simple=True, require_connected=True,
                        require_regular=True, min_vertices=4)
        rng = np.random.default_rng(self.random_state)
        elems, n_game = game_elements(g)
        r = self.r
        if r is None:
            q_side = max(1, int(math.ceil((1.1 / self.mu) * math.log(n_game))))
            r = min(len(elems), 2 * q_side) * elems.element_regularity
        cap = int(math.ceil(self.round_constant * r * math.log(n_game) ** 2))
        state, cert = play_game(elems, r, cap, rng, mu=self.mu)
        self.decomposition_ = elems
        self.state_ = state
        self.certificate_ = cert
        self.rounds_ = state.round
        return self


class ResistanceOracle(BaseEstimator):
    """Exact pairwise effective resistances (fit) and lookups (transform)."""

    def __init__(self):
        pass

    def fit(self, X, y=None):
        g = check_graph(X, require_connected=True, min_vertices=2)
        self.table_ = all_resistances(g)
        self.lambda2_ = lambda2(g)
        return self

    def transform(self, X=None) -> np.ndarray:
        if not hasattr(self, "table_"):
            raise RuntimeError("call fit first")
        return self.table_.values
