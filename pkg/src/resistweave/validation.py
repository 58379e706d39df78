"""Input validation helpers.

Estimators accept graphs in several ecosystem-friendly forms: a
WeightedMultigraph, a dense symmetric adjacency array, or anything exposing
`.toarray()` (scipy sparse matrices).  `check_graph` coerces and enforces the
structural preconditions a pipeline states.
"""

from __future__ import annotations

import numpy as np

from .graphs import WeightedMultigraph


def as_graph(x) -> WeightedMultigraph:
    """Coerce adjacency-like input into a WeightedMultigraph."""
    if isinstance(x, WeightedMultigraph):
        return x
    if hasattr(x, "toarray"):
        x = x.toarray()
    a = np.asarray(x, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency must be square, got shape {a.shape}")
    if not np.allclose(a, a.T):
        raise ValueError("adjacency must be symmetric (undirected graphs only)")
    if np.any(a < 0):
        raise ValueError("adjacency must be nonnegative")
    n = a.shape[0]
    edges = []
    for u in range(n):
        if a[u, u] != 0:
            # diagonal convention mirrors adjacency_matrix(): 2w per loop
            edges.append((u, u, a[u, u] / 2.0))
        for v in range(u + 1, n):
            if a[u, v] != 0:
                edges.append((u, v, a[u, v]))
    return WeightedMultigraph(n, edges)


def check_graph(x, *, require_connected: bool = False, require_regular: bool = False,
                require_simple: bool = False, min_vertices: int = 1) -> WeightedMultigraph:
    g = as_graph(x)
    if g.n < min_vertices:
        raise ValueError(f"need at least {min_vertices} vertices, got {g.n}")
    if require_simple and not g.is_simple():
        raise ValueError("graph must be simple (no loops or parallel edges)")
    if require_connected and not g.is_connected():
        raise ValueError("graph must be connected")
    if require_regular:
        deg = g.weighted_degrees()
        if g.n and not np.allclose(deg, deg[0], rtol=0, atol=1e-9 * max(deg[0], 1.0)):
            raise ValueError("graph must be regular in weighted degrees")
    return g
