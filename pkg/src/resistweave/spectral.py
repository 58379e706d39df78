"""Spectral and electrical oracles.

Dense linear algebra throughout: Laplacians, the normalized second eigenvalue,
effective resistances through the Laplacian pseudo-inverse, exact Cheeger
constants by subset enumeration, and random-walk hitting times.  The hitting
times double as an independent oracle for resistances via the commute
identity R(u,v) = h(u,v) + h(v,u).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import WeightedMultigraph

# Eigenvalues below this fraction of the largest are treated as the kernel
# when pseudo-inverting a Laplacian.
_KERNEL_CUTOFF = 1e-12

_CHEEGER_MAX_N = 22


def laplacian(g: WeightedMultigraph) -> np.ndarray:
    """Dense combinatorial Laplacian D - A.  Self-loops cancel out."""
    a = g.adjacency_matrix()
    return np.diag(a.sum(axis=1)) - a


def normalized_laplacian(g: WeightedMultigraph) -> np.ndarray:
    """D^{-1/2} (D - A) D^{-1/2}; requires every vertex to have positive degree."""
    a = g.adjacency_matrix()
    deg = a.sum(axis=1)
    if np.any(deg <= 0):
        bad = int(np.argmin(deg))
        raise ValueError(f"vertex {bad} is isolated (degree 0)")
    dinv = 1.0 / np.sqrt(deg)
    return np.eye(g.n) - (a * dinv).T * dinv


def lambda2(g: WeightedMultigraph) -> float:
    """Second-smallest eigenvalue of the normalized Laplacian.

    The known nullvector D^{1/2} 1 is deflated by shifting it to 3 (all other
    eigenvalues lie in [0, 2]), so the smallest remaining eigenvalue is
    exactly the spectral expansion; a disconnected graph returns ~0.
    """
    lhat = normalized_laplacian(g)
    deg = g.weighted_degrees()
    v = np.sqrt(deg)
    v /= np.linalg.norm(v)
    shifted = lhat + 3.0 * np.outer(v, v)
    return float(np.linalg.eigvalsh(shifted)[0])


def _check_connected(g: WeightedMultigraph, what: str):
    if not g.is_connected():
        raise ValueError(f"{what} requires a connected graph")


def laplacian_pinv(g: WeightedMultigraph) -> np.ndarray:
    """Moore-Penrose pseudo-inverse of the Laplacian via symmetric eigensolve."""
    lam, vec = np.linalg.eigh(laplacian(g))
    cutoff = _KERNEL_CUTOFF * max(lam[-1], 1.0)
    inv = np.where(lam > cutoff, 1.0 / np.where(lam > cutoff, lam, 1.0), 0.0)
    return (vec * inv) @ vec.T


@dataclass(frozen=True)
class ResistanceTable:
    """All-pairs effective resistances; symmetric with zero diagonal."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, pair) -> float:
        u, v = pair
        return float(self.values[u, v])

    def to_csv(self) -> str:
        lines = ["u,v,R"]
        for u in range(self.n):
            for v in range(u + 1, self.n):
                lines.append(f"{u},{v},{self.values[u, v]:.17g}")
        return "\n".join(lines) + "\n"


def all_resistances(g: WeightedMultigraph) -> ResistanceTable:
    """Resistance table from one pseudo-inverse: R(u,v) = P_uu + P_vv - 2 P_uv."""
    _check_connected(g, "all_resistances")
    p = laplacian_pinv(g)
    d = np.diag(p)
    r = d[:, None] + d[None, :] - 2.0 * p
    np.fill_diagonal(r, 0.0)
    return ResistanceTable(np.maximum(r, 0.0))


def effective_resistance(g: WeightedMultigraph, u: int, v: int) -> float:
    """(e_u - e_v)^T L^+ (e_u - e_v); u == v returns 0 by convention."""
    if u == v:
        return 0.0
    _check_connected(g, "effective_resistance")
    p = laplacian_pinv(g)
    return float(p[u, u] + p[v, v] - 2.0 * p[u, v])


def cheeger_bruteforce(g: WeightedMultigraph):
    """Exact edge expansion min w(S, S-bar)/|S| over 0 < |S| <= n/2.

    Enumerates all 2^(n-1) splits, so n <= 22.  Returns (phi, witness_set).
    """
    n = g.n
    if n > _CHEEGER_MAX_N:
        raise ValueError(f"brute-force expansion needs n <= {_CHEEGER_MAX_N}, got {n}")
    if n < 2:
        raise ValueError("expansion needs at least 2 vertices")
    ids = np.arange(1, 1 << (n - 1), dtype=np.uint32)  # subsets avoiding vertex n-1
    cut = np.zeros(ids.shape[0])
    for u, v, w, m in g.edges():
        if u == v:
            continue
        bu = (ids >> np.uint32(u)) & 1 if u < n - 1 else np.zeros_like(ids)
        bv = (ids >> np.uint32(v)) & 1 if v < n - 1 else np.zeros_like(ids)
        cut += (w * m) * (bu ^ bv)
    sizes = np.zeros(ids.shape[0], dtype=np.int64)
    for u in range(n - 1):
        sizes += (ids >> np.uint32(u)) & 1
    small = np.minimum(sizes, n - sizes)
    ratio = cut / small
    best = int(np.argmin(ratio))
    phi = float(ratio[best])
    side = {u for u in range(n - 1) if (int(ids[best]) >> u) & 1}
    if len(side) > n - len(side):
        side = set(range(n)) - side
    return phi, side


# -- random-walk machinery ----------------------------------------------------


def walk_matrix(g: WeightedMultigraph) -> np.ndarray:
    """Transition matrix W[u,x] = A[u,x]/deg(u); self-loops act as lazy steps."""
    a = g.adjacency_matrix()
    deg = a.sum(axis=1)
    if np.any(deg <= 0):
        raise ValueError("walk undefined with isolated vertices")
    return a / deg[:, None]


@dataclass(frozen=True)
class HittingTimes:
    """Expected steps H[u,v] from u to v, plus the normalized h = H/(2W)."""

    steps: np.ndarray
    total_weight: float

    @property
    def normalized(self) -> np.ndarray:
        return self.steps / (2.0 * self.total_weight)

    def resistance(self, u: int, v: int) -> float:
        h = self.normalized
        return float(h[u, v] + h[v, u])


def hitting_times(g: WeightedMultigraph) -> HittingTimes:
    """Solve, per target v, the first-step system h(v)=0, h(u)=1+sum_x W[u,x] h(x)."""
    _check_connected(g, "hitting_times")
    n = g.n
    w = walk_matrix(g)
    out = np.zeros((n, n))
    idx = np.arange(n)
    for v in range(n):
        keep = idx != v
        a = np.eye(n - 1) - w[np.ix_(keep, keep)]
        h = np.linalg.solve(a, np.ones(n - 1))
        out[keep, v] = h
    return HittingTimes(out, g.total_weight())


def is_bipartite(g: WeightedMultigraph):
    """Two-color the graph.  Returns (True, sides) or (False, odd_cycle)."""
    color = [-1] * g.n
    adj = {v: g.neighbors(v) for v in range(g.n)}
    if g.has_self_loops():
        loop = next(u for u, v, _, _ in g.edges() if u == v)
        return False, [loop, loop]
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        parent = {s: None}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        parent[y] = x
                        nxt.append(y)
                    elif color[y] == color[x]:
                        # walk both endpoints up to the common ancestor
                        px = [x]
                        while parent[px[-1]] is not None:
                            px.append(parent[px[-1]])
                        py = [y]
                        while parent[py[-1]] is not None:
                            py.append(parent[py[-1]])
                        common = next(a for a in px if a in set(py))
                        cyc = px[: px.index(common) + 1] + py[: py.index(common)][::-1]
                        return False, cyc
            frontier = nxt
    sides = ({v for v in range(g.n) if color[v] == 0},
             {v for v in range(g.n) if color[v] == 1})
    return True, sides


def bipartite_square(g: WeightedMultigraph, side, d: float) -> WeightedMultigraph:
    """Two-step walk graph on one side of a d-regular bipartite graph.

    Weights are w1(i,j) = (1/d) * sum_k w(i,k) w(j,k) over the far side.  The
    i->k->i return mass is kept as a self-loop of weight w1(i,i)/2 so that the
    result is exactly d-regular in weighted degrees (loops count twice) and its
    walk takes one step per two steps of the input walk.  Result vertices are
    positions in sorted(side).
    """
    ok, _ = is_bipartite(g)
    if not ok:
        raise ValueError("bipartite_square requires a bipartite graph")
    side = sorted(set(side))
    side_set = set(side)
    other = [v for v in range(g.n) if v not in side_set]
    for u, v, _, _ in g.edges():
        if (u in side_set) == (v in side_set):
            raise ValueError("given side is not one part of the bipartition")
    deg = g.weighted_degrees()
    if not np.allclose(deg, d, rtol=0, atol=1e-9 * max(d, 1.0)):
        raise ValueError("graph is not d-regular in weighted degrees")
    a = g.adjacency_matrix()
    b = a[np.ix_(side, other)]  # side x other weights
    w1 = (b @ b.T) / d
    edges = []
    k = len(side)
    for i in range(k):
        if w1[i, i] > 0:
            edges.append((i, i, w1[i, i] / 2.0))
        for j in range(i + 1, k):
            if w1[i, j] > 0:
                edges.append((i, j, w1[i, j]))
    out = WeightedMultigraph(k, edges)
    return out


# -- degree-based resistance intervals ----------------------------------------
# In a regular-enough expander the resistance between u and v is close to
# 1/d_u + 1/d_v, with an error controlled by the spectral gap.


def resistance_interval(d_u: float, d_v: float, lam2: float,
                        w_max: float, d_min: float) -> tuple[float, float]:
    """Predicted interval for R(u,v) on non-bipartite graphs.

    Returns (center, radius) with center 1/d_u + 1/d_v and radius
    2 (1/lam2 + 2) w_max / d_min^2.
    """
    if min(d_u, d_v, lam2, w_max, d_min) <= 0:
        raise ValueError("all interval arguments must be positive")
    center = 1.0 / d_u + 1.0 / d_v
    radius = 2.0 * (1.0 / lam2 + 2.0) * w_max / d_min**2
    return center, radius


def regular_resistance_interval(d: float, lam2: float, w_max: float) -> tuple[float, float]:
    """Interval variant valid for weighted-degree-regular graphs, bipartite included.

    Returns (center, radius) with center 2/d and radius 12 (1/lam2 + 2) w_max / d^2.
    """
    if min(d, lam2, w_max) <= 0:
        raise ValueError("all interval arguments must be positive")
    return 2.0 / d, 12.0 * (1.0 / lam2 + 2.0) * w_max / d**2
