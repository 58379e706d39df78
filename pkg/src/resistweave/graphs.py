"""Weighted multigraph core.

Undirected graphs with nonnegative edge weights, parallel-edge multiplicities
and self-loops.  Edge records are keyed by (min(u,v), max(u,v), weight) with a
multiplicity counter, so `union` and `sum` stay linear in the number of
records.  A self-loop of weight w contributes 2*w to its vertex's weighted
degree.  Graphs are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

EdgeRecord = tuple[int, int, float, int]  # (u, v, weight, multiplicity), u <= v


class WeightedMultigraph:
    __slots__ = ("n", "_edges", "_degrees", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple] = ()):
        """Build a graph on vertices 0..n-1.

        `edges` yields (u, v, w) or (u, v, w, mult) tuples.  Repeated records
        with the same endpoints and weight accumulate multiplicity.
        Zero-weight records are dropped; negative weights are rejected.
        """
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = int(n)
        store: dict[tuple[int, int, float], int] = {}
        for rec in edges:
            if len(rec) == 3:
                u, v, w = rec
                mult = 1
            else:
                u, v, w, mult = rec
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            w = float(w)
            mult = int(mult)
            if w < 0:
                raise ValueError(f"negative weight {w} on edge ({u},{v})")
            if mult <= 0:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            if w == 0.0:
                continue
            if u > v:
                u, v = v, u
            key = (u, v, w)
            store[key] = store.get(key, 0) + mult
        self._edges = store
        self._degrees = None
        self._adj = None

    # -- basic accessors ---------------------------------------------------

    def edges(self) -> Iterator[EdgeRecord]:
        """Iterate (u, v, w, mult) records with u <= v, in insertion order."""
        for (u, v, w), m in self._edges.items():
            yield u, v, w, m

    @property
    def num_records(self) -> int:
        return len(self._edges)

    def num_edges(self) -> int:
        """Total edge count including multiplicity."""
        return sum(self._edges.values())

    def total_weight(self) -> float:
        """Sum of w*mult over all edges; self-loops counted once."""
        return float(sum(w * m for (_, _, w), m in self._edges.items()))

    def has_self_loops(self) -> bool:
        return any(u == v for (u, v, _) in self._edges)

    def weighted_degrees(self) -> np.ndarray:
        """Weighted degree per vertex; a self-loop of weight w adds 2*w."""
        if self._degrees is None:
            deg = np.zeros(self.n)
            for (u, v, w), m in self._edges.items():
                if u == v:
                    deg[u] += 2.0 * w * m
                else:
                    deg[u] += w * m
                    deg[v] += w * m
            self._degrees = deg
        return self._degrees.copy()

    def weighted_degree(self, v: int) -> float:
        return float(self.weighted_degrees()[v])

    def multiplicity_degrees(self) -> np.ndarray:
        """Edge-count degree per vertex (weights ignored, loops count 2)."""
        deg = np.zeros(self.n, dtype=np.int64)
        for (u, v, _), m in self._edges.items():
            if u == v:
                deg[u] += 2 * m
            else:
                deg[u] += m
                deg[v] += m
        return deg

    def adjacency_matrix(self) -> np.ndarray:
        """Dense weighted adjacency; A[v,v] accumulates 2*w per self-loop."""
        a = np.zeros((self.n, self.n))
        for (u, v, w), m in self._edges.items():
            if u == v:
                a[u, u] += 2.0 * w * m
            else:
                a[u, v] += w * m
                a[v, u] += w * m
        return a

    def neighbors(self, v: int) -> list[int]:
        return list(self._adjacency().get(v, ()))

    def _adjacency(self) -> dict[int, list[int]]:
        if self._adj is None:
            adj: dict[int, list[int]] = {}
            for (u, v, _), _m in self._edges.items():
                adj.setdefault(u, []).append(v)
                if u != v:
                    adj.setdefault(v, []).append(u)
            self._adj = adj
        return self._adj

    def connected_components(self) -> list[list[int]]:
        """Structural component decomposition (BFS), sorted by least vertex."""
        seen = [False] * self.n
        adj = self._adjacency()
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            frontier = [s]
            while frontier:
                nxt = []
                for x in frontier:
                    for y in adj.get(x, ()):
                        if not seen[y]:
                            seen[y] = True
                            comp.append(y)
                            nxt.append(y)
                frontier = nxt
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def is_simple(self) -> bool:
        """True if no self-loops, no parallel records and all multiplicities 1."""
        pairs = set()
        for (u, v, _), m in self._edges.items():
            if u == v or m != 1 or (u, v) in pairs:
                return False
            pairs.add((u, v))
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedMultigraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        raise TypeError("WeightedMultigraph is not hashable")

    def __repr__(self) -> str:
        return f"WeightedMultigraph(n={self.n}, records={self.num_records}, edges={self.num_edges()})"


@dataclass(frozen=True)
class Bisection:
    """Two-sided vertex partition with sizes floor(n/2) / ceil(n/2).

    `side_s` is the smaller side when n is odd (the cut player puts the
    floor(n/2) smallest-valued vertices there).
    """

    n: int
    side_s: frozenset[int]
    side_t: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        side_s = frozenset(self.side_s)
        side_t = self.side_t
        if side_t is None:
            side_t = frozenset(range(self.n)) - side_s
        else:
            side_t = frozenset(side_t)
        if side_s | side_t != frozenset(range(self.n)) or side_s & side_t:
            raise ValueError("sides must partition the vertex set")
        if len(side_s) != self.n // 2:
            raise ValueError(
                f"side_s must have floor(n/2)={self.n // 2} vertices, got {len(side_s)}"
            )
        object.__setattr__(self, "side_s", side_s)
        object.__setattr__(self, "side_t", side_t)

    def mask(self) -> np.ndarray:
        """Boolean array, True on side_s."""
        m = np.zeros(self.n, dtype=bool)
        m[list(self.side_s)] = True
        return m

    def side_of(self, v: int) -> int:
        return 0 if v in self.side_s else 1


# -- structural operations --------------------------------------------------


def _require_same_n(a: WeightedMultigraph, b: WeightedMultigraph):
    if a.n != b.n:
        raise ValueError(f"vertex counts differ: {a.n} != {b.n}")


def union(a: WeightedMultigraph, b: WeightedMultigraph) -> WeightedMultigraph:
    """Set union of edge multisets: per-record multiplicity is the maximum.

    Duplicated edges are not doubled; callers wanting degree additivity must
    pass edge-disjoint graphs.
    """
    _require_same_n(a, b)
    out = dict(a._edges)
    for key, m in b._edges.items():
        out[key] = max(out.get(key, 0), m)
    g = WeightedMultigraph(a.n)
    g._edges = out
    return g


def graph_sum(a: WeightedMultigraph, b: WeightedMultigraph) -> WeightedMultigraph:
    """Multiset sum: multiplicities add, so weighted degrees add exactly."""
    _require_same_n(a, b)
    out = dict(a._edges)
    for key, m in b._edges.items():
        out[key] = out.get(key, 0) + m
    g = WeightedMultigraph(a.n)
    g._edges = out
    return g


def cut_weight(g: WeightedMultigraph, s) -> float:
    """Total weight (w*mult) of edges with exactly one endpoint in s.

    Self-loops never cross.  s must be a nonempty proper subset.
    """
    s = set(s)
    if not s or len(s) >= g.n:
        raise ValueError("cut side must be a nonempty proper subset")
    if not all(0 <= v < g.n for v in s):
        raise ValueError("cut side contains out-of-range vertices")
    total = 0.0
    for u, v, w, m in g.edges():
        if u != v and ((u in s) != (v in s)):
            total += w * m
    return total


def scale_weights(g: WeightedMultigraph, factor: float) -> WeightedMultigraph:
    """Multiply every weight by a positive factor."""
    if factor <= 0:
        raise ValueError(f"scale factor must be positive, got {factor}")
    out = WeightedMultigraph(g.n)
    out._edges = {(u, v, w * factor): m for (u, v, w), m in g._edges.items()}
    return out


def double_cover(g: WeightedMultigraph) -> WeightedMultigraph:
    """Bipartite lift on 2n vertices: (v,0) -> v and (v,1) -> v+n.

    Each edge uv of weight w yields (u,0)(v,1) and (v,0)(u,1), both of
    weight w.  Regularity and degrees are preserved.  Self-loops are rejected.
    """
    if g.has_self_loops():
        raise ValueError("double cover is undefined for graphs with self-loops")
    n = g.n
    out = []
    for u, v, w, m in g.edges():
        out.append((u, v + n, w, m))
        out.append((v, u + n, w, m))
    return WeightedMultigraph(2 * n, out)


def unfold_double_cover(h2: WeightedMultigraph) -> WeightedMultigraph:
    """Project a subgraph of a double cover back onto the base vertex set.

    Edge uv of the result carries the summed weight of whichever of
    (u,0)(v,1) and (v,0)(u,1) are present (so unit-weight inputs give
    weights in {1,2}).  The base weighted degree of v equals
    deg((v,0)) + deg((v,1)).
    """
    if h2.n % 2 != 0:
        raise ValueError("double-cover graphs have an even number of vertices")
    n = h2.n // 2
    acc: dict[tuple[int, int], float] = {}
    for a, b, w, m in h2.edges():
        if (a < n) == (b < n):
            raise ValueError(f"edge ({a},{b}) does not cross the two cover sides")
        lo, hi = (a, b) if a < n else (b, a)
        u, v = lo, hi - n
        if u > v:
            u, v = v, u
        acc[(u, v)] = acc.get((u, v), 0.0) + w * m
    return WeightedMultigraph(n, [(u, v, w) for (u, v), w in acc.items()])


def is_weave(g: WeightedMultigraph, b: Bisection) -> bool:
    """True iff every vertex has at least one incident edge crossing b."""
    if g.n != b.n:
        raise ValueError("graph and bisection sizes differ")
    covered = [False] * g.n
    s = b.side_s
    for u, v, _, _ in g.edges():
        if u != v and ((u in s) != (v in s)):
            covered[u] = True
            covered[v] = True
    return all(covered)


# -- edge-list text format ---------------------------------------------------
# First line: "n m".  Then m lines "u v w [mult]" (zero-indexed, mult defaults
# to 1).  Comments start with '#'.  Self-loops are written "u u w".


def to_edge_text(g: WeightedMultigraph) -> str:
    lines = [f"{g.n} {g.num_records}"]
    for u, v, w, m in sorted(g.edges()):
        if m == 1:
            lines.append(f"{u} {v} {w:.17g}")
        else:
            lines.append(f"{u} {v} {w:.17g} {m}")
    return "\n".join(lines) + "\n"


def from_edge_text(text: str) -> WeightedMultigraph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty graph text")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) == 3:
            u, v, w = parts
            edges.append((int(u), int(v), float(w)))
        elif len(parts) == 4:
            u, v, w, mult = parts
            edges.append((int(u), int(v), float(w), int(mult)))
        else:
            raise ValueError(f"bad edge line {line!r}")
    return WeightedMultigraph(n, edges)


def write_graph(path, g: WeightedMultigraph):
    with open(path, "w") as fh:
        fh.write(to_edge_text(g))


def read_graph(path) -> WeightedMultigraph:
    with open(path) as fh:
        return from_edge_text(fh.read())
