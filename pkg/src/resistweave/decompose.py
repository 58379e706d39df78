"""Decompositions of regular graphs into atomic regular pieces.

Perfect matchings of regular bipartite graphs (extracted with breadth-first
augmenting paths; a Hall violation is reported with a witness set), full
matching decompositions (repeated extraction, with an Euler-split recursion
for large degrees), the zigzag Hamiltonian-cycle decomposition of odd complete
graphs, and the randomized sampler for dense set-cover instances.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graphs import Bisection, WeightedMultigraph

# Degree above which matching_decomposition(method="auto") switches from
# repeated extraction to Euler splitting.
_PEEL_MAX_DEGREE = 16

_COVER_RETRY_CAP = 100


class HallViolation(ValueError):
    """No perfect matching exists; `witness` is a set with |N(witness)| < |witness|."""

    def __init__(self, witness: set[int]):
        self.witness = witness
        super().__init__(
            f"no perfect matching: witness set of {len(witness)} vertices "
            f"has a smaller neighborhood"
        )


class CoverSamplingError(RuntimeError):
    """Random cover sampling exhausted its retry cap."""


def _bipartite_sides(g: WeightedMultigraph, left) -> tuple[list[int], list[int]]:
    left = sorted(set(left))
    left_set = set(left)
    right = [v for v in range(g.n) if v not in left_set]
    for u, v, _, _ in g.edges():
        if (u in left_set) == (v in left_set):
            raise ValueError(f"edge ({u},{v}) does not cross the given bipartition")
    return left, right


def perfect_matching(g: WeightedMultigraph, left) -> list[tuple[int, int]]:
    """Perfect matching of a balanced bipartite graph, by augmenting paths.

    Vertices are scanned in index order and the augmenting search is
    breadth-first, so the result is deterministic.  Raises HallViolation
    (with a witness set) when no perfect matching exists.
    """
    left, right = _bipartite_sides(g, left)
    if len(left) != len(right):
        raise ValueError(f"sides are unbalanced: {len(left)} vs {len(right)}")
    adj: dict[int, list[int]] = {u: [] for u in left}
    for u, v, _, _ in g.edges():
        if u in adj:
            adj[u].append(v)
        else:
            adj[v].append(u)
    for u in adj:
        adj[u] = sorted(set(adj[u]))
    match = _match_bipartite(left, adj)
    return sorted((u, match[u]) for u in left)


def _match_bipartite(left: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
    """Greedy seed plus BFS augmenting; raises HallViolation when stuck."""
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    for u in left:
        for v in adj[u]:
            if v not in match_r:
                match_l[u] = v
                match_r[v] = u
                break
    for u in left:
        if u in match_l:
            continue
        # BFS over alternating paths from u
        parent_r: dict[int, int] = {}  # right vertex -> left vertex it was reached from
        visited_l = {u}
        frontier = deque([u])
        end = None
        while frontier and end is None:
            x = frontier.popleft()
            for y in adj[x]:
                if y in parent_r:
                    continue
                parent_r[y] = x
                if y not in match_r:
                    end = y
                    break
                z = match_r[y]
                if z not in visited_l:
                    visited_l.add(z)
                    frontier.append(z)
        if end is None:
            raise HallViolation(visited_l)
        # Flip the alternating path ending at `end`
        y = end
        while True:
            x = parent_r[y]
            prev = match_l.get(x)
            match_l[x] = y
            match_r[y] = x
            if x == u:
                break
            y = prev
    return match_l


@dataclass(frozen=True)
class MatchingDecomposition:
    """Disjoint perfect matchings jointly partitioning a regular bipartite graph."""

    n: int
    matchings: tuple[tuple[tuple[int, int], ...], ...]

    def __len__(self) -> int:
        return len(self.matchings)

    @property
    def element_regularity(self) -> int:
        return 1

    def element_edges(self, j: int) -> tuple[tuple[int, int], ...]:
        return self.matchings[j]

    def element_graph(self, j: int) -> WeightedMultigraph:
        return WeightedMultigraph(self.n, [(u, v, 1.0) for u, v in self.matchings[j]])

    def union_graph(self, indices) -> WeightedMultigraph:
        edges = []
        for j in indices:
            edges.extend((u, v, 1.0) for u, v in self.matchings[j])
        return WeightedMultigraph(self.n, edges)

    def partner(self, j: int, v: int) -> int:
        for a, b in self.matchings[j]:
            if a == v:
                return b
            if b == v:
                return a
        raise KeyError(f"vertex {v} not matched in matching {j}")


@dataclass(frozen=True)
class CycleDecomposition:
    """Edge-disjoint Hamiltonian cycles, stored as vertex sequences."""

    n: int
    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def element_regularity(self) -> int:
        return 2

    def element_edges(self, j: int) -> tuple[tuple[int, int], ...]:
        cyc = self.cycles[j]
        return tuple((cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))

    def element_graph(self, j: int) -> WeightedMultigraph:
        return WeightedMultigraph(self.n, [(u, v, 1.0) for u, v in self.element_edges(j)])

    def union_graph(self, indices) -> WeightedMultigraph:
        edges = []
        for j in indices:
            edges.extend((u, v, 1.0) for u, v in self.element_edges(j))
        return WeightedMultigraph(self.n, edges)


def matching_decomposition(g: WeightedMultigraph, left=None, method: str = "auto") -> MatchingDecomposition:
    """Split a D-regular bipartite unit-weight graph into D perfect matchings.

    `left` defaults to the vertices 0..n/2-1 (the double-cover layout).
    `method` is "peel" (repeatedly extract a matching; regularity is preserved
    after each removal), "euler" (halve the graph along Eulerian circuits,
    peeling one matching whenever the degree is odd), or "auto" (peel for
    small D, euler otherwise).  Both are deterministic given the graph and
    produce the same contract: D disjoint perfect matchings whose multiset
    union is exactly the edge set.
    """
    if left is None:
        left = range(g.n // 2)
    left, right = _bipartite_sides(g, left)
    if len(left) != len(right):
        raise ValueError("matching decomposition needs balanced sides")
    deg = g.multiplicity_degrees()
    d = int(deg[0]) if g.n else 0
    if not np.all(deg == d):
        raise ValueError("graph is not regular in edge-count degrees")
    if d == 0:
        return MatchingDecomposition(g.n, ())
    # relabel so the left side occupies 0..n/2-1, for array-based processing
    order = list(left) + list(right)
    to_new = {v: i for i, v in enumerate(order)}
    half = len(left)
    us, vs = [], []
    for u, v, w, m in g.edges():
        if w != 1.0:
            raise ValueError("matching decomposition expects unit edge weights")
        a, b = to_new[u], to_new[v]
        if a > b:
            a, b = b, a
        us.extend([a] * m)
        vs.extend([b] * m)
    us = np.asarray(us, dtype=np.int64)
    vs = np.asarray(vs, dtype=np.int64)
    if method == "auto":
        method = "peel" if d <= _PEEL_MAX_DEGREE else "euler"
    if method == "peel":
        blocks = _decompose_peel(g.n, us, vs, d)
    elif method == "euler":
        blocks = _decompose_euler(g.n, us, vs, d)
    else:
        raise ValueError(f"unknown method {method!r}")
    matchings = tuple(
        tuple(sorted((min(order[a], order[b]), max(order[a], order[b])) for a, b in blk))
        for blk in blocks
    )
    return MatchingDecomposition(g.n, matchings)


def _adj_from_arrays(us, vs):
    adj: dict[int, list[int]] = {}
    for u, v in zip(us.tolist(), vs.tolist()):
        adj.setdefault(u, []).append(v)
    for u in adj:
        adj[u] = sorted(adj[u])
    return adj


def _extract_matching(us, vs):
    """One perfect matching of the (multi)graph given by parallel edge arrays."""
    left = sorted(set(us.tolist()))
    adj = _adj_from_arrays(us, vs)
    match = _match_bipartite(left, adj)
    return [(u, match[u]) for u in left]


def _remove_matching(us, vs, matching):
    """Drop one copy of each matched edge from the edge arrays."""
    want = {}
    for u, v in matching:
        want[(u, v)] = want.get((u, v), 0) + 1
    keep = np.ones(us.shape[0], dtype=bool)
    for i, (u, v) in enumerate(zip(us.tolist(), vs.tolist())):
        c = want.get((u, v), 0)
        if c:
            want[(u, v)] = c - 1
            keep[i] = False
    return us[keep], vs[keep]


def _decompose_peel(n, us, vs, d):
    blocks = []
    for _ in range(d):
        m = _extract_matching(us, vs)
        blocks.append(m)
        us, vs = _remove_matching(us, vs, m)
    if us.shape[0]:
        raise AssertionError("edges left over after peeling all matchings")
    return blocks


def _euler_split(us, vs):
    """Partition the edges of an even-regular bipartite multigraph into two
    halves of equal degree everywhere, by alternating along Eulerian circuits."""
    m = us.shape[0]
    # incidence lists of edge ids per vertex
    inc: dict[int, list[int]] = {}
    for i in range(m):
        inc.setdefault(int(us[i]), []).append(i)
        inc.setdefault(int(vs[i]), []).append(i)
    used = np.zeros(m, dtype=bool)
    ptr = {v: 0 for v in inc}
    label = np.zeros(m, dtype=bool)  # False -> half A, True -> half B
    for start in sorted(inc):
        while ptr[start] < len(inc[start]) and used[inc[start][ptr[start]]]:
            ptr[start] += 1
        if ptr[start] >= len(inc[start]):
            continue
        # Hierholzer with an explicit stack; emit edges in traversal order.
        stack = [(start, -1)]
        trail: list[int] = []
        while stack:
            v, via = stack[-1]
            lst = inc[v]
            while ptr[v] < len(lst) and used[lst[ptr[v]]]:
                ptr[v] += 1
            if ptr[v] == len(lst):
                stack.pop()
                if via >= 0:
                    trail.append(via)
                continue
            e = lst[ptr[v]]
            used[e] = True
            w = int(vs[e]) if int(us[e]) == v else int(us[e])
            stack.append((w, e))
        for k, e in enumerate(reversed(trail)):
            label[e] = bool(k & 1)
    return (us[~label], vs[~label]), (us[label], vs[label])


def _decompose_euler(n, us, vs, d):
    blocks = []
    stack = [(us, vs, d)]
    while stack:
        cu, cv, cd = stack.pop()
        if cd == 0:
            continue
        if cd == 1:
            blocks.append(list(zip(cu.tolist(), cv.tolist())))
            continue
        if cd % 2 == 1:
            m = _extract_matching(cu, cv)
            blocks.append(m)
            cu, cv = _remove_matching(cu, cv, m)
            cd -= 1
        (au, av), (bu, bv) = _euler_split(cu, cv)
        stack.append((bu, bv, cd // 2))
        stack.append((au, av, cd // 2))
    return blocks


def walecki_decomposition(n: int) -> CycleDecomposition:
    """Partition the complete graph on odd n into (n-1)/2 Hamiltonian cycles.

    Classical zigzag construction: vertex n-1 is a hub; cycle j walks
    j, j+1, j-1, j+2, j-2, ... modulo n-1 and closes through the hub.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    m = (n - 1) // 2
    hub = n - 1
    cycles = []
    for j in range(m):
        seq = [hub, j]
        for i in range(1, m + 1):
            seq.append((j + i) % (n - 1))
            if i < m:
                seq.append((j - i) % (n - 1))
        cycles.append(tuple(seq))
    return CycleDecomposition(n, tuple(cycles))


# -- randomized dense set cover ------------------------------------------------


def dense_set_cover(universe_size: int, membership, family_size: int,
                    mu: float, rng, retry_cap: int = _COVER_RETRY_CAP,
                    q: int | None = None) -> list[int]:
    """Sample a small cover of a dense set-cover instance.

    Every universe element must belong to at least mu * family_size sets;
    then q = ceil((1.1/mu) ln n) sets drawn uniformly with replacement cover
    everything with probability >= 1 - n^{-0.1}.  Callers may override the
    sample size with `q`.  The returned (deduplicated, sorted) indices are
    always verified against `membership(elem, set_index)` before being
    returned; after `retry_cap` failed draws the density precondition is
    reported as violated.
    """
    if not (0 < mu <= 1):
        raise ValueError(f"mu must lie in (0, 1], got {mu}")
    if universe_size == 0:
        return []
    if family_size <= 0:
        raise ValueError("family must be nonempty")
    if q is None:
        q = int(np.ceil((1.1 / mu) * np.log(max(universe_size, 2))))
    q = max(int(q), 1)
    last_uncovered = None
    for _ in range(retry_cap):
        sample = sorted(set(int(j) for j in rng.integers(0, family_size, size=q)))
        uncovered = [e for e in range(universe_size)
                     if not any(membership(e, j) for j in sample)]
        if not uncovered:
            return sample
        last_uncovered = uncovered[0]
    raise CoverSamplingError(
        f"no cover found in {retry_cap} attempts (q={q}); element "
        f"{last_uncovered} resists covering -- density precondition violated?"
    )


def _crossing_cover_membership(b: Bisection, side: str, elems):
    """Membership predicate: element j covers v iff j has an edge at v crossing b."""
    vertices = sorted(b.side_s if side == "s" else b.side_t)
    own = b.side_s if side == "s" else b.side_t
    covers = []
    for j in range(len(elems)):
        cov = set()
        for u, v in elems.element_edges(j):
            if (u in own) != (v in own):
                if u in own:
                    cov.add(u)
                if v in own:
                    cov.add(v)
        covers.append(cov)
    index_of = {v: i for i, v in enumerate(vertices)}

    def membership(elem_idx: int, set_idx: int) -> bool:
        return vertices[elem_idx] in covers[set_idx]

    return vertices, index_of, covers, membership


def cover_side(b: Bisection, side: str, elems, mu: float, rng,
               retry_cap: int = _COVER_RETRY_CAP, q: int | None = None) -> list[int]:
    """Sample decomposition elements whose crossing edges cover one side of b.

    `side` is "s" or "t".  Every vertex of that side ends up with an incident
    edge, inside some sampled element, whose other endpoint lies across the
    bisection.  Sampling and verification go through dense_set_cover.
    """
    if side not in ("s", "t"):
        raise ValueError("side must be 's' or 't'")
    vertices, _, covers, membership = _crossing_cover_membership(b, side, elems)
    if any(not any(v in c for c in covers) for v in vertices):
        bad = next(v for v in vertices if not any(v in c for c in covers))
        raise CoverSamplingError(
            f"vertex {bad} has no crossing edge in any element; no weave exists"
        )
    return dense_set_cover(len(vertices), membership, len(elems), mu, rng,
                           retry_cap=retry_cap, q=q)


# -- decomposition serialization ------------------------------------------------
# One block per element, in the graph text format, separated by blank lines.


def decomposition_to_text(decomp) -> str:
    from .graphs import to_edge_text

    blocks = []
    for j in range(len(decomp)):
        blocks.append(to_edge_text(decomp.element_graph(j)))
    return "\n".join(blocks)


def decomposition_blocks_from_text(text: str) -> list[WeightedMultigraph]:
    from .graphs import from_edge_text

    blocks = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip() == "":
            if current:
                blocks.append(from_edge_text("\n".join(current)))
                current = []
        else:
            current.append(line)
    if current:
        blocks.append(from_edge_text("\n".join(current)))
    return blocks
