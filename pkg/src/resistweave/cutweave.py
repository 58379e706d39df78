"""Cut-weave game engine and congestion-embedded weave construction.

The game: a cut player proposes bisections from random projections of the
composed lazy-walk operator; a weave player answers with r-regular weaves
sampled from a matching/cycle decomposition.  The potential
Psi(t) = sum_{ij} (P_ij - 1/n)^2 certifies edge expansion of the accumulated
union once it drops below 1/(4 n^2).

The embedded-weave path handles bisections that admit no weave inside the
host graph: it peels the queried side into levels, covers each level with
sampled matchings, and rewires level by level (each rewiring removes a
two-edge path v-w-u and adds the edge vu plus a self-loop at w, preserving
all degrees) so every vertex gains an edge straight across the bisection.
The result is not a subgraph but embeds into the sampled matchings with
congestion tracked per host edge.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

import numpy as np

from .decompose import CoverSamplingError, MatchingDecomposition, dense_set_cover
from .graphs import Bisection, WeightedMultigraph, graph_sum, is_weave, union

_ROUND_RESAMPLE_CAP = 100


class LevelPartitionError(RuntimeError):
    """The level-peeling iteration stalled; `stuck` holds the unpeeled set."""

    def __init__(self, stuck: set[int]):
        self.stuck = stuck
        super().__init__(
            f"level partition stalled with {len(stuck)} vertices unpeeled "
            f"(expansion precondition violated)"
        )


# -- lazy walk ----------------------------------------------------------------


def _weave_walk_adjacency(weave: WeightedMultigraph) -> np.ndarray:
    # self-loops contribute their full degree mass (2 w mult) to the diagonal,
    # which is the unique choice keeping the walk doubly stochastic
    return weave.adjacency_matrix()


def check_regular(g: WeightedMultigraph, r: float, tol: float = 1e-9) -> None:
    deg = g.weighted_degrees()
    if not np.allclose(deg, r, rtol=0, atol=tol * max(r, 1.0)):
        bad = int(np.argmax(np.abs(deg - r)))
        raise ValueError(f"graph is not {r}-regular: vertex {bad} has degree {deg[bad]}")


def lazy_walk_apply(weave: WeightedMultigraph, r: float, x: np.ndarray) -> np.ndarray:
    """Apply M = I/2 + B/(2r) to a vector or to each column of a matrix.

    B is the weave's walk adjacency, so M is doubly stochastic exactly when
    the weave is r-regular in weighted degrees (checked).
    """
    check_regular(weave, r)
    b = _weave_walk_adjacency(weave)
    return 0.5 * x + (b @ x) / (2.0 * r)


def potential(p: np.ndarray) -> float:
    n = p.shape[0]
    return float(((p - 1.0 / n) ** 2).sum())


def potential_threshold(n: int) -> float:
    """Game termination threshold: expansion is certified once Psi < 1/(4 n^2)."""
    return 1.0 / (4.0 * n * n)


def weave_edge_diff_sum(weave: WeightedMultigraph, p: np.ndarray) -> float:
    """sum over the weave's edge multiset of ||P_i - P_j||^2 (loops contribute 0)."""
    total = 0.0
    for u, v, w, m in weave.edges():
        if u == v:
            continue
        d = p[u] - p[v]
        total += w * m * float(d @ d)
    return total


@dataclass
class RoundRecord:
    round: int
    bisection_hash: str
    weave_edges: int
    r: float
    psi_before: float
    psi_after: float
    reduction: float
    edge_diff_sum: float
    reduction_bound: float       # provable form: edge_diff_sum / (2r)
    reduction_bound_loose: float  # edge_diff_sum / r, recorded for reference
    row_sum_error: float

    def to_dict(self) -> dict:
        return {
            "round": self.round,
            "bisection_hash": self.bisection_hash,
            "weave_edges": self.weave_edges,
            "r": self.r,
            "psi_before": self.psi_before,
            "psi_after": self.psi_after,
            "reduction": self.reduction,
            "edge_diff_sum": self.edge_diff_sum,
            "reduction_bound": self.reduction_bound,
            "reduction_bound_loose": self.reduction_bound_loose,
            "row_sum_error": self.row_sum_error,
        }


@dataclass(frozen=True)
class ExpansionCertificate:
    """Asserts edge expansion of the accumulated union graph.

    `phi_round_disjoint_bound` is r/2, valid when no edge repeats across
    rounds (as when rounds draw disjoint elements); `phi_lower_bound` divides
    it by the worst per-edge repetition count, which is sound unconditionally:
    a repeated edge carries 1/r probability flow per round it appears in.
    """

    phi_lower_bound: float
    phi_round_disjoint_bound: float
    max_edge_occurrence: int
    r: float
    rounds: int
    psi_final: float
    threshold: float

    def to_dict(self) -> dict:
        return {
            "phi_lower_bound": self.phi_lower_bound,
            "phi_round_disjoint_bound": self.phi_round_disjoint_bound,
            "max_edge_occurrence": self.max_edge_occurrence,
            "r": self.r,
            "rounds": self.rounds,
            "psi_final": self.psi_final,
            "threshold": self.threshold,
        }


@dataclass
class GameState:
    """Evolving state: union graph, stored weaves, probability matrix, potential."""

    n: int
    union_graph: WeightedMultigraph
    weaves: list = field(default_factory=list)  # (weave, r) per round
    p: np.ndarray = None  # type: ignore[assignment]
    transcript: list = field(default_factory=list)
    edge_rounds: dict = field(default_factory=dict)  # pair -> total multiplicity over rounds

    def __post_init__(self):
        if self.p is None:
            self.p = np.eye(self.n)

    @property
    def round(self) -> int:
        return len(self.weaves)

    @property
    def psi(self) -> float:
        return potential(self.p)

    def max_edge_occurrence(self) -> int:
        return max(self.edge_rounds.values(), default=0)


def new_game(n: int) -> GameState:
    return GameState(n=n, union_graph=WeightedMultigraph(n))


def bisection_hash(b: Bisection) -> str:
    payload = ",".join(map(str, sorted(b.side_s)))
    return hashlib.sha1(payload.encode()).hexdigest()[:16]


def random_unit_orthogonal(n: int, rng) -> np.ndarray:
    """Uniform unit vector in the hyperplane orthogonal to the all-ones vector."""
    z = rng.standard_normal(n)
    z -= z.mean()
    nrm = np.linalg.norm(z)
    while nrm < 1e-12:
        z = rng.standard_normal(n)
        z -= z.mean()
        nrm = np.linalg.norm(z)
    return z / nrm


def cut_player_bisection(state: GameState, rng) -> Bisection:
    """Draw a fresh random projection direction and bisect by sorted walk values.

    u = M_t ... M_1 z is computed by passing z through the stored weaves'
    lazy-walk operators in round order; ties in the sort break by vertex index.
    """
    z = random_unit_orthogonal(state.n, rng)
    u = z
    for weave, r in state.weaves:
        u = lazy_walk_apply(weave, r, u)
    order = np.argsort(u, kind="stable")
    side_s = frozenset(int(v) for v in order[: state.n // 2])
    return Bisection(state.n, side_s)


def game_step(state: GameState, b: Bisection, weave: WeightedMultigraph, r: float) -> GameState:
    """Add one round: enforce the weave contract, update P and the transcript.

    The union graph keeps duplicated edges single; P advances by one lazy-walk
    application per column.  The recorded reduction bound is the provable
    edge_diff_sum/(2r) form (the /r variant is logged alongside; see notes in
    the transcript consumers).
    """
    check_regular(weave, r)
    if not is_weave(weave, b):
        raise ValueError("answer is not a weave on the round's bisection")
    psi_before = potential(state.p)
    edge_sum = weave_edge_diff_sum(weave, state.p)
    bmat = _weave_walk_adjacency(weave)
    state.p = 0.5 * state.p + (bmat @ state.p) / (2.0 * r)
    psi_after = potential(state.p)
    row_err = float(np.abs(state.p.sum(axis=1) - 1.0).max())
    state.union_graph = union(state.union_graph, weave)
    for u, v, _, m in weave.edges():
        if u != v:
            state.edge_rounds[(u, v)] = state.edge_rounds.get((u, v), 0) + m
    state.weaves.append((weave, r))
    state.transcript.append(RoundRecord(
        round=len(state.weaves),
        bisection_hash=bisection_hash(b),
        weave_edges=weave.num_edges(),
        r=r,
        psi_before=psi_before,
        psi_after=psi_after,
        reduction=psi_before - psi_after,
        edge_diff_sum=edge_sum,
        reduction_bound=edge_sum / (2.0 * r),
        reduction_bound_loose=edge_sum / r,
        row_sum_error=row_err,
    ))
    return state


def _sample_weave_indices(b: Bisection, elems, q_target: int, mu: float, rng,
                          resample_cap: int = _ROUND_RESAMPLE_CAP) -> list[int]:
    """Cover both sides, pad with unused elements to exactly q_target indices."""
    from .decompose import cover_side

    # when the whole family fits the budget, let each side sample all of it
    q_side = q_target if q_target == len(elems) else max(1, q_target // 2)
    for _ in range(resample_cap):
        picked = set(cover_side(b, "s", elems, mu, rng, q=q_side))
        picked |= set(cover_side(b, "t", elems, mu, rng, q=q_side))
        if len(picked) <= q_target:
            break  # fits the round budget
        # the two side covers overlapped too little; resample
    else:
        raise CoverSamplingError(
            f"could not fit both side covers into {q_target} elements "
            f"in {resample_cap} attempts"
        )
    pad = q_target - len(picked)
    if pad:
        free = [j for j in range(len(elems)) if j not in picked]
        extra = rng.choice(len(free), size=pad, replace=False)
        picked |= {free[int(i)] for i in extra}
    return sorted(picked)


def game_elements(g: WeightedMultigraph):
    """Matchings for the certification game, plus the game's vertex count.

    A regular bipartite graph decomposes directly (its double cover would be
    disconnected); anything else goes through the double cover.
    """
    from .decompose import matching_decomposition
    from .graphs import double_cover
    from .spectral import is_bipartite

    bip, info = is_bipartite(g)
    if bip:
        side0, side1 = info
        if len(side0) != len(side1):
            raise ValueError("bipartite input must be balanced to decompose")
        return matching_decomposition(g, left=side0), g.n
    return matching_decomposition(double_cover(g)), 2 * g.n


def play_game(elems, r: int, round_cap: int, rng, mu: float | None = None,
              redraw_cap: int = 100):
    """Run the full game until Psi < 1/(4 n^2) or the round budget runs out.

    `elems` is a MatchingDecomposition or CycleDecomposition; each round's
    weave is the union of elements sampled to cover both sides of the cut
    player's bisection (padded so the weave is exactly r-regular).  When a
    drawn bisection admits no cover (possible on sparse hosts, where a vertex
    and all its neighbors can share a side), the cut player redraws its
    projection, up to `redraw_cap` times per round; the certificate only
    depends on the potential threshold, so redraws do not affect soundness.
    Returns (state, certificate); the certificate is None when the cap is
    exhausted, which callers treat as a soft failure.
    """
    reg = elems.element_regularity
    if r % reg != 0:
        raise ValueError(f"r={r} is not a multiple of the element regularity {reg}")
    q_target = r // reg
    if q_target < 1 or q_target > len(elems):
        raise ValueError(f"need 1 <= r/{reg} <= {len(elems)}, got {q_target}")
    n = elems.n
    if mu is None:
        # size the per-side sample at q_target // 2 draws
        q_side = max(1, q_target // 2)
        mu = min(1.0, 1.1 * math.log(max(n, 2)) / q_side)
    threshold = potential_threshold(n)

    def certificate(state):
        occ = max(state.max_edge_occurrence(), 1)
        return ExpansionCertificate(
            phi_lower_bound=r / (2.0 * occ),
            phi_round_disjoint_bound=r / 2.0,
            max_edge_occurrence=occ,
            r=float(r), rounds=state.round,
            psi_final=state.psi, threshold=threshold,
        )

    state = new_game(n)
    while state.round < round_cap:
        if state.psi < threshold:
            return state, certificate(state)
        last_err = None
        for _ in range(redraw_cap):
            b = cut_player_bisection(state, rng)
            try:
                indices = _sample_weave_indices(b, elems, q_target, mu, rng)
            except CoverSamplingError as exc:
                last_err = exc
                continue
            break
        else:
            raise CoverSamplingError(
                f"round {state.round + 1}: no answerable bisection in "
                f"{redraw_cap} redraws ({last_err})"
            )
        weave = elems.union_graph(indices)
        game_step(state, b, weave, float(r))
    if state.psi < threshold:
        return state, certificate(state)
    return state, None


# -- level partition and covers -------------------------------------------------


@dataclass(frozen=True)
class LevelPartition:
    """S_0, ..., S_t partitioning the vertex set; S_0 is the far side."""

    levels: tuple[frozenset[int], ...]
    mu: float

    @property
    def t(self) -> int:
        return len(self.levels) - 1


def level_partition(g: WeightedMultigraph, b: Bisection, mu: float,
                    peel: str = "s") -> LevelPartition:
    """Peel the chosen side into levels by crossing-degree thresholds.

    S_0 is the opposite side; S_i collects the not-yet-peeled vertices with at
    least mu*D neighbors (counting multiplicity) in S_{i-1}.  Raises
    LevelPartitionError when an iteration makes no progress.
    """
    if not (0 < mu < 1):
        raise ValueError(f"mu must lie in (0,1), got {mu}")
    deg = g.multiplicity_degrees()
    d = int(deg[0])
    if not np.all(deg == d):
        raise ValueError("level partition expects a regular graph")
    if peel == "s":
        s0, t = set(b.side_t), set(b.side_s)
    elif peel == "t":
        s0, t = set(b.side_s), set(b.side_t)
    else:
        raise ValueError("peel must be 's' or 't'")
    # neighbor multiset per vertex
    nbrs: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v, _, m in g.edges():
        if u == v:
            continue
        nbrs[u].extend([v] * m)
        nbrs[v].extend([u] * m)
    levels = [frozenset(s0)]
    prev = s0
    threshold = mu * d
    while t:
        nxt = {v for v in t if sum(1 for x in nbrs[v] if x in prev) >= threshold}
        if not nxt:
            raise LevelPartitionError(set(t))
        levels.append(frozenset(nxt))
        t -= nxt
        prev = nxt
    return LevelPartition(tuple(levels), mu)


def build_level_covers(g: WeightedMultigraph, lp: LevelPartition,
                       m: MatchingDecomposition, k: int, rng,
                       retry_cap: int = _ROUND_RESAMPLE_CAP):
    """Per level i >= 1, sample k matchings covering S_i toward S_{i-1}.

    All levels draw without replacement from the decomposition, so the union
    K of all sampled matchings is exactly (k*t)-regular.  Returns
    (covers, level_indices, K) where covers[i-1] is the k-regular union for
    level i.  Each cover is verified post hoc before acceptance.
    """
    if k < 1:
        raise ValueError("need k >= 1 matchings per level")
    t = lp.t
    if k * t > len(m):
        raise ValueError(
            f"need {k}*{t}={k * t} distinct matchings but only {len(m)} exist"
        )
    partner = []
    for j in range(len(m)):
        arr = np.full(m.n, -1, dtype=np.int64)
        for a, bb in m.element_edges(j):
            arr[a] = bb
            arr[bb] = a
        partner.append(arr)
    available = list(range(len(m)))
    covers = []
    level_indices = []
    for i in range(1, t + 1):
        si = sorted(lp.levels[i])
        prev = lp.levels[i - 1]
        good = None
        for _ in range(retry_cap):
            pick_pos = rng.choice(len(available), size=k, replace=False)
            pick = sorted(available[int(p)] for p in pick_pos)
            if all(any(partner[j][v] >= 0 and partner[j][v] in prev for j in pick)
                   for v in si):
                good = pick
                break
        if good is None:
            raise CoverSamplingError(
                f"level {i}: no covering set of {k} matchings found in "
                f"{retry_cap} attempts"
            )
        available = [j for j in available if j not in set(good)]
        covers.append(m.union_graph(good))
        level_indices.append(good)
    return covers, level_indices


# -- inductive rewiring into an embedded weave -----------------------------------


class Embedding:
    """Map from guest edges (per parallel copy) to host paths.

    Paths are vertex sequences; a guest self-loop maps to the trivial path at
    its vertex and consumes no host edges.  Congestion counters per host edge
    are maintained incrementally and can be re-derived with `recount`.
    """

    def __init__(self, guest: WeightedMultigraph, host: WeightedMultigraph,
                 paths: dict[tuple[int, int], list[tuple[int, ...]]]):
        self.guest = guest
        self.host = host
        self.paths = paths
        self.congestion_per_edge: dict[tuple[int, int], int] = {}
        for plist in paths.values():
            for path in plist:
                for a, b in zip(path, path[1:]):
                    key = (a, b) if a <= b else (b, a)
                    self.congestion_per_edge[key] = self.congestion_per_edge.get(key, 0) + 1

    def congestion(self) -> int:
        return max(self.congestion_per_edge.values(), default=0)

    def recount(self) -> dict[tuple[int, int], int]:
        fresh: dict[tuple[int, int], int] = {}
        for plist in self.paths.values():
            for path in plist:
                for a, b in zip(path, path[1:]):
                    key = (a, b) if a <= b else (b, a)
                    fresh[key] = fresh.get(key, 0) + 1
        return fresh

    def verify(self) -> None:
        """Check endpoints, multiplicities, host membership, simplicity, counters."""
        guest_mult: dict[tuple[int, int], int] = {}
        for u, v, _, m2 in self.guest.edges():
            guest_mult[(u, v)] = guest_mult.get((u, v), 0) + m2
        path_mult = {key: len(plist) for key, plist in self.paths.items()}
        if guest_mult != path_mult:
            raise AssertionError("embedding paths do not match the guest edge multiset")
        host_pairs = set()
        for u, v, _, _ in self.host.edges():
            host_pairs.add((u, v))
        for (u, v), plist in self.paths.items():
            for path in plist:
                if u == v:
                    if len(path) != 1 or path[0] != u:
                        raise AssertionError(f"self-loop at {u} must map to a trivial path")
                    continue
                if {path[0], path[-1]} != {u, v}:
                    raise AssertionError(f"path endpoints {path[0]},{path[-1]} != edge {u},{v}")
                if len(set(path)) != len(path):
                    raise AssertionError(f"path {path} is not simple")
                for a, b in zip(path, path[1:]):
                    key = (a, b) if a <= b else (b, a)
                    if key not in host_pairs:
                        raise AssertionError(f"path step {key} is not a host edge")
        if self.recount() != self.congestion_per_edge:
            raise AssertionError("incremental congestion counters are stale")


def _store_to_graph(n: int, store: dict[tuple[int, int], list]) -> WeightedMultigraph:
    return WeightedMultigraph(
        n, [(u, v, 1.0, len(plist)) for (u, v), plist in store.items() if plist]
    )


def _store_degrees(n: int, store) -> np.ndarray:
    deg = np.zeros(n, dtype=np.int64)
    for (u, v), plist in store.items():
        if u == v:
            deg[u] += 2 * len(plist)
        else:
            deg[u] += len(plist)
            deg[v] += len(plist)
    return deg


def build_kstar(lp: LevelPartition, covers, k: int):
    """Rewire the level covers into a graph that reaches S_0 from every level.

    Inductively: the level-1 cover stands as is; at level i each vertex
    v in S_i routes through one cover edge vw (w in the previous level) and
    one stored edge wu (u in S_0): both are removed and replaced by the edge
    vu plus a self-loop at w.  Degrees are preserved exactly, so level i's
    graph is rho_i-regular with rho_i = k (1 + rho_{i-1}); its embedding into
    the sampled matchings has congestion at most c_i = 1 + k c_{i-1}.

    Returns (kstar, embedding, rhos, cs) where kstar is the multiset sum over
    levels and the embedding tracks every parallel copy's host path.
    """
    t = lp.t
    if len(covers) != t:
        raise ValueError(f"expected {t} level covers, got {len(covers)}")
    n = covers[0].n if covers else 0
    s0 = lp.levels[0]

    def canon(u, v):
        return (u, v) if u <= v else (v, u)

    rhos, cs = [], []
    rho_prev, c_prev = 0, 0
    stores = []
    prev_store: dict[tuple[int, int], list] = {}
    for i in range(1, t + 1):
        cover_edges = []
        for u, v, _, m in covers[i - 1].edges():
            cover_edges.extend([(u, v)] * m)
        store: dict[tuple[int, int], list] = {}
        if i == 1:
            for u, v in cover_edges:
                store.setdefault(canon(u, v), []).append((u, v))
        else:
            # k parallel copies of the previous level's graph, then the cover
            for key, plist in prev_store.items():
                store[key] = list(plist) * k
            for u, v in cover_edges:
                store.setdefault(canon(u, v), []).append((u, v))
            # crossing operations, one per vertex of this level
            level_set = lp.levels[i]
            prev_level = lp.levels[i - 1]
            # v's cover partners in the previous level
            partners: dict[int, list[int]] = {v: [] for v in level_set}
            for u, v in cover_edges:
                if u in level_set and v in prev_level:
                    partners[u].append(v)
                if v in level_set and u in prev_level:
                    partners[v].append(u)
            for v in sorted(level_set):
                if not partners[v]:
                    raise AssertionError(f"vertex {v} lost its level cover edge")
                w = min(partners[v])
                vw = canon(v, w)
                # remove the single-edge cover copy of vw
                plist = store.get(vw, [])
                pos = next((ix for ix, p in enumerate(plist) if len(p) == 2), None)
                if pos is None:
                    raise AssertionError(f"no removable cover copy of edge {vw}")
                plist.pop(pos)
                # remove one stored copy of some wu with u in S_0
                candidates = sorted(
                    (a if bb == w else bb)
                    for (a, bb) in store
                    if (a == w or bb == w) and a != bb
                    and (a if bb == w else bb) in s0
                    and store[(a, bb)]
                )
                if not candidates:
                    raise AssertionError(
                        f"no stored edge from {w} into the far side; "
                        f"rewiring supply exhausted"
                    )
                u0 = candidates[0]
                wu_list = store[canon(w, u0)]
                wu_path = wu_list.pop(0)
                if wu_path[0] != w:
                    wu_path = tuple(reversed(wu_path))
                # add vu with the concatenated path, and a self-loop on w
                new_path = (v,) + wu_path
                store.setdefault(canon(v, u0), []).append(new_path)
                store.setdefault((w, w), []).append((w,))
        store = {key: plist for key, plist in store.items() if plist}
        rho = k * (1 + rho_prev)
        c = 1 + k * c_prev
        deg = _store_degrees(n, store)
        if not np.all(deg == rho):
            bad = int(np.argmax(np.abs(deg - rho)))
            raise AssertionError(
                f"level {i}: expected {rho}-regular, vertex {bad} has degree {deg[bad]}"
            )
        rhos.append(rho)
        cs.append(c)
        stores.append(store)
        prev_store = store
        rho_prev, c_prev = rho, c
    # multiset sum over levels
    combined: dict[tuple[int, int], list] = {}
    for store in stores:
        for key, plist in store.items():
            combined.setdefault(key, []).extend(plist)
    host = covers[0]
    for cov in covers[1:]:
        host = union(host, cov)
    kstar = _store_to_graph(n, combined)
    emb = Embedding(kstar, host, combined)
    if emb.congestion() > sum(cs):
        raise AssertionError(
            f"measured congestion {emb.congestion()} exceeds the bound {sum(cs)}"
        )
    return kstar, emb, rhos, cs


def embedded_weave(g: WeightedMultigraph, b: Bisection, m: MatchingDecomposition,
                   params: dict, rng):
    """Steps 1-4: level partitions, covers and rewiring for both sides.

    Returns (weave, embedding, r, c_bound): the weave is the multiset sum of
    the two rewired graphs, r its exact regularity (sum of the per-level
    regularities over both sides) and c_bound the congestion bound (sum of the
    per-level bounds over both sides); the measured congestion never exceeds
    it.  The embedding's host is the union of all sampled matchings.
    """
    mu, k = params["mu"], params["k"]
    out = {}
    for peel in ("s", "t"):
        lp = level_partition(g, b, mu, peel=peel)
        covers, _ = build_level_covers(g, lp, m, k, rng)
        out[peel] = build_kstar(lp, covers, k)
    ks, emb_s, rhos_s, cs_s = out["s"]
    kt, emb_t, rhos_t, cs_t = out["t"]
    weave = graph_sum(ks, kt)
    host = union(emb_s.host, emb_t.host)
    paths: dict[tuple[int, int], list] = {}
    for emb in (emb_s, emb_t):
        for key, plist in emb.paths.items():
            paths.setdefault(key, []).extend(plist)
    emb = Embedding(weave, host, paths)
    r = sum(rhos_s) + sum(rhos_t)
    c_bound = sum(cs_s) + sum(cs_t)
    if emb.congestion() > c_bound:
        raise AssertionError(
            f"measured congestion {emb.congestion()} exceeds bound {c_bound}"
        )
    if not is_weave(weave, b):
        raise AssertionError("rewired graph is not a weave on the bisection")
    return weave, emb, r, c_bound


def embedding_expansion_transfer(emb: Embedding, phi_guest: float) -> float:
    """Lower bound on the host's expansion: phi_guest / congestion."""
    c = max(emb.congestion(), 1)
    return phi_guest / c
