"""Top-level sparsification pipelines.

The main route: lift a regular graph to its double cover, decompose the cover
into perfect matchings, sample a few of them, unfold back, and rescale so the
result matches the host's weighted degrees exactly.  Verification compares
exact effective resistances between host and subgraph, and an interval
certificate checks every measured resistance against the degree/spectral-gap
prediction for regular graphs.  An independent-edge-sampling baseline is kept
around as the comparison the matching route is designed to beat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .decompose import MatchingDecomposition, matching_decomposition
from .graphs import WeightedMultigraph, double_cover, scale_weights, unfold_double_cover
from .spectral import ResistanceTable, all_resistances, lambda2, regular_resistance_interval


@dataclass(frozen=True)
class ErrorReport:
    """Relative resistance errors |R_H/R_G - 1| over checked pairs."""

    max_error: float
    median_error: float
    p95_error: float
    pair_count: int
    exhaustive: bool

    def to_dict(self) -> dict:
        return {
            "max_error": self.max_error,
            "median_error": self.median_error,
            "p95_error": self.p95_error,
            "pair_count": self.pair_count,
            "exhaustive": self.exhaustive,
        }


@dataclass
class SparsifierResult:
    """A sparsifying subgraph plus the bookkeeping the pipelines report."""

    subgraph: WeightedMultigraph
    matching_indices: tuple[int, ...]
    scale: float
    d_target: int
    base_degree: float
    degree: float
    lambda2_value: float
    weight_histogram: dict[float, int]
    resamples: int = 0
    errors: ErrorReport | None = None

    def edge_count(self) -> int:
        return self.subgraph.num_records

    def to_dict(self) -> dict:
        return {
            "d_target": self.d_target,
            "base_degree": self.base_degree,
            "degree": self.degree,
            "scale": self.scale,
            "lambda2": self.lambda2_value,
            "edge_count": self.edge_count(),
            "weight_histogram": {f"{w:.17g}": c for w, c in sorted(self.weight_histogram.items())},
            "matching_indices": list(self.matching_indices),
            "resamples": self.resamples,
            "errors": self.errors.to_dict() if self.errors else None,
        }


def _regular_degree(g: WeightedMultigraph) -> float:
    deg = g.weighted_degrees()
    d = float(deg[0])
    if not np.allclose(deg, d, rtol=0, atol=1e-9 * max(d, 1.0)):
        raise ValueError("graph is not regular in weighted degrees")
    return d


def _weight_histogram(g: WeightedMultigraph) -> dict[float, int]:
    hist: dict[float, int] = {}
    for _, _, w, m in g.edges():
        hist[w] = hist.get(w, 0) + m
    return hist


def regular_expander_subgraph(g: WeightedMultigraph, d_target: int, rng,
                              decomposition: MatchingDecomposition | None = None,
                              max_resample: int = 10) -> SparsifierResult:
    """Sample d_target matchings of the double cover and unfold them.

    The unfolded subgraph has every weighted degree exactly 2*d_target, with
    weights in {1, 2}.  A disconnected draw is resampled up to `max_resample`
    times before failing.  Pass a precomputed `decomposition` of the double
    cover to amortize it across repeated draws.
    """
    if not g.is_simple():
        raise ValueError("expander subgraph extraction expects a simple graph")
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    d = _regular_degree(g)
    if abs(d - round(d)) > 1e-9:
        raise ValueError("input graph must be unweighted-regular")
    d = int(round(d))
    if not (1 <= d_target <= d):
        raise ValueError(f"need 1 <= d_target <= {d}, got {d_target}")
    if decomposition is None:
        decomposition = matching_decomposition(double_cover(g))
    if len(decomposition) != d:
        raise ValueError(
            f"decomposition has {len(decomposition)} matchings, expected {d}"
        )
    last = None
    for attempt in range(max_resample + 1):
        idx = tuple(sorted(int(j) for j in rng.choice(d, size=d_target, replace=False)))
        h2 = decomposition.union_graph(idx)
        h = unfold_double_cover(h2)
        if h.is_connected():
            return SparsifierResult(
                subgraph=h,
                matching_indices=idx,
                scale=1.0,
                d_target=d_target,
                base_degree=float(d),
                degree=2.0 * d_target,
                lambda2_value=lambda2(h),
                weight_histogram=_weight_histogram(h),
                resamples=attempt,
            )
        last = idx
    raise RuntimeError(
        f"sampled subgraph stayed disconnected after {max_resample} resamples "
        f"(last indices {last}); d_target={d_target} is likely too small"
    )


def resistance_sparsifier(g: WeightedMultigraph, epsilon: float, rng,
                          c0: float = 3.0,
                          decomposition: MatchingDecomposition | None = None,
                          d_target: int | None = None,
                          max_resample: int = 10) -> SparsifierResult:
    """Resistance sparsifier of a regular expander: sampled matchings, rescaled.

    d_target = ceil(c0/epsilon) matchings are sampled via
    regular_expander_subgraph and the weights are multiplied by
    D / (2 d_target), making every weighted degree exactly D.  All weights end
    up in {scale, 2 scale}.
    """
    if not (0.0 < epsilon < 1.0):
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    d = int(round(_regular_degree(g)))
    if d_target is None:
        d_target = int(math.ceil(c0 / epsilon))
    if d_target > d:
        raise ValueError(
            f"d_target={d_target} exceeds the {d} available matchings "
            f"(epsilon too small for this host)"
        )
    res = regular_expander_subgraph(g, d_target, rng,
                                    decomposition=decomposition,
                                    max_resample=max_resample)
    # exact rescale: unscaled weighted degree is 2*d_target everywhere
    scale = d / (2.0 * d_target)
    h = scale_weights(res.subgraph, scale)
    return SparsifierResult(
        subgraph=h,
        matching_indices=res.matching_indices,
        scale=scale,
        d_target=d_target,
        base_degree=float(d),
        degree=float(d),
        lambda2_value=res.lambda2_value,  # normalized spectrum is scale-invariant
        weight_histogram=_weight_histogram(h),
        resamples=res.resamples,
    )


# -- verification ---------------------------------------------------------------

_EXHAUSTIVE_MAX_N = 300


def sample_pairs(n: int, pair_budget: int, rng) -> np.ndarray:
    """Uniform distinct vertex pairs, without replacement; returns (k, 2) ints."""
    total = n * (n - 1) // 2
    k = min(pair_budget, total)
    flat = rng.choice(total, size=k, replace=False)
    # invert the triangular index
    u = (np.ceil((1 + np.sqrt(8.0 * (flat + 1))) / 2) - 1).astype(np.int64)
    # adjust for float slips at block boundaries
    base = u * (u - 1) // 2
    too_low = flat < base
    u[too_low] -= 1
    base = u * (u - 1) // 2
    too_high = flat >= (u + 1) * u // 2
    u[too_high] += 1
    base = u * (u - 1) // 2
    v = flat - base
    return np.stack([v, u], axis=1)  # v < u


def verify_sparsifier(g: WeightedMultigraph, h: WeightedMultigraph,
                      pair_budget: int = 2000, rng=None,
                      pairs: np.ndarray | None = None,
                      table_g: ResistanceTable | None = None,
                      table_h: ResistanceTable | None = None) -> ErrorReport:
    """Compare exact resistances of h against g.

    All pairs when n <= 300, otherwise `pair_budget` uniformly sampled pairs
    (or an explicit `pairs` array).  Raises on disconnected inputs.
    """
    if g.n != h.n:
        raise ValueError("graphs must share a vertex set")
    rg = (table_g or all_resistances(g)).values
    rh = (table_h or all_resistances(h)).values
    n = g.n
    if pairs is None:
        if n <= _EXHAUSTIVE_MAX_N:
            iu = np.triu_indices(n, k=1)
            rel = np.abs(rh[iu] / rg[iu] - 1.0)
            return _error_report(rel, exhaustive=True)
        if rng is None:
            raise ValueError("need an rng (or explicit pairs) for sampled verification")
        pairs = sample_pairs(n, pair_budget, rng)
    rel = np.abs(rh[pairs[:, 0], pairs[:, 1]] / rg[pairs[:, 0], pairs[:, 1]] - 1.0)
    return _error_report(rel, exhaustive=False)


def _error_report(rel: np.ndarray, exhaustive: bool) -> ErrorReport:
    return ErrorReport(
        max_error=float(rel.max()),
        median_error=float(np.median(rel)),
        p95_error=float(np.quantile(rel, 0.95)),
        pair_count=int(rel.size),
        exhaustive=exhaustive,
    )


def independent_sample_baseline(g: WeightedMultigraph, edge_budget: int,
                                rng) -> SparsifierResult:
    """Keep each edge independently with p = budget/m, reweighted by 1/p.

    Degenerate draws (disconnected, empty) are returned rather than raised;
    the caller reports their error as infinite.
    """
    m = g.num_records
    if m == 0:
        raise ValueError("cannot sample from an empty graph")
    p = min(1.0, edge_budget / m)
    keep = rng.random(m) < p
    edges = []
    for flag, (u, v, w, mult) in zip(keep, g.edges()):
        if flag:
            edges.append((u, v, w / p, mult))
    h = WeightedMultigraph(g.n, edges)
    degs = h.weighted_degrees()
    connected = bool(h.num_records) and h.is_connected() and not np.any(degs == 0)
    lam = lambda2(h) if connected else 0.0
    return SparsifierResult(
        subgraph=h,
        matching_indices=(),
        scale=1.0 / p,
        d_target=0,
        base_degree=float(g.weighted_degrees().mean()),
        degree=float(degs.mean()) if len(degs) else 0.0,
        lambda2_value=lam,
        weight_histogram=_weight_histogram(h),
    )


# -- interval certificate ---------------------------------------------------------


@dataclass(frozen=True)
class IntervalCertificate:
    """Containment of measured resistances in the regular-graph prediction."""

    holds: bool
    margin: float
    center: float
    radius: float
    degree: float
    w_max: float
    lambda2_value: float
    pair_count: int

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "margin": self.margin,
            "center": self.center,
            "radius": self.radius,
            "degree": self.degree,
            "w_max": self.w_max,
            "lambda2": self.lambda2_value,
            "pair_count": self.pair_count,
        }


def resistance_certificate(h: WeightedMultigraph,
                           table: ResistanceTable | None = None,
                           pairs: np.ndarray | None = None,
                           lambda2_value: float | None = None) -> IntervalCertificate:
    """Check every measured resistance against the regular-graph interval.

    The interval is 2/d +- 12 (1/lambda2 + 2) w_max / d^2, computed from the
    measured spectral expansion; `margin` is the worst pair's slack (negative
    means a violation).  The verdict is invariant under weight rescaling.
    """
    d = _regular_degree(h)
    w_max = max(w for _, _, w, _ in h.edges())
    lam = lambda2(h) if lambda2_value is None else lambda2_value
    center, radius = regular_resistance_interval(d, lam, w_max)
    r = (table or all_resistances(h)).values
    if pairs is None:
        iu = np.triu_indices(h.n, k=1)
        dev = np.abs(r[iu] - center)
        count = dev.size
    else:
        dev = np.abs(r[pairs[:, 0], pairs[:, 1]] - center)
        count = pairs.shape[0]
    margin = float((radius - dev).min())
    return IntervalCertificate(
        holds=bool(margin >= 0.0),
        margin=margin,
        center=center,
        radius=radius,
        degree=d,
        w_max=w_max,
        lambda2_value=lam,
        pair_count=int(count),
    )
