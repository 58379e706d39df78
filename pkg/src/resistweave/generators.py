"""Graph generators for the CLI and the test corpus."""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from .graphs import WeightedMultigraph, read_graph


def complete_graph(n: int) -> WeightedMultigraph:
    if n < 1:
        raise ValueError("need n >= 1")
    return WeightedMultigraph(n, [(u, v, 1.0) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> WeightedMultigraph:
    if n < 3:
        raise ValueError("need n >= 3")
    return WeightedMultigraph(n, [(i, (i + 1) % n, 1.0) for i in range(n)])


def complete_bipartite(a: int, b: int) -> WeightedMultigraph:
    return WeightedMultigraph(a + b, [(i, a + j, 1.0) for i in range(a) for j in range(b)])


def hypercube_graph(dim: int) -> WeightedMultigraph:
    """Q_dim: 2^dim vertices, edges between words at Hamming distance 1."""
    if dim < 1:
        raise ValueError("need dim >= 1")
    n = 1 << dim
    edges = [(v, v ^ (1 << bit), 1.0) for v in range(n) for bit in range(dim) if v < v ^ (1 << bit)]
    return WeightedMultigraph(n, edges)


def circulant_graph(n: int, offsets) -> WeightedMultigraph:
    """Vertices on a ring, i adjacent to i +- o for each offset o."""
    offsets = sorted(set(int(o) for o in offsets))
    if any(o < 1 or o > n // 2 for o in offsets):
        raise ValueError("offsets must lie in 1..n//2")
    edges = set()
    for i in range(n):
        for o in offsets:
            j = (i + o) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return WeightedMultigraph(n, [(u, v, 1.0) for u, v in sorted(edges)])


def circulant_of_degree(n: int, d: int) -> WeightedMultigraph:
    """d-regular circulant: offsets 1..d/2, plus the antipode when d is odd."""
    if d < 2 or d >= n:
        raise ValueError(f"need 2 <= d < n, got d={d}")
    if d % 2 == 1 and n % 2 == 1:
        raise ValueError("odd-degree circulant needs even n")
    offsets = list(range(1, d // 2 + 1))
    if d % 2 == 1:
        offsets.append(n // 2)
    g = circulant_graph(n, offsets)
    if not np.all(g.multiplicity_degrees() == d):
        raise ValueError(f"no simple {d}-regular circulant on {n} vertices")
    return g


def petersen_graph() -> WeightedMultigraph:
    outer = [(i, (i + 1) % 5, 1.0) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5, 1.0) for i in range(5)]
    spokes = [(i, 5 + i, 1.0) for i in range(5)]
    return WeightedMultigraph(10, outer + inner + spokes)


def random_regular_graph(n: int, d: int, rng) -> WeightedMultigraph:
    """Simple d-regular graph by stub pairing with per-round repair.

    Shuffled stubs are paired up; collisions and loops feed a leftover pool
    that is re-shuffled, restarting only when no suitable pairing can exist.
    The output is certified d-regular and simple.
    """
    if (n * d) % 2 != 0:
        raise ValueError("n*d must be even")
    if not 0 < d < n:
        raise ValueError("need 0 < d < n")

    def suitable(edges, potential):
        if not potential:
            return True
        keys = sorted(potential)
        for i, s1 in enumerate(keys):
            for s2 in keys[i + 1:]:
                if (s1, s2) not in edges:
                    return True
        return False

    def try_once():
        edges = set()
        stubs = list(range(n)) * d
        while stubs:
            potential = defaultdict(int)
            arr = np.array(stubs)
            rng.shuffle(arr)
            it = iter(arr.tolist())
            for s1, s2 in zip(it, it):
                if s1 > s2:
                    s1, s2 = s2, s1
                if s1 != s2 and (s1, s2) not in edges:
                    edges.add((s1, s2))
                else:
                    potential[s1] += 1
                    potential[s2] += 1
            if not suitable(edges, potential):
                return None
            stubs = [v for v, c in potential.items() for _ in range(c)]
        return edges

    for _ in range(100):
        edges = try_once()
        if edges is not None:
            g = WeightedMultigraph(n, [(u, v, 1.0) for u, v in sorted(edges)])
            if not np.all(g.multiplicity_degrees() == d):
                raise AssertionError("pairing produced an irregular graph")
            return g
    raise RuntimeError(f"no simple {d}-regular graph found in 100 attempts")


def random_connected_weighted(n: int, rng, p: float = 0.5,
                              w_low: float = 0.5, w_high: float = 2.0) -> WeightedMultigraph:
    """Connected Erdos-Renyi-style graph with uniform random weights."""
    for _ in range(200):
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.append((u, v, float(rng.uniform(w_low, w_high))))
        g = WeightedMultigraph(n, edges)
        if g.is_connected() and not np.any(g.weighted_degrees() == 0):
            return g
    raise RuntimeError("no connected draw in 200 attempts; raise p")


def random_regular_bipartite(n_side: int, d: int, rng,
                             weighted: bool = False) -> WeightedMultigraph:
    """Union of d random permutation matchings between two sides of n_side.

    Parallel matchings merge by weight accumulation, so the result is always
    d-regular in weighted degrees; with `weighted`, each matching carries a
    random weight, keeping weighted-degree regularity.
    """
    if n_side < 1 or d < 1:
        raise ValueError("need n_side >= 1 and d >= 1")
    acc: dict[tuple[int, int], float] = {}
    for _ in range(d):
        w = float(rng.uniform(0.5, 1.5)) if weighted else 1.0
        perm = rng.permutation(n_side)
        for i in range(n_side):
            key = (i, n_side + int(perm[i]))
            acc[key] = acc.get(key, 0.0) + w
    return WeightedMultigraph(2 * n_side, [(u, v, w) for (u, v), w in acc.items()])


def generate(spec: str, n: int | None = None, degree: int | None = None,
             seed: int | None = None, path: str | None = None) -> WeightedMultigraph:
    """Build a graph from a generator spec: complete | random-regular |
    circulant | hypercube | file.  For hypercube, n is the dimension."""
    if spec == "complete":
        if n is None:
            raise ValueError("complete needs --n")
        return complete_graph(n)
    if spec == "random-regular":
        if n is None or degree is None:
            raise ValueError("random-regular needs --n and --degree")
        return random_regular_graph(n, degree, np.random.default_rng(seed))
    if spec == "circulant":
        if n is None or degree is None:
            raise ValueError("circulant needs --n and --degree")
        return circulant_of_degree(n, degree)
    if spec == "hypercube":
        if n is None:
            raise ValueError("hypercube needs --n (the dimension)")
        return hypercube_graph(n)
    if spec == "file":
        if path is None:
            raise ValueError("file needs --graph PATH")
        return read_graph(path)
    raise ValueError(f"unknown generator {spec!r}")
